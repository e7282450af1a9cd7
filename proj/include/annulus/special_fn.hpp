#pragma once

#include <complex>

namespace annulus {

// Elliptic modulus in (0,1) stored together with its complement sqrt(1 - m^2).
// Keeping both lets either one be tiny without losing relative accuracy in
// the other; the value itself may round to 1.0 when the complement is below
// about 1e-8.
class ModulusReal {
 public:
  explicit ModulusReal(double value);

  static ModulusReal from_complement(double complement);
  static ModulusReal with_complement(double value, double complement);

  double value() const { return value_; }
  double complement() const { return complement_; }
  ModulusReal complementary() const { return ModulusReal(complement_, value_, 0); }

 private:
  ModulusReal(double value, double complement, int);
  double value_;
  double complement_;
};

struct EllipticPair {
  double big_k;
  double big_k_prime;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

double agm(double a, double b);

double ellip_k(const ModulusReal& m);
EllipticPair ellip_pair(const ModulusReal& m);

// (pi/2) K'(m) / K(m)
double mu(const ModulusReal& m);
// d mu / dm, closed form
double mu_derivative(const ModulusReal& m);
ModulusReal mu_inverse(double y);

JacobiTriple jacobi(double u, const ModulusReal& m);

// Throws PoleError when the addition-formula denominator drops below 1e-12.
std::complex<double> jacobi_complex_sn(std::complex<double> z, const ModulusReal& m);

}  // namespace annulus
