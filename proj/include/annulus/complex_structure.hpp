#pragma once

#include <complex>

#include "annulus/hyperbolic_structure.hpp"
#include "annulus/special_fn.hpp"

namespace annulus {

// The annulus 1/R < |z| < R punctured at a, 1/R < a < R.
class AnnulusParams {
 public:
  AnnulusParams(double R, double a);
  double R() const { return R_; }
  double a() const { return a_; }

 private:
  double R_;
  double a_;
};

struct ExtremalReport {
  double R;
  double a;
  ModulusReal q;
  double big_k;
  double big_k_prime;
  double u1;
  double u2;
  ModulusReal p1;
  ModulusReal p2;
  double lambda1;
  double lambda2;
  double b;
  double alpha1;
  double alpha2;
  // q within 1e-8 of 0 or 1, where mu runs on its asymptotic branches
  bool precision_downgraded;
};

ModulusReal solve_q(double R);
ExtremalReport extremal_lengths(const AnnulusParams& A);

// dn(K'/4, q') from the half-argument formula, then the a = 1 modulus.
double dn_quarter_period(const ModulusReal& q);
double symmetric_p(const ModulusReal& q);

// Annulus b < |z| < 1 onto the unit disk slit along [-sqrt q, sqrt q], positive
// radius to positive radius. b = 1/R^2.
class OmegaMap {
 public:
  explicit OmegaMap(double R);
  std::complex<double> operator()(std::complex<double> z) const;
  double inner_radius() const { return b_; }
  const ModulusReal& q() const { return q_; }

 private:
  ModulusReal q_;
  double big_k_;
  double b_;
};

std::complex<double> omega_map(std::complex<double> z, double R);
std::complex<double> sigma_map(std::complex<double> z, const ModulusReal& q);

// omega at the rescaled puncture: a/R for j = 1, 1/(R a) for j = 2.
std::complex<double> puncture_omega_image(const AnnulusParams& A, int j);

double slit_extremal_length(double x);

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct LengthBounds {
  Interval lambda1;
  Interval lambda2;
};

LengthBounds length_bounds(double l1, double l2);

struct ConsistencyReport {
  bool consistent;
  double lambda1;
  double lambda2;
  LengthBounds bounds;
  // distance to the nearer end of each interval, negative when outside
  double margin1;
  double margin2;
};

ConsistencyReport consistency_check(const AnnulusParams& A, const GroupParams& p);

}  // namespace annulus
