#include "annulus/complex_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAsymptoticRegime = 1e-8;
constexpr double kPoleThreshold = 1e-12;

}  // namespace

AnnulusParams::AnnulusParams(double R, double a) : R_(R), a_(a) {
  if (!std::isfinite(R) || !std::isfinite(a) || !(R > 1.0) || !(a > 1.0 / R) || !(a < R)) {
    throw DomainError("annulus needs R > 1 and 1/R < a < R, got R = " + std::to_string(R) +
                      ", a = " + std::to_string(a));
  }
}

ModulusReal solve_q(double R) {
  if (!std::isfinite(R) || !(R > 1.0)) throw DomainError("solve_q needs finite R > 1");
  return mu_inverse(4.0 * std::log(R));
}

ExtremalReport extremal_lengths(const AnnulusParams& A) {
  const double R = A.R();
  const double a = A.a();
  const ModulusReal q = solve_q(R);
  const EllipticPair kk = ellip_pair(q);
  const double scale = 2.0 * kk.big_k / kPi;
  const double u1 = scale * (std::log(R) + std::log(a));
  const double u2 = scale * (std::log(R) - std::log(a));
  const ModulusReal qc = q.complementary();
  const double qv = q.value();
  const double sq = std::sqrt(qv);
  // 1 - q without cancellation
  const double one_minus_q = q.complement() * q.complement() / (1.0 + qv);

  auto modulus_at = [&](double u, double& alpha) {
    const JacobiTriple t = jacobi(u, qc);
    alpha = sq / t.dn;
    const double pc =
        one_minus_q * std::sqrt(std::max(0.0, t.cn * t.cn - qv * t.sn * t.sn)) / (qv + t.dn);
    if (!(pc > 0.0)) throw DomainError("complementary modulus underflows double range");
    // next to 1 the direct quotient can round past 1; the complement is exact there
    const double p = pc < 1e-4 ? std::sqrt((1.0 - pc) * (1.0 + pc)) : sq * (t.dn + 1.0) / (qv + t.dn);
    return ModulusReal::with_complement(p, pc);
  };
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  const ModulusReal p1 = modulus_at(u1, alpha1);
  const ModulusReal p2 = modulus_at(u2, alpha2);
  const bool downgraded = qv < kAsymptoticRegime || one_minus_q < kAsymptoticRegime;
  return {R,
          a,
          q,
          kk.big_k,
          kk.big_k_prime,
          u1,
          u2,
          p1,
          p2,
          2.0 * kPi / mu(p1),
          2.0 * kPi / mu(p2),
          std::exp(-kPi * kk.big_k_prime / (4.0 * kk.big_k)),
          alpha1,
          alpha2,
          downgraded};
}

double dn_quarter_period(const ModulusReal& q) {
  const double s = std::sqrt(q.value());
  const double w = std::sqrt(1.0 + q.value());
  return std::sqrt(s) * std::sqrt(w + 1.0) / std::sqrt(w + s);
}

double symmetric_p(const ModulusReal& q) {
  const double d = dn_quarter_period(q);
  return std::sqrt(q.value()) * (d + 1.0) / (q.value() + d);
}

OmegaMap::OmegaMap(double R) : q_(solve_q(R)), big_k_(0.0), b_(0.0) {
  const EllipticPair kk = ellip_pair(q_);
  big_k_ = kk.big_k;
  b_ = std::exp(-kPi * kk.big_k_prime / (4.0 * kk.big_k));
}

std::complex<double> OmegaMap::operator()(std::complex<double> z) const {
  const double r = std::abs(z);
  if (!(r > b_ && r < 1.0)) throw DomainError("omega map needs b < |z| < 1");
  // principal branch; the negative axis takes the value from above
  double theta = std::arg(z);
  if (z.imag() == 0.0 && z.real() < 0.0) theta = kPi;
  const std::complex<double> log_z(std::log(r / b_), theta);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> w = 2.0 * i * big_k_ / kPi * log_z + big_k_;
  return std::sqrt(q_.value()) * jacobi_complex_sn(w, q_);
}

std::complex<double> omega_map(std::complex<double> z, double R) { return OmegaMap(R)(z); }

std::complex<double> sigma_map(std::complex<double> z, const ModulusReal& q) {
  const double s = std::sqrt(q.value());
  const std::complex<double> den = s * z + 1.0;
  if (std::abs(den) < kPoleThreshold) throw PoleError("sigma map evaluated at its pole -1/sqrt(q)");
  return (z + s) / den;
}

std::complex<double> puncture_omega_image(const AnnulusParams& A, int j) {
  if (j != 1 && j != 2) throw DomainError("puncture index must be 1 or 2");
  const double z = j == 1 ? A.a() / A.R() : 1.0 / (A.R() * A.a());
  return omega_map(z, A.R());
}

double slit_extremal_length(double x) { return 2.0 * kPi / mu(ModulusReal(x)); }

LengthBounds length_bounds(double l1, double l2) {
  const CollarAngles th = angles_from_lengths(l1, l2);
  return {{l1 / kPi, l1 / (0.5 * kPi + th.theta1)}, {l2 / kPi, l2 / (0.5 * kPi + th.theta2)}};
}

ConsistencyReport consistency_check(const AnnulusParams& A, const GroupParams& p) {
  const ExtremalReport ex = extremal_lengths(A);
  const GeodesicLengths l = geodesic_lengths(p);
  const LengthBounds bounds = length_bounds(l.l1, l.l2);
  auto margin = [](const Interval& iv, double x) { return std::min(x - iv.lo, iv.hi - x); };
  const double m1 = margin(bounds.lambda1, ex.lambda1);
  const double m2 = margin(bounds.lambda2, ex.lambda2);
  return {m1 >= 0.0 && m2 >= 0.0, ex.lambda1, ex.lambda2, bounds, m1, m2};
}

}  // namespace annulus
