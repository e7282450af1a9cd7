#include "annulus/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this modulus (or complement) mu switches to its logarithmic asymptote.
constexpr double kMuAsymptote = 1e-8;
// Smallest modulus mu_inverse will return; mu(1e-300) is about 692.2.
constexpr double kMinModulus = 1e-300;
// Below this complement the real Jacobi core uses the hyperbolic expansion.
constexpr double kHyperbolicCore = 1e-7;
constexpr double kPoleThreshold = 1e-12;

bool in_open_unit(double x) { return std::isfinite(x) && x > 0.0 && x < 1.0; }

}  // namespace

ModulusReal::ModulusReal(double value) {
  if (!in_open_unit(value)) {
    throw DomainError("modulus must lie in (0,1), got " + std::to_string(value));
  }
  value_ = value;
  complement_ = std::sqrt((1.0 - value) * (1.0 + value));
}

ModulusReal::ModulusReal(double value, double complement, int)
    : value_(value), complement_(complement) {}

ModulusReal ModulusReal::from_complement(double complement) {
  if (!in_open_unit(complement)) {
    throw DomainError("complementary modulus must lie in (0,1), got " +
                      std::to_string(complement));
  }
  return ModulusReal(std::sqrt((1.0 - complement) * (1.0 + complement)), complement, 0);
}

ModulusReal ModulusReal::with_complement(double value, double complement) {
  if (!(value > 0.0 && value <= 1.0 && complement > 0.0 && complement <= 1.0) ||
      std::abs(value * value + complement * complement - 1.0) > 1e-14) {
    throw DomainError("inconsistent modulus/complement pair");
  }
  return ModulusReal(value, complement, 0);
}

double agm(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("agm needs positive finite arguments");
  }
  for (int i = 0; i < 100; ++i) {
    if (std::abs(a - b) <= 4.0 * kEps * a) return 0.5 * (a + b);
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  throw ConvergenceError("agm did not converge");
}

double ellip_k(const ModulusReal& m) { return kPi / (2.0 * agm(1.0, m.complement())); }

EllipticPair ellip_pair(const ModulusReal& m) {
  return {ellip_k(m), kPi / (2.0 * agm(1.0, m.value()))};
}

double mu(const ModulusReal& m) {
  if (m.value() < kMuAsymptote) return std::log(4.0 / m.value());
  if (m.complement() < kMuAsymptote) return kPi * kPi / (4.0 * std::log(4.0 / m.complement()));
  return 0.5 * kPi * agm(1.0, m.complement()) / agm(1.0, m.value());
}

double mu_derivative(const ModulusReal& m) {
  const double k = ellip_k(m);
  const double c = m.complement();
  return -kPi * kPi / (4.0 * m.value() * c * c * k * k);
}

namespace {

// Solves mu(m) = y for y >= pi/2, so the root lies in (0, 1/sqrt 2].
double invert_mu_small(double y) {
  if (y > mu(ModulusReal(kMinModulus))) {
    throw DomainError("mu_inverse: modulus for y = " + std::to_string(y) +
                      " is below double range");
  }
  double lo = std::log(kMinModulus);
  double hi = -0.5 * std::log(2.0);
  int iter = 0;
  // width 1e-15 in log m is a relative width in m
  while (hi - lo > 1e-15 * std::max(1.0, std::abs(lo))) {
    if (++iter > 200) throw ConvergenceError("mu_inverse: bisection budget exhausted");
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mu(ModulusReal(std::exp(mid))) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double m = std::exp(0.5 * (lo + hi));
  for (int step = 0; step < 2; ++step) {
    const ModulusReal cur(m);
    const double res = mu(cur) - y;
    if (res == 0.0) break;
    const double cand = m - res / mu_derivative(cur);
    if (!(cand > 0.0 && cand < 1.0)) break;
    if (std::abs(mu(ModulusReal(cand)) - y) >= std::abs(res)) break;
    m = cand;
  }
  return m;
}

}  // namespace

ModulusReal mu_inverse(double y) {
  if (!std::isfinite(y) || y <= 0.0) {
    throw DomainError("mu_inverse needs a positive finite argument");
  }
  if (y >= 0.5 * kPi) return ModulusReal(invert_mu_small(y));
  // mu(m) mu(m') = pi^2/4
  return ModulusReal::from_complement(invert_mu_small(kPi * kPi / (4.0 * y)));
}

namespace {

// 0 <= u <= K/2.
JacobiTriple jacobi_core(double u, const ModulusReal& m) {
  const double k = m.value();
  const double kc = m.complement();
  if (kc < kHyperbolicCore) {
    // First order in m1 = kc^2 about the m = 1 limit; kc is folded into the
    // hyperbolic factors so the product cannot overflow.
    const double sh = std::sinh(u);
    const double ch = std::cosh(u);
    const double th = std::tanh(u);
    const double se = 1.0 / ch;
    const double prod = (kc * sh) * (kc * ch);
    const double lin = kc * kc * u;
    const double minus = 0.25 * (prod - lin);
    const double plus = 0.25 * (prod + lin);
    return {th + minus * se * se, se - minus * th * se, se + plus * th * se};
  }
  std::array<double, 32> a{};
  std::array<double, 32> c{};
  a[0] = 1.0;
  c[0] = k;
  double b = kc;
  std::size_t n = 0;
  while (std::abs(c[n]) > kEps * a[n]) {
    if (n + 1 >= a.size()) throw ConvergenceError("jacobi: Landen descent did not converge");
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, static_cast<int>(n));
  for (std::size_t j = n; j > 0; --j) {
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  return {sn, cn, std::sqrt(kc * kc + k * k * cn * cn)};
}

}  // namespace

JacobiTriple jacobi(double u, const ModulusReal& m) {
  if (!std::isfinite(u)) throw DomainError("jacobi: argument must be finite");
  const double big_k = ellip_k(m);
  double sn_sign = 1.0;
  double cn_sign = 1.0;
  if (u < 0.0) {
    u = -u;
    sn_sign = -1.0;
  }
  const double period = 4.0 * big_k;
  u = std::fmod(u, period);
  if (u > 2.0 * big_k) {
    u = period - u;
    sn_sign = -sn_sign;
  }
  if (u > big_k) {
    u = 2.0 * big_k - u;
    cn_sign = -1.0;
  }
  JacobiTriple t;
  if (u > 0.5 * big_k) {
    const JacobiTriple w = jacobi_core(big_k - u, m);
    const double kc = m.complement();
    t = {w.cn / w.dn, kc * w.sn / w.dn, kc / w.dn};
  } else {
    t = jacobi_core(u, m);
  }
  t.sn *= sn_sign;
  t.cn *= cn_sign;
  return t;
}

std::complex<double> jacobi_complex_sn(std::complex<double> z, const ModulusReal& m) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("jacobi_complex_sn: argument must be finite");
  }
  const JacobiTriple x = jacobi(z.real(), m);
  const JacobiTriple y = jacobi(z.imag(), m.complementary());
  const double k = m.value();
  const double den = y.cn * y.cn + k * k * x.sn * x.sn * y.sn * y.sn;
  if (std::abs(den) < kPoleThreshold) {
    throw PoleError("jacobi_complex_sn: argument is at or near a pole");
  }
  return {x.sn * y.dn / den, x.cn * x.dn * y.sn * y.cn / den};
}

}  // namespace annulus
