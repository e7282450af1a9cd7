#include "annulus/hyperbolic_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kDeltaSlack = 1e-14;

void require_length(double l, const char* what) {
  if (!std::isfinite(l) || l <= 0.0) {
    throw DomainError(std::string(what) + " must be a positive finite length");
  }
}

// acosh(1 + e) without forming 1 + e.
double acosh1p(double e) { return std::log1p(e + std::sqrt(e * (2.0 + e))); }

}  // namespace

GroupParams::GroupParams(double k, double r) : k_(k), r_(r) {
  if (!std::isfinite(k) || !std::isfinite(r) || !(r > 1.0) || !(r < k)) {
    throw DomainError("group parameters need 1 < r < k, got k = " + std::to_string(k) +
                      ", r = " + std::to_string(r));
  }
}

const char* to_string(AngleOrdering o) {
  switch (o) {
    case AngleOrdering::theta1_gt: return "theta1_gt";
    case AngleOrdering::equal: return "equal";
    case AngleOrdering::theta1_lt: return "theta1_lt";
  }
  return "unknown";
}

MoebiusMap hyperbolic_generator(double k) {
  if (!std::isfinite(k) || !(k > 1.0)) throw DomainError("hyperbolic generator needs k > 1");
  return MoebiusMap::unimodular(k, 0.0, 0.0, 1.0 / k);
}

MoebiusMap parabolic_generator(double r) {
  if (!std::isfinite(r) || !(r > 1.0)) throw DomainError("parabolic generator needs r > 1");
  const double s = 1.0 / (r - 1.0);
  return MoebiusMap::unimodular(2.0 * r * s, -(r + 1.0) * s, (r + 1.0) * s, -2.0 * s);
}

Generators build_group(const GroupParams& p) {
  return {hyperbolic_generator(p.k()), parabolic_generator(p.r())};
}

MoebiusMap fg_inverse_closed_form(const GroupParams& p) {
  const double k = p.k();
  const double r = p.r();
  const double s = 1.0 / (r - 1.0);
  return MoebiusMap::unimodular(2.0 * k * s, -k * (r + 1.0) * s, (r + 1.0) / k * s,
                                -2.0 * r / k * s);
}

GeodesicLengths geodesic_lengths(const GroupParams& p) {
  const double k = p.k();
  const double r = p.r();
  // (k - r/k)/(r - 1) - 1, factored so that k near r keeps its digits
  const double excess = (k + 1.0) * (k - r) / (k * (r - 1.0));
  if (!(excess > 0.0)) {
    throw ConsistencyError("half-trace of f g^{-1} is not above 1");
  }
  return {2.0 * std::log(k), 2.0 * acosh1p(excess)};
}

GroupParams params_from_lengths(double l1, double l2) {
  require_length(l1, "l1");
  require_length(l2, "l2");
  const double k = std::exp(0.5 * l1);
  const double x = std::cosh(0.5 * l2);
  if (!std::isfinite(k) || !std::isfinite(x)) throw DomainError("lengths too large for double");
  return GroupParams(k, (k * k + k * x) / (k * x + 1.0));
}

double collar_delta(const GroupParams& p) {
  const double k = p.k();
  const double r = p.r();
  const double k2 = k * k;
  const double root = std::sqrt((k2 - 1.0) * (k - r) * (k + r));
  // k^2 + r - root, rationalised
  const double delta = k2 * (r + 1.0) * (r + 1.0) / (k2 + r + root);
  const double lo = 0.5 * (r + 1.0) * (r + 1.0);
  const double hi = r * (r + 1.0);
  if (!(delta > lo * (1.0 - kDeltaSlack) && delta < hi * (1.0 + kDeltaSlack))) {
    throw ConsistencyError("delta left its proven interval ((r+1)^2/2, r(r+1))");
  }
  return delta;
}

HyperbolicReport collar_angles(const GroupParams& p) {
  const double k = p.k();
  const double r = p.r();
  const double k2 = k * k;
  const double root = std::sqrt((k2 - 1.0) * (k - r) * (k + r));
  const double delta = collar_delta(p);
  // (r+3) delta - (r+1)(3r+1) expanded around delta = (r+1)^2/2, where the
  // printed form cancels to O((r-1)^2).
  const double ratio = (r + 3.0) * (r + 1.0) * k2 / ((k2 + r + root) * (k2 - r + root));
  const double den = 0.5 * (r - 1.0) * (r - 1.0) * (r + 1.0) * (1.0 + ratio);
  const double t = (r - 1.0) * (r + 1.0 + delta) / den;
  if (!(t > 1.0)) throw ConsistencyError("cross-ratio image t is not above 1");
  const GeodesicLengths l = geodesic_lengths(p);
  // arccos((x-1)/(x+1)) = 2 arctan(1/sqrt x)
  return {l.l1, l.l2, 2.0 * std::atan(1.0 / std::sqrt(r)), 2.0 * std::atan(1.0 / std::sqrt(t)), t,
          delta};
}

CollarAngles angles_from_lengths(double l1, double l2) {
  require_length(l1, "l1");
  require_length(l2, "l2");
  const double x = 0.5 * l1;
  const double y = 0.5 * l2;
  // Everything is scaled by exp(-max(x, y)) so long geodesics do not overflow.
  const double m = std::max(x, y);
  const double cx = 0.5 * (std::exp(x - m) + std::exp(-x - m));
  const double cy = 0.5 * (std::exp(y - m) + std::exp(-y - m));
  // cos theta = sinh(l/2)/(cx + cy); theta = 2 atan sqrt((1 - cos)/(1 + cos)),
  // and cx + cy -+ sinh(l/2) = cosh(other/2) + exp(-+l/2).
  auto angle = [m](double own, double other_cosh) {
    const double below = std::exp(-own - m) + other_cosh;
    const double above = std::exp(own - m) + other_cosh;
    return 2.0 * std::atan(std::sqrt(below / above));
  };
  return {angle(x, cy), angle(y, cx)};
}

double collar_lemma_angle(double l) {
  require_length(l, "l");
  return std::atan(1.0 / std::sinh(0.5 * l));
}

double width_to_distance(double theta) {
  if (!std::isfinite(theta) || !(theta > 0.0) || !(theta < 0.5 * std::numbers::pi)) {
    throw DomainError("collar angle must lie in (0, pi/2)");
  }
  return 0.5 * std::asinh(std::tan(theta));
}

double pants_separation(double l1, double l2) {
  require_length(l1, "l1");
  require_length(l2, "l2");
  const double x = 0.5 * l1;
  const double y = 0.5 * l2;
  // (cosh x + cosh y)/(sinh x sinh y) split into two bounded terms
  const double ratio = 1.0 / (std::tanh(x) * std::sinh(y)) + 1.0 / (std::tanh(y) * std::sinh(x));
  return std::asinh(ratio);
}

double midpoint_k(double r) {
  if (!std::isfinite(r) || !(r > 1.0) || !(r < 3.0)) {
    throw DomainError("midpoint family needs 1 < r < 3");
  }
  return std::sqrt((3.0 * r - 1.0) / (3.0 - r));
}

AngleOrdering trichotomy(const GroupParams& p) {
  if (p.r() >= 3.0) return AngleOrdering::theta1_lt;
  const double threshold = midpoint_k(p.r());
  if (std::abs(p.k() - threshold) < kTieTolerance) return AngleOrdering::equal;
  return p.k() > threshold ? AngleOrdering::theta1_gt : AngleOrdering::theta1_lt;
}

Generators midpoint_group(double r) { return build_group(GroupParams(midpoint_k(r), r)); }

}  // namespace annulus
