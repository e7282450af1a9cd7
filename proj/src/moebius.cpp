#include "annulus/moebius.hpp"

#include <algorithm>
#include <cmath>

#include "annulus/errors.hpp"

namespace annulus {

namespace {

constexpr double kSignificant = 1e-13;
constexpr double kDriftTolerance = 1e-14;
constexpr double kParabolicTolerance = 1e-10;
constexpr double kIdentityTolerance = 1e-12;

double magnitude(double x) { return std::abs(x); }
double magnitude(std::complex<double> z) { return std::abs(z); }

bool negative_sign(double x) { return x < 0.0; }
bool negative_sign(std::complex<double> z) {
  return z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0);
}

void check_det(double det) {
  if (!std::isfinite(det) || det <= 0.0) {
    throw DomainError("real Moebius map needs a positive finite determinant");
  }
}
void check_det(std::complex<double> det) {
  if (!std::isfinite(det.real()) || !std::isfinite(det.imag()) || std::abs(det) == 0.0) {
    throw DomainError("Moebius map needs a nonzero finite determinant");
  }
}

}  // namespace

template <typename T>
void Moebius<T>::canonicalize() {
  double scale = 0.0;
  for (const T& x : m_) scale = std::max(scale, magnitude(x));
  for (const T& x : m_) {
    if (magnitude(x) > kSignificant * scale) {
      if (negative_sign(x)) {
        for (T& y : m_) y = -y;
      }
      return;
    }
  }
}

template <typename T>
Moebius<T> Moebius<T>::from_entries(T a, T b, T c, T d) {
  const T det = a * d - b * c;
  check_det(det);
  const T s = std::sqrt(det);
  Moebius out(a / s, b / s, c / s, d / s);
  out.canonicalize();
  return out;
}

template <typename T>
Moebius<T> Moebius<T>::unimodular(T a, T b, T c, T d) {
  Moebius out(a, b, c, d);
  out.canonicalize();
  return out;
}

template <typename T>
double Moebius<T>::trace_sq() const {
  const T t = trace();
  return magnitude(t) * magnitude(t);
}

template <typename T>
Moebius<T> Moebius<T>::inverse() const {
  Moebius out(m_[3], -m_[1], -m_[2], m_[0]);
  out.canonicalize();
  return out;
}

template <typename T>
std::complex<double> Moebius<T>::apply(std::complex<double> z) const {
  const std::complex<double> a(m_[0]), b(m_[1]), c(m_[2]), d(m_[3]);
  const std::complex<double> den = c * z + d;
  if (std::abs(den) == 0.0) throw PoleError("Moebius map sends this point to infinity");
  return (a * z + b) / den;
}

template <typename T>
Moebius<T> compose(const Moebius<T>& p, const Moebius<T>& q) {
  const auto& x = p.m_;
  const auto& y = q.m_;
  Moebius<T> out(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                 x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
  const auto& z = out.m_;
  const T det = out.det();
  // Drift is judged against the size of the two products: beyond that the
  // floating determinant carries no information and rescaling only adds error.
  const double scale =
      std::max({1.0, magnitude(z[0] * z[3]), magnitude(z[1] * z[2])});
  if (magnitude(det - T(1)) > kDriftTolerance * scale) {
    check_det(det);
    const T s = std::sqrt(det);
    for (T& e : out.m_) e /= s;
  }
  out.canonicalize();
  return out;
}

template class Moebius<double>;
template class Moebius<std::complex<double>>;
template MoebiusMap compose(const MoebiusMap&, const MoebiusMap&);
template ComplexMoebius compose(const ComplexMoebius&, const ComplexMoebius&);

const char* to_string(MapClass::Tag tag) {
  switch (tag) {
    case MapClass::Tag::identity: return "identity";
    case MapClass::Tag::parabolic: return "parabolic";
    case MapClass::Tag::elliptic: return "elliptic";
    case MapClass::Tag::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

bool is_identity(const MoebiusMap& p) {
  return std::abs(p.a() - 1.0) <= kIdentityTolerance && std::abs(p.b()) <= kIdentityTolerance &&
         std::abs(p.c()) <= kIdentityTolerance && std::abs(p.d() - 1.0) <= kIdentityTolerance;
}

MapClass classify(const MoebiusMap& p) {
  const double tr2 = p.trace_sq();
  if (is_identity(p)) return {MapClass::Tag::identity, tr2};
  if (std::abs(tr2 - 4.0) < kParabolicTolerance) return {MapClass::Tag::parabolic, tr2};
  if (tr2 > 4.0) return {MapClass::Tag::hyperbolic, tr2};
  return {MapClass::Tag::elliptic, tr2};
}

double translation_length(const MoebiusMap& p) {
  const MapClass cls = classify(p);
  if (cls.tag != MapClass::Tag::hyperbolic) {
    throw ClassificationError(std::string("translation length needs a hyperbolic map, got ") +
                              to_string(cls.tag));
  }
  return 2.0 * std::acosh(0.5 * std::abs(p.trace()));
}

double BoundaryPoint::value() const {
  if (infinite_) throw DomainError("point at infinity has no finite value");
  return x_;
}

BoundaryPoint apply(const MoebiusMap& p, BoundaryPoint x) {
  if (x.is_infinite()) {
    if (p.c() == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(p.a() / p.c());
  }
  const double den = p.c() * x.value() + p.d();
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((p.a() * x.value() + p.b()) / den);
}

std::vector<BoundaryPoint> fixed_points(const MoebiusMap& p) {
  const MapClass cls = classify(p);
  if (cls.tag == MapClass::Tag::identity) {
    throw DomainError("identity map fixes every point");
  }
  if (cls.tag == MapClass::Tag::elliptic) {
    throw ClassificationError("elliptic map has no fixed point on the boundary");
  }
  const double a = p.a(), b = p.b(), c = p.c(), d = p.d();
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  const double s = a - d;
  if (std::abs(c) <= kSignificant * scale) {
    if (cls.tag == MapClass::Tag::parabolic) return {BoundaryPoint::infinity()};
    return {BoundaryPoint::finite(b / (d - a) + 0.0), BoundaryPoint::infinity()};
  }
  if (cls.tag == MapClass::Tag::parabolic) return {BoundaryPoint::finite(s / (2.0 * c))};
  // c z^2 - s z - b = 0, discriminant tr^2 - 4; the two roots are formed
  // without subtracting nearly equal quantities.
  const double root = std::sqrt(cls.trace_sq - 4.0);
  const double t = s + std::copysign(root, s);
  double x1 = t / (2.0 * c);
  double x2 = -2.0 * b / t;
  if (x1 > x2) std::swap(x1, x2);
  return {BoundaryPoint::finite(x1), BoundaryPoint::finite(x2)};
}

double max_entry_deviation(const MoebiusMap& p, const MoebiusMap& q) {
  double dev = 0.0;
  for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(p.entries()[i] - q.entries()[i]));
  return dev;
}

}  // namespace annulus
