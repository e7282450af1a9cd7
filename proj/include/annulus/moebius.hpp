#pragma once

#include <array>
#include <complex>
#include <vector>

namespace annulus {

// 2x2 matrix of determinant 1 modulo sign. The stored representative has its
// first significant entry positive (real part positive for complex entries).
template <typename T>
class Moebius {
 public:
  using scalar_type = T;

  static Moebius identity() { return Moebius(T(1), T(0), T(0), T(1)); }
  // Divides by sqrt(det); det must be nonzero (positive for real entries).
  static Moebius from_entries(T a, T b, T c, T d);
  // For closed forms whose determinant is 1 analytically; only the sign is
  // canonicalized, so cancellation in a floating-point det cannot leak in.
  static Moebius unimodular(T a, T b, T c, T d);

  T a() const { return m_[0]; }
  T b() const { return m_[1]; }
  T c() const { return m_[2]; }
  T d() const { return m_[3]; }
  const std::array<T, 4>& entries() const { return m_; }

  T det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  T trace() const { return m_[0] + m_[3]; }
  double trace_sq() const;

  Moebius inverse() const;
  std::complex<double> apply(std::complex<double> z) const;

 private:
  Moebius(T a, T b, T c, T d) : m_{a, b, c, d} {}
  void canonicalize();
  std::array<T, 4> m_;

  template <typename U>
  friend Moebius<U> compose(const Moebius<U>& p, const Moebius<U>& q);
};

using MoebiusMap = Moebius<double>;
using ComplexMoebius = Moebius<std::complex<double>>;

// p after q, i.e. the matrix product p q.
template <typename T>
Moebius<T> compose(const Moebius<T>& p, const Moebius<T>& q);

template <typename T>
Moebius<T> operator*(const Moebius<T>& p, const Moebius<T>& q) {
  return compose(p, q);
}

// s p s^{-1}
template <typename T>
Moebius<T> conjugate(const Moebius<T>& p, const Moebius<T>& s) {
  return compose(compose(s, p), s.inverse());
}

struct MapClass {
  enum class Tag { identity, parabolic, elliptic, hyperbolic };
  Tag tag;
  double trace_sq;
};

const char* to_string(MapClass::Tag tag);

bool is_identity(const MoebiusMap& p);
MapClass classify(const MoebiusMap& p);
double translation_length(const MoebiusMap& p);

// Point of the real axis or the point at infinity.
class BoundaryPoint {
 public:
  static BoundaryPoint finite(double x) { return BoundaryPoint(x, false); }
  static BoundaryPoint infinity() { return BoundaryPoint(0.0, true); }
  bool is_infinite() const { return infinite_; }
  double value() const;
  bool operator==(const BoundaryPoint&) const = default;

 private:
  BoundaryPoint(double x, bool inf) : x_(x), infinite_(inf) {}
  double x_;
  bool infinite_;
};

BoundaryPoint apply(const MoebiusMap& p, BoundaryPoint x);

// One point for parabolic maps, two (finite ones ascending, infinity last)
// for hyperbolic maps.
std::vector<BoundaryPoint> fixed_points(const MoebiusMap& p);

// Largest |entry difference| between two representatives.
double max_entry_deviation(const MoebiusMap& p, const MoebiusMap& q);

}  // namespace annulus
