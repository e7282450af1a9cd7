#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "annulus/hyperbolic_structure.hpp"

namespace annulus {

struct Circle {
  std::complex<double> center;
  double radius;
};

struct Segment {
  double lo;
  double hi;
};

Circle circle_through(std::complex<double> z1, std::complex<double> z2, std::complex<double> z3);

// Region of the upper half-plane with 1/k < |z| < k lying outside S1 and g(S1).
struct FundamentalDomain {
  double k;
  double r;
  Circle s2;
  Circle f_s2;
  Circle s1;
  Circle g_s1;
  std::array<Segment, 3> segments;

  // Interior test; tol > 0 shrinks the region by tol on every side.
  bool contains(std::complex<double> z, double tol = 0.0) const;
};

FundamentalDomain fundamental_domain(const GroupParams& p);

// Freely reduced words over f, F = f^-1, g, G = g^-1, breadth-first, without
// the empty word.
std::vector<std::string> reduced_words(int max_length);
MoebiusMap word_map(const Generators& G, const std::string& word);

constexpr int kMaxOrbitDepth = 6;
std::string render_svg(const GroupParams& p, int orbit_depth);

}  // namespace annulus
