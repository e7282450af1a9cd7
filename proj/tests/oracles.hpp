#pragma once

// Quadrature oracles for the elliptic code. They share nothing with the AGM
// and Landen routines under test.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// F(phi | m) = int_0^phi dt / sqrt(1 - m^2 sin^2 t), modulus convention.
inline double incomplete_f(double phi, double m) {
  auto f = [m](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - m * m * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, phi, 8, 1e-14);
}

inline double complete_k(double m) { return incomplete_f(0.5 * std::numbers::pi, m); }

inline double mu(double m) {
  const double c = std::sqrt((1.0 - m) * (1.0 + m));
  return 0.5 * std::numbers::pi * complete_k(c) / complete_k(m);
}

}  // namespace oracle
