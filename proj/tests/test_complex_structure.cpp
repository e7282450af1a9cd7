#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "annulus/complex_structure.hpp"
#include "annulus/errors.hpp"

using namespace annulus;

namespace {
constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
}  // namespace

TEST(AnnulusParams, Domain) {
  EXPECT_NO_THROW(AnnulusParams(2.0, 1.5));
  EXPECT_THROW(AnnulusParams(1.0, 1.0), DomainError);
  EXPECT_THROW(AnnulusParams(2.0, 2.0), DomainError);
  EXPECT_THROW(AnnulusParams(2.0, 0.5), DomainError);
  EXPECT_THROW(AnnulusParams(NAN, 1.0), DomainError);
}

TEST(SolveQ, Values) {
  EXPECT_NEAR(solve_q(std::exp(kPi / 8)).value(), std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(solve_q(2.0).value(), 0.24614656554104091945, 1e-15);
  EXPECT_THROW(solve_q(1.0), DomainError);
  EXPECT_THROW(solve_q(0.5), DomainError);
  // R near 1: the complement stays meaningful
  const ModulusReal q = solve_q(1.01);
  EXPECT_GT(q.complement(), 0.0);
  EXPECT_NEAR(mu(q), 4 * std::log(1.01), 1e-13);
}

TEST(ExtremalLengths, ReferenceValues) {
  // mpmath at 40 digits
  const ExtremalReport e = extremal_lengths(AnnulusParams(2.0, 1.5));
  EXPECT_NEAR(e.p1.value(), 0.92970808360323111056, 1e-14);
  EXPECT_NEAR(e.p2.value(), 0.80589482659237502315, 1e-14);
  EXPECT_NEAR(e.lambda1, 5.9822264651943365214, 1e-12);
  EXPECT_NEAR(e.lambda2, 4.6012379719726209296, 1e-12);
  EXPECT_NEAR(e.alpha1, 0.80479362750787098083, 1e-14);
  EXPECT_NEAR(e.alpha2, 0.51612571285994695199, 1e-14);
  EXPECT_FALSE(e.precision_downgraded);

  const ExtremalReport s = extremal_lengths(AnnulusParams(2.0, 1.0));
  EXPECT_NEAR(s.p1.value(), 0.85128502529251650545, 1e-14);
  EXPECT_NEAR(s.lambda1, 4.9736309252295052252, 1e-12);
  EXPECT_EQ(s.lambda1, s.lambda2);
}

TEST(ExtremalLengths, PeriodSumAndInnerRadius) {
  for (double R : {1.2, 2.0, 10.0}) {
    const ExtremalReport e = extremal_lengths(AnnulusParams(R, 1.1));
    EXPECT_NEAR(e.u1 + e.u2, 0.5 * e.big_k_prime, 1e-13 * e.big_k_prime);
    EXPECT_NEAR(e.b, 1.0 / (R * R), 1e-14);
  }
}

TEST(ExtremalLengths, SymmetricModulus) {
  for (double R : {1.1, 2.0, 7.0, 50.0}) {
    const ExtremalReport e = extremal_lengths(AnnulusParams(R, 1.0));
    EXPECT_NEAR(e.p1.value(), symmetric_p(e.q), 1e-13);
    EXPECT_NEAR(e.p2.value(), symmetric_p(e.q), 1e-13);
  }
  const ModulusReal q = solve_q(3.0);
  const JacobiTriple t = jacobi(0.25 * ellip_k(q.complementary()), q.complementary());
  EXPECT_NEAR(dn_quarter_period(q), t.dn, 1e-14);
}

TEST(ExtremalLengths, PunctureTowardOuterBoundary) {
  const double R = 2.0;
  const ModulusReal q = solve_q(R);
  const double sq = std::sqrt(q.value());
  const ExtremalReport e = extremal_lengths(AnnulusParams(R, R * (1 - 1e-9)));
  EXPECT_NEAR(e.p2.value(), 2 * sq / (1 + q.value()), 1e-8);
  EXPECT_LT(e.p1.complement(), 1e-3);
  EXPECT_GT(e.lambda1, 20.0);
}

TEST(ExtremalLengths, SwapSymmetryProperty) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double R = std::exp(0.01 + 4.0 * unit(rng));
    const double a = std::exp((2 * unit(rng) - 1) * 0.99 * std::log(R));
    const ExtremalReport e = extremal_lengths(AnnulusParams(R, a));
    const ExtremalReport s = extremal_lengths(AnnulusParams(R, 1 / a));
    ASSERT_NEAR(e.lambda1 / s.lambda2, 1.0, 1e-12);
    ASSERT_NEAR(e.lambda2 / s.lambda1, 1.0, 1e-12);
    ASSERT_GT(e.lambda1, 0.0);
    ASSERT_GT(e.lambda2, 0.0);
    ASSERT_EQ(a > 1, e.lambda1 > e.lambda2);
  }
}

TEST(OmegaMap, PunctureImagesAndSigma) {
  const AnnulusParams A(2.0, 1.5);
  const ExtremalReport e = extremal_lengths(A);
  const cd w1 = puncture_omega_image(A, 1);
  const cd w2 = puncture_omega_image(A, 2);
  EXPECT_NEAR(w1.real(), e.alpha1, 1e-14);
  EXPECT_NEAR(w2.real(), e.alpha2, 1e-14);
  EXPECT_NEAR(w1.imag(), 0.0, 1e-14);
  EXPECT_NEAR(sigma_map(w1, e.q).real(), e.p1.value(), 1e-14);
  EXPECT_NEAR(sigma_map(w2, e.q).real(), e.p2.value(), 1e-14);
  EXPECT_THROW(puncture_omega_image(A, 3), DomainError);
}

TEST(OmegaMap, MapsIntoDiskProperty) {
  const OmegaMap w(2.0);
  EXPECT_NEAR(w.inner_radius(), 0.25, 1e-15);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double rho = 0.25 + 0.75 * (0.001 + 0.998 * unit(rng));
    const double phi = kPi * (2 * unit(rng) - 1);
    const cd v = w(std::polar(rho, phi));
    ASSERT_LT(std::abs(v), 1.0);
  }
  for (double phi : {0.3, 1.7, 2.9, -2.0}) {
    EXPECT_NEAR(std::abs(w(std::polar(1 - 1e-12, phi))), 1.0, 1e-9);
    // inner circle lands on the slit [-sqrt q, sqrt q]
    const cd s = w(std::polar(0.25 * (1 + 1e-12), phi));
    EXPECT_NEAR(s.imag(), 0.0, 1e-9);
    EXPECT_LE(std::abs(s.real()), std::sqrt(w.q().value()) + 1e-9);
  }
  // positive radius onto positive radius, increasing
  double prev = 0.0;
  for (int i = 1; i < 20; ++i) {
    const cd v = w(cd(0.25 + 0.75 * i / 20.0, 0.0));
    EXPECT_NEAR(v.imag(), 0.0, 1e-14);
    EXPECT_GT(v.real(), 0.0);
    EXPECT_NE(v.real(), prev);
    prev = v.real();
  }
  EXPECT_EQ(w(cd(-0.5, 0.0)), w(cd(-0.5, 0.0)));
  EXPECT_THROW(w(cd(0.1, 0.0)), DomainError);
  EXPECT_THROW(w(cd(1.0, 0.0)), DomainError);
}

TEST(SigmaMap, Values) {
  const ModulusReal q(0.25);
  EXPECT_NEAR(std::abs(sigma_map(cd(0, 0), q) - cd(0.5, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sigma_map(cd(1, 0), q) - cd(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sigma_map(cd(-0.5, 0), q)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sigma_map(std::polar(1.0, 2.0), q)), 1.0, 1e-15);
  EXPECT_THROW(sigma_map(cd(-2.0, 0.0), q), PoleError);
}

TEST(SlitExtremalLength, Values) {
  EXPECT_NEAR(slit_extremal_length(std::sqrt(0.5)), 4.0, 1e-14);
  EXPECT_GT(slit_extremal_length(0.9), slit_extremal_length(0.5));
  EXPECT_THROW(slit_extremal_length(0.0), DomainError);
  EXPECT_THROW(slit_extremal_length(1.0), DomainError);
}

TEST(LengthBounds, Values) {
  const LengthBounds b = length_bounds(2.0, 3.0);
  EXPECT_NEAR(b.lambda1.lo, 2.0 / kPi, 1e-15);
  EXPECT_NEAR(b.lambda2.lo, 3.0 / kPi, 1e-15);
  EXPECT_LT(b.lambda1.lo, b.lambda1.hi);
  EXPECT_LT(b.lambda2.lo, b.lambda2.hi);
  EXPECT_LT(b.lambda1.hi, 2.0 / (0.5 * kPi));
  EXPECT_TRUE(b.lambda1.contains(b.lambda1.lo));
  EXPECT_FALSE(b.lambda1.contains(0.0));
}

TEST(ConsistencyCheck, MatchedAndMismatchedGroups) {
  for (double R : {2.0, 30.0, 1e3}) {
    const AnnulusParams A(R, 1.7);
    const ExtremalReport e = extremal_lengths(A);
    // lengths placing each lambda mid-interval
    double l1 = e.lambda1 * kPi, l2 = e.lambda2 * kPi;
    for (int it = 0; it < 200; ++it) {
      const CollarAngles th = angles_from_lengths(l1, l2);
      l1 = e.lambda1 * (0.75 * kPi + 0.5 * th.theta1);
      l2 = e.lambda2 * (0.75 * kPi + 0.5 * th.theta2);
    }
    const GroupParams p = params_from_lengths(l1, l2);
    const ConsistencyReport c = consistency_check(A, p);
    EXPECT_TRUE(c.consistent) << "R = " << R;
    EXPECT_GT(c.margin1, 0.0);
    EXPECT_GT(c.margin2, 0.0);
    const ConsistencyReport bad = consistency_check(A, params_from_lengths(3 * l1, 3 * l2));
    EXPECT_FALSE(bad.consistent);
    EXPECT_LT(std::min(bad.margin1, bad.margin2), 0.0);
  }
}
