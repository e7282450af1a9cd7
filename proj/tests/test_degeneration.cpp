#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "annulus/degeneration.hpp"
#include "annulus/errors.hpp"
#include "annulus/hyperbolic_structure.hpp"
#include "annulus/special_fn.hpp"

using namespace annulus;

namespace {
constexpr double kPi = std::numbers::pi;

// rounding in s m s^-1 scales with the entry sizes of all three factors
double conj_tol(const MoebiusMap& m, const MoebiusMap& s) {
  auto norm = [](const MoebiusMap& x) {
    double big = 0.0;
    for (double e : x.entries()) big = std::max(big, std::abs(e));
    return big;
  };
  return 1e-12 * norm(s) * norm(s.inverse()) * std::max({1.0, norm(m), norm(conjugate(m, s))});
}

const Observable& find(const ConvergenceRow& row, const std::string& name) {
  for (const Observable& o : row.observables) {
    if (o.name == name) return o;
  }
  throw std::out_of_range(name);
}
}  // namespace

TEST(Conjugators, PointValues) {
  const double k = 3.0;
  const MoebiusMap h = conjugator_h(k);
  EXPECT_NEAR(std::abs(h.apply(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.apply(k) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.apply(1.0 / k) + 1.0), 0.0, 1e-15);
  EXPECT_THROW(conjugator_h(1.0), DomainError);

  const double r = 2.0;
  const MoebiusMap h1 = conjugator_h1(r);
  EXPECT_NEAR(std::abs(h1.apply(r)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h1.apply(1e12) - (r + 1) / r), 0.0, 1e-11);
  EXPECT_GT(std::abs(h1.apply(1.0 + 1e-12)), 1e11);
  EXPECT_THROW(conjugator_h1(0.5), DomainError);
}

TEST(Conjugators, ClosedFormsProperty) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double k = 1.0 + 20.0 * unit(rng) + 1e-3;
    const double r = 1.0 + (k - 1.0) * (0.001 + 0.998 * unit(rng));
    const Generators G = build_group(GroupParams(k, r));
    const MoebiusMap h = conjugator_h(k);
    const MoebiusMap h1 = conjugator_h1(r);
    const MoebiusMap hf = conjugate(G.f, h);
    const MoebiusMap hg = conjugate(G.g, h);
    const MoebiusMap h1g = conjugate(G.g, h1);
    ASSERT_LE(max_entry_deviation(hf, conjugated_f_closed_form(k)), conj_tol(G.f, h));
    ASSERT_LE(max_entry_deviation(hg, conjugated_g_closed_form(k, r)), conj_tol(G.g, h));
    ASSERT_LE(max_entry_deviation(h1g, h1_conjugated_g_closed_form(r)), conj_tol(G.g, h1));
  }
}

TEST(Conjugators, CongruenceLimit) {
  const CongruenceTargets t = congruence_targets();
  EXPECT_EQ(t.f0.entries(), (std::array<double, 4>{1, 2, 0, 1}));
  EXPECT_EQ(t.g0.entries(), (std::array<double, 4>{1, 0, 2, 1}));
  double prev = INFINITY;
  for (int j = 1; j <= 6; ++j) {
    const double e = std::pow(10.0, -j);
    const double k = 1.0 + e * (1.0 + e);
    const double r = 1.0 + e;
    const double dev = std::max(max_entry_deviation(conjugated_f_closed_form(k), t.f0),
                                max_entry_deviation(conjugated_g_closed_form(k, r), t.g0));
    EXPECT_LT(dev, prev);
    prev = dev;
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(Conjugators, H1LimitAsKApproachesR) {
  const double r = 2.0;
  const MoebiusMap target = MoebiusMap::unimodular(1.0, 0.0, 1.0, 1.0);
  double prev = INFINITY;
  for (int j = 2; j <= 8; ++j) {
    const double k = r * (1.0 + std::pow(10.0, -j));
    const Generators G = build_group(GroupParams(k, r));
    const MoebiusMap m = conjugate(compose(G.f, G.g.inverse()), conjugator_h1(r));
    const double dev = max_entry_deviation(m, target);
    EXPECT_LT(dev, prev);
    prev = dev;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(MidpointLimit, Generator) {
  const MoebiusMap g = midpoint_limit_g();
  EXPECT_EQ(classify(g).tag, MapClass::Tag::parabolic);
  EXPECT_NEAR(std::abs(g.apply(1.0) - 1.0), 0.0, 1e-15);
  EXPECT_LT(max_entry_deviation(parabolic_generator(3.0), g), 1e-14);
}

TEST(LimitJacobi, Values) {
  const JacobiLimits at_half = limit_jacobi(0.5);
  EXPECT_NEAR(at_half.sn, -0.6, 1e-15);
  EXPECT_NEAR(at_half.cn, 0.8, 1e-15);
  EXPECT_NEAR(at_half.dn, 0.8, 1e-15);
  const JacobiLimits at_one = limit_jacobi(1.0);
  EXPECT_EQ(at_one.sn, 0.0);
  EXPECT_EQ(at_one.cn, 1.0);
  EXPECT_NEAR(limit_sn_value(1e-9), -1.0, 1e-15);
  for (double x : {0.1, 0.4, 0.9}) {
    const JacobiLimits l = limit_jacobi(x);
    EXPECT_NEAR(l.sn * l.sn + l.cn * l.cn, 1.0, 1e-15);
  }
  EXPECT_EQ(limit_p1(0.3), 0.3);
  EXPECT_THROW(limit_jacobi(0.0), DomainError);
  EXPECT_THROW(limit_jacobi(1.5), DomainError);
  EXPECT_THROW(limit_p1(1.0), DomainError);
}

TEST(LimitCase, ParseAndPrint) {
  for (LimitCase c : {LimitCase::i_puncture_to_boundary, LimitCase::ii_R_to_infinity,
                      LimitCase::iii_R_to_one, LimitCase::iv_ratio_fixed}) {
    EXPECT_EQ(parse_limit_case(to_string(c)), c);
  }
  EXPECT_THROW(parse_limit_case("v"), DomainError);
  EXPECT_EQ(driver_name(LimitCase::iv_ratio_fixed), "R");
}

TEST(RunScenario, CaseI) {
  const LimitScenario s = default_scenario(LimitCase::i_puncture_to_boundary);
  const std::vector<double> samples = default_samples(s);
  const ConvergenceTable t = run_scenario(s, samples);
  ASSERT_EQ(t.rows.size(), samples.size());
  EXPECT_EQ(t.driver, "a");
  const ConvergenceRow& last = t.rows.back();
  EXPECT_NEAR(find(last, "lambda2").target, kPi / std::log(2.0), 1e-15);
  EXPECT_LT(find(last, "lambda2").deviation, 1e-9);
  EXPECT_LT(find(last, "p2").deviation, 1e-9);
  EXPECT_LT(find(t.rows.front(), "inv_lambda1").deviation, find(t.rows.front(), "inv_lambda1").value + 1);
  EXPECT_LT(find(last, "inv_lambda1").deviation, find(t.rows.front(), "inv_lambda1").deviation);

  LimitScenario m = s;
  m.mirrored = true;
  const ConvergenceTable tm = run_scenario(m, default_samples(m));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_NEAR(find(tm.rows[i], "lambda1").value, find(t.rows[i], "lambda2").value, 1e-12);
  }
}

TEST(RunScenario, CaseII) {
  const LimitScenario s = default_scenario(LimitCase::ii_R_to_infinity);
  const ConvergenceTable t = run_scenario(s, default_samples(s));
  const ConvergenceRow& first = t.rows.front();
  const ConvergenceRow& last = t.rows.back();
  for (const char* name : {"hfh_deviation", "hgh_deviation", "excess_ratio"}) {
    EXPECT_LT(find(last, name).deviation, find(first, name).deviation) << name;
  }
  EXPECT_LT(find(last, "hgh_deviation").deviation, 1e-4);
  EXPECT_NEAR(find(last, "trace_sq_fg_inv").value, 4.0, 1e-3);
}

TEST(RunScenario, CaseIII) {
  const LimitScenario s = default_scenario(LimitCase::iii_R_to_one);
  const ConvergenceTable t = run_scenario(s, default_samples(s));
  const ConvergenceRow& first = t.rows.front();
  const ConvergenceRow& last = t.rows.back();
  for (const char* name : {"q_complement", "p1_complement", "inv_lambda1", "g_deviation", "inv_k"}) {
    EXPECT_LT(find(last, name).deviation, find(first, name).deviation) << name;
  }
  EXPECT_LT(find(last, "q_complement").value, 1e-20);
}

TEST(RunScenario, CaseIV) {
  const LimitScenario s = default_scenario(LimitCase::iv_ratio_fixed);
  const ConvergenceTable t = run_scenario(s, default_samples(s));
  const ConvergenceRow& last = t.rows.back();
  EXPECT_LT(find(last, "p1").deviation, 1e-11);
  EXPECT_LT(find(last, "sn_v").deviation, 1e-12);
  EXPECT_LT(find(last, "dn_v").deviation, 1e-12);
  EXPECT_NEAR(find(last, "lambda1").target, 2.0 * kPi / mu(ModulusReal(0.5)), 1e-15);
}

TEST(RunScenario, CaseIVReferenceDeviation) {
  // mpmath: p1 - x at R = 1e3, x = 0.5
  const LimitScenario s = default_scenario(LimitCase::iv_ratio_fixed);
  const std::vector<double> samples{1e3};
  const ConvergenceTable t = run_scenario(s, samples);
  EXPECT_NEAR(find(t.rows[0], "p1").value - 0.5, 1.500000375e-6, 1e-12);
}

TEST(RunScenario, RejectsBadSamples) {
  const LimitScenario s = default_scenario(LimitCase::iv_ratio_fixed);
  EXPECT_THROW(run_scenario(s, std::vector<double>{}), DomainError);
  EXPECT_THROW(run_scenario(s, std::vector<double>{100.0, 10.0}), DomainError);
  EXPECT_THROW(run_scenario(s, std::vector<double>{1.0}), DomainError);
  const LimitScenario i = default_scenario(LimitCase::i_puncture_to_boundary);
  EXPECT_THROW(run_scenario(i, std::vector<double>{2.5}), DomainError);
  const LimitScenario ii = default_scenario(LimitCase::ii_R_to_infinity);
  EXPECT_THROW(run_scenario(ii, std::vector<double>{1.1, 1.2}), DomainError);
  EXPECT_THROW(run_scenario(ii, std::vector<double>{NAN}), DomainError);
}
