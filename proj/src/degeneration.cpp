#include "annulus/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "annulus/complex_structure.hpp"
#include "annulus/errors.hpp"
#include "annulus/hyperbolic_structure.hpp"
#include "annulus/special_fn.hpp"

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNoiseFloor = 8.0 * std::numeric_limits<double>::epsilon();

void require_above_one(double x, const char* what) {
  if (!std::isfinite(x) || !(x > 1.0)) throw DomainError(std::string(what) + " must exceed 1");
}

void require_ratio(double x, bool closed_at_one) {
  const bool ok = std::isfinite(x) && x > 0.0 && (closed_at_one ? x <= 1.0 : x < 1.0);
  if (!ok) throw DomainError("ratio x = a/R must lie in (0,1)");
}

Observable observe(std::string name, double value, double target) {
  return {std::move(name), value, target, std::abs(value - target)};
}

}  // namespace

MoebiusMap conjugator_h(double k) {
  require_above_one(k, "k");
  const double c = (k + 1.0) / (k - 1.0);
  return MoebiusMap::from_entries(c, -c, 1.0, 1.0);
}

MoebiusMap conjugator_h1(double r) {
  require_above_one(r, "r");
  return MoebiusMap::from_entries((r + 1.0) / r, -(r + 1.0), 1.0, -1.0);
}

MoebiusMap conjugated_f_closed_form(double k) {
  require_above_one(k, "k");
  const double s = 0.5 / k;
  return MoebiusMap::unimodular((k * k + 1.0) * s, (k + 1.0) * (k + 1.0) * s,
                                (k - 1.0) * (k - 1.0) * s, (k * k + 1.0) * s);
}

MoebiusMap conjugated_g_closed_form(double k, double r) {
  require_above_one(k, "k");
  require_above_one(r, "r");
  return MoebiusMap::unimodular(1.0, 0.0, 2.0 * (k - 1.0) * (r + 1.0) / ((k + 1.0) * (r - 1.0)),
                                1.0);
}

MoebiusMap h1_conjugated_g_closed_form(double r) {
  require_above_one(r, "r");
  return MoebiusMap::unimodular(1.0, -(r + 1.0) * (r + 1.0) / r, 0.0, 1.0);
}

CongruenceTargets congruence_targets() {
  return {MoebiusMap::unimodular(1.0, 2.0, 0.0, 1.0), MoebiusMap::unimodular(1.0, 0.0, 2.0, 1.0)};
}

MoebiusMap midpoint_limit_g() { return MoebiusMap::unimodular(3.0, -2.0, 2.0, -1.0); }

JacobiLimits limit_jacobi(double x) {
  require_ratio(x, true);
  const double x2 = x * x;
  const double c = 2.0 * x / (x2 + 1.0);
  return {(x2 - 1.0) / (x2 + 1.0), c, c};
}

double limit_sn_value(double x) { return limit_jacobi(x).sn; }

double limit_p1(double x) {
  require_ratio(x, false);
  return x;
}

const char* to_string(LimitCase c) {
  switch (c) {
    case LimitCase::i_puncture_to_boundary: return "i";
    case LimitCase::ii_R_to_infinity: return "ii";
    case LimitCase::iii_R_to_one: return "iii";
    case LimitCase::iv_ratio_fixed: return "iv";
  }
  return "unknown";
}

LimitCase parse_limit_case(const std::string& tag) {
  if (tag == "i" || tag == "i_puncture_to_boundary") return LimitCase::i_puncture_to_boundary;
  if (tag == "ii" || tag == "ii_R_to_infinity") return LimitCase::ii_R_to_infinity;
  if (tag == "iii" || tag == "iii_R_to_one") return LimitCase::iii_R_to_one;
  if (tag == "iv" || tag == "iv_ratio_fixed") return LimitCase::iv_ratio_fixed;
  throw DomainError("unknown limit case '" + tag + "'");
}

LimitScenario default_scenario(LimitCase c) {
  switch (c) {
    case LimitCase::i_puncture_to_boundary: return {c, 2.0, false};
    case LimitCase::iv_ratio_fixed: return {c, 0.5, false};
    default: return {c, 0.0, false};
  }
}

std::string driver_name(LimitCase c) {
  switch (c) {
    case LimitCase::i_puncture_to_boundary: return "a";
    case LimitCase::ii_R_to_infinity: return "r";
    case LimitCase::iii_R_to_one: return "epsilon";
    case LimitCase::iv_ratio_fixed: return "R";
  }
  return "";
}

std::vector<double> default_samples(const LimitScenario& s) {
  std::vector<double> out;
  switch (s.case_tag) {
    case LimitCase::i_puncture_to_boundary:
      for (int j = 2; j <= 6; ++j) {
        const double a = s.frozen * (1.0 - std::pow(10.0, -j));
        out.push_back(s.mirrored ? 1.0 / a : a);
      }
      break;
    case LimitCase::ii_R_to_infinity:
      for (int j = 1; j <= 5; ++j) out.push_back(1.0 + std::pow(10.0, -j));
      break;
    case LimitCase::iii_R_to_one:
      out = {1e-1, 3e-2, 1e-2, 5e-3, 3e-3};
      break;
    case LimitCase::iv_ratio_fixed:
      for (int j = 1; j <= 6; ++j) out.push_back(std::pow(10.0, j));
      break;
  }
  return out;
}

namespace {

bool increases_toward_limit(const LimitScenario& s) {
  switch (s.case_tag) {
    case LimitCase::i_puncture_to_boundary: return !s.mirrored;
    case LimitCase::iv_ratio_fixed: return true;
    default: return false;
  }
}

void validate_sample(const LimitScenario& s, double v) {
  if (!std::isfinite(v)) throw DomainError("samples must be finite");
  switch (s.case_tag) {
    case LimitCase::i_puncture_to_boundary:
      require_above_one(s.frozen, "R");
      if (!(v > 1.0 / s.frozen && v < s.frozen)) throw DomainError("case i sample a outside (1/R, R)");
      break;
    case LimitCase::ii_R_to_infinity:
      require_above_one(v, "case ii sample r");
      break;
    case LimitCase::iii_R_to_one:
      if (!(v > 0.0 && v < 2.0)) throw DomainError("case iii sample epsilon outside (0, 2)");
      break;
    case LimitCase::iv_ratio_fixed:
      require_ratio(s.frozen, false);
      require_above_one(v, "case iv sample R");
      if (!(s.frozen * v * v > 1.0)) throw DomainError("case iv sample puts a = xR inside 1/R");
      break;
  }
}

std::vector<Observable> observe_case_i(const LimitScenario& s, double a) {
  const double R = s.frozen;
  const double boundary = kPi / std::log(R);
  if (!s.mirrored) {
    const ExtremalReport ex = extremal_lengths(AnnulusParams(R, a));
    const double qv = ex.q.value();
    return {observe("lambda2", ex.lambda2, boundary), observe("inv_lambda1", 1.0 / ex.lambda1, 0.0),
            observe("p2", ex.p2.value(), 2.0 * std::sqrt(qv) / (1.0 + qv))};
  }
  // the puncture near 1/R is the puncture near R with the two families swapped
  const ExtremalReport ex = extremal_lengths(AnnulusParams(R, 1.0 / a));
  const double qv = ex.q.value();
  return {observe("lambda1", ex.lambda2, boundary), observe("inv_lambda2", 1.0 / ex.lambda1, 0.0),
          observe("p1", ex.p2.value(), 2.0 * std::sqrt(qv) / (1.0 + qv))};
}

std::vector<Observable> observe_case_ii(double r) {
  const double e = r - 1.0;
  // k - 1 = e (1 + e), so (k - 1)/(r - 1) -> 1 and k > r
  const double k = 1.0 + e * (1.0 + e);
  const Generators G = build_group(GroupParams(k, r));
  const MoebiusMap h = conjugator_h(k);
  const CongruenceTargets t = congruence_targets();
  const MoebiusMap fg = compose(G.f, G.g.inverse());
  return {observe("hfh_deviation", max_entry_deviation(conjugate(G.f, h), t.f0), 0.0),
          observe("hgh_deviation", max_entry_deviation(conjugate(G.g, h), t.g0), 0.0),
          observe("excess_ratio", (k - 1.0) / e, 1.0),
          observe("trace_sq_fg_inv", fg.trace_sq(), 4.0)};
}

std::vector<Observable> observe_case_iii(double e) {
  const ExtremalReport ex = extremal_lengths(AnnulusParams(1.0 + e, 1.0));
  const double r = 3.0 - e;
  const double k = midpoint_k(r);
  return {observe("q_complement", ex.q.complement(), 0.0),
          observe("p1_complement", ex.p1.complement(), 0.0),
          observe("inv_lambda1", 1.0 / ex.lambda1, 0.0),
          observe("inv_lambda2", 1.0 / ex.lambda2, 0.0),
          observe("g_deviation", max_entry_deviation(parabolic_generator(r), midpoint_limit_g()), 0.0),
          observe("inv_k", 1.0 / k, 0.0)};
}

std::vector<Observable> observe_case_iv(double x, double R) {
  const ExtremalReport ex = extremal_lengths(AnnulusParams(R, x * R));
  const double v = 2.0 * ex.big_k / kPi * std::log(x);
  const JacobiTriple j = jacobi(v, ex.q.complementary());
  const JacobiLimits lim = limit_jacobi(x);
  return {observe("sn_v", j.sn, lim.sn),
          observe("cn_v", j.cn, lim.cn),
          observe("dn_v", j.dn, lim.dn),
          observe("p1", ex.p1.value(), limit_p1(x)),
          observe("lambda1", ex.lambda1, slit_extremal_length(x)),
          observe("lambda2", ex.lambda2, 0.0)};
}

}  // namespace

ConvergenceTable run_scenario(const LimitScenario& s, std::span<const double> samples) {
  if (samples.empty()) throw DomainError("scenario needs at least one sample");
  const bool up = increases_toward_limit(s);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    validate_sample(s, samples[i]);
    if (i > 0 && (up ? !(samples[i] > samples[i - 1]) : !(samples[i] < samples[i - 1]))) {
      throw DomainError("samples must move strictly toward the limit");
    }
  }
  ConvergenceTable table{s, driver_name(s.case_tag), {}};
  for (const double v : samples) {
    ConvergenceRow row{v, {}};
    switch (s.case_tag) {
      case LimitCase::i_puncture_to_boundary: row.observables = observe_case_i(s, v); break;
      case LimitCase::ii_R_to_infinity: row.observables = observe_case_ii(v); break;
      case LimitCase::iii_R_to_one: row.observables = observe_case_iii(v); break;
      case LimitCase::iv_ratio_fixed: row.observables = observe_case_iv(s.frozen, v); break;
    }
    table.rows.push_back(std::move(row));
  }
  const std::size_t n = table.rows.size();
  const std::size_t start = n - (n + 1) / 2;
  for (std::size_t i = start + 1; i < n; ++i) {
    const auto& prev = table.rows[i - 1].observables;
    const auto& cur = table.rows[i].observables;
    for (std::size_t c = 0; c < cur.size(); ++c) {
      const double floor =
          kNoiseFloor * std::max({1.0, std::abs(cur[c].target), std::abs(cur[c].value)});
      if (cur[c].deviation > prev[c].deviation + floor) {
        throw MonotonicityError("case " + std::string(to_string(s.case_tag)) + ": deviation of " +
                                cur[c].name + " grew at " + table.driver + " = " +
                                std::to_string(table.rows[i].driver));
      }
    }
  }
  return table;
}

}  // namespace annulus
