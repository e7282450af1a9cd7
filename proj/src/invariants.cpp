#include "annulus/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "annulus/cli.hpp"
#include "annulus/complex_structure.hpp"
#include "annulus/degeneration.hpp"
#include "annulus/errors.hpp"
#include "annulus/fundamental_domain.hpp"
#include "annulus/hyperbolic_structure.hpp"
#include "annulus/moebius.hpp"
#include "annulus/report_json.hpp"
#include "annulus/special_fn.hpp"

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names{"special_fn",        "moebius",
                                              "hyperbolic_structure", "complex_structure",
                                              "degeneration",      "cli"};
  return names;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class Recorder {
 public:
  Recorder(std::string module, std::vector<PropertyResult>& out)
      : module_(std::move(module)), out_(out) {}

  // max_err < tol
  void bound(const std::string& name, double max_err, double tol) {
    out_.push_back({module_, name, max_err < tol, "max " + sci(max_err) + " (tol " + sci(tol) + ")"});
  }
  void flag(const std::string& name, bool ok, const std::string& detail) {
    out_.push_back({module_, name, ok, detail});
  }
  // Runs body; any exception fails the property with its message.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.push_back({module_, name, false, std::string("exception: ") + e.what()});
    }
  }

 private:
  std::string module_;
  std::vector<PropertyResult>& out_;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Incomplete integral of the first kind in amplitude form, by adaptive
// Gauss-Kronrod. Independent of the AGM/Landen code under test.
double incomplete_f_oracle(double phi, double m) {
  auto f = [m](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - m * m * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, phi, 15, 1e-14);
}

ModulusReal landen_image(const ModulusReal& q) {
  const double v = q.value();
  const double one_minus = q.complement() * q.complement() / (1.0 + v);
  return ModulusReal::with_complement(2.0 * std::sqrt(v) / (1.0 + v), one_minus / (1.0 + v));
}

void special_fn_props(std::mt19937_64& rng, Recorder& rec) {
  rec.guarded("jacobi identities, 1000 moduli x 100 arguments", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ModulusReal m(uniform(rng, 0.01, 0.99));
      for (int j = 0; j < 100; ++j) {
        const JacobiTriple t = jacobi(uniform(rng, -10.0, 10.0), m);
        const double mv = m.value();
        worst = std::max({worst, std::abs(t.sn * t.sn + t.cn * t.cn - 1.0),
                          std::abs(t.dn * t.dn + mv * mv * t.sn * t.sn - 1.0)});
      }
    }
    rec.bound("jacobi identities, 1000 moduli x 100 arguments", worst, 1e-12);
  });
  rec.guarded("mu strictly decreasing", [&] {
    std::vector<double> ms(1000);
    for (double& m : ms) m = std::exp(uniform(rng, std::log(1e-12), std::log(1.0 - 1e-12)));
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    int bad = 0;
    for (std::size_t i = 1; i < ms.size(); ++i) {
      if (!(mu(ModulusReal(ms[i - 1])) > mu(ModulusReal(ms[i])))) ++bad;
    }
    rec.flag("mu strictly decreasing", bad == 0, std::to_string(bad) + " violations");
  });
  rec.guarded("Landen identity mu(2 sqrt q/(1+q)) = mu(q)/2", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      // log grid toward 0 and, mirrored through the complement, toward 1
      const double e = std::exp(std::log(1e-6) + (std::log(0.5) - std::log(1e-6)) * i / 99.0);
      const ModulusReal lo(e);
      const ModulusReal hi = ModulusReal::with_complement(1.0 - e, std::sqrt(e * (2.0 - e)));
      for (const ModulusReal& q : {lo, hi}) {
        worst = std::max(worst, std::abs(mu(landen_image(q)) - 0.5 * mu(q)));
      }
    }
    rec.bound("Landen identity mu(2 sqrt q/(1+q)) = mu(q)/2", worst, 1e-11);
  });
  rec.guarded("sn inverts the defining integral on (0, K)", [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const ModulusReal m(uniform(rng, 0.01, 0.99));
      const double big_k = ellip_k(m);
      for (int j = 0; j < 25; ++j) {
        const double u = uniform(rng, 0.0, big_k);
        const JacobiTriple t = jacobi(u, m);
        worst = std::max(worst, std::abs(u - incomplete_f_oracle(std::atan2(t.sn, t.cn), m.value())));
      }
    }
    rec.bound("sn inverts the defining integral on (0, K)", worst, 1e-9);
  });
  rec.guarded("mu(mu_inverse(y)) = y on [1e-3, 1e3]", [&] {
    double worst = 0.0;
    int unrepresentable = 0;
    int wrong_error = 0;
    const double top = mu(ModulusReal(1e-300));
    const double bottom = kPi * kPi / (4.0 * top);
    for (int i = 0; i < 400; ++i) {
      const double y = std::exp(uniform(rng, std::log(1e-3), std::log(1e3)));
      if (y > top || y < bottom) {
        ++unrepresentable;
        try {
          (void)mu_inverse(y);
          ++wrong_error;
        } catch (const DomainError&) {
        }
        continue;
      }
      worst = std::max(worst, std::abs(mu(mu_inverse(y)) - y));
    }
    rec.flag("mu(mu_inverse(y)) = y on [1e-3, 1e3]", worst < 1e-11 && wrong_error == 0,
             "max " + sci(worst) + " (tol 1e-11); " + std::to_string(unrepresentable) +
                 " samples outside double range raised DomainError" +
                 (wrong_error ? ", " + std::to_string(wrong_error) + " did not" : ""));
  });
}

MoebiusMap random_map(std::mt19937_64& rng) {
  const double a = uniform(rng, 0.5, 2.0) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
  const double b = uniform(rng, -2.0, 2.0);
  const double c = uniform(rng, -2.0, 2.0);
  return MoebiusMap::from_entries(a, b, c, (1.0 + b * c) / a);
}

MoebiusMap random_hyperbolic(std::mt19937_64& rng) {
  for (;;) {
    const MoebiusMap p = random_map(rng);
    if (p.trace_sq() > 4.5) return p;
  }
}

void moebius_props(std::mt19937_64& rng, Recorder& rec) {
  rec.guarded("determinant 1 kept by compose/inverse/conjugate, 1e4 trials", [&] {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const MoebiusMap p = random_map(rng);
      const MoebiusMap s = random_map(rng);
      for (const MoebiusMap& m : {compose(p, s), p.inverse(), conjugate(p, s)}) {
        worst = std::max(worst, std::abs(m.det() - 1.0));
      }
    }
    rec.bound("determinant 1 kept by compose/inverse/conjugate, 1e4 trials", worst, 1e-10);
  });
  rec.guarded("trace_sq conjugation invariant", [&] {
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const MoebiusMap p = random_map(rng);
      const MoebiusMap s = random_map(rng);
      worst = std::max(worst, std::abs(conjugate(p, s).trace_sq() - p.trace_sq()));
    }
    rec.bound("trace_sq conjugation invariant", worst, 1e-10);
  });
  rec.guarded("translation length conjugation invariant", [&] {
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const MoebiusMap p = random_hyperbolic(rng);
      const MoebiusMap s = random_map(rng);
      worst = std::max(worst, std::abs(translation_length(conjugate(p, s)) - translation_length(p)));
    }
    rec.bound("translation length conjugation invariant", worst, 1e-10);
  });
  rec.guarded("maps fix their fixed points", [&] {
    double worst = 0.0;
    auto check = [&](const MoebiusMap& p) {
      for (const BoundaryPoint& x : fixed_points(p)) {
        const BoundaryPoint y = apply(p, x);
        if (x.is_infinite() || y.is_infinite()) {
          if (x.is_infinite() != y.is_infinite()) worst = std::max(worst, 1.0);
          continue;
        }
        worst = std::max(worst, std::abs(y.value() - x.value()) / std::max(1.0, std::abs(x.value())));
      }
    };
    for (int i = 0; i < 2000; ++i) {
      check(random_hyperbolic(rng));
      const MoebiusMap translation = MoebiusMap::unimodular(1.0, uniform(rng, 0.5, 3.0), 0.0, 1.0);
      check(conjugate(translation, random_map(rng)));
    }
    rec.bound("maps fix their fixed points", worst, 1e-9);
  });
}

void hyperbolic_props(std::mt19937_64& rng, Recorder& rec) {
  std::vector<GroupParams> sample;
  while (sample.size() < 1000) {
    const double k = uniform(rng, 1.0, 50.0);
    const double r = uniform(rng, 1.0, k);
    if (r > 1.0 && r < k) sample.emplace_back(k, r);
  }
  rec.guarded("length-route angles match collar angles", [&] {
    double worst = 0.0;
    for (const GroupParams& p : sample) {
      const HyperbolicReport h = collar_angles(p);
      const GeodesicLengths l = geodesic_lengths(p);
      const CollarAngles th = angles_from_lengths(l.l1, l.l2);
      worst = std::max({worst, std::abs(h.theta1 - th.theta1), std::abs(h.theta2 - th.theta2)});
    }
    rec.bound("length-route angles match collar angles", worst, 1e-10);
  });
  rec.guarded("delta inside ((r+1)^2/2, r(r+1)) and t > 1", [&] {
    int bad = 0;
    for (const GroupParams& p : sample) {
      const HyperbolicReport h = collar_angles(p);
      const double r = p.r();
      if (!(2.0 * r < 0.5 * (r + 1) * (r + 1) && 0.5 * (r + 1) * (r + 1) < h.delta &&
            h.delta < r * (r + 1) && h.t > 1.0)) {
        ++bad;
      }
    }
    rec.flag("delta inside ((r+1)^2/2, r(r+1)) and t > 1", bad == 0, std::to_string(bad) + " violations");
  });
  rec.guarded("f g^-1 equals its closed form", [&] {
    double worst = 0.0;
    for (const GroupParams& p : sample) {
      const Generators G = build_group(p);
      const MoebiusMap lhs = compose(G.f, G.g.inverse());
      const MoebiusMap rhs = fg_inverse_closed_form(p);
      for (int i = 0; i < 4; ++i) {
        const double e = rhs.entries()[i];
        worst = std::max(worst, std::abs(lhs.entries()[i] - e) / std::max(1.0, std::abs(e)));
      }
    }
    rec.bound("f g^-1 equals its closed form (relative to max(1,|entry|))", worst, 1e-12);
  });
  rec.guarded("collar lemma angle below maximal collar angle", [&] {
    int bad = 0;
    for (const GroupParams& p : sample) {
      const HyperbolicReport h = collar_angles(p);
      if (!(collar_lemma_angle(h.l1) < h.theta1 && collar_lemma_angle(h.l2) < h.theta2)) ++bad;
    }
    rec.flag("collar lemma angle below maximal collar angle", bad == 0, std::to_string(bad) + " violations");
  });
  rec.guarded("trichotomy tag matches angle and length order", [&] {
    int bad = 0;
    for (const GroupParams& p : sample) {
      const HyperbolicReport h = collar_angles(p);
      const AngleOrdering o = trichotomy(p);
      bool ok = true;
      switch (o) {
        case AngleOrdering::theta1_gt: ok = h.theta1 > h.theta2 && h.l1 < h.l2; break;
        case AngleOrdering::theta1_lt: ok = h.theta1 < h.theta2 && h.l1 > h.l2; break;
        case AngleOrdering::equal:
          ok = std::abs(h.theta1 - h.theta2) < 1e-9 && std::abs(h.l1 - h.l2) < 1e-9;
          break;
      }
      if (!ok) ++bad;
    }
    rec.flag("trichotomy tag matches angle and length order", bad == 0, std::to_string(bad) + " violations");
  });
  rec.guarded("length-route angles lie in (0, pi/2)", [&] {
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const CollarAngles th =
          angles_from_lengths(std::exp(uniform(rng, std::log(1e-3), std::log(30.0))),
                          std::exp(uniform(rng, std::log(1e-3), std::log(30.0))));
      for (double t : {th.theta1, th.theta2}) {
        if (!(t > 0.0 && t < 0.5 * kPi)) ++bad;
      }
    }
    rec.flag("length-route angles lie in (0, pi/2)", bad == 0, std::to_string(bad) + " violations");
  });
}

void complex_props(std::mt19937_64& rng, Recorder& rec) {
  std::vector<AnnulusParams> sample;
  for (int i = 0; i < 1000; ++i) {
    const double R = std::exp(uniform(rng, 0.02, 3.0));
    sample.emplace_back(R, std::pow(R, uniform(rng, -0.98, 0.98)));
  }
  std::vector<ExtremalReport> reports;
  rec.guarded("u1 + u2 = K'/2", [&] {
    double worst = 0.0;
    for (const AnnulusParams& A : sample) {
      reports.push_back(extremal_lengths(A));
      const ExtremalReport& ex = reports.back();
      worst = std::max(worst, std::abs(ex.u1 + ex.u2 - 0.5 * ex.big_k_prime));
    }
    rec.bound("u1 + u2 = K'/2", worst, 1e-11);
  });
  if (reports.size() != sample.size()) return;
  rec.guarded("b = 1/R^2", [&] {
    double worst = 0.0;
    for (const ExtremalReport& ex : reports) worst = std::max(worst, std::abs(ex.b - 1.0 / (ex.R * ex.R)));
    rec.bound("b = 1/R^2", worst, 1e-12);
  });
  rec.guarded("sqrt q < p_j < 1 and lambda_j = 2 pi/mu(p_j)", [&] {
    int bad = 0;
    double worst = 0.0;
    for (const ExtremalReport& ex : reports) {
      // sqrt q < p  <=>  p'^2 < 1 - q = q'^2/(1+q), which survives q rounding to 1
      const double bound = ex.q.complement() / std::sqrt(1.0 + ex.q.value());
      for (const ModulusReal* p : {&ex.p1, &ex.p2}) {
        if (!(p->complement() < bound && p->complement() > 0.0)) ++bad;
      }
      worst = std::max({worst, std::abs(ex.lambda1 - 2.0 * kPi / mu(ex.p1)) / ex.lambda1,
                        std::abs(ex.lambda2 - 2.0 * kPi / mu(ex.p2)) / ex.lambda2});
    }
    rec.flag("sqrt q < p_j < 1 and lambda_j = 2 pi/mu(p_j)", bad == 0 && worst < 1e-11,
             std::to_string(bad) + " range violations, max rel " + sci(worst));
  });
  rec.guarded("swap a <-> 1/a exchanges lambda1, lambda2", [&] {
    double worst = 0.0;
    for (const ExtremalReport& ex : reports) {
      const ExtremalReport sw = extremal_lengths(AnnulusParams(ex.R, 1.0 / ex.a));
      worst = std::max({worst, std::abs(sw.lambda1 - ex.lambda2) / ex.lambda2,
                        std::abs(sw.lambda2 - ex.lambda1) / ex.lambda1});
    }
    rec.bound("swap a <-> 1/a exchanges lambda1, lambda2 (relative)", worst, 1e-12);
  });
  rec.guarded("lambda_j increases as the puncture nears boundary j (R = 2)", [&] {
    int bad = 0;
    double prev1 = 0.0;
    double prev2 = 0.0;
    for (int i = 1; i < 200; ++i) {
      const double a = std::pow(2.0, -1.0 + 2.0 * i / 200.0);
      const ExtremalReport ex = extremal_lengths(AnnulusParams(2.0, a));
      if (i > 1 && !(ex.lambda1 > prev1 && ex.lambda2 < prev2)) ++bad;
      prev1 = ex.lambda1;
      prev2 = ex.lambda2;
    }
    rec.flag("lambda_j increases as the puncture nears boundary j (R = 2)", bad == 0,
             std::to_string(bad) + " violations");
  });
  rec.guarded("sigma(omega(puncture)) = p_j", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
      const ExtremalReport& ex = reports[i];
      const AnnulusParams A(ex.R, ex.a);
      worst = std::max({worst, std::abs(sigma_map(puncture_omega_image(A, 1), ex.q) - ex.p1.value()),
                        std::abs(sigma_map(puncture_omega_image(A, 2), ex.q) - ex.p2.value())});
    }
    rec.bound("sigma(omega(puncture)) = p_j", worst, 1e-10);
  });
}

void degeneration_props(Recorder& rec) {
  struct Envelope {
    LimitCase c;
    bool mirrored;
    const char* column;
    double tol;
  };
  const Envelope envelopes[] = {
      {LimitCase::i_puncture_to_boundary, false, "lambda2", 1e-3},
      {LimitCase::i_puncture_to_boundary, true, "lambda1", 1e-3},
      {LimitCase::ii_R_to_infinity, false, "hgh_deviation", 1e-3},
      {LimitCase::iii_R_to_one, false, "g_deviation", 1e-2},
      {LimitCase::iv_ratio_fixed, false, "p1", 1e-6},
  };
  for (const Envelope& e : envelopes) {
    const std::string name = std::string("case ") + to_string(e.c) + (e.mirrored ? " mirrored" : "") +
                             ": monotone tail, final " + e.column + " deviation";
    rec.guarded(name, [&] {
      LimitScenario s = default_scenario(e.c);
      s.mirrored = e.mirrored;
      const std::vector<double> samples = default_samples(s);
      const ConvergenceTable t = run_scenario(s, samples);
      double last = -1.0;
      for (const Observable& o : t.rows.back().observables) {
        if (o.name == e.column) last = o.deviation;
      }
      rec.flag(name, last >= 0.0 && last < e.tol, sci(last) + " (tol " + sci(e.tol) + ")");
    });
  }
  rec.guarded("case ii excess ratio (k-1)/(r-1) -> 1", [&] {
    const LimitScenario s = default_scenario(LimitCase::ii_R_to_infinity);
    const ConvergenceTable t = run_scenario(s, default_samples(s));
    double last = 1.0;
    for (const Observable& o : t.rows.back().observables) {
      if (o.name == "excess_ratio") last = o.deviation;
    }
    rec.bound("case ii excess ratio (k-1)/(r-1) -> 1", last, 1e-4);
  });
  rec.guarded("limit sn^2 + cn^2 = 1 and dn = cn", [&] {
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const JacobiLimits l = limit_jacobi(i / 100.0);
      worst = std::max({worst, std::abs(l.sn * l.sn + l.cn * l.cn - 1.0), std::abs(l.dn - l.cn)});
    }
    rec.bound("limit sn^2 + cn^2 = 1 and dn = cn", worst, 1e-15);
  });
}

void cli_props(Recorder& rec) {
  rec.guarded("describe JSON carries schema_version and fixed key order", [&] {
    const Json j = describe_json(extremal_lengths(AnnulusParams(2.0, 1.5)));
    const std::vector<std::string> expected{
        "schema_version", "command", "R", "a", "q", "q_complement", "big_k", "big_k_prime",
        "u1", "u2", "p1", "p1_complement", "p2", "p2_complement", "lambda1", "lambda2", "b",
        "alpha1", "alpha2", "precision_downgraded"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    rec.flag("describe JSON carries schema_version and fixed key order",
             keys == expected && j["schema_version"] == kSchemaVersion, std::to_string(keys.size()) + " keys");
  });
  rec.guarded("SVG output is byte-deterministic", [&] {
    const GroupParams p(2.0, 1.5);
    rec.flag("SVG output is byte-deterministic", render_svg(p, 2) == render_svg(p, 2), "depth 2");
  });
  rec.guarded("exit codes: 0 ok, 2 domain error", [&] {
    std::ostringstream out, err;
    const int ok = run_cli({"group", "--k", "2", "--r", "1.5"}, out, err);
    const int bad = run_cli({"group", "--k", "1.2", "--r", "1.5"}, out, err);
    const int unknown = run_cli({"limits", "--case", "v"}, out, err);
    rec.flag("exit codes: 0 ok, 2 domain error", ok == 0 && bad == 2 && unknown == 2,
             "ok=" + std::to_string(ok) + " domain=" + std::to_string(bad) +
                 " unknown-case=" + std::to_string(unknown));
  });
}

}  // namespace

std::string canonical_module(const std::string& name) {
  if (name == "elliptic") return "special_fn";
  if (name == "hyperbolic") return "hyperbolic_structure";
  if (name == "complex") return "complex_structure";
  for (const std::string& m : module_names()) {
    if (m == name) return m;
  }
  throw DomainError("unknown module filter '" + name + "'");
}

std::vector<PropertyResult> run_invariants(std::uint64_t seed, const std::string& filter) {
  const std::string selected = filter.empty() ? "" : canonical_module(filter);
  std::vector<PropertyResult> out;
  const auto& names = module_names();
  for (std::size_t idx = 0; idx < names.size(); ++idx) {
    const std::string& m = names[idx];
    if (!selected.empty() && selected != m) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    std::mt19937_64 rng(seq);
    Recorder rec(m, out);
    if (m == "special_fn") special_fn_props(rng, rec);
    if (m == "moebius") moebius_props(rng, rec);
    if (m == "hyperbolic_structure") hyperbolic_props(rng, rec);
    if (m == "complex_structure") complex_props(rng, rec);
    if (m == "degeneration") degeneration_props(rec);
    if (m == "cli") cli_props(rec);
  }
  return out;
}

}  // namespace annulus
