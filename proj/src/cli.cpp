#include "annulus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "annulus/complex_structure.hpp"
#include "annulus/degeneration.hpp"
#include "annulus/errors.hpp"
#include "annulus/fundamental_domain.hpp"
#include "annulus/invariants.hpp"
#include "annulus/report_json.hpp"

namespace annulus {

namespace {

constexpr double kLengthRouteResidual = 1e-10;

int fail(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& msg,
         int code) {
  out << error_json(kind, msg, code).dump() << "\n";
  err << "error: " << msg << "\n";
  return code;
}

struct Options {
  double R = 0.0;
  double a = 0.0;
  bool pretty = false;
  double k = 0.0;
  double r = 0.0;
  std::string output;
  int orbit_depth = 0;
  std::string case_tag;
  std::vector<double> samples;
  std::optional<double> frozen;
  bool mirrored = false;
  std::uint64_t seed = kDefaultSeed;
  std::string filter;
};

int cmd_describe(const Options& o, std::ostream& out) {
  const ExtremalReport ex = extremal_lengths(AnnulusParams(o.R, o.a));
  out << describe_json(ex).dump(o.pretty ? 2 : -1) << "\n";
  return kExitOk;
}

int cmd_group(const Options& o, std::ostream& out, std::ostream& err) {
  const Json j = group_json(GroupParams(o.k, o.r));
  out << j.dump() << "\n";
  if (!(j["length_route_residual"].get<double>() < kLengthRouteResidual)) {
    err << "length-route cross-check residual above " << kLengthRouteResidual << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string svg = render_svg(GroupParams(o.k, o.r), o.orbit_depth);
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) return fail(out, err, "io_error", "cannot open '" + o.output + "' for writing", kExitIo);
  file << svg;
  file.close();
  if (!file) return fail(out, err, "io_error", "failed writing '" + o.output + "'", kExitIo);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "render";
  j["k"] = o.k;
  j["r"] = o.r;
  j["orbit_depth"] = o.orbit_depth;
  j["output"] = o.output;
  j["bytes"] = svg.size();
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_limits(const Options& o, std::ostream& out) {
  LimitScenario s = default_scenario(parse_limit_case(o.case_tag));
  if (o.frozen) s.frozen = *o.frozen;
  s.mirrored = o.mirrored;
  if (s.mirrored && s.case_tag != LimitCase::i_puncture_to_boundary) {
    throw DomainError("--mirrored applies to case i only");
  }
  const std::vector<double> samples = o.samples.empty() ? default_samples(s) : o.samples;
  out << limits_json(run_scenario(s, samples)).dump() << "\n";
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<PropertyResult> results = run_invariants(o.seed, o.filter);
  int failed = 0;
  Json list = Json::array();
  for (const PropertyResult& p : results) {
    err << (p.passed ? "[PASS] " : "[FAIL] ") << p.module << ": " << p.name << " -- " << p.detail << "\n";
    if (!p.passed) ++failed;
    Json e;
    e["module"] = p.module;
    e["property"] = p.name;
    e["passed"] = p.passed;
    e["detail"] = p.detail;
    list.push_back(e);
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "check";
  j["seed"] = o.seed;
  j["filter"] = o.filter.empty() ? "all" : canonical_module(o.filter);
  j["results"] = list;
  j["passed"] = static_cast<int>(results.size()) - failed;
  j["failed"] = failed;
  out << j.dump() << "\n";
  err << results.size() - failed << "/" << results.size() << " properties passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic and conformal structure of a once-punctured annulus", "annulus"};
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "extremal lengths of the annulus 1/R<|z|<R punctured at a");
  describe->add_option("--R", o.R, "outer radius")->required();
  describe->add_option("--a", o.a, "puncture on the positive real axis")->required();
  describe->add_flag("--json-pretty", o.pretty, "indent the JSON output");

  auto* group = app.add_subcommand("group", "covering group, geodesic lengths and collar angles");
  group->add_option("--k", o.k, "hyperbolic generator scale")->required();
  group->add_option("--r", o.r, "parabolic generator parameter")->required();

  auto* render = app.add_subcommand("render", "SVG of the fundamental domain");
  render->add_option("--k", o.k, "hyperbolic generator scale")->required();
  render->add_option("--r", o.r, "parabolic generator parameter")->required();
  render->add_option("-o,--output", o.output, "SVG path")->required();
  render->add_option("--orbit-depth", o.orbit_depth, "draw images under words up to this length")
      ->check(CLI::Range(0, kMaxOrbitDepth));

  auto* limits = app.add_subcommand("limits", "convergence table for a degeneration case");
  limits->add_option("--case", o.case_tag, "i, ii, iii or iv")->required();
  limits->add_option("--samples", o.samples, "driver values, comma separated")->delimiter(',');
  limits->add_option("--frozen", o.frozen, "held value: R for case i, x = a/R for case iv");
  limits->add_flag("--mirrored", o.mirrored, "case i: puncture toward the inner circle");

  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("--seed", o.seed, "generator seed");
  check->add_option("--filter", o.filter, "one module (elliptic, moebius, hyperbolic, complex, degeneration, cli)");

  std::vector<std::string> argv_store{"annulus"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(out, err, "usage_error", e.what(), kExitDomain);
  }

  try {
    if (*describe) return cmd_describe(o, out);
    if (*group) return cmd_group(o, out, err);
    if (*render) return cmd_render(o, out, err);
    if (*limits) return cmd_limits(o, out);
    if (*check) return cmd_check(o, out, err);
  } catch (const PoleError& e) {
    return fail(out, err, "pole_error", e.what(), kExitDomain);
  } catch (const DomainError& e) {
    return fail(out, err, "domain_error", e.what(), kExitDomain);
  } catch (const ClassificationError& e) {
    return fail(out, err, "classification_error", e.what(), kExitDomain);
  } catch (const MonotonicityError& e) {
    return fail(out, err, "monotonicity_error", e.what(), kExitCheckFailed);
  } catch (const ConvergenceError& e) {
    return fail(out, err, "convergence_error", e.what(), kExitCheckFailed);
  } catch (const ConsistencyError& e) {
    return fail(out, err, "consistency_error", e.what(), kExitCheckFailed);
  }
  return fail(out, err, "usage_error", "no subcommand", kExitDomain);
}

}  // namespace annulus
