#include "annulus/report_json.hpp"

#include <algorithm>
#include <cmath>

namespace annulus {

Json matrix_json(const MoebiusMap& m) {
  return Json::array({Json::array({m.a(), m.b()}), Json::array({m.c(), m.d()})});
}

Json describe_json(const ExtremalReport& ex) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "describe";
  j["R"] = ex.R;
  j["a"] = ex.a;
  j["q"] = ex.q.value();
  j["q_complement"] = ex.q.complement();
  j["big_k"] = ex.big_k;
  j["big_k_prime"] = ex.big_k_prime;
  j["u1"] = ex.u1;
  j["u2"] = ex.u2;
  j["p1"] = ex.p1.value();
  j["p1_complement"] = ex.p1.complement();
  j["p2"] = ex.p2.value();
  j["p2_complement"] = ex.p2.complement();
  j["lambda1"] = ex.lambda1;
  j["lambda2"] = ex.lambda2;
  j["b"] = ex.b;
  j["alpha1"] = ex.alpha1;
  j["alpha2"] = ex.alpha2;
  j["precision_downgraded"] = ex.precision_downgraded;
  return j;
}

Json group_json(const GroupParams& p) {
  const Generators G = build_group(p);
  const HyperbolicReport h = collar_angles(p);
  const CollarAngles th = angles_from_lengths(h.l1, h.l2);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "group";
  j["k"] = p.k();
  j["r"] = p.r();
  Json gens;
  gens["f"] = matrix_json(G.f);
  gens["g"] = matrix_json(G.g);
  gens["fg_inverse"] = matrix_json(compose(G.f, G.g.inverse()));
  j["generators"] = gens;
  j["l1"] = h.l1;
  j["l2"] = h.l2;
  j["theta1"] = h.theta1;
  j["theta2"] = h.theta2;
  j["t"] = h.t;
  j["delta"] = h.delta;
  j["trichotomy"] = to_string(trichotomy(p));
  j["collar_lemma_theta1"] = collar_lemma_angle(h.l1);
  j["collar_lemma_theta2"] = collar_lemma_angle(h.l2);
  j["collar_half_width1"] = width_to_distance(h.theta1);
  j["collar_half_width2"] = width_to_distance(h.theta2);
  j["pants_separation"] = pants_separation(h.l1, h.l2);
  j["length_route_residual"] =
      std::max(std::abs(h.theta1 - th.theta1), std::abs(h.theta2 - th.theta2));
  return j;
}

Json limits_json(const ConvergenceTable& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "limits";
  j["case"] = to_string(t.scenario.case_tag);
  j["driver"] = t.driver;
  Json frozen = Json::object();
  switch (t.scenario.case_tag) {
    case LimitCase::i_puncture_to_boundary: frozen["R"] = t.scenario.frozen; break;
    case LimitCase::iv_ratio_fixed: frozen["x"] = t.scenario.frozen; break;
    default: break;
  }
  j["frozen"] = frozen;
  j["mirrored"] = t.scenario.mirrored;
  Json rows = Json::array();
  for (const ConvergenceRow& row : t.rows) {
    Json r;
    r["driver"] = row.driver;
    Json obs = Json::array();
    for (const Observable& o : row.observables) {
      Json e;
      e["name"] = o.name;
      e["value"] = o.value;
      e["target"] = o.target;
      e["deviation"] = o.deviation;
      obs.push_back(e);
    }
    r["observables"] = obs;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

Json error_json(const std::string& kind, const std::string& message, int exit_code) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  j["error"] = e;
  j["exit_code"] = exit_code;
  return j;
}

}  // namespace annulus
