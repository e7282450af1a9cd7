#pragma once

#include <string>

#include <json.hpp>

#include "annulus/complex_structure.hpp"
#include "annulus/degeneration.hpp"
#include "annulus/hyperbolic_structure.hpp"

namespace annulus {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json matrix_json(const MoebiusMap& m);

// Keys, in order: schema_version, command, R, a, q, q_complement, big_k,
// big_k_prime, u1, u2, p1, p1_complement, p2, p2_complement, lambda1,
// lambda2, b, alpha1, alpha2, precision_downgraded.
Json describe_json(const ExtremalReport& ex);

// Keys, in order: schema_version, command, k, r, generators {f, g,
// fg_inverse}, l1, l2, theta1, theta2, t, delta, trichotomy,
// collar_lemma_theta1, collar_lemma_theta2, collar_half_width1,
// collar_half_width2, pants_separation, length_route_residual.
Json group_json(const GroupParams& p);

// Keys, in order: schema_version, command, case, driver, frozen, mirrored,
// rows [{driver, observables [{name, value, target, deviation}]}].
Json limits_json(const ConvergenceTable& t);

Json error_json(const std::string& kind, const std::string& message, int exit_code);

}  // namespace annulus
