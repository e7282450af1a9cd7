#pragma once

#include <span>
#include <string>
#include <vector>

#include "annulus/moebius.hpp"

namespace annulus {

// h(z) = ((k+1)/(k-1)) (z-1)/(z+1)
MoebiusMap conjugator_h(double k);
// h1(z) = ((r+1)/r) (z-r)/(z-1)
MoebiusMap conjugator_h1(double r);

// Closed forms of h f h^{-1}, h g h^{-1} and h1 g h1^{-1}.
MoebiusMap conjugated_f_closed_form(double k);
MoebiusMap conjugated_g_closed_form(double k, double r);
MoebiusMap h1_conjugated_g_closed_form(double r);

struct CongruenceTargets {
  MoebiusMap f0;
  MoebiusMap g0;
};
CongruenceTargets congruence_targets();

// Limit of g in the midpoint family as r -> 3: z -> (3z-2)/(2z-1).
MoebiusMap midpoint_limit_g();

struct JacobiLimits {
  double sn;
  double cn;
  double dn;
};
// Limits of sn, cn, dn at v = (2K/pi) ln x, modulus q', as R -> infinity.
JacobiLimits limit_jacobi(double x);
double limit_sn_value(double x);
double limit_p1(double x);

enum class LimitCase { i_puncture_to_boundary, ii_R_to_infinity, iii_R_to_one, iv_ratio_fixed };
const char* to_string(LimitCase c);
LimitCase parse_limit_case(const std::string& tag);

struct LimitScenario {
  LimitCase case_tag;
  // R for case (i), x = a/R for case (iv); ignored otherwise
  double frozen;
  // case (i): puncture sent to the inner circle instead of the outer one
  bool mirrored;
};

LimitScenario default_scenario(LimitCase c);
std::vector<double> default_samples(const LimitScenario& s);
// Name of the driven parameter and whether it increases toward its limit.
std::string driver_name(LimitCase c);

struct Observable {
  std::string name;
  double value;
  double target;
  double deviation;
};

struct ConvergenceRow {
  double driver;
  std::vector<Observable> observables;
};

struct ConvergenceTable {
  LimitScenario scenario;
  std::string driver;
  std::vector<ConvergenceRow> rows;
};

// Throws DomainError for samples outside the domain or not strictly moving
// toward the limit, MonotonicityError if a deviation grows over the last
// half of the samples.
ConvergenceTable run_scenario(const LimitScenario& s, std::span<const double> samples);

}  // namespace annulus
