#pragma once

#include "annulus/moebius.hpp"

namespace annulus {

// Covering group parameters, 1 < r < k.
class GroupParams {
 public:
  GroupParams(double k, double r);
  double k() const { return k_; }
  double r() const { return r_; }

 private:
  double k_;
  double r_;
};

struct Generators {
  MoebiusMap f;  // z -> k^2 z
  MoebiusMap g;  // parabolic, fixes 1
};

struct GeodesicLengths {
  double l1;
  double l2;
};

struct CollarAngles {
  double theta1;
  double theta2;
};

struct HyperbolicReport {
  double l1;
  double l2;
  double theta1;
  double theta2;
  double t;
  double delta;
};

enum class AngleOrdering { theta1_gt, equal, theta1_lt };
const char* to_string(AngleOrdering o);

MoebiusMap hyperbolic_generator(double k);
MoebiusMap parabolic_generator(double r);
Generators build_group(const GroupParams& p);
// f g^{-1} written out entrywise.
MoebiusMap fg_inverse_closed_form(const GroupParams& p);

GeodesicLengths geodesic_lengths(const GroupParams& p);
// Inverse of geodesic_lengths.
GroupParams params_from_lengths(double l1, double l2);

double collar_delta(const GroupParams& p);
HyperbolicReport collar_angles(const GroupParams& p);
CollarAngles angles_from_lengths(double l1, double l2);
double collar_lemma_angle(double l);
double width_to_distance(double theta);
double pants_separation(double l1, double l2);

AngleOrdering trichotomy(const GroupParams& p);
double midpoint_k(double r);
Generators midpoint_group(double r);

}  // namespace annulus
