#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/distribution.hpp"

namespace hetnet {

// One homogeneous Poisson layer of base stations with i.i.d. marks.
// The effective propagation variable is S~ = P*S/A; the per-station
// propagation value seen from the origin is Y = A|X|^beta / (P*S).
struct TierSpec {
  double lambda = 1.0;                 // stations per unit area
  ScalarDistribution power;            // P
  ScalarDistribution shadowing;        // S
  ScalarDistribution pathloss_constant;// A
  ScalarDistribution pathloss_exponent;// beta: constant or discrete only
  ScalarDistribution threshold;        // T (the mark)
  bool independent_marks = true;

  // Throws std::invalid_argument naming the offending field; `label`
  // identifies the tier in messages.
  void validate(const std::string& label) const;
};

struct NetworkModel {
  std::vector<TierSpec> tiers;

  void validate() const;
  double total_density() const;
};

// Realized mark attached to one propagation point.
struct CompositeMark {
  double s_tilde = 1.0;  // P*S/A
  double beta = 0.0;
  double t = 0.0;
  int tier_index = 0;
};

struct PropagationPoint {
  double y = 0.0;
  CompositeMark mark;
};

// One simulation replication of the propagation process on (0, s_max].
// Points are sorted ascending by y.
struct PropagationSample {
  std::vector<PropagationPoint> points;
  double s_max = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t replication = 0;
  double truncation_radius = 0.0;
  double missed_mass_bound = 0.0;
};

// Parse / serialize the JSON network description. parse_model throws
// std::invalid_argument with the tier index and field name on schema
// or domain violations.
NetworkModel parse_model(const std::string& config_text);
std::string serialize_model(const NetworkModel& model);

NetworkModel load_model_file(const std::string& path);

}  // namespace hetnet
