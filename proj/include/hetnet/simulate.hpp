#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/equivalence.hpp"
#include "hetnet/intensity.hpp"
#include "hetnet/model.hpp"

namespace hetnet::simulate {

enum class Mode { kSpatialOriginal, kSpatialIsotropic, kDirectPropagation };

struct SimPlan {
  double s_max = 1.0;
  double epsilon = 1e-3;  // acceptable expected missed-point mass
  std::uint64_t master_seed = 0;
  std::uint64_t replications = 1;
  Mode mode = Mode::kSpatialOriginal;
  double radius_cap = 1e4;
  // Reference exponent for the isotropic mode; <= 0 picks the mean of
  // the source beta values.
  double beta_prime = 0.0;
};

struct Truncation {
  double radius = 0.0;
  double missed_mass = 0.0;
};

// Smallest disk radius R such that the expected number of in-window
// propagation points produced by stations beyond R is <= epsilon.
// Exact for atomic S~; one-dimensional quadrature when exactly one of
// P, S, A is continuous. Throws std::runtime_error (reporting the
// achievable mass) if no R <= radius_cap works.
Truncation truncation_radius(const NetworkModel& model, double s_max,
                             double epsilon, double radius_cap = 1e4);

// Spatial sampler of the original heterogeneous network: Poisson
// station counts on the disk of radius trunc.radius, uniform
// positions, i.i.d. marks, Y = A |X|^beta / (P S), filtered to
// (0, s_max] and sorted.
PropagationSample sample_original(const NetworkModel& model,
                                  const SimPlan& plan, std::uint64_t rep,
                                  const Truncation& trunc);

// Spatial sampler of the isotropic representation: inhomogeneous
// radial inverse transform, marks from F'_r, Y = r^{beta'}.
PropagationSample sample_isotropic(const IsotropicModel& iso,
                                   const SimPlan& plan, std::uint64_t rep);

// Direct sampler of the propagation process from Lambda: uniform
// points in (0, Lambda(s_max)) mapped through Lambda^{-1}, term
// posteriors proportional to c_j e_j y^{e_j - 1}.
PropagationSample sample_direct(const IntensityMeasure& im,
                                const SimPlan& plan, std::uint64_t rep);

// Runs plan.replications independent replications, parallelized over
// HETNET_THREADS workers (0 or unset = hardware concurrency). Output
// for replication i depends only on (master_seed, i).
std::vector<PropagationSample> replicate(const NetworkModel& model,
                                         const SimPlan& plan);

int thread_budget();

}  // namespace hetnet::simulate
