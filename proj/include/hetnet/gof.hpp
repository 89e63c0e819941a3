#pragma once

#include <string>
#include <vector>

#include "hetnet/equivalence.hpp"
#include "hetnet/intensity.hpp"
#include "hetnet/model.hpp"
#include "hetnet/simulate.hpp"

namespace hetnet::gof {

struct BinRow {
  double lo = 0.0, hi = 0.0;
  double expected = 0.0;
  double observed = 0.0;
};

struct GofReport {
  std::string method;
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n_points = 0;
  bool inconclusive = false;  // empty sample etc.
  std::vector<BinRow> bins;

  std::string to_json() const;
};

// Time-change KS test: under H0 the values Lambda(Y_i)/Lambda(s_max)
// are i.i.d. uniform given n. Finite-n scaling
// (sqrt(n) + 0.12 + 0.11/sqrt(n)) * D_n against the Kolmogorov law.
GofReport time_change_ks(const PropagationSample& sample,
                         const IntensityMeasure& im);

// Pooled Poisson bin counts across replications vs
// reps * (Lambda(hi) - Lambda(lo)); bins with expected < 5 are merged
// to the right.
GofReport binned_chi2(const std::vector<PropagationSample>& samples,
                      const IntensityMeasure& im,
                      const std::vector<double>& bin_edges);

// Discrete mark counts within radial bins (r = y^{1/beta'}) vs the
// mixture weights p_j at the bin centroid, pooled chi-square.
GofReport mark_consistency(const std::vector<PropagationSample>& samples,
                           const IsotropicModel& iso,
                           const std::vector<double>& radial_bins);

// Two-sample KS on the pooled propagation points of two sample sets.
GofReport two_sample_ks(const std::vector<PropagationSample>& a,
                        const std::vector<PropagationSample>& b);

enum class Verdict { kEquivalentAnalytic, kConsistentEmpirical, kRejected };

struct EquivalenceReport {
  Verdict verdict = Verdict::kRejected;
  double max_relative_gap = 0.0;  // analytic grid comparison
  std::vector<GofReport> empirical;

  std::string to_json() const;
};

// Analytic fast path: compare the two intensity mixtures on a log grid
// s in [1e-3, 1e6] and at every mark atom; equal within 1e-10 relative
// => equivalent-analytic. Otherwise Monte Carlo cross-testing decides
// between consistent-empirical and rejected.
EquivalenceReport equivalence_verdict(const NetworkModel& model_a,
                                      const NetworkModel& model_b,
                                      const simulate::SimPlan& plan);
EquivalenceReport equivalence_verdict(const NetworkModel& model_a,
                                      const IsotropicModel& iso_b,
                                      const simulate::SimPlan& plan);

// Survival function of chi-square with df degrees of freedom.
double chi2_survival(double statistic, double df);

// p-value floor keeps downstream logs finite.
constexpr double kPValueFloor = 1e-16;

}  // namespace hetnet::gof
