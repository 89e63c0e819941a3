#pragma once

#include <string>
#include <vector>

#include "hetnet/intensity.hpp"
#include "hetnet/model.hpp"

namespace hetnet {

// One term of the radial station density phi(r) = sum_j d_j r^{g_j}
// of the isotropic representation.
struct RadialTerm {
  double d = 0.0;  // weight, > 0
  double g = 0.0;  // exponent, 2(beta'/beta_j - 1)
  double source_beta = 0.0;
  ScalarDistribution mark;
  ScalarDistribution pathloss_constant;  // A of the source term
  int tier_index = 0;
};

// Equivalent single-tier network: unit marks for P, S, A, common
// exponent beta', radial density phi(r) and location-dependent mark
// family F'_r(t) = sum_j p_j(r) F_{T,j}(t).
class IsotropicModel {
 public:
  IsotropicModel(double beta_prime, std::vector<RadialTerm> terms);

  double beta_prime() const { return beta_prime_; }
  const std::vector<RadialTerm>& terms() const { return terms_; }

  double phi(double r) const;
  std::vector<double> weights(double r) const;  // p_j(r), sum to 1
  double mark_cdf(double r, double t) const;

  // Cumulative spatial measure M(R) = int_0^R phi(r) 2 pi r dr.
  double radial_measure(double R) const;
  // Inverse of radial_measure (bisection, relative tol 1e-12).
  double radial_measure_inverse(double value, double R_hint) const;

  // Intensity of the induced propagation process, evaluated through
  // the defining integral Lambda'(s,t) = 2 pi int_0^{s^{1/beta'}}
  // F'_r(t) phi(r) r dr (closed form per power term).
  double propagation_lambda(double s, double t) const;
  double propagation_lambda(double s) const;

 private:
  double beta_prime_;
  std::vector<RadialTerm> terms_;
};

namespace equivalence {

// The network-equivalence construction: term-wise
//   d_j = (beta'/beta_j) lambda_j E[S~^{2/beta_j}],
//   g_j = 2 (beta'/beta_j - 1).
IsotropicModel isotropic_representation(const NetworkModel& model,
                                        double beta_prime);

// lambda' = sum_k lambda_k E[S~_k^{2/beta}] for a common constant beta.
double homogeneous_density(const NetworkModel& model);

// Density that reproduces Lambda when S~ is replaced by a mean-one
// exponential: lambda' = lambda E[S~^{2/beta}] / Gamma(2/beta + 1).
double exponential_replacement_density(const NetworkModel& model);

struct JensenDensities {
  double lambda_random = 0.0;  // lambda E[S~^{2/beta}]
  double lambda_mean = 0.0;    // lambda E[S~]^{2/beta}
};

JensenDensities jensen_compare(const ScalarDistribution& s_tilde, double beta,
                               double lambda);

enum class VariabilityOrder { kFirstSparser, kSecondSparser, kTie };

// Moment-level comparison of two equal-mean propagation variables:
// the one with the smaller E[S^{2/beta}] yields the sparser
// equivalent network.
VariabilityOrder variability_order_check(const ScalarDistribution& dist1,
                                         const ScalarDistribution& dist2,
                                         double beta);

// Term weights rescaled by E[A_j^{2/beta_j}], restoring the magnitude
// of the original station densities for plotting.
std::vector<RadialTerm> a_corrected_terms(const IsotropicModel& iso);

double phi_corrected(const IsotropicModel& iso, double r);

}  // namespace equivalence
}  // namespace hetnet
