#pragma once

#include <string>
#include <vector>

#include "hetnet/model.hpp"

namespace hetnet {

// One power-law term of the propagation intensity:
//   Lambda_j(s, t) = pi * coefficient * s^exponent * F_T(t),
// with exponent = 2/beta. Coefficient = lambda * P(beta atom) *
// E[S~^{2/beta} | beta atom].
struct IntensityTerm {
  double coefficient = 0.0;
  double exponent = 0.0;  // 2 / beta
  double beta = 0.0;
  ScalarDistribution mark;  // threshold distribution of the source tier
  int tier_index = 0;
};

// Exact finite-mixture representation of Lambda(s, t) for a network
// model: Lambda(s, t) = pi * sum_j c_j s^{e_j} F_{T,j}(t). Immutable.
class IntensityMeasure {
 public:
  static IntensityMeasure build(const NetworkModel& model);

  // Direct construction from terms (used by the isotropic model check).
  explicit IntensityMeasure(std::vector<IntensityTerm> terms);

  const std::vector<IntensityTerm>& terms() const { return terms_; }

  // Lambda(s, t); t = +infinity gives the marginal Lambda(s).
  double lambda(double s, double t) const;
  double lambda(double s) const;

  // Inverse of the marginal: smallest s with Lambda(s) = value.
  // Analytic for a single term, monotone Newton/bisection otherwise.
  double lambda_inverse(double value) const;

  // Radial density of the isotropic representation at reference
  // exponent beta_prime:
  //   phi(r, t) = (beta'/2) * sum_j c_j e_j r^{beta' e_j - 2} F_{T,j}(t).
  // Throws std::domain_error at r = 0 when a term with beta' e_j < 2
  // makes the density singular there.
  double phi(double beta_prime, double r, double t) const;
  double phi(double beta_prime, double r) const;

  // Location-dependent mark CDF F'_r(t) = phi(r, t) / phi(r).
  double mark_cdf(double beta_prime, double r, double t) const;

  // Mixture weights p_j(r) of each term at radius r (sum to 1).
  std::vector<double> term_weights(double beta_prime, double r) const;

 private:
  std::vector<IntensityTerm> terms_;
};

}  // namespace hetnet
