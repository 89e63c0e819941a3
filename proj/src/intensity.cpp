#include "hetnet/intensity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetnet/moments.hpp"

namespace hetnet {

IntensityMeasure::IntensityMeasure(std::vector<IntensityTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("IntensityMeasure: no terms");
  for (const auto& term : terms_) {
    if (!(term.coefficient >= 0.0) || !std::isfinite(term.coefficient))
      throw std::invalid_argument(
          "IntensityMeasure: coefficient must be finite and >= 0");
    if (!(term.exponent > 0.0))
      throw std::invalid_argument("IntensityMeasure: exponent must be > 0");
  }
}

IntensityMeasure IntensityMeasure::build(const NetworkModel& model) {
  model.validate();
  std::vector<IntensityTerm> terms;
  for (size_t k = 0; k < model.tiers.size(); ++k) {
    const TierSpec& tier = model.tiers[k];
    for (const auto& [beta, prob] : tier.pathloss_exponent.support_atoms()) {
      IntensityTerm term;
      term.beta = beta;
      term.exponent = 2.0 / beta;
      term.coefficient =
          tier.lambda * prob * moments::propagation_moment(tier, beta);
      if (!std::isfinite(term.coefficient))
        throw std::invalid_argument(
            "build_intensity: infinite propagation moment in tier " +
            std::to_string(k));
      term.mark = tier.threshold;
      term.tier_index = static_cast<int>(k);
      terms.push_back(std::move(term));
    }
  }
  return IntensityMeasure(std::move(terms));
}

double IntensityMeasure::lambda(double s, double t) const {
  if (s < 0.0) throw std::domain_error("lambda: s must be >= 0");
  if (s == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& term : terms_) {
    const double ft = std::isinf(t) ? 1.0 : term.mark.cdf(t);
    acc += term.coefficient * std::pow(s, term.exponent) * ft;
  }
  return M_PI * acc;
}

double IntensityMeasure::lambda(double s) const {
  return lambda(s, std::numeric_limits<double>::infinity());
}

double IntensityMeasure::lambda_inverse(double value) const {
  if (value < 0.0) throw std::domain_error("lambda_inverse: negative value");
  if (value == 0.0) return 0.0;
  if (terms_.size() == 1) {
    const auto& term = terms_.front();
    return std::pow(value / (M_PI * term.coefficient), 1.0 / term.exponent);
  }
  // Bracket, then Newton with bisection fallback. Lambda is strictly
  // increasing, so the bracket is easy to grow.
  double lo = 0.0, hi = 1.0;
  while (lambda(hi) < value) {
    hi *= 4.0;
    if (hi > 1e300) throw std::runtime_error("lambda_inverse: no bracket");
  }
  double s = 0.5 * hi;
  for (int it = 0; it < 200; ++it) {
    const double f = lambda(s) - value;
    if (f > 0.0) hi = s; else lo = s;
    // Derivative of the marginal mixture.
    double deriv = 0.0;
    for (const auto& term : terms_)
      deriv += term.coefficient * term.exponent * std::pow(s, term.exponent - 1.0);
    deriv *= M_PI;
    double next = s - f / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - s) <= 1e-12 * std::max(1.0, std::abs(s))) return next;
    s = next;
  }
  return s;
}

double IntensityMeasure::phi(double beta_prime, double r, double t) const {
  if (!(beta_prime > 0.0))
    throw std::domain_error("phi: beta_prime must be > 0");
  if (r < 0.0) throw std::domain_error("phi: r must be >= 0");
  if (r == 0.0) {
    for (const auto& term : terms_)
      if (beta_prime * term.exponent < 2.0)
        throw std::domain_error("phi: singular at r = 0");
  }
  double acc = 0.0;
  for (const auto& term : terms_) {
    const double ft = std::isinf(t) ? 1.0 : term.mark.cdf(t);
    acc += term.coefficient * term.exponent *
           std::pow(r, beta_prime * term.exponent - 2.0) * ft;
  }
  return 0.5 * beta_prime * acc;
}

double IntensityMeasure::phi(double beta_prime, double r) const {
  return phi(beta_prime, r, std::numeric_limits<double>::infinity());
}

double IntensityMeasure::mark_cdf(double beta_prime, double r, double t) const {
  const double denom = phi(beta_prime, r);
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw std::domain_error("mark_cdf: phi(r) must be positive and finite");
  return phi(beta_prime, r, t) / denom;
}

std::vector<double> IntensityMeasure::term_weights(double beta_prime,
                                                   double r) const {
  const double denom = phi(beta_prime, r);
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw std::domain_error("term_weights: phi(r) must be positive and finite");
  std::vector<double> weights;
  weights.reserve(terms_.size());
  for (const auto& term : terms_) {
    weights.push_back(0.5 * beta_prime * term.coefficient * term.exponent *
                      std::pow(r, beta_prime * term.exponent - 2.0) / denom);
  }
  return weights;
}

}  // namespace hetnet
