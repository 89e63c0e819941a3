#include "hetnet/equivalence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetnet/moments.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet {

IsotropicModel::IsotropicModel(double beta_prime,
                               std::vector<RadialTerm> terms)
    : beta_prime_(beta_prime), terms_(std::move(terms)) {
  if (!(beta_prime_ > 0.0))
    throw std::invalid_argument("IsotropicModel: beta_prime must be > 0");
  if (terms_.empty())
    throw std::invalid_argument("IsotropicModel: no terms");
  for (const auto& term : terms_) {
    if (!(term.d > 0.0))
      throw std::invalid_argument("IsotropicModel: weights must be > 0");
    if (term.g <= -2.0)
      throw std::invalid_argument(
          "IsotropicModel: exponent <= -2 is not integrable at the origin");
  }
}

double IsotropicModel::phi(double r) const {
  if (!(r > 0.0)) {
    for (const auto& term : terms_)
      if (term.g < 0.0) throw std::domain_error("phi: singular at r = 0");
  }
  double acc = 0.0;
  for (const auto& term : terms_) acc += term.d * std::pow(r, term.g);
  return acc;
}

std::vector<double> IsotropicModel::weights(double r) const {
  const double denom = phi(r);
  std::vector<double> w;
  w.reserve(terms_.size());
  for (const auto& term : terms_)
    w.push_back(term.d * std::pow(r, term.g) / denom);
  return w;
}

double IsotropicModel::mark_cdf(double r, double t) const {
  const auto w = weights(r);
  double acc = 0.0;
  for (size_t j = 0; j < terms_.size(); ++j)
    acc += w[j] * terms_[j].mark.cdf(t);
  return acc;
}

double IsotropicModel::radial_measure(double R) const {
  if (R < 0.0) throw std::domain_error("radial_measure: R must be >= 0");
  double acc = 0.0;
  for (const auto& term : terms_)
    acc += term.d * std::pow(R, term.g + 2.0) / (term.g + 2.0);
  return 2.0 * M_PI * acc;
}

double IsotropicModel::radial_measure_inverse(double value,
                                              double R_hint) const {
  if (value < 0.0)
    throw std::domain_error("radial_measure_inverse: negative value");
  if (value == 0.0) return 0.0;
  double lo = 0.0, hi = std::max(R_hint, 1.0);
  while (radial_measure(hi) < value) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (radial_measure(mid) < value) lo = mid; else hi = mid;
    if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

double IsotropicModel::propagation_lambda(double s, double t) const {
  if (s < 0.0) throw std::domain_error("propagation_lambda: s must be >= 0");
  if (s == 0.0) return 0.0;
  // 2 pi int_0^R d_j r^{g_j+1} F_j(t) dr with R = s^{1/beta'}.
  const double R = std::pow(s, 1.0 / beta_prime_);
  double acc = 0.0;
  for (const auto& term : terms_) {
    const double ft = std::isinf(t) ? 1.0 : term.mark.cdf(t);
    acc += term.d * std::pow(R, term.g + 2.0) / (term.g + 2.0) * ft;
  }
  return 2.0 * M_PI * acc;
}

double IsotropicModel::propagation_lambda(double s) const {
  return propagation_lambda(s, std::numeric_limits<double>::infinity());
}

namespace equivalence {

IsotropicModel isotropic_representation(const NetworkModel& model,
                                        double beta_prime) {
  if (!(beta_prime > 0.0))
    throw std::invalid_argument(
        "isotropic_representation: beta_prime must be > 0");
  const IntensityMeasure im = IntensityMeasure::build(model);
  std::vector<RadialTerm> terms;
  for (const auto& it : im.terms()) {
    RadialTerm term;
    term.d = (beta_prime / it.beta) * it.coefficient;
    term.g = 2.0 * (beta_prime / it.beta - 1.0);
    term.source_beta = it.beta;
    term.mark = it.mark;
    term.pathloss_constant =
        model.tiers[static_cast<size_t>(it.tier_index)].pathloss_constant;
    term.tier_index = it.tier_index;
    terms.push_back(std::move(term));
  }
  return IsotropicModel(beta_prime, std::move(terms));
}

namespace {

double common_constant_beta(const NetworkModel& model) {
  model.validate();
  double beta = 0.0;
  for (const auto& tier : model.tiers) {
    if (!tier.pathloss_exponent.is_effectively_constant())
      throw std::invalid_argument("expected a constant beta in every tier");
    const double b = tier.pathloss_exponent.support_atoms().front().first;
    if (beta == 0.0) beta = b;
    else if (std::abs(b - beta) > 1e-12 * beta)
      throw std::invalid_argument("beta differs across tiers");
  }
  return beta;
}

}  // namespace

double homogeneous_density(const NetworkModel& model) {
  const double beta = common_constant_beta(model);
  double acc = 0.0;
  for (const auto& tier : model.tiers)
    acc += tier.lambda * moments::propagation_moment(tier, beta);
  return acc;
}

double exponential_replacement_density(const NetworkModel& model) {
  if (model.tiers.size() != 1)
    throw std::invalid_argument(
        "exponential_replacement_density: single-tier model expected");
  const double beta = common_constant_beta(model);
  return homogeneous_density(model) / specfun::gamma_fn(2.0 / beta + 1.0);
}

JensenDensities jensen_compare(const ScalarDistribution& s_tilde, double beta,
                               double lambda) {
  if (!(beta > 2.0)) throw std::invalid_argument("jensen_compare: beta <= 2");
  const double q = 2.0 / beta;
  JensenDensities out;
  out.lambda_random = lambda * moments::moment_closed(s_tilde, q);
  out.lambda_mean = lambda * std::pow(moments::mean(s_tilde), q);
  return out;
}

VariabilityOrder variability_order_check(const ScalarDistribution& dist1,
                                         const ScalarDistribution& dist2,
                                         double beta) {
  const double m1 = moments::mean(dist1), m2 = moments::mean(dist2);
  if (std::abs(m1 - m2) > 1e-9 * std::max(1.0, std::abs(m1)))
    throw std::invalid_argument("variability_order_check: means differ");
  const double q = 2.0 / beta;
  const double a = moments::moment_closed(dist1, q);
  const double b = moments::moment_closed(dist2, q);
  const double tol = 1e-12 * std::max(a, b);
  if (std::abs(a - b) <= tol) return VariabilityOrder::kTie;
  return a < b ? VariabilityOrder::kFirstSparser
               : VariabilityOrder::kSecondSparser;
}

std::vector<RadialTerm> a_corrected_terms(const IsotropicModel& iso) {
  std::vector<RadialTerm> terms = iso.terms();
  for (auto& term : terms) {
    // A enters S~ as A^{-2/beta}; scaling by E[A^{2/beta}] restores the
    // magnitude of the source tier density.
    term.d *= moments::moment_closed(term.pathloss_constant,
                                     2.0 / term.source_beta);
  }
  return terms;
}

double phi_corrected(const IsotropicModel& iso, double r) {
  double acc = 0.0;
  for (const auto& term : a_corrected_terms(iso))
    acc += term.d * std::pow(r, term.g);
  return acc;
}

}  // namespace equivalence
}  // namespace hetnet
