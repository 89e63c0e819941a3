#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hetnet/rng.hpp"

namespace hetnet {

// A positive scalar random variable. Families match the fading /
// shadowing models the moment table covers, plus constants and finite
// discrete mixtures. Immutable after construction.
struct ScalarDistribution {
  enum class Kind { kConstant, kLogNormal, kExponential, kWeibull,
                    kNakagami, kRice, kDiscrete };

  Kind kind = Kind::kConstant;
  // Meaning per kind:
  //   constant:    p1 = value
  //   lognormal:   p1 = mu (log-scale location), p2 = sigma (log-scale std)
  //   exponential: p1 = rate
  //   weibull:     p1 = shape k, p2 = scale
  //   nakagami:    p1 = shape m, p2 = spread omega
  //   rice:        p1 = nu, p2 = sigma
  double p1 = 1.0;
  double p2 = 0.0;
  std::vector<std::pair<double, double>> atoms;  // discrete: (value, prob)

  // Set when constructed from a dB spec, kept for round-trip serialization.
  bool from_sigma_db = false;
  double sigma_db = 0.0;

  static ScalarDistribution constant(double value);
  // Mean-one log-normal: sigma = sigma_db * ln(10) / 10, mu = -sigma^2/2.
  static ScalarDistribution lognormal_db(double sigma_db);
  static ScalarDistribution lognormal(double mu, double sigma);
  static ScalarDistribution exponential(double rate);
  static ScalarDistribution weibull(double k, double scale);
  static ScalarDistribution nakagami(double m, double omega);
  static ScalarDistribution rice(double nu, double sigma);
  static ScalarDistribution discrete(
      std::vector<std::pair<double, double>> atoms);

  bool is_degenerate() const { return kind == Kind::kConstant; }
  // Constant or single-atom discrete.
  bool is_effectively_constant() const;

  // Density of the continuous families (amplitude-style for nakagami
  // and rice). Throws for constant/discrete.
  double pdf(double s) const;

  // P(X <= t). The rice CDF is evaluated by quadrature of the density.
  double cdf(double t) const;

  double sample(rng::Stream& stream) const;

  // Support points for constant/discrete kinds; throws otherwise.
  std::vector<std::pair<double, double>> support_atoms() const;

  std::string kind_name() const;
};

}  // namespace hetnet
