#include "hetnet/rng.hpp"

#include <stdexcept>

namespace hetnet::rng {

std::uint64_t Stream::poisson(double mean) {
  if (mean < 0.0 || !std::isfinite(mean))
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    // Multiplication method.
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::uint64_t n = 0;
    while (true) {
      prod *= uniform();
      if (prod <= limit) return n;
      ++n;
    }
  }
  // PTRS transformed rejection (Hoermann 1993).
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  while (true) {
    double u = uniform() - 0.5;
    double v = uniform();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace hetnet::rng
