#include "hetnet/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetnet/specfun.hpp"

namespace hetnet::moments {

using Kind = ScalarDistribution::Kind;
using specfun::gamma_fn;

double moment_closed(const ScalarDistribution& dist, double q) {
  if (q == 0.0) return 1.0;
  switch (dist.kind) {
    case Kind::kConstant:
      return std::pow(dist.p1, q);
    case Kind::kDiscrete: {
      double acc = 0.0;
      for (const auto& [v, p] : dist.atoms) acc += p * std::pow(v, q);
      return acc;
    }
    case Kind::kLogNormal:
      // Defined for all real q.
      return std::exp(q * dist.p1 + 0.5 * q * q * dist.p2 * dist.p2);
    case Kind::kExponential:
      if (q <= -1.0)
        throw std::domain_error("moment_closed: exponential moment diverges");
      return std::pow(dist.p1, -q) * gamma_fn(q + 1.0);
    case Kind::kWeibull:
      if (q / dist.p1 <= -1.0)
        throw std::domain_error("moment_closed: weibull moment diverges");
      return std::pow(dist.p2, q) * gamma_fn(q / dist.p1 + 1.0);
    case Kind::kNakagami: {
      const double m = dist.p1, omega = dist.p2;
      if (m + 0.5 * q <= 0.0)
        throw std::domain_error("moment_closed: nakagami moment diverges");
      return gamma_fn(m + 0.5 * q) / gamma_fn(m) * std::pow(omega / m, 0.5 * q);
    }
    case Kind::kRice: {
      if (q < 0.0)
        throw std::domain_error(
            "moment_closed: negative rice moments not supported");
      const double nu = dist.p1, sig2 = dist.p2 * dist.p2;
      return std::pow(2.0 * sig2, 0.5 * q) * gamma_fn(0.5 * q + 1.0) *
             specfun::hyp1f1(-0.5 * q, 1.0, -nu * nu / (2.0 * sig2));
    }
  }
  throw std::logic_error("moment_closed: unreachable");
}

double moment_quad(const ScalarDistribution& dist, double q, double tol) {
  if (dist.kind == Kind::kConstant || dist.kind == Kind::kDiscrete)
    return moment_closed(dist, q);
  const double inf = std::numeric_limits<double>::infinity();
  return specfun::quad(
      [&dist, q](double s) { return std::pow(s, q) * dist.pdf(s); }, 0.0, inf,
      tol);
}

double mean(const ScalarDistribution& dist) { return moment_closed(dist, 1.0); }

double composite_moment(const TierSpec& tier,
                        const std::function<double(double)>& q_of_beta) {
  double acc = 0.0;
  for (const auto& [beta, prob] : tier.pathloss_exponent.support_atoms()) {
    const double q = q_of_beta(beta);
    acc += prob * moment_closed(tier.power, q) *
           moment_closed(tier.shadowing, q) *
           moment_closed(tier.pathloss_constant, -q);
  }
  return acc;
}

double propagation_moment(const TierSpec& tier, double beta) {
  const double q = 2.0 / beta;
  return moment_closed(tier.power, q) * moment_closed(tier.shadowing, q) *
         moment_closed(tier.pathloss_constant, -q);
}

}  // namespace hetnet::moments
