#include "hetnet/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hetnet/specfun.hpp"

namespace hetnet {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Marsaglia-Tsang gamma variate with shape >= 1, unit scale.
double gamma_variate_ge1(rng::Stream& stream, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = stream.normal();
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = stream.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double gamma_variate(rng::Stream& stream, double shape) {
  if (shape >= 1.0) return gamma_variate_ge1(stream, shape);
  // Boost: G(a) = G(a+1) * U^{1/a}.
  return gamma_variate_ge1(stream, shape + 1.0) *
         std::pow(stream.uniform(), 1.0 / shape);
}

}  // namespace

ScalarDistribution ScalarDistribution::constant(double value) {
  require(value > 0.0, "constant: value must be > 0");
  ScalarDistribution d;
  d.kind = Kind::kConstant;
  d.p1 = value;
  return d;
}

ScalarDistribution ScalarDistribution::lognormal_db(double sigma_db) {
  require(sigma_db >= 0.0, "lognormal: sigma_db must be >= 0");
  const double sigma = sigma_db * std::log(10.0) / 10.0;
  ScalarDistribution d = lognormal(-0.5 * sigma * sigma, sigma);
  d.from_sigma_db = true;
  d.sigma_db = sigma_db;
  return d;
}

ScalarDistribution ScalarDistribution::lognormal(double mu, double sigma) {
  require(sigma >= 0.0, "lognormal: sigma must be >= 0");
  ScalarDistribution d;
  d.kind = Kind::kLogNormal;
  d.p1 = mu;
  d.p2 = sigma;
  return d;
}

ScalarDistribution ScalarDistribution::exponential(double rate) {
  require(rate > 0.0, "exponential: rate must be > 0");
  ScalarDistribution d;
  d.kind = Kind::kExponential;
  d.p1 = rate;
  return d;
}

ScalarDistribution ScalarDistribution::weibull(double k, double scale) {
  require(k > 0.0 && scale > 0.0, "weibull: shape and scale must be > 0");
  ScalarDistribution d;
  d.kind = Kind::kWeibull;
  d.p1 = k;
  d.p2 = scale;
  return d;
}

ScalarDistribution ScalarDistribution::nakagami(double m, double omega) {
  require(m >= 0.5, "nakagami: shape m must be >= 0.5");
  require(omega > 0.0, "nakagami: omega must be > 0");
  ScalarDistribution d;
  d.kind = Kind::kNakagami;
  d.p1 = m;
  d.p2 = omega;
  return d;
}

ScalarDistribution ScalarDistribution::rice(double nu, double sigma) {
  require(nu >= 0.0, "rice: nu must be >= 0");
  require(sigma > 0.0, "rice: sigma must be > 0");
  ScalarDistribution d;
  d.kind = Kind::kRice;
  d.p1 = nu;
  d.p2 = sigma;
  return d;
}

ScalarDistribution ScalarDistribution::discrete(
    std::vector<std::pair<double, double>> atoms) {
  require(!atoms.empty(), "discrete: needs at least one atom");
  double total = 0.0;
  for (const auto& [value, prob] : atoms) {
    require(value > 0.0, "discrete: atom values must be > 0");
    require(prob >= 0.0, "discrete: atom probabilities must be >= 0");
    total += prob;
  }
  require(std::abs(total - 1.0) <= 1e-12,
          "discrete: probabilities must sum to 1");
  std::sort(atoms.begin(), atoms.end());
  ScalarDistribution d;
  d.kind = Kind::kDiscrete;
  d.atoms = std::move(atoms);
  return d;
}

bool ScalarDistribution::is_effectively_constant() const {
  return kind == Kind::kConstant ||
         (kind == Kind::kDiscrete && atoms.size() == 1);
}

double ScalarDistribution::pdf(double s) const {
  if (s <= 0.0) return 0.0;
  switch (kind) {
    case Kind::kLogNormal: {
      const double z = (std::log(s) - p1) / p2;
      return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * M_PI) * p2);
    }
    case Kind::kExponential:
      return p1 * std::exp(-p1 * s);
    case Kind::kWeibull: {
      const double r = s / p2;
      return (p1 / p2) * std::pow(r, p1 - 1.0) * std::exp(-std::pow(r, p1));
    }
    case Kind::kNakagami: {
      const double m = p1, omega = p2;
      return 2.0 * std::pow(m / omega, m) / specfun::gamma_fn(m) *
             std::pow(s, 2.0 * m - 1.0) * std::exp(-(m / omega) * s * s);
    }
    case Kind::kRice: {
      // Written via the scaled Bessel function so the density stays
      // finite far in the tail: the I_0 growth cancels against the
      // Gaussian factor, leaving exp(-(s - nu)^2 / (2 sigma^2)).
      const double nu = p1, sig2 = p2 * p2;
      const double diff = s - nu;
      return (s / sig2) * specfun::bessel_i0_scaled(s * nu / sig2) *
             std::exp(-diff * diff / (2.0 * sig2));
    }
    default:
      throw std::logic_error("pdf: " + kind_name() + " has no density");
  }
}

double ScalarDistribution::cdf(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind) {
    case Kind::kConstant:
      return t >= p1 ? 1.0 : 0.0;
    case Kind::kDiscrete: {
      double acc = 0.0;
      for (const auto& [value, prob] : atoms)
        if (value <= t) acc += prob;
      return acc;
    }
    case Kind::kLogNormal:
      return 0.5 * std::erfc(-(std::log(t) - p1) / (p2 * std::sqrt(2.0)));
    case Kind::kExponential:
      return 1.0 - std::exp(-p1 * t);
    case Kind::kWeibull:
      return 1.0 - std::exp(-std::pow(t / p2, p1));
    case Kind::kNakagami:
      return specfun::gamma_p(p1, (p1 / p2) * t * t);
    case Kind::kRice:
      return std::min(1.0, specfun::quad([this](double s) { return pdf(s); },
                                         0.0, t, 1e-12));
  }
  throw std::logic_error("cdf: unreachable");
}

double ScalarDistribution::sample(rng::Stream& stream) const {
  switch (kind) {
    case Kind::kConstant:
      return p1;
    case Kind::kDiscrete: {
      const double u = stream.uniform();
      double acc = 0.0;
      for (const auto& [value, prob] : atoms) {
        acc += prob;
        if (u <= acc) return value;
      }
      return atoms.back().first;
    }
    case Kind::kLogNormal:
      return std::exp(p1 + p2 * stream.normal());
    case Kind::kExponential:
      return stream.exponential() / p1;
    case Kind::kWeibull:
      return p2 * std::pow(stream.exponential(), 1.0 / p1);
    case Kind::kNakagami:
      // S^2 ~ Gamma(m, omega/m).
      return std::sqrt(gamma_variate(stream, p1) * p2 / p1);
    case Kind::kRice: {
      const double a = p1 + p2 * stream.normal();
      const double b = p2 * stream.normal();
      return std::sqrt(a * a + b * b);
    }
  }
  throw std::logic_error("sample: unreachable");
}

std::vector<std::pair<double, double>> ScalarDistribution::support_atoms()
    const {
  if (kind == Kind::kConstant) return {{p1, 1.0}};
  if (kind == Kind::kDiscrete) return atoms;
  throw std::logic_error("support_atoms: " + kind_name() +
                         " is not an atomic distribution");
}

std::string ScalarDistribution::kind_name() const {
  switch (kind) {
    case Kind::kConstant: return "constant";
    case Kind::kLogNormal: return "lognormal";
    case Kind::kExponential: return "exponential";
    case Kind::kWeibull: return "weibull";
    case Kind::kNakagami: return "nakagami";
    case Kind::kRice: return "rice";
    case Kind::kDiscrete: return "discrete";
  }
  return "?";
}

}  // namespace hetnet
