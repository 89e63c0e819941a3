#include "hetnet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "hetnet/moments.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/specfun.hpp"

namespace hetnet::simulate {

namespace {

bool is_atomic(const ScalarDistribution& d) {
  using Kind = ScalarDistribution::Kind;
  return d.kind == Kind::kConstant || d.kind == Kind::kDiscrete;
}

// E[(c * V^{sign*q} - r2)^+] for a continuous factor V.
double continuous_tail_excess(const ScalarDistribution& v, double c, double q,
                              int sign, double r2) {
  const double inf = std::numeric_limits<double>::infinity();
  if (sign > 0) {
    // c v^q > r2  <=>  v > (r2/c)^{1/q}.
    const double v_star = std::pow(r2 / c, 1.0 / q);
    return specfun::quad(
        [&](double s) { return (c * std::pow(s, q) - r2) * v.pdf(s); }, v_star,
        inf, 1e-10);
  }
  // c v^{-q} > r2  <=>  v < (c/r2)^{1/q}.
  const double v_star = std::pow(c / r2, 1.0 / q);
  return specfun::quad(
      [&](double s) { return (c * std::pow(s, -q) - r2) * v.pdf(s); }, 0.0,
      v_star, 1e-10);
}

// Expected excess E[(W - R^2)^+] with W = (s_max S~)^{2/beta} for one
// (tier, beta-atom) pair.
double tier_excess(const TierSpec& tier, double beta, double s_max,
                   double radius) {
  const double q = 2.0 / beta;
  const double r2 = radius * radius;

  const ScalarDistribution* factors[3] = {&tier.power, &tier.shadowing,
                                          &tier.pathloss_constant};
  const int signs[3] = {+1, +1, -1};
  int continuous = -1;
  for (int i = 0; i < 3; ++i) {
    if (!is_atomic(*factors[i])) {
      if (continuous >= 0)
        throw std::invalid_argument(
            "truncation_radius: at most one of P, S, A may be continuous");
      continuous = i;
    }
  }

  // Enumerate the atomic combinations; fold the continuous factor (if
  // any) by quadrature.
  double total = 0.0;
  auto atoms_of = [&](int i) { return factors[i]->support_atoms(); };
  std::vector<std::pair<double, double>> unit{{1.0, 1.0}};
  const auto pa = continuous == 0 ? unit : atoms_of(0);
  const auto sa = continuous == 1 ? unit : atoms_of(1);
  const auto aa = continuous == 2 ? unit : atoms_of(2);
  for (const auto& [pv, pp] : pa)
    for (const auto& [sv, sp] : sa)
      for (const auto& [av, ap] : aa) {
        const double w = pp * sp * ap;
        const double c =
            std::pow(s_max * pv * sv / av, q);  // times V^{+-q} if continuous
        double excess;
        if (continuous < 0) {
          excess = std::max(0.0, c - r2);
        } else if (radius == 0.0) {
          excess = c * moments::moment_closed(*factors[continuous],
                                              signs[continuous] * q);
        } else {
          excess = continuous_tail_excess(*factors[continuous], c, q,
                                          signs[continuous], r2);
        }
        total += w * excess;
      }
  return total;
}

double missed_mass(const NetworkModel& model, double s_max, double radius) {
  double total = 0.0;
  for (const auto& tier : model.tiers)
    for (const auto& [beta, prob] : tier.pathloss_exponent.support_atoms())
      total += tier.lambda * M_PI * prob * tier_excess(tier, beta, s_max, radius);
  return total;
}

bool model_is_atomic(const NetworkModel& model) {
  for (const auto& tier : model.tiers)
    if (!is_atomic(tier.power) || !is_atomic(tier.shadowing) ||
        !is_atomic(tier.pathloss_constant))
      return false;
  return true;
}

}  // namespace

Truncation truncation_radius(const NetworkModel& model, double s_max,
                             double epsilon, double radius_cap) {
  if (!(s_max > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("truncation_radius: s_max, epsilon must be > 0");
  model.validate();

  if (model_is_atomic(model)) {
    // Deterministic support: the exact radius where the excess hits 0.
    double r_max = 0.0;
    for (const auto& tier : model.tiers)
      for (const auto& [beta, bp] : tier.pathloss_exponent.support_atoms()) {
        (void)bp;
        for (const auto& [pv, pp] : tier.power.support_atoms())
          for (const auto& [sv, sp] : tier.shadowing.support_atoms())
            for (const auto& [av, ap] :
                 tier.pathloss_constant.support_atoms()) {
              (void)pp; (void)sp; (void)ap;
              r_max = std::max(
                  r_max, std::pow(s_max * pv * sv / av, 1.0 / beta));
            }
      }
    return {r_max, 0.0};
  }

  if (missed_mass(model, s_max, radius_cap) > epsilon) {
    throw std::runtime_error(
        "truncation_radius: cannot reach epsilon within the radius cap; "
        "achievable missed mass at cap = " +
        std::to_string(missed_mass(model, s_max, radius_cap)));
  }
  double lo = 0.0, hi = 1.0;
  while (missed_mass(model, s_max, hi) > epsilon) hi *= 2.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (missed_mass(model, s_max, mid) > epsilon) lo = mid; else hi = mid;
    if (hi - lo <= 1e-6 * hi) break;
  }
  return {hi, missed_mass(model, s_max, hi)};
}

PropagationSample sample_original(const NetworkModel& model,
                                  const SimPlan& plan, std::uint64_t rep,
                                  const Truncation& trunc) {
  rng::Stream counts(plan.master_seed, rep, rng::Purpose::kStationCount);
  rng::Stream positions(plan.master_seed, rep, rng::Purpose::kPositions);
  rng::Stream marks(plan.master_seed, rep, rng::Purpose::kMarks);

  PropagationSample sample;
  sample.s_max = plan.s_max;
  sample.seed = plan.master_seed;
  sample.replication = rep;
  sample.truncation_radius = trunc.radius;
  sample.missed_mass_bound = trunc.missed_mass;

  const double disk_area = M_PI * trunc.radius * trunc.radius;
  for (size_t k = 0; k < model.tiers.size(); ++k) {
    const TierSpec& tier = model.tiers[k];
    const std::uint64_t n = counts.poisson(tier.lambda * disk_area);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double radius = trunc.radius * std::sqrt(positions.uniform());
      (void)positions.uniform();  // angle; irrelevant to Y but part of the
                                  // documented draw order
      CompositeMark mark;
      const double p = tier.power.sample(marks);
      const double s = tier.shadowing.sample(marks);
      const double a = tier.pathloss_constant.sample(marks);
      mark.beta = tier.pathloss_exponent.sample(marks);
      mark.t = tier.threshold.sample(marks);
      mark.s_tilde = p * s / a;
      mark.tier_index = static_cast<int>(k);
      const double y = std::pow(radius, mark.beta) / mark.s_tilde;
      if (y > 0.0 && y <= plan.s_max) sample.points.push_back({y, mark});
    }
  }
  std::sort(sample.points.begin(), sample.points.end(),
            [](const auto& a, const auto& b) { return a.y < b.y; });
  return sample;
}

PropagationSample sample_isotropic(const IsotropicModel& iso,
                                   const SimPlan& plan, std::uint64_t rep) {
  rng::Stream counts(plan.master_seed, rep, rng::Purpose::kStationCount);
  rng::Stream positions(plan.master_seed, rep, rng::Purpose::kPositions);
  rng::Stream marks(plan.master_seed, rep, rng::Purpose::kMarks);

  PropagationSample sample;
  sample.s_max = plan.s_max;
  sample.seed = plan.master_seed;
  sample.replication = rep;

  const double R = std::pow(plan.s_max, 1.0 / iso.beta_prime());
  sample.truncation_radius = R;
  const double total = iso.radial_measure(R);
  const std::uint64_t n = counts.poisson(total);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double r = iso.radial_measure_inverse(positions.uniform() * total, R);
    CompositeMark mark;
    mark.s_tilde = 1.0;
    mark.beta = iso.beta_prime();
    const auto w = iso.weights(r);
    const double u = marks.uniform();
    double acc = 0.0;
    size_t j = 0;
    for (; j < w.size(); ++j) {
      acc += w[j];
      if (u <= acc) break;
    }
    if (j == w.size()) j = w.size() - 1;
    mark.t = iso.terms()[j].mark.sample(marks);
    mark.tier_index = iso.terms()[j].tier_index;
    const double y = std::pow(r, iso.beta_prime());
    if (y > 0.0 && y <= plan.s_max) sample.points.push_back({y, mark});
  }
  std::sort(sample.points.begin(), sample.points.end(),
            [](const auto& a, const auto& b) { return a.y < b.y; });
  return sample;
}

PropagationSample sample_direct(const IntensityMeasure& im,
                                const SimPlan& plan, std::uint64_t rep) {
  rng::Stream counts(plan.master_seed, rep, rng::Purpose::kStationCount);
  rng::Stream positions(plan.master_seed, rep, rng::Purpose::kPositions);
  rng::Stream marks(plan.master_seed, rep, rng::Purpose::kMarks);

  PropagationSample sample;
  sample.s_max = plan.s_max;
  sample.seed = plan.master_seed;
  sample.replication = rep;

  const double total = im.lambda(plan.s_max);
  const std::uint64_t n = counts.poisson(total);
  const auto& terms = im.terms();
  for (std::uint64_t i = 0; i < n; ++i) {
    const double y = im.lambda_inverse(positions.uniform() * total);
    // Term posterior at y: proportional to c_j e_j y^{e_j - 1}.
    double norm = 0.0;
    for (const auto& term : terms)
      norm += term.coefficient * term.exponent * std::pow(y, term.exponent - 1.0);
    const double u = marks.uniform() * norm;
    double acc = 0.0;
    size_t j = 0;
    for (; j < terms.size(); ++j) {
      acc += terms[j].coefficient * terms[j].exponent *
             std::pow(y, terms[j].exponent - 1.0);
      if (u <= acc) break;
    }
    if (j == terms.size()) j = terms.size() - 1;
    CompositeMark mark;
    mark.s_tilde = 1.0;
    mark.beta = terms[j].beta;
    mark.t = terms[j].mark.sample(marks);
    mark.tier_index = terms[j].tier_index;
    if (y > 0.0 && y <= plan.s_max) sample.points.push_back({y, mark});
  }
  std::sort(sample.points.begin(), sample.points.end(),
            [](const auto& a, const auto& b) { return a.y < b.y; });
  return sample;
}

int thread_budget() {
  const char* env = std::getenv("HETNET_THREADS");
  int n = 0;
  if (env != nullptr) n = std::atoi(env);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

std::vector<PropagationSample> replicate(const NetworkModel& model,
                                         const SimPlan& plan) {
  if (plan.replications < 1)
    throw std::invalid_argument("replicate: need at least one replication");

  Truncation trunc{};
  IntensityMeasure im = IntensityMeasure::build(model);
  std::optional<IsotropicModel> iso;
  if (plan.mode == Mode::kSpatialIsotropic) {
    double beta_prime = plan.beta_prime;
    if (beta_prime <= 0.0) {
      // Convenience default: the mean of the source exponents.
      for (const auto& term : im.terms()) beta_prime += term.beta;
      beta_prime /= static_cast<double>(im.terms().size());
    }
    iso = equivalence::isotropic_representation(model, beta_prime);
  }
  if (plan.mode == Mode::kSpatialOriginal)
    trunc = truncation_radius(model, plan.s_max, plan.epsilon, plan.radius_cap);

  std::vector<PropagationSample> out(plan.replications);
  auto worker = [&](std::uint64_t begin, std::uint64_t step) {
    for (std::uint64_t i = begin; i < plan.replications; i += step) {
      switch (plan.mode) {
        case Mode::kSpatialOriginal:
          out[i] = sample_original(model, plan, i, trunc);
          break;
        case Mode::kSpatialIsotropic:
          out[i] = sample_isotropic(*iso, plan, i);
          break;
        case Mode::kDirectPropagation:
          out[i] = sample_direct(im, plan, i);
          break;
      }
    }
  };
  const int threads = std::min<std::uint64_t>(thread_budget(),
                                              plan.replications);
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, static_cast<std::uint64_t>(t),
                        static_cast<std::uint64_t>(threads));
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace hetnet::simulate
