#include "hetnet/gof.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "hetnet/specfun.hpp"
#include "json.hpp"

namespace hetnet::gof {

namespace {

using nlohmann::json;

double clamp_p(double p) {
  return std::min(1.0, std::max(kPValueFloor, p));
}

// One-sample KS against uniform(0,1) for already-transformed values.
GofReport ks_uniform(std::vector<double> u, const std::string& method) {
  GofReport report;
  report.method = method;
  report.n_points = u.size();
  if (u.empty()) {
    report.inconclusive = true;
    return report;
  }
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double cdf_lo = static_cast<double>(i) / n;
    const double cdf_hi = static_cast<double>(i + 1) / n;
    d = std::max({d, u[i] - cdf_lo, cdf_hi - u[i]});
  }
  report.statistic = d;
  const double sqn = std::sqrt(n);
  report.p_value =
      clamp_p(specfun::kolmogorov_q((sqn + 0.12 + 0.11 / sqn) * d));
  return report;
}

std::vector<double> pooled_transform(
    const std::vector<PropagationSample>& samples, const IntensityMeasure& im) {
  std::vector<double> u;
  for (const auto& sample : samples) {
    const double total = im.lambda(sample.s_max);
    for (const auto& point : sample.points)
      u.push_back(im.lambda(point.y) / total);
  }
  return u;
}

}  // namespace

double chi2_survival(double statistic, double df) {
  if (statistic <= 0.0) return 1.0;
  return specfun::gamma_q(0.5 * df, 0.5 * statistic);
}

GofReport time_change_ks(const PropagationSample& sample,
                         const IntensityMeasure& im) {
  return ks_uniform(pooled_transform({sample}, im), "time-change-ks");
}

GofReport binned_chi2(const std::vector<PropagationSample>& samples,
                      const IntensityMeasure& im,
                      const std::vector<double>& bin_edges) {
  if (bin_edges.size() < 2)
    throw std::invalid_argument("binned_chi2: need at least two bin edges");
  const double reps = static_cast<double>(samples.size());

  std::vector<BinRow> bins;
  for (size_t j = 0; j + 1 < bin_edges.size(); ++j) {
    BinRow row;
    row.lo = bin_edges[j];
    row.hi = bin_edges[j + 1];
    row.expected = reps * (im.lambda(row.hi) - im.lambda(row.lo));
    bins.push_back(row);
  }
  std::size_t n_points = 0;
  for (const auto& sample : samples)
    for (const auto& point : sample.points) {
      ++n_points;
      for (auto& row : bins)
        if (point.y > row.lo && point.y <= row.hi) {
          row.observed += 1.0;
          break;
        }
    }

  // Merge bins with expected < 5 into their right neighbour.
  std::vector<BinRow> merged;
  for (const auto& row : bins) {
    if (!merged.empty() && merged.back().expected < 5.0) {
      merged.back().hi = row.hi;
      merged.back().expected += row.expected;
      merged.back().observed += row.observed;
    } else {
      merged.push_back(row);
    }
  }
  if (merged.size() >= 2 && merged.back().expected < 5.0) {
    auto last = merged.back();
    merged.pop_back();
    merged.back().hi = last.hi;
    merged.back().expected += last.expected;
    merged.back().observed += last.observed;
  }
  if (merged.size() < 2)
    throw std::invalid_argument("binned_chi2: fewer than 2 usable bins");

  GofReport report;
  report.method = "binned-chi2";
  report.n_points = n_points;
  report.bins = merged;
  for (const auto& row : merged) {
    const double diff = row.observed - row.expected;
    report.statistic += diff * diff / row.expected;
  }
  report.p_value = clamp_p(
      chi2_survival(report.statistic, static_cast<double>(merged.size() - 1)));
  return report;
}

GofReport mark_consistency(const std::vector<PropagationSample>& samples,
                           const IsotropicModel& iso,
                           const std::vector<double>& radial_bins) {
  if (radial_bins.size() < 2)
    throw std::invalid_argument("mark_consistency: need radial bin edges");
  for (const auto& term : iso.terms())
    if (term.mark.kind != ScalarDistribution::Kind::kConstant &&
        term.mark.kind != ScalarDistribution::Kind::kDiscrete)
      throw std::invalid_argument(
          "mark_consistency: continuous marks are unsupported");

  // Category set: the union of mark atoms across terms.
  std::set<double> categories;
  for (const auto& term : iso.terms())
    for (const auto& [v, p] : term.mark.support_atoms()) {
      (void)p;
      categories.insert(v);
    }
  std::vector<double> cats(categories.begin(), categories.end());
  auto cat_index = [&](double t) {
    for (size_t c = 0; c < cats.size(); ++c)
      if (std::abs(t - cats[c]) <= 1e-9 * std::max(1.0, std::abs(cats[c])))
        return c;
    return cats.size();
  };

  const double bp = iso.beta_prime();
  const size_t nbins = radial_bins.size() - 1;
  std::vector<std::vector<double>> observed(nbins,
                                            std::vector<double>(cats.size()));
  std::vector<double> bin_total(nbins, 0.0);
  std::size_t n_points = 0;
  for (const auto& sample : samples)
    for (const auto& point : sample.points) {
      const double r = std::pow(point.y, 1.0 / bp);
      for (size_t b = 0; b < nbins; ++b)
        if (r > radial_bins[b] && r <= radial_bins[b + 1]) {
          const size_t c = cat_index(point.mark.t);
          if (c < cats.size()) {
            observed[b][c] += 1.0;
            bin_total[b] += 1.0;
            ++n_points;
          }
          break;
        }
    }

  GofReport report;
  report.method = "mark-chi2";
  report.n_points = n_points;
  double df = 0.0;
  for (size_t b = 0; b < nbins; ++b) {
    if (bin_total[b] < 5.0 * static_cast<double>(cats.size())) continue;
    const double r_mid = 0.5 * (radial_bins[b] + radial_bins[b + 1]);
    const auto w = iso.weights(r_mid);
    for (size_t c = 0; c < cats.size(); ++c) {
      double prob = 0.0;
      for (size_t j = 0; j < iso.terms().size(); ++j)
        for (const auto& [v, p] : iso.terms()[j].mark.support_atoms())
          if (std::abs(v - cats[c]) <= 1e-9 * std::max(1.0, std::abs(cats[c])))
            prob += w[j] * p;
      const double expected = bin_total[b] * prob;
      BinRow row;
      row.lo = radial_bins[b];
      row.hi = radial_bins[b + 1];
      row.expected = expected;
      row.observed = observed[b][c];
      report.bins.push_back(row);
      if (expected > 0.0) {
        const double diff = observed[b][c] - expected;
        report.statistic += diff * diff / expected;
      }
    }
    df += static_cast<double>(cats.size()) - 1.0;
  }
  if (df < 1.0) {
    report.inconclusive = true;
    return report;
  }
  report.p_value = clamp_p(chi2_survival(report.statistic, df));
  return report;
}

GofReport two_sample_ks(const std::vector<PropagationSample>& a,
                        const std::vector<PropagationSample>& b) {
  std::vector<double> xa, xb;
  for (const auto& sample : a)
    for (const auto& point : sample.points) xa.push_back(point.y);
  for (const auto& sample : b)
    for (const auto& point : sample.points) xb.push_back(point.y);
  GofReport report;
  report.method = "two-sample-ks";
  report.n_points = xa.size() + xb.size();
  if (xa.empty() || xb.empty()) {
    report.inconclusive = true;
    return report;
  }
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  double d = 0.0;
  size_t i = 0, j = 0;
  while (i < xa.size() && j < xb.size()) {
    // Advance past ties together, or the transient index gap at the
    // tied value would register as a spurious CDF difference.
    const double v = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] == v) ++i;
    while (j < xb.size() && xb[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  report.statistic = d;
  const double ne = std::sqrt(na * nb / (na + nb));
  report.p_value =
      clamp_p(specfun::kolmogorov_q((ne + 0.12 + 0.11 / ne) * d));
  return report;
}

namespace {

std::vector<double> mark_probe_points(const IntensityMeasure& im) {
  std::set<double> ts;
  ts.insert(std::numeric_limits<double>::infinity());
  for (const auto& term : im.terms()) {
    if (term.mark.kind == ScalarDistribution::Kind::kConstant ||
        term.mark.kind == ScalarDistribution::Kind::kDiscrete)
      for (const auto& [v, p] : term.mark.support_atoms()) {
        (void)p;
        ts.insert(v);
      }
  }
  return {ts.begin(), ts.end()};
}

// Max relative gap between two callables on the standard log grid and
// the union of mark probe points.
template <typename FA, typename FB>
double analytic_gap(FA&& la, FB&& lb, const std::vector<double>& t_probes) {
  double worst = 0.0;
  for (int i = 0; i <= 90; ++i) {
    const double s = std::pow(10.0, -3.0 + i * 0.1);  // 1e-3 .. 1e6
    for (double t : t_probes) {
      const double a = la(s, t);
      const double b = lb(s, t);
      const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
      worst = std::max(worst, std::abs(a - b) / scale);
    }
  }
  return worst;
}

EquivalenceReport empirical_check(
    const NetworkModel& model_a, const IntensityMeasure& im_a,
    const std::function<std::vector<PropagationSample>(
        const simulate::SimPlan&)>& sample_b,
    const std::function<double(double, double)>& lambda_b,
    const simulate::SimPlan& plan, EquivalenceReport report) {
  simulate::SimPlan plan_a = plan;
  plan_a.mode = simulate::Mode::kSpatialOriginal;
  const auto samples_a = simulate::replicate(model_a, plan_a);
  const auto samples_b = sample_b(plan);

  // Cross time-change tests plus a two-sample comparison.
  GofReport a_vs_b = ks_uniform(
      [&] {
        std::vector<double> u;
        for (const auto& sample : samples_a) {
          const double total = lambda_b(sample.s_max,
                                        std::numeric_limits<double>::infinity());
          for (const auto& point : sample.points)
            u.push_back(
                lambda_b(point.y, std::numeric_limits<double>::infinity()) /
                total);
        }
        return u;
      }(),
      "time-change-ks");
  GofReport b_vs_a =
      ks_uniform(pooled_transform(samples_b, im_a), "time-change-ks");
  GofReport ts = two_sample_ks(samples_a, samples_b);

  // KS statistics are invariant under a scaling of the intensity, so a
  // pure density mismatch needs a count comparison: the pooled number
  // of points of A is Poisson with mean reps * Lambda_b(s_max) under
  // the claimed model B.
  GofReport counts;
  counts.method = "count-z";
  double total_a = 0.0, expected_b = 0.0;
  for (const auto& sample : samples_a) {
    total_a += static_cast<double>(sample.points.size());
    expected_b +=
        lambda_b(sample.s_max, std::numeric_limits<double>::infinity());
  }
  counts.n_points = static_cast<std::size_t>(total_a);
  if (expected_b <= 0.0) {
    counts.inconclusive = total_a > 0.0;
    counts.statistic = total_a;
  } else {
    counts.statistic = (total_a - expected_b) / std::sqrt(expected_b);
    counts.p_value = clamp_p(std::erfc(std::abs(counts.statistic) / std::sqrt(2.0)));
  }
  report.empirical = {a_vs_b, b_vs_a, ts, counts};
  const double alpha = 0.01;
  bool ok = true;
  for (const auto& r : report.empirical)
    ok = ok && !r.inconclusive && r.p_value > alpha;
  report.verdict = ok ? Verdict::kConsistentEmpirical : Verdict::kRejected;
  return report;
}

}  // namespace

EquivalenceReport equivalence_verdict(const NetworkModel& model_a,
                                      const NetworkModel& model_b,
                                      const simulate::SimPlan& plan) {
  const IntensityMeasure im_a = IntensityMeasure::build(model_a);
  const IntensityMeasure im_b = IntensityMeasure::build(model_b);
  auto probes = mark_probe_points(im_a);
  for (double t : mark_probe_points(im_b)) probes.push_back(t);

  EquivalenceReport report;
  report.max_relative_gap = analytic_gap(
      [&](double s, double t) { return im_a.lambda(s, t); },
      [&](double s, double t) { return im_b.lambda(s, t); }, probes);
  if (report.max_relative_gap <= 1e-10) {
    report.verdict = Verdict::kEquivalentAnalytic;
    return report;
  }
  return empirical_check(
      model_a, im_a,
      [&](const simulate::SimPlan& p) {
        simulate::SimPlan pb = p;
        pb.mode = simulate::Mode::kSpatialOriginal;
        pb.master_seed = p.master_seed + 1;  // independent replications
        return simulate::replicate(model_b, pb);
      },
      [&](double s, double t) { return im_b.lambda(s, t); }, plan, report);
}

EquivalenceReport equivalence_verdict(const NetworkModel& model_a,
                                      const IsotropicModel& iso_b,
                                      const simulate::SimPlan& plan) {
  const IntensityMeasure im_a = IntensityMeasure::build(model_a);
  EquivalenceReport report;
  report.max_relative_gap = analytic_gap(
      [&](double s, double t) { return im_a.lambda(s, t); },
      [&](double s, double t) { return iso_b.propagation_lambda(s, t); },
      mark_probe_points(im_a));
  if (report.max_relative_gap <= 1e-10) {
    report.verdict = Verdict::kEquivalentAnalytic;
    return report;
  }
  return empirical_check(
      model_a, im_a,
      [&](const simulate::SimPlan& p) {
        simulate::SimPlan pb = p;
        pb.master_seed = p.master_seed + 1;
        std::vector<PropagationSample> out(pb.replications);
        for (std::uint64_t i = 0; i < pb.replications; ++i)
          out[i] = simulate::sample_isotropic(iso_b, pb, i);
        return out;
      },
      [&](double s, double t) { return iso_b.propagation_lambda(s, t); }, plan,
      report);
}

std::string GofReport::to_json() const {
  json j{{"method", method},
         {"statistic", statistic},
         {"p_value", p_value},
         {"n", n_points},
         {"inconclusive", inconclusive}};
  if (!bins.empty()) {
    json rows = json::array();
    for (const auto& row : bins)
      rows.push_back({{"lo", row.lo},
                      {"hi", row.hi},
                      {"expected", row.expected},
                      {"observed", row.observed}});
    j["bins"] = rows;
  }
  return j.dump(2);
}

std::string EquivalenceReport::to_json() const {
  const char* name = verdict == Verdict::kEquivalentAnalytic
                         ? "equivalent-analytic"
                         : verdict == Verdict::kConsistentEmpirical
                               ? "consistent-empirical"
                               : "rejected";
  json j{{"verdict", name}, {"max_relative_gap", max_relative_gap}};
  json subs = json::array();
  for (const auto& r : empirical) subs.push_back(json::parse(r.to_json()));
  j["tests"] = subs;
  return j.dump(2);
}

}  // namespace hetnet::gof
