// hetnet: propagation-process toolkit for heterogeneous Poisson
// cellular networks. Subcommands write CSV/JSON artifacts; exit codes
// are 0 (ok), 2 (input error), 3 (infeasible plan).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hetnet/equivalence.hpp"
#include "hetnet/gof.hpp"
#include "hetnet/hata.hpp"
#include "hetnet/intensity.hpp"
#include "hetnet/model.hpp"
#include "hetnet/moments.hpp"
#include "hetnet/simulate.hpp"

namespace {

using namespace hetnet;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  return out;
}

std::vector<double> make_grid(double lo, double hi, int points, bool log_grid) {
  std::vector<double> grid;
  if (points < 2) throw std::invalid_argument("need at least 2 grid points");
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    grid.push_back(log_grid ? lo * std::pow(hi / lo, f)
                            : lo + f * (hi - lo));
  }
  return grid;
}

int cmd_intensity(const std::string& config, double s_max, int points,
                  double t, bool log_grid, const std::string& out_path) {
  const NetworkModel model = load_model_file(config);
  const IntensityMeasure im = IntensityMeasure::build(model);
  auto out = open_out(out_path);
  out << "s,lambda\n";
  const double lo = log_grid ? s_max / points : 0.0;
  for (double s : make_grid(lo, s_max, points, log_grid))
    out << fmt(s) << ',' << fmt(im.lambda(s, t)) << '\n';
  return 0;
}

int cmd_equivalent(const std::string& config, double beta_prime, double r_min,
                   double r_max, int points, bool log_grid,
                   const std::string& out_path) {
  const NetworkModel model = load_model_file(config);
  const IsotropicModel iso =
      equivalence::isotropic_representation(model, beta_prime);
  const auto corrected = equivalence::a_corrected_terms(iso);
  auto out = open_out(out_path);
  out << "r,phi,phi_corrected";
  for (size_t j = 0; j < iso.terms().size(); ++j)
    out << ",p_" << (j + 1);
  out << '\n';
  if (r_min <= 0.0) r_min = r_max / points;
  for (double r : make_grid(r_min, r_max, points, log_grid)) {
    double phi_c = 0.0;
    for (const auto& term : corrected) phi_c += term.d * std::pow(r, term.g);
    out << fmt(r) << ',' << fmt(iso.phi(r)) << ',' << fmt(phi_c);
    for (double w : iso.weights(r)) out << ',' << fmt(w);
    out << '\n';
  }
  return 0;
}

simulate::Mode parse_mode(const std::string& mode) {
  if (mode == "original") return simulate::Mode::kSpatialOriginal;
  if (mode == "isotropic") return simulate::Mode::kSpatialIsotropic;
  if (mode == "direct") return simulate::Mode::kDirectPropagation;
  throw std::invalid_argument("unknown mode \"" + mode + "\"");
}

int cmd_simulate(const std::string& config, const std::string& mode,
                 double s_max, double eps, std::uint64_t seed,
                 std::uint64_t reps, double beta_prime,
                 const std::string& out_path) {
  const NetworkModel model = load_model_file(config);
  simulate::SimPlan plan;
  plan.s_max = s_max;
  plan.epsilon = eps;
  plan.master_seed = seed;
  plan.replications = reps;
  plan.mode = parse_mode(mode);
  plan.beta_prime = beta_prime;

  std::vector<PropagationSample> samples;
  try {
    samples = simulate::replicate(model, plan);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  auto out = open_out(out_path);
  out << "y,t,tier,rep\n";
  for (const auto& sample : samples)
    for (const auto& point : sample.points)
      out << fmt(point.y) << ',' << fmt(point.mark.t) << ','
          << point.mark.tier_index << ',' << sample.replication << '\n';

  const IntensityMeasure im = IntensityMeasure::build(model);
  nlohmann::json meta{{"seed", seed},
                      {"replications", reps},
                      {"s_max", s_max},
                      {"mode", mode},
                      {"truncation_radius", samples.front().truncation_radius},
                      {"missed_mass_bound", samples.front().missed_mass_bound},
                      {"lambda_s_max", im.lambda(s_max)}};
  open_out(out_path + ".meta.json") << meta.dump(2) << '\n';
  return 0;
}

std::vector<PropagationSample> load_samples(const std::string& path,
                                            double* s_max_out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open samples file " + path);
  double s_max = 0.0;
  {
    std::ifstream meta(path + ".meta.json");
    if (meta) {
      nlohmann::json j;
      meta >> j;
      s_max = j.value("s_max", 0.0);
    }
  }
  std::string line;
  std::getline(in, line);  // header
  std::map<std::uint64_t, PropagationSample> by_rep;
  double y_max = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    PropagationPoint point;
    std::uint64_t rep = 0;
    std::getline(row, cell, ','); point.y = std::stod(cell);
    std::getline(row, cell, ','); point.mark.t = std::stod(cell);
    std::getline(row, cell, ','); point.mark.tier_index = std::stoi(cell);
    std::getline(row, cell, ','); rep = std::stoull(cell);
    y_max = std::max(y_max, point.y);
    auto& sample = by_rep[rep];
    sample.replication = rep;
    sample.points.push_back(point);
  }
  if (s_max == 0.0) s_max = y_max;  // no sidecar; fall back to the data range
  std::vector<PropagationSample> samples;
  for (auto& [rep, sample] : by_rep) {
    sample.s_max = s_max;
    samples.push_back(std::move(sample));
  }
  *s_max_out = s_max;
  return samples;
}

int cmd_gof(const std::string& samples_path, const std::string& config,
            const std::string& method, double beta_prime,
            const std::string& out_path) {
  const NetworkModel model = load_model_file(config);
  const IntensityMeasure im = IntensityMeasure::build(model);
  double s_max = 0.0;
  const auto samples = load_samples(samples_path, &s_max);

  gof::GofReport report;
  if (method == "ks") {
    PropagationSample pooled;
    pooled.s_max = s_max;
    for (const auto& sample : samples)
      pooled.points.insert(pooled.points.end(), sample.points.begin(),
                           sample.points.end());
    report = gof::time_change_ks(pooled, im);
  } else if (method == "chi2") {
    // Equal-expected-count bins: edges at Lambda^{-1}(k/20 * Lambda(s_max)).
    const double total = im.lambda(s_max);
    std::vector<double> edges{0.0};
    for (int k = 1; k <= 20; ++k)
      edges.push_back(im.lambda_inverse(total * k / 20.0));
    report = gof::binned_chi2(samples, im, edges);
  } else if (method == "marks") {
    double bp = beta_prime;
    if (bp <= 0.0) {
      for (const auto& term : im.terms()) bp += term.beta;
      bp /= static_cast<double>(im.terms().size());
    }
    const IsotropicModel iso =
        equivalence::isotropic_representation(model, bp);
    const double r_max = std::pow(s_max, 1.0 / bp);
    report = gof::mark_consistency(samples, iso,
                                   make_grid(0.0, r_max, 11, false));
  } else {
    throw std::invalid_argument("unknown gof method \"" + method + "\"");
  }
  const std::string text = report.to_json();
  if (out_path.empty()) std::cout << text << '\n';
  else open_out(out_path) << text << '\n';
  return 0;
}

int cmd_hata(double height, double user_height, double freq,
             const std::string& env) {
  hata::HataParams params;
  params.base_height_m = height;
  params.user_height_m = user_height;
  params.frequency_mhz = freq;
  params.environment = env;
  const auto result = hata::hata_params(params);
  nlohmann::json j{{"beta", result.beta},
                   {"A", result.A},
                   {"distance_unit", "km"},
                   {"warnings", result.warnings}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

// The two-network comparison: two tiers (antenna heights 20 m and
// 100 m, densities 1.8 and 2.2) vs a single tier at the density-
// weighted mean height, with and without mean-one log-normal
// shadowing, all A-corrected at beta' of the single-tier exponent.
int cmd_figure1(const std::string& out_dir, double sigma_db, double r_min,
                double r_max, int points) {
  const auto tier1 = hata::hata_params({20.0, 1.0, 1800.0});
  const auto tier2 = hata::hata_params({100.0, 1.0, 1800.0});
  const double h3 = hata::average_height({1.8, 2.2}, {20.0, 100.0});
  const auto tier3 = hata::hata_params({h3, 1.0, 1800.0});

  auto make_tier = [&](double lambda, const hata::HataResult& hp,
                       double sdb) {
    TierSpec tier;
    tier.lambda = lambda;
    tier.power = ScalarDistribution::constant(1.0);
    tier.shadowing = sdb > 0.0 ? ScalarDistribution::lognormal_db(sdb)
                               : ScalarDistribution::constant(1.0);
    tier.pathloss_constant = ScalarDistribution::constant(hp.A);
    tier.pathloss_exponent = ScalarDistribution::constant(hp.beta);
    tier.threshold = ScalarDistribution::constant(1.0);
    return tier;
  };

  const auto grid = make_grid(r_min, r_max, points, /*log_grid=*/true);
  auto emit = [&](const std::string& name, const NetworkModel& model) {
    const IsotropicModel iso =
        equivalence::isotropic_representation(model, tier3.beta);
    auto out = open_out(out_dir + "/" + name);
    out << "r,phi_corrected\n";
    for (double r : grid)
      out << fmt(r) << ',' << fmt(equivalence::phi_corrected(iso, r)) << '\n';
  };

  for (double sdb : {0.0, sigma_db}) {
    const std::string suffix =
        sdb > 0.0 ? "shadowed.csv" : "unshadowed.csv";
    emit("two_tier_" + suffix,
         NetworkModel{{make_tier(1.8, tier1, sdb), make_tier(2.2, tier2, sdb)}});
    emit("single_tier_" + suffix, NetworkModel{{make_tier(4.0, tier3, sdb)}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"typical-user propagation processes of heterogeneous "
               "Poisson networks"};
  app.require_subcommand(1);

  std::string config, out_path, mode = "original", method = "ks";
  std::string env = "metropolitan-large-city", samples_path, out_dir = ".";
  double s_max = 10.0, t = std::numeric_limits<double>::infinity();
  double beta_prime = 0.0, r_min = 0.0, r_max = 10.0, eps = 1e-3;
  double height = 30.0, user_height = 1.0, freq = 1800.0, sigma_db = 5.0;
  std::uint64_t seed = 0, reps = 1;
  int points = 101;
  bool log_grid = false;

  auto* ci = app.add_subcommand("intensity", "tabulate Lambda(s, t)");
  ci->add_option("--config", config)->required();
  ci->add_option("--s-max", s_max);
  ci->add_option("--points", points);
  ci->add_option("--t", t);
  ci->add_flag("--log-grid", log_grid);
  ci->add_option("--out", out_path)->required();

  auto* ce = app.add_subcommand("equivalent",
                                "tabulate the isotropic representation");
  ce->add_option("--config", config)->required();
  ce->add_option("--beta-prime", beta_prime)->required();
  ce->add_option("--r-min", r_min);
  ce->add_option("--r-max", r_max);
  ce->add_option("--points", points);
  ce->add_flag("--log-grid", log_grid);
  ce->add_option("--out", out_path)->required();

  auto* cs = app.add_subcommand("simulate", "Monte Carlo replications");
  cs->add_option("--config", config)->required();
  cs->add_option("--mode", mode)->check(CLI::IsMember({"original", "isotropic",
                                                       "direct"}));
  cs->add_option("--s-max", s_max);
  cs->add_option("--eps", eps);
  cs->add_option("--seed", seed);
  cs->add_option("--reps", reps);
  cs->add_option("--beta-prime", beta_prime);
  cs->add_option("--out", out_path)->required();

  auto* cg = app.add_subcommand("gof", "goodness-of-fit of samples vs model");
  cg->add_option("--samples", samples_path)->required();
  cg->add_option("--config", config)->required();
  cg->add_option("--method", method)->check(CLI::IsMember({"ks", "chi2",
                                                           "marks"}));
  cg->add_option("--beta-prime", beta_prime);
  cg->add_option("--out", out_path);

  auto* ch = app.add_subcommand("hata", "COST231-Hata (beta, A) parameters");
  ch->add_option("--height", height)->required();
  ch->add_option("--user-height", user_height);
  ch->add_option("--freq", freq);
  ch->add_option("--env", env);

  auto* cf = app.add_subcommand("figure1",
                                "emit the two-network comparison curves");
  cf->add_option("--out-dir", out_dir);
  cf->add_option("--sigma-db", sigma_db);
  cf->add_option("--r-min", r_min);
  cf->add_option("--r-max", r_max);
  cf->add_option("--points", points);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ci->parsed())
      return cmd_intensity(config, s_max, points, t, log_grid, out_path);
    if (ce->parsed())
      return cmd_equivalent(config, beta_prime, r_min, r_max, points, log_grid,
                            out_path);
    if (cs->parsed())
      return cmd_simulate(config, mode, s_max, eps, seed, reps, beta_prime,
                          out_path);
    if (cg->parsed())
      return cmd_gof(samples_path, config, method, beta_prime, out_path);
    if (ch->parsed()) return cmd_hata(height, user_height, freq, env);
    if (cf->parsed()) {
      if (r_min <= 0.0) r_min = 1e-2;
      if (points <= 1) points = 101;
      return cmd_figure1(out_dir, sigma_db, r_min, r_max, points);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
