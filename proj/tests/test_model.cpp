#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "hetnet/model.hpp"
#include "hetnet/moments.hpp"
#include "hetnet/rng.hpp"

using namespace hetnet;

namespace {

const char* kUnitConfig = R"({
  "tiers": [{
    "lambda": 1.0,
    "power": {"kind": "constant", "value": 1.0},
    "shadowing": {"kind": "constant", "value": 1.0},
    "A": {"kind": "constant", "value": 1.0},
    "beta": {"kind": "constant", "value": 4.0},
    "threshold": {"kind": "constant", "value": 1.0}
  }]
})";

const char* kTwoTierConfig = R"({
  "tiers": [
    {"lambda": 1.8,
     "power": {"kind": "constant", "value": 1.0},
     "shadowing": {"kind": "constant", "value": 1.0},
     "A": {"kind": "constant", "value": 1.986e14},
     "beta": {"kind": "constant", "value": 3.638},
     "threshold": {"kind": "constant", "value": 1.0}},
    {"lambda": 2.2,
     "power": {"kind": "constant", "value": 1.0},
     "shadowing": {"kind": "constant", "value": 1.0},
     "A": {"kind": "constant", "value": 2.148e13},
     "beta": {"kind": "constant", "value": 3.180},
     "threshold": {"kind": "constant", "value": 2.0}}
  ]
})";

double empirical_mean(const ScalarDistribution& dist, int n,
                      std::uint64_t seed) {
  rng::Stream stream(seed, 0, rng::Purpose::kMarks);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += dist.sample(stream);
  return acc / n;
}

double empirical_second_moment(const ScalarDistribution& dist, int n,
                               std::uint64_t seed) {
  rng::Stream stream(seed, 0, rng::Purpose::kMarks);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = dist.sample(stream);
    acc += x * x;
  }
  return acc / n;
}

}  // namespace

TEST_CASE("parse the deterministic one-tier config") {
  const NetworkModel model = parse_model(kUnitConfig);
  REQUIRE(model.tiers.size() == 1);
  CHECK(model.tiers[0].lambda == 1.0);
  CHECK(model.tiers[0].pathloss_exponent.p1 == 4.0);
  CHECK(model.tiers[0].independent_marks);
}

TEST_CASE("parse the two-tier comparison config") {
  const NetworkModel model = parse_model(kTwoTierConfig);
  REQUIRE(model.tiers.size() == 2);
  CHECK(model.tiers[0].lambda == 1.8);
  CHECK(model.tiers[1].lambda == 2.2);
  CHECK(model.tiers[0].pathloss_exponent.p1 == 3.638);
  CHECK(model.tiers[1].pathloss_constant.p1 == 2.148e13);
  CHECK(model.total_density() == doctest::Approx(4.0));
}

TEST_CASE("beta at the boundary is rejected with a named tier") {
  std::string config = kUnitConfig;
  const auto pos = config.find("4.0");
  config.replace(pos, 3, "2.0");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_model(config)),
                       doctest::Contains("tier 0"), std::invalid_argument);
}

TEST_CASE("schema violations name the field") {
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_model(R"({"tiers":[{}]})")),
                       doctest::Contains("lambda"), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(parse_model("not json")),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(parse_model(R"({"tiers":[]})")),
                  std::invalid_argument);
  // Negative density.
  std::string config = kUnitConfig;
  config.replace(config.find("\"lambda\": 1.0"), 13, "\"lambda\": -1.0");
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_model(config)),
                       doctest::Contains("lambda"), std::invalid_argument);
}

TEST_CASE("discrete invariants") {
  CHECK_THROWS_AS(static_cast<void>(
                      ScalarDistribution::discrete({{1.0, 0.5}, {2.0, 0.6}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(
                      ScalarDistribution::discrete({{-1.0, 0.5}, {2.0, 0.5}})),
                  std::invalid_argument);
}

TEST_CASE("mean-one lognormal construction") {
  const auto dist = ScalarDistribution::lognormal_db(5.0);
  const double sigma = 5.0 * std::log(10.0) / 10.0;
  CHECK(dist.p2 == doctest::Approx(sigma).epsilon(1e-15));
  CHECK(dist.p1 == doctest::Approx(-0.5 * sigma * sigma).epsilon(1e-15));
  CHECK(moments::mean(dist) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("parse -> serialize -> parse round-trips") {
  const std::string full_config = R"({
    "tiers": [{
      "lambda": 2.5,
      "power": {"kind": "discrete", "atoms": [[1.0, 0.25], [2.0, 0.75]]},
      "shadowing": {"kind": "lognormal", "sigma_db": 5.0, "mean_one": true},
      "A": {"kind": "constant", "value": 3.0},
      "beta": {"kind": "discrete", "atoms": [[3.0, 0.5], [4.0, 0.5]]},
      "threshold": {"kind": "exponential", "rate": 2.0}
    }]
  })";
  const NetworkModel a = parse_model(full_config);
  const NetworkModel b = parse_model(serialize_model(a));
  CHECK(serialize_model(a) == serialize_model(b));
  CHECK(b.tiers[0].shadowing.from_sigma_db);
  CHECK(b.tiers[0].shadowing.sigma_db == 5.0);
}

TEST_CASE("constant sampling is degenerate") {
  rng::Stream stream(7, 0, rng::Purpose::kMarks);
  const auto dist = ScalarDistribution::constant(3.5);
  for (int i = 0; i < 10; ++i) CHECK(dist.sample(stream) == 3.5);
}

TEST_CASE("mean-one lognormal empirical means at 1e6 draws") {
  for (double sdb : {3.0, 5.0, 8.0}) {
    const auto dist = ScalarDistribution::lognormal_db(sdb);
    const double mean = empirical_mean(dist, 1000000, 42);
    CHECK(mean > 0.99);
    CHECK(mean < 1.01);
  }
}

TEST_CASE("every family's empirical mean is within 5 standard errors") {
  const int n = 1000000;
  struct Case { ScalarDistribution dist; };
  const ScalarDistribution dists[] = {
      ScalarDistribution::exponential(1.0),
      ScalarDistribution::exponential(2.5),
      ScalarDistribution::weibull(1.7, 2.0),
      ScalarDistribution::nakagami(1.5, 2.0),
      ScalarDistribution::rice(1.0, 0.8),
      ScalarDistribution::lognormal(0.2, 0.6),
      ScalarDistribution::discrete({{1.0, 0.3}, {4.0, 0.7}}),
  };
  std::uint64_t seed = 100;
  for (const auto& dist : dists) {
    const double m1 = moments::moment_closed(dist, 1.0);
    const double m2 = moments::moment_closed(dist, 2.0);
    const double se = std::sqrt((m2 - m1 * m1) / n);
    const double mean = empirical_mean(dist, n, seed++);
    CHECK(std::abs(mean - m1) <= 5.0 * se);
  }
}

TEST_CASE("sampling is deterministic given the stream key") {
  const auto dist = ScalarDistribution::nakagami(2.0, 1.5);
  rng::Stream a(9, 3, rng::Purpose::kMarks);
  rng::Stream b(9, 3, rng::Purpose::kMarks);
  for (int i = 0; i < 100; ++i) CHECK(dist.sample(a) == dist.sample(b));
}

TEST_CASE("rice second moment matches samples") {
  const auto dist = ScalarDistribution::rice(1.5, 0.7);
  // E[S^2] = 2 sigma^2 + nu^2.
  const double expected = 2.0 * 0.49 + 2.25;
  const double m2 = empirical_second_moment(dist, 500000, 11);
  CHECK(m2 == doctest::Approx(expected).epsilon(0.02));
}
