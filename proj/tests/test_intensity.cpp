#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "hetnet/intensity.hpp"
#include "hetnet/moments.hpp"
#include "hetnet/specfun.hpp"
#include "test_models.hpp"

using namespace hetnet;
using hetnet::testing::constant_tier;
using hetnet::testing::two_tier_cost231;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lambda(s) = pi s: the linear "unit" mixture (one term, c = 1, e = 1).
IntensityMeasure unit_measure() {
  IntensityTerm term;
  term.coefficient = 1.0;
  term.exponent = 1.0;
  term.beta = 2.0;
  term.mark = ScalarDistribution::constant(1.0);
  return IntensityMeasure({term});
}

// Central-difference oracle for phi from the defining derivative
// phi(r, t) = (1/2 pi r) d/dr Lambda(r^{beta'}, t).
double phi_numeric(const IntensityMeasure& im, double beta_prime, double r,
                   double t) {
  const double h = 1e-6 * r;
  const double up = im.lambda(std::pow(r + h, beta_prime), t);
  const double dn = im.lambda(std::pow(r - h, beta_prime), t);
  return (up - dn) / (2.0 * h) / (2.0 * M_PI * r);
}

}  // namespace

TEST_CASE("single tier power-law intensity") {
  const NetworkModel model{{constant_tier(2.0, 4.0)}};
  const IntensityMeasure im = IntensityMeasure::build(model);
  REQUIRE(im.terms().size() == 1);
  CHECK(im.terms()[0].coefficient == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(im.terms()[0].exponent == doctest::Approx(0.5).epsilon(1e-15));
  for (double s : {0.5, 1.0, 9.0})
    CHECK(im.lambda(s) ==
          doctest::Approx(2.0 * M_PI * std::sqrt(s)).epsilon(1e-13));
}

TEST_CASE("two-tier intensity is the printed mixture") {
  const NetworkModel model = two_tier_cost231();
  const IntensityMeasure im = IntensityMeasure::build(model);
  REQUIRE(im.terms().size() == 2);
  const double c1 = 1.8 * std::pow(1.986e14, -2.0 / 3.638);
  const double c2 = 2.2 * std::pow(2.148e13, -2.0 / 3.180);
  CHECK(im.terms()[0].coefficient == doctest::Approx(c1).epsilon(1e-13));
  CHECK(im.terms()[1].coefficient == doctest::Approx(c2).epsilon(1e-13));
  const double s = 1e10;
  // Mark arguments select the tier indicators.
  CHECK(im.lambda(s, 1.0) ==
        doctest::Approx(M_PI * c1 * std::pow(s, 2.0 / 3.638)).epsilon(1e-12));
  CHECK(im.lambda(s, 2.0) == doctest::Approx(im.lambda(s)).epsilon(1e-14));
  CHECK(im.lambda(s, 0.5) == 0.0);
}

TEST_CASE("eval at s = 0 and the window count") {
  const IntensityMeasure im = unit_measure();
  CHECK(im.lambda(0.0, kInf) == 0.0);
  CHECK(im.lambda(4.0) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
  // Mean number of stations with signal power between 1/4 and 1.
  CHECK(im.lambda(4.0) - im.lambda(1.0) ==
        doctest::Approx(3.0 * M_PI).epsilon(1e-14));
}

TEST_CASE("phi recovers the homogeneous density") {
  const IntensityMeasure im = unit_measure();
  for (double r : {0.1, 1.0, 7.0})
    CHECK(im.phi(2.0, r) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("free-space compensation of a beta = 4 tier") {
  // phi(r) = (beta'/beta) r^{2(beta'/beta - 1)} = r^{-1}/2 at beta' = 2;
  // checked against the numeric derivative of Lambda(r^{beta'}).
  const NetworkModel model{{constant_tier(1.0, 4.0)}};
  const IntensityMeasure im = IntensityMeasure::build(model);
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(im.phi(2.0, r) == doctest::Approx(0.5 / r).epsilon(1e-12));
    CHECK(im.phi(2.0, r) ==
          doctest::Approx(phi_numeric(im, 2.0, r, kInf)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(static_cast<void>(im.phi(2.0, 0.0)), std::domain_error);
}

TEST_CASE("two-tier corrected phi against the numeric derivative") {
  const NetworkModel model = two_tier_cost231();
  const IntensityMeasure im = IntensityMeasure::build(model);
  const double bp = 3.307;
  for (double r : {0.3, 1.0, 3.0})
    CHECK(im.phi(bp, r) ==
          doctest::Approx(phi_numeric(im, bp, r, kInf)).epsilon(1e-6));
}

TEST_CASE("constant mark collapses the mark CDF to an indicator") {
  const NetworkModel model{{constant_tier(1.0, 4.0, 1.0, 3.0)}};
  const IntensityMeasure im = IntensityMeasure::build(model);
  for (double r : {0.5, 1.0, 2.0}) {
    CHECK(im.mark_cdf(2.0, r, 2.9) == 0.0);
    CHECK(im.mark_cdf(2.0, r, 3.0) == 1.0);
  }
}

TEST_CASE("two-tier mark mixture matches the printed weights") {
  const NetworkModel model = two_tier_cost231();
  const IntensityMeasure im = IntensityMeasure::build(model);
  const double bp = 3.307;
  for (double r : {0.2, 1.0, 4.0}) {
    const auto w = im.term_weights(bp, r);
    REQUIRE(w.size() == 2);
    CHECK(w[0] + w[1] == doctest::Approx(1.0).epsilon(1e-13));
    // p_1(r) = (bp/b1) c1 r^{2(bp/b1-1)} / phi(r).
    const double c1 = im.terms()[0].coefficient;
    const double expect =
        (bp / 3.638) * c1 * std::pow(r, 2.0 * (bp / 3.638 - 1.0)) /
        im.phi(bp, r);
    CHECK(w[0] == doctest::Approx(expect).epsilon(1e-12));
    CHECK(im.mark_cdf(bp, r, 1.5) == doctest::Approx(w[0]).epsilon(1e-12));
  }
}

TEST_CASE("equal-beta tiers give r-independent weights") {
  NetworkModel model{{constant_tier(1.0, 3.5, 1.0, 1.0),
                      constant_tier(3.0, 3.5, 2.0, 2.0)}};
  const IntensityMeasure im = IntensityMeasure::build(model);
  const auto w1 = im.term_weights(4.0, 0.3);
  const auto w2 = im.term_weights(4.0, 5.0);
  CHECK(w1[0] == doctest::Approx(w2[0]).epsilon(1e-13));
  const double c1 = 1.0 * std::pow(1.0, -2.0 / 3.5);
  const double c2 = 3.0 * std::pow(2.0, -2.0 / 3.5);
  CHECK(w1[0] == doctest::Approx(c1 / (c1 + c2)).epsilon(1e-13));
}

TEST_CASE("reconstruction integral recovers Lambda") {
  const NetworkModel model = two_tier_cost231();
  const IntensityMeasure im = IntensityMeasure::build(model);
  const double bp = 3.307;
  for (double s : {1e8, 1e10, 1e12})
    for (double t : {1.0, 2.0, kInf}) {
      const double integral =
          2.0 * M_PI *
          specfun::quad(
              [&](double r) { return im.phi(bp, r, t) * r; }, 0.0,
              std::pow(s, 1.0 / bp), 1e-9 * im.lambda(s, t));
      CHECK(integral == doctest::Approx(im.lambda(s, t)).epsilon(1e-8));
    }
}

TEST_CASE("superposition additivity and scale covariance") {
  const NetworkModel two = two_tier_cost231();
  const NetworkModel one_a{{two.tiers[0]}};
  const NetworkModel one_b{{two.tiers[1]}};
  const auto im = IntensityMeasure::build(two);
  const auto im_a = IntensityMeasure::build(one_a);
  const auto im_b = IntensityMeasure::build(one_b);
  CHECK(im.terms()[0].coefficient == im_a.terms()[0].coefficient);
  CHECK(im.terms()[1].coefficient == im_b.terms()[0].coefficient);

  NetworkModel scaled = two;
  for (auto& tier : scaled.tiers) tier.lambda *= 3.0;
  const auto im_scaled = IntensityMeasure::build(scaled);
  for (double s : {1e6, 1e12})
    CHECK(im_scaled.lambda(s) == doctest::Approx(3.0 * im.lambda(s)).epsilon(1e-13));
}

TEST_CASE("lambda inverse round-trips") {
  const IntensityMeasure im = IntensityMeasure::build(two_tier_cost231());
  for (double s : {1e4, 1e9, 1e14}) {
    const double v = im.lambda(s);
    CHECK(im.lambda_inverse(v) == doctest::Approx(s).epsilon(1e-10));
  }
  CHECK(im.lambda_inverse(0.0) == 0.0);
  // Single-term analytic branch.
  const auto single = IntensityMeasure::build(
      NetworkModel{{constant_tier(2.0, 4.0)}});
  CHECK(single.lambda_inverse(single.lambda(7.0)) ==
        doctest::Approx(7.0).epsilon(1e-13));
}

TEST_CASE("discrete beta produces one term per atom") {
  TierSpec tier = constant_tier(1.0, 3.0);
  tier.pathloss_exponent =
      ScalarDistribution::discrete({{3.0, 0.25}, {4.0, 0.75}});
  const auto im = IntensityMeasure::build(NetworkModel{{tier}});
  REQUIRE(im.terms().size() == 2);
  CHECK(im.terms()[0].coefficient == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(im.terms()[1].coefficient == doctest::Approx(0.75).epsilon(1e-14));
}
