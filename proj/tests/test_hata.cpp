#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hetnet/hata.hpp"

using namespace hetnet::hata;

TEST_CASE("published parameter pairs") {
  const auto t1 = hata_params({20.0, 1.0, 1800.0});
  CHECK(t1.beta == doctest::Approx(3.638).epsilon(3e-4));
  CHECK(t1.A == doctest::Approx(1.986e14).epsilon(5e-3));

  const auto t2 = hata_params({100.0, 1.0, 1800.0});
  CHECK(t2.beta == doctest::Approx(3.180).epsilon(3e-4));
  CHECK(t2.A == doctest::Approx(2.148e13).epsilon(5e-3));

  const auto t3 = hata_params({64.0, 1.0, 1800.0});
  CHECK(t3.beta == doctest::Approx(3.307).epsilon(3e-4));
  CHECK(t3.A == doctest::Approx(3.979e13).epsilon(5e-3));
}

TEST_CASE("validity warnings") {
  CHECK_FALSE(hata_params({20.0, 1.0, 1800.0}).warnings.empty());
  CHECK(hata_params({64.0, 1.0, 1800.0}).warnings.empty());
  CHECK_FALSE(hata_params({64.0, 1.0, 900.0}).warnings.empty());
}

TEST_CASE("unsupported environment") {
  HataParams p{64.0, 1.0, 1800.0, "suburban"};
  CHECK_THROWS_AS(static_cast<void>(hata_params(p)), std::invalid_argument);
}

TEST_CASE("beta and A decrease in antenna height") {
  double prev_beta = 1e9, prev_a = 1e300;
  for (double h = 10.0; h <= 200.0; h += 5.0) {
    const auto r = hata_params({h, 1.0, 1800.0});
    CHECK(r.beta < prev_beta);
    CHECK(r.A < prev_a);
    prev_beta = r.beta;
    prev_a = r.A;
  }
}

TEST_CASE("density-weighted average height") {
  CHECK(average_height({1.8, 2.2}, {20.0, 100.0}) ==
        doctest::Approx(64.0).epsilon(1e-12));
  CHECK(average_height({3.0}, {42.0}) == doctest::Approx(42.0));
  CHECK(average_height({1.0, 1.0}, {10.0, 30.0}) == doctest::Approx(20.0));
  CHECK_THROWS_AS(static_cast<void>(average_height({1.0}, {1.0, 2.0})),
                  std::invalid_argument);
}
