#include <cmath>
#include <random>

#include "doctest.h"
#include "clanforge/error.hpp"
#include "clanforge/powerlaw.hpp"

using namespace clanforge;

TEST_SUITE("powerlaw") {

TEST_CASE("hand-evaluated estimator") {
  std::vector<std::uint64_t> d{1, 1, 2, 4};
  auto r = fit_gamma_mle(d, 1);
  // 1 + 4 / (ln 2 + ln 4)
  CHECK(r.gamma == doctest::Approx(2.9236).epsilon(1e-4));
  CHECK(r.gamma == doctest::Approx(1.0 + 4.0 / (3.0 * std::log(2.0))).epsilon(1e-14));
  CHECK(r.sample_count == 4);
  CHECK(r.xmin == 1);
}

TEST_CASE("values below xmin are excluded") {
  std::vector<std::uint64_t> d{0, 0, 1, 2, 3, 6};
  auto r = fit_gamma_mle(d, 2);
  CHECK(r.sample_count == 3);
  CHECK(r.gamma == doctest::Approx(1.0 + 3.0 / (std::log(1.5) + std::log(3.0))));
}

TEST_CASE("degenerate inputs") {
  std::vector<std::uint64_t> flat{1, 1, 1};
  CHECK_THROWS_WITH_AS(fit_gamma_mle(flat, 1), doctest::Contains("equals xmin"), Error);
  std::vector<std::uint64_t> single{5};
  CHECK_THROWS_AS(fit_gamma_mle(single, 1), Error);
  std::vector<std::uint64_t> zeros{0, 0, 0, 0};
  CHECK_THROWS_AS(fit_gamma_mle(zeros, 1), Error);
  std::vector<std::uint64_t> ok{1, 2};
  CHECK_THROWS_AS(fit_gamma_mle(ok, 0), Error);
}

TEST_CASE("scaling every value and xmin leaves gamma unchanged") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> deg(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> d(30);
    for (auto& x : d) x = deg(rng);
    d[0] = 41;
    const std::uint64_t c = 2 + rng() % 9;
    auto scaled = d;
    for (auto& x : scaled) x *= c;
    CHECK(fit_gamma_mle(scaled, c).gamma ==
          doctest::Approx(fit_gamma_mle(d, 1).gamma).epsilon(1e-12));
  }
}

TEST_CASE("spreading degrees upward strictly lowers gamma") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint64_t> deg(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> d(25);
    for (auto& x : d) x = deg(rng);
    d[0] = 2;
    const double before = fit_gamma_mle(d, 1).gamma;
    auto spread = d;
    for (std::size_t i = 0; i < spread.size(); i += 3) spread[i] += 1 + rng() % 5;
    CHECK(fit_gamma_mle(spread, 1).gamma < before);
  }
}

TEST_CASE("model curve") {
  std::vector<std::uint64_t> ks{1, 10, 2};
  auto v = model_pmf(2.0, ks);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == doctest::Approx(0.01).epsilon(1e-15));
  std::vector<std::uint64_t> two{2};
  CHECK(model_pmf(2.22323429316, two)[0] == doctest::Approx(0.2142).epsilon(2e-4));
  std::vector<std::uint64_t> zero{0};
  CHECK_THROWS_AS(model_pmf(2.0, zero), Error);
  CHECK_THROWS_AS(model_pmf(1.0, ks), Error);
}

}  // TEST_SUITE
