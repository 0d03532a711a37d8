#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "uavsearch/analytics.hpp"
#include "uavsearch/errors.hpp"

using namespace uavsearch;

namespace {

SimplifiedScenario uniform(std::size_t m, double e_d, double e_f = 0.0, double delta = 0.0) {
  return {std::vector<double>(m, 1.0 / static_cast<double>(m)), e_d, e_f, delta};
}

}  // namespace

TEST_CASE("mean visit index is 1-based") {
  const std::vector<double> p{0.25, 0.25, 0.25, 0.25};
  CHECK(mean_visit_index(p) == 2.5);
  CHECK(sorted_descending(std::vector<double>{0.1, 0.6, 0.3}) == std::vector<double>{0.6, 0.3, 0.1});
}

TEST_CASE("expected_time_simplified") {
  CHECK(expected_time_simplified(uniform(4, 0.0)) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(expected_time_simplified(uniform(4, 0.5)) == doctest::Approx(6.5).epsilon(1e-15));
  CHECK(expected_time_simplified({{1.0}, 0.5, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(expected_time_simplified(uniform(4, 1.0)), DivergentExpectation);
  CHECK_THROWS_AS(expected_time_simplified(uniform(4, 0.1, 0.05)), InvalidSensor);
  CHECK_THROWS_AS(expected_time_simplified({{0.2, 0.8}, 0.1, 0.0, 0.0}), InvalidMap);
}

TEST_CASE("closed-form expected time agrees with an independent sample of the simplified process") {
  // M = 4 uniform, e_d = 0.5: 10^6 draws of M(Y-1) + I.
  const auto mc = oracle::simplified_process_mc(std::vector<double>(4, 0.25), 0.5, 0.0, 0.0,
                                                1000000, 2024);
  CHECK(std::abs(mc.mean - 6.5) < 3.0 * mc.stderr_);
}

TEST_CASE("worst_case_upper_bound") {
  CHECK(worst_case_upper_bound(4, 0.5) == doctest::Approx(6.5).epsilon(1e-15));
  CHECK(worst_case_upper_bound(4, 0.0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(worst_case_upper_bound(4, 0.5) == doctest::Approx(expected_time_simplified(uniform(4, 0.5))));
  CHECK_THROWS_AS(worst_case_upper_bound(4, 1.0), DivergentExpectation);
}

TEST_CASE("bound dominates every sorted map") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 0.95);
  for (int k = 0; k < 500; ++k) {
    const std::size_t m = 1 + static_cast<std::size_t>(k % 70);
    SimplifiedScenario s{oracle::random_sorted_simplex(m, rng), u(rng), 0.0, 0.0};
    CHECK(expected_time_simplified(s) <= worst_case_upper_bound(m, s.missed_detection) + 1e-12);
  }
}

TEST_CASE("expected_time_with_false_alarm") {
  SUBCASE("worked example") {
    CHECK(expected_time_with_false_alarm(uniform(4, 0.5, 0.1, 10.0)) ==
          doctest::Approx(11.0).epsilon(1e-14));
  }
  SUBCASE("independent sample of the false-alarm process") {
    const auto mc = oracle::simplified_process_mc(std::vector<double>(4, 0.25), 0.5, 0.1, 10.0,
                                                  1000000, 77);
    CHECK(std::abs(mc.mean - 11.0) < 3.0 * mc.stderr_);
  }
  SUBCASE("reduces to the simplified formula") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 0.9);
    for (int k = 0; k < 200; ++k) {
      const std::size_t m = 1 + static_cast<std::size_t>(k % 40);
      const auto probs = oracle::random_sorted_simplex(m, rng);
      const double e_d = u(rng);
      const double base = expected_time_simplified({probs, e_d, 0.0, 0.0});
      CHECK(std::abs(expected_time_with_false_alarm({probs, e_d, 0.0, 12.0}) - base) < 1e-12);
      CHECK(std::abs(expected_time_with_false_alarm({probs, e_d, u(rng) * 0.5, 0.0}) - base) < 1e-12);
    }
  }
  SUBCASE("divergent") {
    CHECK_THROWS_AS(expected_time_with_false_alarm(uniform(3, 1.0, 0.1, 1.0)), DivergentExpectation);
  }
}

TEST_CASE("first-detection pmf") {
  SUBCASE("hand-evaluated") {
    const auto pmf = first_detection_pmf(std::vector<double>{0.5, 0.5}, 2);
    REQUIRE(pmf.f.size() == 2);
    CHECK(pmf.f[0] == 0.5);
    CHECK(pmf.f[1] == 0.25);
    const auto e = expected_time_from_pmf(pmf);
    CHECK(e.value == doctest::Approx(1.0));
    CHECK(e.tail_mass == doctest::Approx(0.25));
  }
  SUBCASE("certain first detection") {
    const auto pmf = first_detection_pmf(std::vector<double>{0.0, 0.3, 0.7}, 3);
    CHECK(pmf.f == std::vector<double>{1.0, 0.0, 0.0});
    const auto e = expected_time_from_pmf(first_detection_pmf(std::vector<double>{0.0}, 1));
    CHECK(e.value == 1.0);
    CHECK(e.tail_mass == 0.0);
  }
  SUBCASE("never detects") {
    const auto pmf = first_detection_pmf(std::vector<double>{1.0, 1.0, 1.0}, 3);
    CHECK(pmf.f == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(expected_time_from_pmf(pmf).tail_mass == 1.0);
  }
  SUBCASE("horizon truncates") {
    const auto pmf = first_detection_pmf(std::vector<double>{0.5, 0.5, 0.5, 0.5}, 2);
    CHECK(pmf.horizon == 2);
    CHECK(pmf.f.size() == 2);
  }
  SUBCASE("geometric partial sums approach 1/(1-e_d)") {
    const double e_d = 0.3;
    double prev_gap = 1e9;
    for (std::size_t h : {2u, 5u, 10u, 20u}) {
      const auto e = expected_time_from_pmf(first_detection_pmf(std::vector<double>(h, e_d), h));
      const double gap = 1.0 / (1.0 - e_d) - e.value;
      CHECK(gap >= -1e-12);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    const auto far = expected_time_from_pmf(first_detection_pmf(std::vector<double>(320, e_d), 320));
    CHECK(std::abs(1.0 / (1.0 - e_d) - far.value) < 1e-12);
  }
  SUBCASE("mass plus tail is one") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
      std::vector<double> q(1 + k % 50);
      for (auto& x : q) x = u(rng);
      const auto pmf = first_detection_pmf(q, q.size());
      double mass = 0.0;
      for (double f : pmf.f) {
        CHECK((f >= 0.0 && f <= 1.0));
        mass += f;
      }
      CHECK(std::abs(mass + expected_time_from_pmf(pmf).tail_mass - 1.0) < 1e-12);
    }
  }
}
