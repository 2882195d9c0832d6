#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "iovtsim/compute.hpp"
#include "iovtsim/rng.hpp"
#include "oracles.hpp"

using namespace iovtsim;

TEST_CASE("split ratio") {
  SUBCASE("equal rates give alpha = 1/3") {
    CHECK(split_ratio(1.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("hand-solved asymmetric case") {
    // L = 2, R = 4, U = 4: (1/2) / (1/4 + 1/4 + 1/2) = 0.5.
    CHECK(split_ratio(2.0, 4.0, 4.0) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("U = 0 forces pure local execution") {
    CHECK(split_ratio(2.0, 4.0, 0.0) == 0.0);
  }
  SUBCASE("alpha equalizes both paths") {
    const double L = 3e6, R = 8e6, U = 5e6, C = 7e6;
    const double a = split_ratio(L, R, U);
    const double local = (1.0 - a) * C / L;
    const double offload = a * C * (1.0 / R + 1.0 / U);
    CHECK(local == doctest::Approx(offload).epsilon(1e-12));
  }
  SUBCASE("invalid rates throw") {
    CHECK_THROWS_AS(split_ratio(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(split_ratio(1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(split_ratio(1.0, 1.0, -1.0), std::domain_error);
  }
}

TEST_CASE("task delay") {
  SUBCASE("matches the effective-rate identity") {
    const double L = 3e6, R = 8e6, U = 5e6, C = 7e6;
    const double expected = C / (L + R * U / (R + U));
    CHECK(task_delay(C, L, R, U) == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("U = 0 degrades to C/L") {
    CHECK(task_delay(6e6, 2e6, 8e6, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("offloading never hurts") {
    const double L = 2e6, R = 5e6, C = 6e6;
    double prev = task_delay(C, L, R, 0.0);
    for (double U = 1e5; U < 2e7; U *= 1.7) {
      const double d = task_delay(C, L, R, U);
      CHECK(d < prev);
      prev = d;
    }
  }
  SUBCASE("zero workload is free") { CHECK(task_delay(0.0, 1e6, 1e6, 1e6) == 0.0); }
  SUBCASE("negative workload throws") {
    CHECK_THROWS_AS(task_delay(-1.0, 1e6, 1e6, 1e6), std::domain_error);
  }
}

TEST_CASE("minimum required MEC rate") {
  SUBCASE("local alone suffices") {
    // C/T = 1e6 <= L.
    const auto u = min_required_rate(1e6, 1.0, 2e6, 8e6);
    REQUIRE(u.has_value());
    CHECK(*u == 0.0);
  }
  SUBCASE("hand-solved interior case") {
    // C = 8e6, T = 1, L = 2e6, R = 8e6: deficit h = 6e6, U = h*R/(R-h) = 24e6.
    const auto u = min_required_rate(8e6, 1.0, 2e6, 8e6);
    REQUIRE(u.has_value());
    CHECK(*u == doctest::Approx(24e6).epsilon(1e-12));
  }
  SUBCASE("uplink bottleneck makes the deadline unreachable") {
    // deficit h = 6e6 >= R = 5e6.
    CHECK_FALSE(min_required_rate(8e6, 1.0, 2e6, 5e6).has_value());
    CHECK_FALSE(min_required_rate(8e6, 1.0, 2e6, 6e6).has_value());
  }
  SUBCASE("returned rate meets the deadline exactly") {
    const double C = 9e6, T = 0.8, L = 3e6, R = 12e6;
    const auto u = min_required_rate(C, T, L, R);
    REQUIRE(u.has_value());
    CHECK(task_delay(C, L, R, *u) == doctest::Approx(T).epsilon(1e-12));
  }
}

namespace {

DeviceDemand make_demand(double C, double T, double L, double R) {
  DeviceDemand d;
  d.workload_bits = C;
  d.deadline_s = T;
  d.local_rate_bps = L;
  d.uplink_rate_bps = R;
  const auto u = min_required_rate(C, T, L, R);
  d.min_mec_rate_bps = u.value_or(0.0);
  return d;
}

std::vector<DeviceDemand> random_demands(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<DeviceDemand> out;
  for (int i = 0; i < n; ++i) {
    const double C = rng.uniform(5e6, 10e6);
    const double L = rng.uniform(1e6, 10e6);
    const double R = rng.uniform(2e6, 30e6);
    // Deadline above C/(L+R) so a finite U_min always exists.
    const double t_min = C / (L + R);
    const double T = rng.uniform(t_min * 1.05, t_min * 4.0);
    out.push_back(make_demand(C, T, L, R));
  }
  return out;
}

}  // namespace

TEST_CASE("waterfill") {
  SUBCASE("empty input gives empty output") {
    CHECK(waterfill({}, 1e9).empty());
  }

  SUBCASE("single device takes the whole capacity") {
    const std::vector<DeviceDemand> d = {make_demand(8e6, 1.0, 2e6, 8e6)};
    const auto u = waterfill(d, 60e6);
    REQUIRE(u.size() == 1);
    CHECK(u[0] == doctest::Approx(60e6).epsilon(1e-9));
  }

  SUBCASE("two identical devices split evenly") {
    const std::vector<DeviceDemand> d = {make_demand(8e6, 1.0, 2e6, 8e6),
                                         make_demand(8e6, 1.0, 2e6, 8e6)};
    const auto u = waterfill(d, 80e6);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == doctest::Approx(u[1]).epsilon(1e-9));
    CHECK(u[0] + u[1] == doctest::Approx(80e6).epsilon(1e-9));
  }

  SUBCASE("capacity exactly at the floor sum returns the floors") {
    const std::vector<DeviceDemand> d = {make_demand(8e6, 1.0, 2e6, 8e6),
                                         make_demand(9e6, 0.8, 3e6, 12e6)};
    const double floors = d[0].min_mec_rate_bps + d[1].min_mec_rate_bps;
    const auto u = waterfill(d, floors);
    CHECK(u[0] == doctest::Approx(d[0].min_mec_rate_bps).epsilon(1e-9));
    CHECK(u[1] == doctest::Approx(d[1].min_mec_rate_bps).epsilon(1e-9));
  }

  SUBCASE("infeasible floor sum throws") {
    const std::vector<DeviceDemand> d = {make_demand(8e6, 1.0, 2e6, 8e6)};
    CHECK_THROWS_AS(waterfill(d, d[0].min_mec_rate_bps * 0.5), std::invalid_argument);
  }

  SUBCASE("allocations respect floors and exhaust capacity (randomized)") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto demands = random_demands(seed, 1 + static_cast<int>(seed % 7));
      double floors = 0.0;
      for (const auto& d : demands) floors += d.min_mec_rate_bps;
      const double capacity = floors * 1.5 + 20e6;
      const auto u = waterfill(demands, capacity);
      REQUIRE(u.size() == demands.size());
      double total = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(u[i] >= demands[i].min_mec_rate_bps * (1.0 - 1e-9));
        total += u[i];
      }
      CHECK(total == doctest::Approx(capacity).epsilon(1e-9));
    }
  }

  SUBCASE("matches the greedy increment oracle") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
      const auto demands = random_demands(seed, 2 + static_cast<int>(seed % 4));
      double floors = 0.0;
      for (const auto& d : demands) floors += d.min_mec_rate_bps;
      const double capacity = floors * 1.4 + 30e6;

      const double step = 1e3;
      const auto greedy = oracles::greedy_waterfill(demands, capacity, step);
      const auto exact = waterfill(demands, capacity);
      REQUIRE(greedy.size() == exact.size());
      for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(std::abs(exact[i] - greedy[i]) <= 0.01 * greedy[i] + 2.0 * step);
      }
      // The closed-form solution should never lose to the oracle on total delay.
      CHECK(oracles::total_delay(demands, exact) <=
            oracles::total_delay(demands, greedy) * (1.0 + 1e-9));
    }
  }

  SUBCASE("interior allocations equalize marginal delay reduction") {
    for (std::uint64_t seed = 200; seed < 210; ++seed) {
      const auto demands = random_demands(seed, 4);
      double floors = 0.0;
      for (const auto& d : demands) floors += d.min_mec_rate_bps;
      const double capacity = floors * 1.4 + 40e6;
      const auto u = waterfill(demands, capacity);

      // Marginal m(U) = C R^2 / (L R + (L+R) U)^2 for every device strictly
      // above its floor; all such marginals must agree.
      std::vector<double> marginals;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= demands[i].min_mec_rate_bps * (1.0 + 1e-9)) continue;
        const double L = demands[i].local_rate_bps;
        const double R = demands[i].uplink_rate_bps;
        const double denom = L * R + (L + R) * u[i];
        marginals.push_back(demands[i].workload_bits * R * R / (denom * denom));
      }
      for (std::size_t i = 1; i < marginals.size(); ++i) {
        CHECK(marginals[i] == doctest::Approx(marginals[0]).epsilon(1e-6));
      }
    }
  }
}
