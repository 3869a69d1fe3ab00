// SPDX-License-Identifier: MIT
#include <oscirad/oracle.hpp>
#include <oscirad/optimal_nodes.hpp>
#include <oscirad/oscillatory.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace oscirad;
using namespace oscirad::optimal;

TEST(CriticalPoints, Constants) {
  const auto c = critical_points(Frequency(1));
  EXPECT_GT(c.t0_star, pi / 3);
  EXPECT_LT(c.t0_star, pi / 2);
  EXPECT_LE(std::fabs(2.0 * c.t0_star * std::cos(c.t0_star) - std::sin(c.t0_star)), 1e-13);
  EXPECT_GE(c.t0_star / pi, 0.3709);
  EXPECT_LE(c.t0_star / pi, 0.3711);
  EXPECT_NEAR(c.threshold, 2.6954, 1e-4);
  for (double k : {-7.0, 2.5, 100.0}) EXPECT_NEAR(critical_points(Frequency(k)).threshold, c.threshold * std::fabs(k), 1e-9);
}

TEST(CriticalPoints, SmallFrequencyCapsAtOne) {
  const auto c = critical_points(Frequency(0.3));
  EXPECT_EQ(c.x0_star, 1.0);
  EXPECT_EQ(c.threshold, 1.0);
}

TEST(ObjectiveF, ZerosAndOrigin) {
  for (int j = 1; j <= 6; ++j) EXPECT_NEAR(objective_f(Frequency(6), j / 6.0), 0.0, 1e-28 + 1e-15);
  EXPECT_EQ(objective_f(Frequency(6), 0.0), 0.0);
  const double x = 1e-7;
  EXPECT_NEAR(objective_f(Frequency(3), x) / (pi * pi * 9 * x), 1.0, 1e-9);
  EXPECT_THROW((void)objective_f(Frequency(1), 1.5), Error);
}

TEST(ObjectiveF, MaximumAtCriticalPoint) {
  const Frequency k(1);
  const auto c = critical_points(k);
  EXPECT_NEAR(objective_f(k, c.x0_star), pi * std::sin(2.0 * c.t0_star), 1e-14);
  EXPECT_NEAR(oracle::finite_difference([&](double x) { return objective_f(k, x); }, c.x0_star, 1e-6), 0.0, 1e-6);
  for (int i = 1; i <= 1000; ++i) EXPECT_LE(objective_f(k, i / 1000.0), objective_f(k, c.x0_star) + 1e-15);
}

TEST(ObjectiveF, DerivativeMatchesFiniteDifference) {
  const Frequency k(4.2);
  for (double x : {0.01, 0.05, 0.1, 0.3, 0.77}) {
    const double fd = oracle::finite_difference([&](double t) { return objective_f(k, t); }, x, 1e-6);
    EXPECT_NEAR(objective_f_derivative(k, x), fd, 1e-5 * std::max(1.0, std::fabs(fd)));
  }
  EXPECT_NEAR(objective_f_derivative(k, 0.0), pi * pi * 4.2 * 4.2, 1e-10);
}

TEST(ObjectiveF, ConcaveBelowCriticalPoint) {
  for (double kv : {1.0, 3.0, 11.5}) {
    const Frequency k(kv);
    const double x0 = critical_points(k).x0_star;
    const double h = 1e-4 * x0;
    for (int i = 1; i <= 1000; ++i) {
      const double x = x0 * i / 1001.0;
      if (x - h <= 0.0) continue;
      const double d2 = (objective_f(k, x + h) - 2.0 * objective_f(k, x) + objective_f(k, x - h)) / (h * h);
      EXPECT_LE(d2, 1e-6 * pi * pi * kv * kv / x0) << "k=" << kv << " x=" << x;
    }
  }
}

TEST(Regime, Examples) {
  EXPECT_EQ(regime(Frequency(10), 27, SpaceKind::H10), Regime::EquidistantOptimal);
  EXPECT_EQ(regime(Frequency(10), 26, SpaceKind::H10), Regime::Unknown);
  for (long long m : {1, 2, 50}) EXPECT_EQ(regime(Frequency(0.3), m, SpaceKind::H10), Regime::EquidistantOptimal);
  EXPECT_EQ(regime(Frequency(10), 28, SpaceKind::H1), Regime::EquidistantOptimal);
  EXPECT_EQ(regime(Frequency(10), 27, SpaceKind::H1), Regime::Unknown);
  EXPECT_EQ(to_string(Regime::Unknown), "unknown");
  EXPECT_THROW((void)regime(Frequency(1), 0, SpaceKind::H10), Error);
}

TEST(XStar, Properties) {
  for (auto [kv, n] : std::vector<std::pair<double, long long>>{{2, 8}, {5, 16}, {10, 30}, {1, 4}, {3.5, 12}}) {
    const Frequency k(kv);
    const auto xs = solve_x_star(k, n);
    EXPECT_GT(xs.x_star, 0.0);
    EXPECT_LT(xs.x_star, std::min(0.5, 1.0 / (6.0 * kv)));
    EXPECT_LT(xs.x_star, 1.0 / (2.0 * n));
    EXPECT_LE(xs.S_derivative_residual, 1e-10);
    EXPECT_LT(xs.S_value, std::min(endpoint_S(k, n, 1.0 / (2.0 * n)), endpoint_S(k, n, 1.0 / (n + 1.0))));
    const double hi = std::min(0.5, 1.0 / (6.0 * kv));
    for (int i = 0; i <= 10000; ++i) EXPECT_GE(endpoint_S(k, n, hi * i / 10000.0), xs.S_value - 1e-15);
    EXPECT_GT(endpoint_S_derivative(k, n, hi * (1 - 1e-12)), 0.0);
    EXPECT_NEAR(oracle::finite_difference([&](double x) { return endpoint_S(k, n, x); }, xs.x_star, 1e-6), 0.0, 1e-6);
  }
}

TEST(XStar, KnownValue) {
  const auto xs = solve_x_star(Frequency(2), 8);
  EXPECT_NEAR(xs.x_star, 0.0600290133846354, 1e-13);
  EXPECT_LT(xs.x_star, 1.0 / 16);
}

TEST(XStar, RegimeViolation) {
  EXPECT_THROW((void)solve_x_star(Frequency(10), 20), Error);
  try {
    (void)solve_x_star(Frequency(10), 20);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RegimeViolation);
  }
}

TEST(XStar, ConfigurationBeatsEquidistantWithEndpoints) {
  for (auto [kv, n] : std::vector<std::pair<double, int>>{{2, 8}, {5, 16}, {10, 30}, {1, 4}, {7.5, 40}}) {
    const Frequency k(kv);
    const auto r = optimal_nodes(k, n, SpaceKind::H1);
    EXPECT_EQ(r.status, OptimalityStatus::ProvenEquidistant);
    EXPECT_EQ(r.strategy, "endpoint-offset");
    EXPECT_LE(r.best_radius, oscillatory::equidistant_error_h1(k, n - 1) + 1e-15);
    const auto ns = r.nodes(SpaceKind::H1);
    ASSERT_EQ(ns.size(), static_cast<std::size_t>(n));
    EXPECT_NEAR(ns[0], solve_x_star(k, n).x_star, 1e-15);
    EXPECT_NEAR(ns[ns.size() - 1], 1.0 - ns[0], 1e-14);
    EXPECT_NEAR(r.best_radius, oscillatory::radius_h1(k, ns), 1e-14);
    // radius^2 = (1 + S(x*)) / (4 pi^2 k^2)
    EXPECT_NEAR(r.best_radius, std::sqrt(1.0 + solve_x_star(k, n).S_value) / (2.0 * pi * kv), 1e-14);
  }
}

TEST(OptimalNodes, ProvenEquidistantInRegime) {
  const auto r = optimal_nodes(Frequency(10), 26, SpaceKind::H10);
  EXPECT_EQ(r.status, OptimalityStatus::ProvenEquidistant);
  EXPECT_EQ(r.best_radius, oscillatory::equidistant_error_h10(Frequency(10), 27));
  EXPECT_EQ(r.partition.size(), 27u);
  EXPECT_NEAR(r.partition.total(), 1.0, 1e-14);
}

TEST(OptimalNodes, BudgetValidation) {
  EXPECT_THROW((void)optimal_nodes(Frequency(1), 0, SpaceKind::H10), Error);
  EXPECT_THROW((void)small_n_optimizer(Frequency(1), 1, SpaceKind::H1), Error);
}

TEST(SmallN, BeatsWorstEquidistant) {
  for (int k : {3, 5, 8}) {
    const auto r = small_n_optimizer(Frequency(k), k, SpaceKind::H10);
    EXPECT_NEAR(r.equidistant_radius, oscillatory::initial_error(Frequency(k), SpaceKind::H10).value(), 1e-15);
    EXPECT_LT(r.best_radius, r.equidistant_radius * (1 - 1e-3));
  }
}

TEST(SmallN, InvariantsAndDeterminism) {
  std::mt19937_64 gen(47);
  std::uniform_real_distribution<double> ku(0.5, 8.0);
  std::uniform_int_distribution<int> md(2, 12);
  for (int i = 0; i < 10; ++i) {
    const Frequency k(ku(gen));
    const int m = md(gen);
    for (auto space : {SpaceKind::H10, SpaceKind::H1}) {
      const auto a = small_n_optimizer(k, m, space);
      EXPECT_LE(a.best_radius, a.equidistant_radius + 1e-14);
      EXPECT_NEAR(a.partition.total(), 1.0, 1e-13);
      for (double L : a.partition.lengths) EXPECT_GE(L, 0.0);
      const auto b = small_n_optimizer(k, m, space);
      EXPECT_EQ(a.best_radius, b.best_radius);
      EXPECT_EQ(a.partition.lengths, b.partition.lengths);
    }
  }
}

TEST(SmallN, MatchesGridOracleForThreeIntervals) {
  const Frequency k(3);
  const auto r = small_n_optimizer(k, 3, SpaceKind::H10);
  EXPECT_EQ(r.status, OptimalityStatus::GridCertified);
  auto obj = [&](std::span<const double> L) {
    double s = 0.0;
    for (double x : L) s += objective_f(k, x);
    return s;
  };
  const auto g = oracle::simplex_grid_search(obj, 3, 1.0 / 600);
  double radius_sq = 0.0;
  for (double L : g.point) radius_sq += oscillatory::interval_error_sq_pinned(k, L);
  EXPECT_LE(r.best_radius, std::sqrt(radius_sq) + 1e-12);
}

TEST(SmallN, NoImprovementInRegime) {
  std::mt19937_64 gen(53);
  std::uniform_real_distribution<double> ku(0.5, 6.0);
  for (int i = 0; i < 8; ++i) {
    const Frequency k(ku(gen));
    const int m = static_cast<int>(std::ceil(critical_points(k).threshold)) + i % 3;
    const auto r = small_n_optimizer(k, m, SpaceKind::H10);
    EXPECT_GE(r.best_radius, r.equidistant_radius * (1 - 1e-10));
  }
}

TEST(SmallN, K194With485Intervals) {
  const auto r = optimal_nodes(Frequency(194), 484, SpaceKind::H10);
  EXPECT_LE(r.best_radius, 5.34544e-4 * (1 + 1e-3));
  EXPECT_NEAR(r.equidistant_radius / 5.36217e-4, 1.0, 3e-5);
  EXPECT_EQ(r.status, OptimalityStatus::LocalOptimum);
}

TEST(Scan, Examples) {
  const auto s = scan_radius_over_n(Frequency(6), 5, 50, SpaceKind::H10);
  EXPECT_NEAR(s.front().radius, 1.0 / (12 * pi), 1e-16);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i].radius, s[i - 1].radius);
  const double e0 = oscillatory::initial_error(Frequency(0.5), SpaceKind::H10).value();
  for (const auto& p : scan_radius_over_n(Frequency(0.5), 1, 20, SpaceKind::H10)) EXPECT_LE(p.radius, e0);
  for (const auto& p : scan_radius_over_n(Frequency(9.5), 1, 40, SpaceKind::H10))
    EXPECT_LE(p.radius, oscillatory::initial_error(Frequency(9.5), SpaceKind::H10).value() + 1e-16);
  EXPECT_THROW((void)scan_radius_over_n(Frequency(1), 3, 2, SpaceKind::H10), Error);
}
