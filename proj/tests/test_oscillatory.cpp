// SPDX-License-Identifier: MIT
#include <oscirad/density.hpp>
#include <oscirad/general_density.hpp>
#include <oscirad/oscillatory.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace oscirad;
using namespace oscirad::oscillatory;

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// 50-digit reference for the pinned and free-end squared errors.
double pinned_ref(double k, double L) {
  const big pi_b = boost::math::constants::pi<big>();
  const big u = pi_b * big(std::fabs(k)) * big(L);
  const big s = sin(u);
  return static_cast<double>(big(L) / (4 * pi_b * pi_b * big(k) * big(k)) * (1 - s * s / (u * u)));
}

double free_ref(double k, double L) {
  const big pi_b = boost::math::constants::pi<big>();
  const big ak = big(std::fabs(k));
  const big v = 2 * pi_b * ak * big(L);
  return static_cast<double>((v - sin(v)) / (pi_b * ak) / (4 * pi_b * pi_b * ak * ak));
}

const double two_pi = 2.0 * pi;

}  // namespace

TEST(PinnedError, Examples) {
  EXPECT_NEAR(interval_error_sq_pinned(Frequency(1), 1.0), 1.0 / (4 * pi * pi), 1e-17);
  EXPECT_EQ(interval_error_sq_pinned(Frequency(3.7), 0.0), 0.0);
  EXPECT_NEAR(interval_error_sq_pinned(Frequency(1), 0.5), (0.5 - 2.0 / (pi * pi)) / (4 * pi * pi), 1e-17);
}

TEST(PinnedError, RejectsOutOfRangeLength) {
  EXPECT_THROW((void)interval_error_sq_pinned(Frequency(1), -0.1), Error);
  EXPECT_THROW((void)interval_error_sq_pinned(Frequency(1), 1.5), Error);
}

TEST(FreeEndError, Examples) {
  EXPECT_EQ(interval_error_sq_free_end(Frequency(2), 0.0), 0.0);
  EXPECT_NEAR(interval_error_sq_free_end(Frequency(1), 0.25), (0.5 - 1.0 / pi) / (4 * pi * pi), 1e-17);
  for (int k : {1, 2, 5, 40})
    EXPECT_NEAR(interval_error_sq_free_end(Frequency(k), 1.0), std::pow(std::sqrt(2.0) / (two_pi * k), 2), 1e-17);
}

TEST(PinnedError, MatchesQuadratureOracle) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ku(-12.0, 12.0), au(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    double k = ku(gen);
    if (std::fabs(k) < 0.05) k = 0.05;
    double a = au(gen), b = au(gen);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    const auto s = general::interval_initial_error(oscillatory_density(Frequency(k)), a, b, IntervalErrorKind::InteriorH10);
    EXPECT_NEAR(s.error_sq, interval_error_sq_pinned(Frequency(k), b - a), 1e-12);
  }
}

TEST(SmallArgument, PinnedAgainstExtendedPrecision) {
  for (double k : {1.0, 7.0, 0.3, 250.0}) {
    for (double L = 1e-12; L < 1e-1; L *= 3.7) {
      const double ref = pinned_ref(k, L);
      const double got = interval_error_sq_pinned(Frequency(k), L);
      EXPECT_NEAR(got / ref, 1.0, 1e-13) << "k=" << k << " L=" << L;
    }
  }
}

TEST(SmallArgument, FreeEndAgainstExtendedPrecision) {
  for (double k : {1.0, 7.0, 0.3, 250.0}) {
    for (double L = 1e-12; L < 1e-1; L *= 3.7) {
      const double ref = free_ref(k, L);
      EXPECT_NEAR(interval_error_sq_free_end(Frequency(k), L) / ref, 1.0, 1e-13) << "k=" << k << " L=" << L;
    }
  }
}

TEST(SmallArgument, PinnedSeriesLeadingTerm) {
  // L^3/12 (1 - 2u^2/15 + ...) for u = pi k L <= 1e-3
  for (double k : {1.0, 10.0}) {
    const double L = 1e-3 / (pi * k);
    const double u = pi * k * L;
    const double series = L * L * L / 12.0 * (1.0 - 2.0 * u * u / 15.0);
    EXPECT_NEAR(interval_error_sq_pinned(Frequency(k), L) / series, 1.0, 1e-10);
  }
}

TEST(SmallArgument, NearSwitchoverIsSmooth) {
  // both sides of the series switch agree with the 50-digit reference
  for (double u : {0.4999999, 0.5, 0.5000001}) {
    const double L = u / pi;
    EXPECT_NEAR(interval_error_sq_pinned(Frequency(1), L) / pinned_ref(1, L), 1.0, 1e-14);
    EXPECT_NEAR(interval_error_sq_free_end(Frequency(1), L / 2) / free_ref(1, L / 2), 1.0, 1e-14);
  }
}

TEST(InitialError, Values) {
  for (int k : {1, 2, 6, 100}) {
    EXPECT_NEAR(initial_error(Frequency(k), SpaceKind::H10).value(), 1.0 / (two_pi * k), 1e-15);
    EXPECT_NEAR(initial_error(Frequency(k), SpaceKind::H1).value(), std::sqrt(2.0) / (two_pi * k), 1e-15);
  }
  EXPECT_NEAR(initial_error(Frequency(6), SpaceKind::H1).value(), std::sqrt(2.0) / (12.0 * pi), 1e-17);
  EXPECT_TRUE(initial_error(Frequency(1.5), SpaceKind::H1).is_infinite());
  EXPECT_FALSE(initial_error(Frequency(1.5), SpaceKind::H10).is_infinite());
}

TEST(RadiusH10, UselessNodes) {
  const auto ns = equidistant_nodes(5, SpaceKind::H10, false);
  EXPECT_NEAR(radius_h10(Frequency(6), ns), 1.0 / (12 * pi), 1e-15);
  EXPECT_NEAR(radius_h10(Frequency(6), ns), 2.652582e-2, 5e-9);
}

TEST(RadiusH10, K290With754Intervals) {
  EXPECT_NEAR(radius_h10(Frequency(290), equidistant_nodes(753, SpaceKind::H10, false)) / 3.47616e-4, 1.0, 1e-5);
}

TEST(RadiusH10, QuarterNodes) {
  const auto ns = make_nodeset({0.25, 0.5, 0.75}, SpaceKind::H10);
  EXPECT_NEAR(radius_h10(Frequency(1), ns), std::sqrt(1.0 - 8.0 / (pi * pi)) / two_pi, 1e-15);
  EXPECT_NEAR(general::radius_general(oscillatory_density(Frequency(1)), ns).radius, radius_h10(Frequency(1), ns), 1e-12);
}

TEST(RadiusH1, Examples) {
  const auto ns = make_nodeset({0.0, 0.5, 1.0}, SpaceKind::H1);
  const double want = std::sqrt(1.0 - 4.0 / (pi * pi)) / two_pi;
  EXPECT_NEAR(radius_h1(Frequency(1), ns), want, 1e-15);
  const auto single = make_nodeset({0.5}, SpaceKind::H1);
  EXPECT_NEAR(radius_h1(Frequency(2), single), std::sqrt(2.0 * interval_error_sq_free_end(Frequency(2), 0.5)), 1e-16);
  EXPECT_NEAR(general::radius_general(oscillatory_density(Frequency(2)), single).radius, radius_h1(Frequency(2), single),
              1e-12);
}

TEST(RadiusH1, ReducesToH10WithEndpointNodes) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> inner(1 + i % 6);
    for (auto& v : inner) v = u(gen);
    auto with = inner;
    with.push_back(0.0);
    with.push_back(1.0);
    const Frequency k(0.5 + 10.0 * u(gen));
    EXPECT_NEAR(radius_h1(k, make_nodeset(with, SpaceKind::H1)), radius_h10(k, make_nodeset(inner, SpaceKind::H10)),
                1e-15);
  }
}

TEST(Radius, WrongSpaceOrNoNodes) {
  EXPECT_THROW((void)radius_h10(Frequency(1), make_nodeset({0.5}, SpaceKind::H1)), Error);
  EXPECT_THROW((void)radius_h1(Frequency(1), make_nodeset({0.5}, SpaceKind::H10)), Error);
  EXPECT_THROW((void)radius_h1(Frequency(1), NodeSet({}, SpaceKind::H1)), Error);
  EXPECT_TRUE(radius(Frequency(1.5), NodeSet({}, SpaceKind::H1)).is_infinite());
  EXPECT_NEAR(radius(Frequency(2), NodeSet({}, SpaceKind::H1)).value(), std::sqrt(2.0) / (two_pi * 2), 1e-16);
  EXPECT_NEAR(radius(Frequency(2), NodeSet({}, SpaceKind::H10)).value(), 1.0 / (two_pi * 2), 1e-16);
}

TEST(Radius, SignSymmetry) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(1 + i % 9);
    for (auto& v : x) v = u(gen);
    const double k = 0.1 + 20.0 * u(gen);
    for (auto space : {SpaceKind::H10, SpaceKind::H1}) {
      const auto ns = make_nodeset(x, space);
      EXPECT_EQ(radius(Frequency(k), ns).value(), radius(Frequency(-k), ns).value());
    }
  }
}

TEST(PinnedError, TranslationInvariance) {
  const auto rho = oscillatory_density(Frequency(4.3));
  const double L = 0.23;
  for (double a : {0.0, 0.1, 0.37, 0.77})
    EXPECT_NEAR(general::interval_initial_error(rho, a, a + L, IntervalErrorKind::InteriorH10).error_sq,
                interval_error_sq_pinned(Frequency(4.3), L), 1e-13);
}

TEST(Radius, MonotoneUnderNodeInsertion) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> x(1 + i % 7);
    for (auto& v : x) v = u(gen);
    auto more = x;
    more.push_back(u(gen));
    const Frequency k(0.2 + 15.0 * u(gen));
    for (auto space : {SpaceKind::H10, SpaceKind::H1}) {
      const double r0 = radius(k, make_nodeset(x, space)).value();
      const double r1 = radius(k, make_nodeset(more, space)).value();
      EXPECT_LE(r1, r0 + 1e-12);
    }
  }
}

TEST(Radius, BoundedByInitialErrorWithEqualityIffAllPhasesVanish) {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x(1 + i % 5);
    for (auto& v : x) v = u(gen);
    const Frequency k(0.2 + 9.0 * u(gen));
    EXPECT_LE(radius_h10(k, make_nodeset(x, SpaceKind::H10)), initial_error(k, SpaceKind::H10).value() + 1e-15);
  }
  // sin(pi k L_j) = 0 for all j: k = 6 and lengths in multiples of 1/6
  const auto ns = make_nodeset({1.0 / 6, 0.5}, SpaceKind::H10);
  EXPECT_NEAR(radius_h10(Frequency(6), ns), 1.0 / (12 * pi), 1e-15);
}

TEST(Radius, OneShotAgreesWhenNotTiny) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<double> x(1 + i % 10);
    for (auto& v : x) v = u(gen);
    const Frequency k(0.2 + 20.0 * u(gen));
    const auto ns = make_nodeset(x, SpaceKind::H10);
    const double r = radius_h10(k, ns);
    if (r < 1e-3 * initial_error(k, SpaceKind::H10).value()) continue;
    ++checked;
    EXPECT_NEAR(radius_h10_one_shot(k, ns) / r, 1.0, 1e-12);
    const auto h1 = make_nodeset(x, SpaceKind::H1);
    EXPECT_NEAR(radius_h1_one_shot(k, h1) / radius_h1(k, h1), 1.0, 1e-12);
  }
  EXPECT_GT(checked, 100);
}

TEST(Equidistant, AgreesWithRadius) {
  for (int m : {2, 5, 17, 100})
    for (double k : {0.7, 3.0, 12.5}) {
      EXPECT_NEAR(equidistant_error_h10(Frequency(k), m),
                  radius_h10(Frequency(k), equidistant_nodes(m - 1, SpaceKind::H10, false)), 1e-14);
      EXPECT_NEAR(equidistant_error_h1(Frequency(k), m), radius_h1(Frequency(k), equidistant_nodes(m, SpaceKind::H1, true)),
                  1e-14);
    }
  EXPECT_NEAR(equidistant_error_h10(Frequency(3.0), 1), initial_error(Frequency(3.0), SpaceKind::H10).value(), 1e-16);
}

TEST(Equidistant, Examples) {
  EXPECT_NEAR(equidistant_error_h10(Frequency(194), 485) / 5.36217e-4, 1.0, 3e-5);
  EXPECT_NEAR(equidistant_error_h10(Frequency(6), 6), 1.0 / (12 * pi), 1e-16);
  EXPECT_NEAR(equidistant_error_h10(Frequency(1), 2), std::sqrt(1.0 - 4.0 / (pi * pi)) / two_pi, 1e-16);
  for (int k : {1, 3, 9}) EXPECT_NEAR(equidistant_error_h1(Frequency(k), k), 1.0 / (two_pi * k), 1e-16);
  EXPECT_NEAR(equidistant_error_h1(Frequency(1), 2), std::sqrt(1.0 - 4.0 / (pi * pi)) / two_pi, 1e-16);
  // k = 72 with 144 intervals
  EXPECT_NEAR(equidistant_error_h10(Frequency(72), 144), 1.704677e-3, 5e-9);
}

TEST(Equidistant, InverseNBound) {
  std::mt19937_64 gen(37);
  std::uniform_int_distribution<int> kd(1, 500), nd(1, 10000);
  for (int i = 0; i < 2000; ++i) {
    const int k = kd(gen) * (i % 2 ? 1 : -1);
    const int n = nd(gen);
    EXPECT_LE(equidistant_error_h1(Frequency(k), n), 1.0 / (2.0 * std::sqrt(3.0) * n));
  }
}

TEST(Certificate, ValueAtHalfWithoutNodes) {
  const auto c = worst_case_certificate(Frequency(1), NodeSet({}, SpaceKind::H10));
  const complex v = c(0.5);
  EXPECT_NEAR(v.real(), -1.0 / pi, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  // f*(t) = (e^{2 pi i k t} - 1)/(2 pi |k|)
  for (double t : {0.1, 0.33, 0.9}) {
    const complex want = (std::polar(1.0, two_pi * t) - 1.0) / two_pi;
    EXPECT_NEAR(std::abs(c(t) - want), 0.0, 1e-15);
  }
}

TEST(Certificate, CoefficientsReproduceValues) {
  const Frequency k(3.3);
  for (auto space : {SpaceKind::H10, SpaceKind::H1}) {
    const auto ns = make_nodeset({0.1, 0.35, 0.72}, space);
    const auto c = worst_case_certificate(k, ns);
    for (const auto& p : c.pieces()) {
      const auto& f = std::get<AnalyticForm>(p.form);
      for (double s : {0.1, 0.5, 0.9}) {
        const double t = p.a + s * (p.b - p.a);
        const complex via = f.exp_coef * std::polar(1.0, two_pi * k.value() * t) + f.linear * t + f.constant;
        EXPECT_NEAR(std::abs(via - p.value(t)), 0.0, 1e-12);
      }
    }
  }
}

TEST(Certificate, FreeEndDerivativeVanishes) {
  const auto c = worst_case_certificate(Frequency(2.5), make_nodeset({0.3, 0.6}, SpaceKind::H1));
  EXPECT_LT(std::abs(c.derivative(0.0)), 1e-15);
  EXPECT_LT(std::abs(c.derivative(1.0)), 1e-15);
}

TEST(Certificate, NonIntegerH1WithoutNodesIsDegenerate) {
  EXPECT_THROW((void)worst_case_certificate(Frequency(1.5), NodeSet({}, SpaceKind::H1)), Error);
}

TEST(Asymptotics, FixedK) {
  const std::vector<double> ns{1e4};
  const auto rows = asymptotic_scan(ScanMode::FixedK, 1.0, ns);
  EXPECT_LE(std::fabs(rows[0].normalized - rows[0].limit), 1e-4 * rows[0].limit);
}

TEST(Asymptotics, FixedN) {
  const std::vector<double> ks{1e6};
  const auto rows = asymptotic_scan(ScanMode::FixedN, 5.0, ks);
  EXPECT_LE(std::fabs(rows[0].normalized - rows[0].limit), 1e-8);
}

TEST(Asymptotics, MonotoneForLargeN) {
  std::vector<double> ns;
  for (int n = 1; n <= 300; ++n) ns.push_back(n);
  for (double k : {3.0, 6.5, 10.0}) {
    const auto rows = asymptotic_scan(ScanMode::FixedK, k, ns);
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i - 1].parameter >= std::ceil(k)) {
        EXPECT_LT(rows[i].error, rows[i - 1].error);
      }
  }
  EXPECT_THROW((void)asymptotic_scan(ScanMode::FixedK, 1.0, {}), Error);
}
