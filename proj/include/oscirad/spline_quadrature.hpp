// SPDX-License-Identifier: MIT
#pragma once

// The spline algorithm: integrate the piecewise-linear interpolant of the
// samples against rho. In H1 the interpolant is constant on [0, x_1] and
// [x_n, 1]; in H10 it vanishes at 0 and 1.

#include <oscirad/core.hpp>
#include <oscirad/density.hpp>
#include <oscirad/detail/series.hpp>
#include <oscirad/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscirad::spline {

enum class WeightProvenance { ClosedForm, Quadrature };

[[nodiscard]] constexpr std::string_view to_string(WeightProvenance p) noexcept {
  return p == WeightProvenance::ClosedForm ? "closed-form" : "quadrature";
}

struct QuadratureRule {
  NodeSet nodes;
  std::vector<complex> weights;
  SpaceKind space;
  WeightProvenance provenance;

  [[nodiscard]] complex weight_sum() const {
    complex s = 0.0;
    for (const auto& a : weights) s += a;
    return s;
  }
};

/// Closed-form weights for rho_k, integer k, nodes j/n (j = 0..n, H1):
///   a_0 = phi2(-i theta)/n, a_n = phi2(i theta)/n with theta = 2 pi k/n,
///   a_j = sinc^2(pi k/n) e^{-2 pi i k j/n} / n otherwise.
/// These are the usual (n/(4k^2 pi^2))(1 -+ 2 pi i k/n - e^{-+2 pi i k/n}) and
/// (n/(k^2 pi^2)) sin^2(pi k/n) e^{-2 pi i k j/n}, written without cancellation.
[[nodiscard]] inline QuadratureRule spline_weights_equidistant(const Frequency& k, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "spline rule needs n >= 1");
  const long long kk = k.as_integer();
  const double nd = static_cast<double>(n);
  const double theta = 2.0 * pi * static_cast<double>(kk) / nd;
  const complex i(0.0, 1.0);
  std::vector<complex> w(static_cast<std::size_t>(n) + 1);
  const double s = detail::sinc(pi * static_cast<double>(kk) / nd);
  const long long kmod = ((kk % n) + n) % n;
  for (int j = 1; j < n; ++j) {
    // e^{-2 pi i k j / n} with k j reduced mod n for an exact phase argument
    const long long r = (kmod * j) % n;
    w[static_cast<std::size_t>(j)] = s * s / nd * std::polar(1.0, -2.0 * pi * static_cast<double>(r) / nd);
  }
  w.front() = detail::phi2(-i * theta) / nd;
  w.back() = detail::phi2(i * theta) / nd;
  return {equidistant_nodes(n, SpaceKind::H1, true), std::move(w), SpaceKind::H1, WeightProvenance::ClosedForm};
}

namespace detail_spline {

inline std::size_t panels_for(const DensityFunction& rho, double a, double b) {
  const double k = rho.oscillation() ? std::fabs(*rho.oscillation()) : 0.0;
  return 1 + static_cast<std::size_t>(std::ceil(4.0 * k * (b - a)));
}

template <class G>
complex integrate(G&& g, const DensityFunction& rho, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  return oracle::adaptive_integral(std::forward<G>(g), a, b, tol, 1e-14, oracle::default_panel_budget,
                                   panels_for(rho, a, b))
      .value;
}

}  // namespace detail_spline

/// a_j = int_0^1 b_j rho for the piecewise-linear cardinal basis b_j.
[[nodiscard]] inline QuadratureRule spline_weights_general(const DensityFunction& rho, const NodeSet& nodes,
                                                           double tol = 1e-13) {
  const std::size_t n = nodes.size();
  if (n == 0) throw Error(Errc::DegenerateInformation, "spline rule needs at least one node");
  const auto x = nodes.nodes();
  const bool h1 = nodes.space() == SpaceKind::H1;
  std::vector<complex> w(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double left = j > 0 ? x[j - 1] : 0.0;
    const double right = j + 1 < n ? x[j + 1] : 1.0;
    complex a = 0.0;
    if (h1 && j == 0) {
      a += detail_spline::integrate([&](double t) { return rho(t); }, rho, 0.0, x[0], tol);
    } else {
      a += detail_spline::integrate([&](double t) { return (t - left) / (x[j] - left) * rho(t); }, rho, left, x[j],
                                    tol);
    }
    if (h1 && j + 1 == n) {
      a += detail_spline::integrate([&](double t) { return rho(t); }, rho, x[j], 1.0, tol);
    } else {
      a += detail_spline::integrate([&](double t) { return (right - t) / (right - x[j]) * rho(t); }, rho, x[j], right,
                                    tol);
    }
    w[j] = a;
  }
  return {nodes, std::move(w), nodes.space(), WeightProvenance::Quadrature};
}

[[nodiscard]] inline complex apply_rule(const QuadratureRule& rule, std::span<const complex> samples) {
  if (samples.size() != rule.weights.size())
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(rule.weights.size()) + " samples, got " +
                                          std::to_string(samples.size()));
  complex s = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) s += rule.weights[j] * samples[j];
  return s;
}

/// Samples a function at the rule's nodes and applies the rule.
template <class F>
[[nodiscard]] complex apply_rule_to(const QuadratureRule& rule, F&& f) {
  std::vector<complex> v;
  v.reserve(rule.nodes.size());
  for (double x : rule.nodes.nodes()) v.push_back(f(x));
  return apply_rule(rule, v);
}

struct TestFunction {
  std::function<complex(double)> value;
  std::function<complex(double)> derivative;
  std::size_t panels = 64;  ///< initial quadrature panels, raise for fast oscillation
};

struct ErrorBoundReport {
  double max_error = 0.0;
  std::vector<double> errors;     ///< |I_rho(f) - A(f)| per test function
  std::vector<double> seminorms;  ///< ||f'||_2 per test function
};

/// Observed errors of the rule over test functions with ||f'||_2 <= 1 (and
/// f(0) = f(1) = 0 in H10). Functions violating the precondition throw.
[[nodiscard]] inline ErrorBoundReport error_bound_check(const QuadratureRule& rule, const DensityFunction& rho,
                                                        std::span<const TestFunction> tests, double tol = 1e-13) {
  ErrorBoundReport rep;
  for (const auto& f : tests) {
    const std::size_t panels = std::max(f.panels, detail_spline::panels_for(rho, 0.0, 1.0));
    const double semi = std::sqrt(oracle::adaptive_integral([&](double t) { return std::norm(f.derivative(t)); }, 0.0,
                                                            1.0, tol * tol, 1e-13, oracle::default_panel_budget, panels)
                                      .value.real());
    if (semi > 1.0 + 1e-9) throw Error(Errc::InvalidArgument, "test function has seminorm above 1");
    if (rule.space == SpaceKind::H10 && (std::abs(f.value(0.0)) > 1e-12 || std::abs(f.value(1.0)) > 1e-12))
      throw Error(Errc::InvalidArgument, "H10 test function must vanish at 0 and 1");
    const complex I = oracle::adaptive_integral([&](double t) { return f.value(t) * rho(t); }, 0.0, 1.0, tol, 1e-13,
                                                oracle::default_panel_budget, panels)
                          .value;
    const double e = std::abs(I - apply_rule_to(rule, f.value));
    rep.errors.push_back(e);
    rep.seminorms.push_back(semi);
    rep.max_error = std::max(rep.max_error, e);
  }
  return rep;
}

}  // namespace oscirad::spline
