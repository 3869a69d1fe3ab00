// SPDX-License-Identifier: MIT
#pragma once

#include <oscirad/error.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

// Piecewise Chebyshev representations used to store R(t) and the worst-case
// profile for an arbitrary density. Each panel holds the coefficients of a
// degree-63 interpolant through 64 Chebyshev-Lobatto points.

namespace oscirad::detail {

using complex = std::complex<double>;

inline constexpr std::size_t cheb_points = 64;

/// Chebyshev series sum c_m T_m(x) on [a,b], x mapped to [-1,1].
struct ChebSeries {
  double a = 0.0, b = 1.0;
  std::vector<complex> c;

  [[nodiscard]] complex operator()(double t) const noexcept {
    const double x = std::clamp((2.0 * t - a - b) / (b - a), -1.0, 1.0);
    // Clenshaw recurrence.
    complex b1 = 0.0, b2 = 0.0;
    for (std::size_t m = c.size(); m-- > 1;) {
      const complex tmp = 2.0 * x * b1 - b2 + c[m];
      b2 = b1;
      b1 = tmp;
    }
    return x * b1 - b2 + c[0];
  }

  /// Integral over [a,b].
  [[nodiscard]] complex integral() const noexcept {
    complex s = 0.0;
    for (std::size_t m = 0; m < c.size(); m += 2) s += c[m] * (2.0 / (1.0 - static_cast<double>(m * m)));
    return s * (0.5 * (b - a));
  }

  /// Antiderivative vanishing at t = a.
  [[nodiscard]] ChebSeries antiderivative() const {
    const std::size_t n = c.size();
    ChebSeries out{a, b, std::vector<complex>(n + 1, 0.0)};
    auto coef = [&](std::size_t m) { return m < n ? c[m] : complex(0.0); };
    const double half = 0.5 * (b - a);
    if (n == 0) return out;
    out.c[1] = (2.0 * coef(0) - coef(2)) * 0.5 * half;
    for (std::size_t m = 2; m <= n; ++m) out.c[m] = (coef(m - 1) - coef(m + 1)) / (2.0 * static_cast<double>(m)) * half;
    complex at_left = 0.0;
    for (std::size_t m = 1; m <= n; ++m) at_left += (m % 2 == 0 ? 1.0 : -1.0) * out.c[m];
    out.c[0] = -at_left;
    return out;
  }

  /// Largest magnitude among the trailing `count` coefficients.
  [[nodiscard]] double tail(std::size_t count) const noexcept {
    double t = 0.0;
    for (std::size_t m = c.size() > count ? c.size() - count : 0; m < c.size(); ++m) t = std::max(t, std::abs(c[m]));
    return t;
  }

  [[nodiscard]] double scale() const noexcept {
    double s = 0.0;
    for (const auto& v : c) s = std::max(s, std::abs(v));
    return s;
  }
};

/// Lobatto point j of n on [a,b], ordered from b down to a as in the DCT.
[[nodiscard]] inline double lobatto_point(std::size_t j, std::size_t n, double a, double b) noexcept {
  const double x = std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(n - 1));
  return 0.5 * (a + b) + 0.5 * (b - a) * x;
}

/// Interpolate sampled values at lobatto_point(j) into Chebyshev coefficients.
[[nodiscard]] inline ChebSeries cheb_from_values(std::span<const complex> v, double a, double b) {
  const std::size_t n = v.size();
  const std::size_t N = n - 1;
  ChebSeries s{a, b, std::vector<complex>(n, 0.0)};
  for (std::size_t m = 0; m < n; ++m) {
    complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = (j == 0 || j == N) ? 0.5 : 1.0;
      acc += w * v[j] * std::cos(std::numbers::pi * static_cast<double>(m * j) / static_cast<double>(N));
    }
    const double w = (m == 0 || m == N) ? 1.0 / static_cast<double>(N) : 2.0 / static_cast<double>(N);
    s.c[m] = acc * w;
  }
  return s;
}

template <class F>
[[nodiscard]] ChebSeries cheb_fit(F& g, double a, double b, std::size_t n = cheb_points) {
  std::vector<complex> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = complex(g(lobatto_point(j, n, a, b)));
  return cheb_from_values(v, a, b);
}

/// Contiguous panels covering [front.a, back.b].
struct PiecewiseCheb {
  std::vector<ChebSeries> panels;

  [[nodiscard]] double a() const noexcept { return panels.front().a; }
  [[nodiscard]] double b() const noexcept { return panels.back().b; }

  [[nodiscard]] const ChebSeries& panel_at(double t) const noexcept {
    auto it = std::upper_bound(panels.begin(), panels.end(), t, [](double x, const ChebSeries& p) { return x < p.b; });
    if (it == panels.end()) return panels.back();
    return *it;
  }

  [[nodiscard]] complex operator()(double t) const noexcept { return panel_at(t)(t); }

  [[nodiscard]] complex integral() const noexcept {
    complex s = 0.0;
    for (const auto& p : panels) s += p.integral();
    return s;
  }

  /// Continuous antiderivative with value 0 at a().
  [[nodiscard]] PiecewiseCheb antiderivative() const {
    PiecewiseCheb out;
    out.panels.reserve(panels.size());
    complex offset = 0.0;
    for (const auto& p : panels) {
      auto q = p.antiderivative();
      q.c[0] += offset;
      offset = q(q.b);
      out.panels.push_back(std::move(q));
    }
    return out;
  }

  /// Apply v -> alpha * (conj? conj(v) : v) + beta coefficientwise.
  [[nodiscard]] PiecewiseCheb affine(complex alpha, complex beta, bool conjugate) const {
    PiecewiseCheb out = *this;
    for (auto& p : out.panels) {
      for (auto& v : p.c) v = alpha * (conjugate ? std::conj(v) : v);
      p.c[0] += beta;
    }
    return out;
  }
};

/// Adaptive panel fit of g on [a,b]: a panel is accepted when its trailing
/// coefficients fall below rel_tol times the global coefficient scale, or
/// below abs_floor (the rounding level of g when it is a difference of
/// larger numbers).
template <class F>
[[nodiscard]] PiecewiseCheb cheb_fit_adaptive(F&& g, double a, double b, double rel_tol, std::size_t max_panels,
                                              std::size_t initial_panels = 1, double abs_floor = 0.0) {
  struct Todo {
    double a, b;
  };
  std::vector<ChebSeries> done;
  std::vector<Todo> stack;
  initial_panels = std::max<std::size_t>(initial_panels, 1);
  for (std::size_t i = initial_panels; i-- > 0;) {
    const double lo = a + (b - a) * static_cast<double>(i) / initial_panels;
    const double hi = (i + 1 == initial_panels) ? b : a + (b - a) * static_cast<double>(i + 1) / initial_panels;
    stack.push_back({lo, hi});
  }
  double global_scale = 0.0;
  while (!stack.empty()) {
    const Todo t = stack.back();
    stack.pop_back();
    ChebSeries s = cheb_fit(g, t.a, t.b);
    global_scale = std::max(global_scale, s.scale());
    const double mid = 0.5 * (t.a + t.b);
    const bool resolved = s.tail(4) <= std::max(rel_tol * std::max(global_scale, 1e-300), abs_floor);
    if (resolved || !(mid > t.a && mid < t.b)) {
      done.push_back(std::move(s));
      continue;
    }
    if (done.size() + stack.size() + 2 > max_panels)
      throw Error(Errc::QuadratureFailure, "Chebyshev panel budget exhausted");
    stack.push_back({mid, t.b});
    stack.push_back({t.a, mid});
  }
  std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  return PiecewiseCheb{std::move(done)};
}

}  // namespace oscirad::detail
