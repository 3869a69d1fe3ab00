// SPDX-License-Identifier: MIT
#pragma once

// Independent numerical ground truth: adaptive Gauss-Kronrod quadrature,
// exhaustive simplex lattice search, central differences and bracketed
// bisection. Nothing in here knows about the oscillatory closed forms.

#include <oscirad/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

namespace oscirad::oracle {

using complex = std::complex<double>;

inline constexpr std::size_t default_panel_budget = std::size_t{1} << 15;

// ----------------------------------------------------------------------------
// Gauss-Kronrod 7/15
// ----------------------------------------------------------------------------

namespace detail {

// Abscissae and weights of the 15-point Kronrod rule and the embedded 7-point
// Gauss rule (QUADPACK qk15). Gauss nodes are xgk[1], xgk[3], xgk[5], xgk[7].
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  complex value;
  double error;
  double floor;  ///< roundoff level of the estimate; refining cannot go below it
  bool operator<(const Panel& o) const noexcept {
    if (error != o.error) return error < o.error;
    return a > o.a;  // deterministic among equal errors: leftmost first
  }
};

template <class F>
Panel gk15(F& g, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<complex, 15> fv;
  fv[7] = complex(g(c));
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    fv[j] = complex(g(c - dx));
    fv[14 - j] = complex(g(c + dx));
  }
  complex kron = wgk[7] * fv[7];
  complex gauss = wg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    kron += wgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) gauss += wg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const complex mean = 0.5 * kron;
  double resasc = wgk[7] * std::abs(fv[7] - mean);
  double resabs = wgk[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resasc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    resabs += wgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
  }
  resasc *= std::fabs(h);
  resabs *= std::fabs(h);
  double err = std::abs((kron - gauss) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50.0 * eps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(floor, err);
  return Panel{a, b, kron * h, err, floor};
}

}  // namespace detail

struct Integral {
  complex value;
  double error;        ///< estimated absolute error
  std::size_t panels;  ///< panels in the final subdivision
};

/// Adaptive integration of a real- or complex-valued g over [a,b].
/// The panel with the largest error estimate is bisected first. Throws
/// QuadratureFailure when the budget is exhausted above tolerance. Stops
/// early once the worst panel is at its roundoff floor, so the returned
/// estimate can exceed a tolerance below machine precision.
/// `initial_panels` pre-splits [a,b] uniformly (useful for oscillatory g).
template <class F>
[[nodiscard]] Integral adaptive_integral(F&& g, double a, double b, double abs_tol, double rel_tol,
                                         std::size_t max_panels = default_panel_budget,
                                         std::size_t initial_panels = 1) {
  if (!(a <= b)) throw Error(Errc::InvalidArgument, "adaptive_integral needs a <= b");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw Error(Errc::InvalidArgument, "adaptive_integral needs positive tolerances");
  if (a == b) return {complex(0.0), 0.0, 0};
  initial_panels = std::clamp<std::size_t>(initial_panels, 1, max_panels);

  std::priority_queue<detail::Panel> queue;
  complex total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i < initial_panels; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / initial_panels;
    const double hi = (i + 1 == initial_panels) ? b : a + (b - a) * static_cast<double>(i + 1) / initial_panels;
    auto p = detail::gk15(g, lo, hi);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }

  auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
  while (total_err > tolerance()) {
    if (queue.top().error <= queue.top().floor) break;
    if (queue.size() >= max_panels)
      throw Error(Errc::QuadratureFailure,
                  "panel budget exhausted (error estimate " + std::to_string(total_err) + ")");
    auto worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw Error(Errc::QuadratureFailure, "panel width reached machine resolution");
    queue.pop();
    auto left = detail::gk15(g, worst.a, mid);
    auto right = detail::gk15(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Re-sum left to right so the result does not depend on refinement history.
  std::vector<detail::Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  complex sum = 0.0;
  double err = 0.0;
  for (const auto& p : panels) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, panels.size()};
}

/// Real-valued convenience wrapper.
template <class F>
[[nodiscard]] double adaptive_integral_real(F&& g, double a, double b, double abs_tol, double rel_tol,
                                            std::size_t max_panels = default_panel_budget,
                                            std::size_t initial_panels = 1) {
  return adaptive_integral(std::forward<F>(g), a, b, abs_tol, rel_tol, max_panels, initial_panels).value.real();
}

// ----------------------------------------------------------------------------
// Simplex lattice search
// ----------------------------------------------------------------------------

struct GridPoint {
  std::vector<double> point;
  double value;
  std::size_t evaluations;
};

/// Number of lattice points {i in N^m : sum i = steps}.
[[nodiscard]] inline double simplex_lattice_size(int m, long long steps) {
  double count = 1.0;
  for (int j = 1; j < m; ++j) count = count * static_cast<double>(steps + j) / j;
  return count;
}

/// Exhaustive maximization over {L : L_j = i_j * resolution, sum L_j = 1}.
/// Ties keep the first point in lexicographic enumeration order.
template <class Objective>
[[nodiscard]] GridPoint simplex_grid_search(Objective&& objective, int m, double resolution,
                                            double max_points = 5e7) {
  if (m < 1) throw Error(Errc::InvalidArgument, "simplex dimension must be positive");
  if (m > 5) throw Error(Errc::BudgetExceeded, "simplex grid search is limited to m <= 5");
  if (!(resolution > 0.0) || resolution > 1.0)
    throw Error(Errc::InvalidArgument, "resolution must lie in (0,1]");
  const long long steps = std::llround(1.0 / resolution);
  if (simplex_lattice_size(m, steps) > max_points)
    throw Error(Errc::BudgetExceeded, "simplex lattice has too many points");

  std::vector<long long> idx(static_cast<std::size_t>(m), 0);
  std::vector<double> point(static_cast<std::size_t>(m));
  GridPoint best{{}, -std::numeric_limits<double>::infinity(), 0};
  const double h = 1.0 / static_cast<double>(steps);

  // Enumerate i_0..i_{m-2} with the last coordinate absorbing the remainder.
  idx[0] = 0;
  std::function<void(int, long long)> recurse = [&](int d, long long remaining) {
    if (d == m - 1) {
      idx[static_cast<std::size_t>(d)] = remaining;
      for (int j = 0; j < m; ++j) point[static_cast<std::size_t>(j)] = static_cast<double>(idx[static_cast<std::size_t>(j)]) * h;
      const double v = objective(std::span<const double>(point));
      ++best.evaluations;
      if (v > best.value) {
        best.value = v;
        best.point = point;
      }
      return;
    }
    for (long long i = 0; i <= remaining; ++i) {
      idx[static_cast<std::size_t>(d)] = i;
      recurse(d + 1, remaining - i);
    }
  };
  recurse(0, steps);
  return best;
}

// ----------------------------------------------------------------------------
// Derivatives and roots
// ----------------------------------------------------------------------------

template <class F>
[[nodiscard]] auto finite_difference(F&& g, double x, double h) {
  return (g(x + h) - g(x - h)) / (2.0 * h);
}

/// Bisection for a sign change of g on [lo, hi]; returns the midpoint of the
/// final bracket, whose width is at most xtol (or machine resolution).
template <class F>
[[nodiscard]] double bisect(F&& g, double lo, double hi, double xtol) {
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0.0) == (ghi < 0.0))
    throw Error(Errc::InvalidArgument, "bisect: no sign change on bracket");
  for (int it = 0; it < 400 && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oscirad::oracle
