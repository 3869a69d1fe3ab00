// SPDX-License-Identifier: MIT
#pragma once

// Node placement for rho_k: regime classification, the endpoint offset x*
// for H1, and a best-effort optimizer for the regime where equidistant nodes
// are not known to be optimal.
//
// The optimizer minimizes G(L) = sum_j g_j(L_j) over the simplex, where g_j is
// the per-interval squared error scaled by 4 pi^2 k^2 (pinned or free end
// according to the position of the interval). In H10 this is the same as
// maximizing sum_j sin^2(pi k L_j) / L_j.

#include <oscirad/core.hpp>
#include <oscirad/detail/series.hpp>
#include <oscirad/oracle.hpp>
#include <oscirad/oscillatory.hpp>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oscirad::optimal {

// ----------------------------------------------------------------------------
// Critical points of f(x) = sin^2(pi k x) / x
// ----------------------------------------------------------------------------

struct CriticalPoints {
  double t0_star;    ///< first positive root of tan t = 2t
  double x0_star;    ///< t0_star / (pi |k|), or 1 when that exceeds 1
  double threshold;  ///< 1 / x0_star
};

/// t0* in (pi/3, pi/2), bisected on 2t cos t - sin t.
[[nodiscard]] inline double t0_star() {
  static const double t = oracle::bisect([](double s) { return 2.0 * s * std::cos(s) - std::sin(s); }, pi / 3.0,
                                         pi / 2.0, 1e-15);
  return t;
}

[[nodiscard]] inline CriticalPoints critical_points(const Frequency& k) {
  const double t0 = t0_star();
  const double x0 = std::min(1.0, t0 / (pi * k.abs()));
  return {t0, x0, 1.0 / x0};
}

/// sin^2(pi k x)/x, continued by 0 at the origin.
[[nodiscard]] inline double objective_f(const Frequency& k, double x) {
  if (!(x >= 0.0) || x > 1.0) throw Error(Errc::OutOfRange, "objective_f needs 0 <= x <= 1");
  if (x < 1e-12) return 0.0;
  const double s = std::sin(pi * k.abs() * x);
  return s * s / x;
}

/// f'(x) = pi^2 k^2 sinc(u) (2 cos u - sinc(u)), u = pi k x; f'(0) = pi^2 k^2.
[[nodiscard]] inline double objective_f_derivative(const Frequency& k, double x) {
  const double u = pi * k.abs() * x;
  const double sc = detail::sinc(u);
  return pi * pi * k.abs() * k.abs() * sc * (2.0 * std::cos(u) - sc);
}

enum class Regime { EquidistantOptimal, Unknown };

[[nodiscard]] constexpr std::string_view to_string(Regime r) noexcept {
  return r == Regime::EquidistantOptimal ? "equidistant-optimal" : "unknown";
}

/// H10: m is the interval count, equidistant is optimal iff m >= 1/x0*.
/// H1: m is the node count, the x* construction is optimal iff m - 1 >= 1/x0*.
[[nodiscard]] inline Regime regime(const Frequency& k, long long m, SpaceKind space) {
  if (m < 1) throw Error(Errc::InvalidArgument, "count must be positive");
  const double thr = critical_points(k).threshold;
  const double lhs = space == SpaceKind::H10 ? static_cast<double>(m) : static_cast<double>(m - 1);
  return lhs >= thr ? Regime::EquidistantOptimal : Regime::Unknown;
}

// ----------------------------------------------------------------------------
// Endpoint offset x* (H1)
// ----------------------------------------------------------------------------

/// S(x) = 2x - 2 sin(2 pi k x)/(pi k) - ((n-1)/(pi^2 k^2)) f((1-2x)/(n-1)).
[[nodiscard]] inline double endpoint_S(const Frequency& k, long long n, double x) {
  const double ak = k.abs();
  const double y = (1.0 - 2.0 * x) / static_cast<double>(n - 1);
  // 2x - 2 sin(v)/(pi k) with v = 2 pi k x, as 2 (v - sin v)/(pi k) - 2x
  const double end = 2.0 * detail::u_minus_sin(2.0 * pi * ak * x) / (pi * ak) - 2.0 * x;
  return end - static_cast<double>(n - 1) / (pi * pi * ak * ak) * objective_f(k, y);
}

/// S'(x) = 2 - 4 cos(2 pi k x) + (2/(pi^2 k^2)) f'(y).
[[nodiscard]] inline double endpoint_S_derivative(const Frequency& k, long long n, double x) {
  const double ak = k.abs();
  const double y = (1.0 - 2.0 * x) / static_cast<double>(n - 1);
  const double s = std::sin(pi * ak * x);
  return -2.0 + 8.0 * s * s + 2.0 / (pi * pi * ak * ak) * objective_f_derivative(k, y);
}

struct EndpointOffset {
  double x_star;
  double S_value;
  double S_derivative_residual;
  double k;
  long long n;
};

/// Unique root of S' on (0, min(1/2, 1/(6|k|))) for n nodes with n - 1 >= 1/x0*.
[[nodiscard]] inline EndpointOffset solve_x_star(const Frequency& k, long long n) {
  if (n < 2 || regime(k, n, SpaceKind::H1) != Regime::EquidistantOptimal)
    throw Error(Errc::RegimeViolation, "x* needs n - 1 >= 1/x0*");
  const double hi = std::min(0.5, 1.0 / (6.0 * k.abs()));
  auto dS = [&](double x) { return endpoint_S_derivative(k, n, x); };
  if (!(dS(0.0) < 0.0) || !(dS(hi) > 0.0)) throw Error(Errc::RegimeViolation, "S' does not change sign on the bracket");
  const double x = oracle::bisect(dS, 0.0, hi, 1e-15);
  return {x, endpoint_S(k, n, x), std::fabs(dS(x)), k.value(), n};
}

// ----------------------------------------------------------------------------
// Optimizer
// ----------------------------------------------------------------------------

struct OptimizerConfig {
  std::uint64_t seed = 42;
  int starts = 32;
  double grid = 1.0 / 2000.0;
  int max_distinct = 3;
  double tol = 1e-12;
  int max_iters = 10000;
};

enum class OptimalityStatus { ProvenEquidistant, LocalOptimum, GridCertified };

[[nodiscard]] constexpr std::string_view to_string(OptimalityStatus s) noexcept {
  switch (s) {
    case OptimalityStatus::ProvenEquidistant: return "proven-equidistant";
    case OptimalityStatus::LocalOptimum: return "local-optimum";
    case OptimalityStatus::GridCertified: return "grid-certified";
  }
  return "?";
}

struct OptimizationResult {
  Partition partition;
  double best_radius = 0.0;
  double equidistant_radius = 0.0;
  std::string strategy;
  long long iterations = 0;
  long long evaluations = 0;
  OptimalityStatus status = OptimalityStatus::LocalOptimum;

  [[nodiscard]] NodeSet nodes(SpaceKind space) const { return nodes_from_lengths(partition.lengths, space); }
};

namespace detail_opt {

/// Scaled per-interval objective: 4 pi^2 k^2 times the squared error.
struct Objective {
  double ak;
  std::vector<IntervalErrorKind> kinds;
  mutable long long evaluations = 0;

  [[nodiscard]] double g(double L, IntervalErrorKind kind) const {
    if (L <= 0.0) return 0.0;
    if (kind == IntervalErrorKind::InteriorH10) return L * detail::one_minus_sinc_sq(pi * ak * L);
    return detail::u_minus_sin(2.0 * pi * ak * L) / (pi * ak);
  }

  [[nodiscard]] double dg(double L, IntervalErrorKind kind) const {
    const double u = pi * ak * std::max(L, 0.0);
    if (kind == IntervalErrorKind::InteriorH10) {
      const double sc = detail::sinc(u);
      return 1.0 - sc * (2.0 * std::cos(u) - sc);
    }
    const double s = std::sin(u);
    return 4.0 * s * s;
  }

  [[nodiscard]] double operator()(std::span<const double> L) const {
    ++evaluations;
    double s = 0.0;
    for (std::size_t j = 0; j < L.size(); ++j) s += g(L[j], kinds[j]);
    return s;
  }

  void gradient(std::span<const double> L, std::span<double> out) const {
    for (std::size_t j = 0; j < L.size(); ++j) out[j] = dg(L[j], kinds[j]);
  }
};

/// Euclidean projection onto {x >= 0, sum x = 1}.
inline void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    const double t = (cum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  for (auto& x : v) x = std::max(x - theta, 0.0);
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= s;
}

/// Minimum of h on [lo, hi]: grid scan followed by Brent refinement around
/// the best grid point.
template <class H>
std::pair<double, double> minimize_1d(H&& h, double lo, double hi, int grid) {
  double best_x = lo, best_v = h(lo);
  for (int i = 1; i <= grid; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid;
    const double v = h(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  const double step = (hi - lo) / grid;
  const double a = std::max(lo, best_x - step), b = std::min(hi, best_x + step);
  if (b > a) {
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::brent_find_minima(h, a, b, std::numeric_limits<double>::digits, iters);
    if (r.second < best_v) return {r.first, r.second};
  }
  return {best_x, best_v};
}

struct Candidate {
  std::vector<double> L;
  double value;
  std::string strategy;
};

inline int distinct_lengths(std::vector<double> L) {
  std::sort(L.begin(), L.end());
  int count = 0;
  for (std::size_t j = 0; j < L.size(); ++j)
    if (j == 0 || L[j] - L[j - 1] > 1e-9) ++count;
  return count;
}

/// Canonical ordering: H10 lengths ascending; H1 keeps the two end lengths
/// in place and sorts the interior.
inline std::vector<double> canonical(std::vector<double> L, SpaceKind space) {
  if (space == SpaceKind::H10)
    std::sort(L.begin(), L.end());
  else if (L.size() > 2)
    std::sort(L.begin() + 1, L.end() - 1);
  return L;
}

inline bool realizable(const std::vector<double>& L, SpaceKind space) {
  for (double x : L)
    if (!(x >= 0.0)) return false;
  try {
    (void)nodes_from_lengths(L, space);
  } catch (const Error&) {
    return false;
  }
  return true;
}

class Search {
 public:
  Search(const Frequency& k, int m, SpaceKind space, const OptimizerConfig& cfg)
      : k_(k), m_(m), space_(space), cfg_(cfg), obj_{k.abs(), {}} {
    obj_.kinds.assign(static_cast<std::size_t>(m), IntervalErrorKind::InteriorH10);
    if (space == SpaceKind::H1) {
      obj_.kinds.front() = IntervalErrorKind::LeftFree;
      obj_.kinds.back() = IntervalErrorKind::RightFree;
    }
  }

  void offer(std::vector<double> L, std::string_view strategy) {
    const double s = std::accumulate(L.begin(), L.end(), 0.0);
    for (auto& x : L) x /= s;
    L = canonical(std::move(L), space_);
    if (!realizable(L, space_)) return;
    const double v = obj_(L);
    const double tie = 1e-13 / (pi * pi * obj_.ak * obj_.ak);
    if (!best_ || v < best_->value - tie) {
      best_ = Candidate{std::move(L), v, std::string(strategy)};
      return;
    }
    if (v > best_->value + tie) return;
    // tie: fewer distinct lengths, then lexicographically smaller
    const int dn = distinct_lengths(L), db = distinct_lengths(best_->L);
    if (dn < db || (dn == db && L < best_->L)) best_ = Candidate{std::move(L), std::min(v, best_->value), std::string(strategy)};
  }

  [[nodiscard]] const Candidate& best() const { return *best_; }
  [[nodiscard]] const Objective& objective() const { return obj_; }
  [[nodiscard]] long long iterations() const { return iterations_; }

  std::vector<std::vector<double>> seeds;

  void equidistant() {
    offer(std::vector<double>(static_cast<std::size_t>(m_), 1.0 / m_), "equidistant");
    seeds.push_back(best().L);
    if (space_ == SpaceKind::H1 && m_ >= 3) {
      // nodes j/(m-2) including both endpoints: zero-length end pieces
      std::vector<double> L(static_cast<std::size_t>(m_), 1.0 / (m_ - 2));
      L.front() = L.back() = 0.0;
      offer(L, "equidistant");
      seeds.push_back(std::move(L));
    }
  }

  /// Stationary points use at most a few distinct lengths. H10: p pieces of
  /// length a and m - p of length (1 - p a)/(m - p); then three lengths with
  /// small multiplicities. H1: symmetric free ends e with an equidistant
  /// interior, then a two-length interior.
  void kkt() {
    const IntervalErrorKind P = IntervalErrorKind::InteriorH10;
    if (space_ == SpaceKind::H10) {
      for (int p = 1; p < m_; ++p) {
        auto h = [&](double a) {
          const double b = (1.0 - p * a) / (m_ - p);
          ++obj_.evaluations;
          return p * obj_.g(a, P) + (m_ - p) * obj_.g(b, P);
        };
        const int grid = std::max(200, static_cast<int>(40.0 * obj_.ak / p));
        const auto [a, v] = minimize_1d(h, 0.0, 1.0 / p, grid);
        std::vector<double> L(static_cast<std::size_t>(m_), (1.0 - p * a) / (m_ - p));
        std::fill(L.begin(), L.begin() + p, a);
        offer(L, "kkt-2");
        seeds.push_back(std::move(L));
      }
      if (cfg_.max_distinct >= 3) kkt3();
    } else if (m_ >= 3) {
      const int q = m_ - 2;
      auto h = [&](double e) {
        ++obj_.evaluations;
        return obj_.g(e, IntervalErrorKind::LeftFree) + obj_.g(e, IntervalErrorKind::RightFree) +
               q * obj_.g((1.0 - 2.0 * e) / q, P);
      };
      const int grid = std::max(200, static_cast<int>(40.0 * obj_.ak));
      const auto [e, v] = minimize_1d(h, 0.0, 0.5, grid);
      std::vector<double> L(static_cast<std::size_t>(m_), (1.0 - 2.0 * e) / q);
      L.front() = L.back() = e;
      offer(L, "kkt-2");
      seeds.push_back(L);
      if (cfg_.max_distinct >= 3 && q >= 2) {
        const double inner = 1.0 - 2.0 * e;
        for (int p = 1; p < q; ++p) {
          auto hi = [&](double a) {
            const double b = (inner - p * a) / (q - p);
            ++obj_.evaluations;
            return p * obj_.g(a, P) + (q - p) * obj_.g(b, P);
          };
          const int g2 = std::max(200, static_cast<int>(40.0 * obj_.ak * inner / p));
          const auto [a, w] = minimize_1d(hi, 0.0, inner / p, g2);
          std::vector<double> M(static_cast<std::size_t>(m_), (inner - p * a) / (q - p));
          M.front() = M.back() = e;
          std::fill(M.begin() + 1, M.begin() + 1 + p, a);
          offer(M, "kkt-3");
          seeds.push_back(std::move(M));
        }
      }
    } else {
      auto h = [&](double e) {
        ++obj_.evaluations;
        return obj_.g(e, IntervalErrorKind::LeftFree) + obj_.g(1.0 - e, IntervalErrorKind::RightFree);
      };
      const auto [e, v] = minimize_1d(h, 0.0, 1.0, std::max(200, static_cast<int>(40.0 * obj_.ak)));
      offer({e, 1.0 - e}, "kkt-2");
      seeds.push_back(best().L);
    }
  }

  /// p1 pieces of length a, p2 of length b, the rest equal; alternating 1-D
  /// solves started at every hump of f admissible for a.
  void kkt3() {
    const IntervalErrorKind P = IntervalErrorKind::InteriorH10;
    const double hump = t0_star() / pi;
    for (int p1 = 1; p1 <= 3; ++p1) {
      for (int p2 = 1; p2 <= 3; ++p2) {
        const int q = m_ - p1 - p2;
        if (q < 1) continue;
        auto total = [&](double a, double b) {
          const double c = (1.0 - p1 * a - p2 * b) / q;
          ++obj_.evaluations;
          if (a < 0.0 || b < 0.0 || c < 0.0) return std::numeric_limits<double>::infinity();
          return p1 * obj_.g(a, P) + p2 * obj_.g(b, P) + q * obj_.g(c, P);
        };
        for (int j = 0;; ++j) {
          double a = (j + hump) / obj_.ak;
          if (p1 * a >= 1.0) break;
          double b = (1.0 - p1 * a) / (m_ - p1);
          double v = total(a, b);
          for (int sweep = 0; sweep < 3; ++sweep) {
            const double bmax = (1.0 - p1 * a) / p2;
            const auto rb = minimize_1d([&](double x) { return total(a, x); }, 0.0, bmax, 100);
            b = rb.first;
            const double amax = (1.0 - p2 * b) / p1;
            const double w = 0.5 / obj_.ak;
            const auto ra = minimize_1d([&](double x) { return total(x, b); }, std::max(0.0, a - w),
                                        std::min(amax, a + w), 20);
            a = ra.first;
            if (!(ra.second < v - 1e-16 * std::fabs(v))) {
              v = std::min(v, ra.second);
              break;
            }
            v = ra.second;
          }
          std::vector<double> L(static_cast<std::size_t>(m_), (1.0 - p1 * a - p2 * b) / q);
          std::fill(L.begin(), L.begin() + p1, a);
          std::fill(L.begin() + p1, L.begin() + p1 + p2, b);
          offer(L, "kkt-3");
        }
      }
    }
  }

  /// Projected gradient with Armijo backtracking from x.
  std::vector<double> descend(std::vector<double> x) {
    project_simplex(x);
    std::vector<double> grad(x.size()), trial(x.size());
    double fx = obj_(x);
    double t = 1.0 / (pi * pi * obj_.ak * obj_.ak);
    for (int it = 0; it < cfg_.max_iters; ++it) {
      ++iterations_;
      obj_.gradient(x, grad);
      t *= 2.0;
      bool accepted = false;
      double ft = fx;
      for (int bt = 0; bt < 60; ++bt) {
        for (std::size_t j = 0; j < x.size(); ++j) trial[j] = x[j] - t * grad[j];
        project_simplex(trial);
        double dec = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) dec += grad[j] * (trial[j] - x[j]);
        ft = obj_(trial);
        if (ft <= fx + 1e-4 * dec) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) break;
      const double improvement = fx - ft;
      std::swap(x, trial);
      fx = ft;
      if (improvement <= cfg_.tol * std::fabs(fx)) break;
    }
    return x;
  }

  void multistart() {
    std::mt19937_64 gen(cfg_.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    // deterministic order: best candidate so far first, then the seeds
    std::vector<std::vector<double>> bases;
    bases.push_back(best().L);
    for (const auto& s : seeds) bases.push_back(s);
    for (int s = 0; s < cfg_.starts; ++s) {
      std::vector<double> x = bases[static_cast<std::size_t>(s) % bases.size()];
      if (s > 0) {
        const double sigma = 0.02 * (1 + s % 4);
        for (auto& v : x) v = std::max(v, 1e-3 / m_) * std::exp(sigma * noise(gen));
      }
      offer(descend(std::move(x)), "projected-gradient");
    }
  }

  /// Exhaustive lattice check for tiny m. Returns true when the lattice
  /// maximum does not beat the incumbent.
  bool grid_certify() {
    if (m_ > 5) return false;
    try {
      auto neg = [&](std::span<const double> L) { return -obj_(L); };
      const auto gp = oracle::simplex_grid_search(neg, m_, cfg_.grid);
      if (-gp.value >= best().value) return true;
      offer(descend(gp.point), "grid");
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
    }
    return false;
  }

 private:
  Frequency k_;
  int m_;
  SpaceKind space_;
  OptimizerConfig cfg_;
  Objective obj_;
  std::optional<Candidate> best_;
  long long iterations_ = 0;
};

inline Partition to_partition(const std::vector<double>& L, SpaceKind space) {
  Partition p;
  p.lengths = L;
  p.roles.assign(L.size(), LengthRole::Interior);
  if (space == SpaceKind::H1) {
    p.roles.front() = LengthRole::LeftEnd;
    p.roles.back() = LengthRole::RightEnd;
  }
  return p;
}

inline double equidistant_baseline(const Frequency& k, int m, SpaceKind space) {
  if (space == SpaceKind::H10) return oscillatory::equidistant_error_h10(k, m);
  if (m >= 3) return oscillatory::equidistant_error_h1(k, m - 2);
  return std::sqrt(oscillatory::radius_sq(k, to_partition({0.5, 0.5}, space)));
}

}  // namespace detail_opt

/// Best-found partition with m intervals. H1 counts the two end pieces, so
/// m = nodes + 1. The equidistant baseline is H10: L_j = 1/m; H1: nodes
/// j/(m-2) including both endpoints (the single node 1/2 when m = 2).
[[nodiscard]] inline OptimizationResult small_n_optimizer(const Frequency& k, int m, SpaceKind space,
                                                          const OptimizerConfig& cfg = {}) {
  if (m < 1 || (space == SpaceKind::H1 && m < 2)) throw Error(Errc::InvalidArgument, "too few intervals");
  detail_opt::Search search(k, m, space, cfg);
  search.equidistant();
  if (m > 1) {
    search.kkt();
    search.multistart();
  }
  const bool certified = m > 1 && search.grid_certify();

  OptimizationResult r;
  r.partition = detail_opt::to_partition(search.best().L, space);
  r.best_radius = std::sqrt(oscillatory::radius_sq(k, r.partition));
  r.equidistant_radius = detail_opt::equidistant_baseline(k, m, space);
  r.strategy = search.best().strategy;
  r.iterations = search.iterations();
  r.evaluations = search.objective().evaluations;
  r.status = (certified || m == 1) ? OptimalityStatus::GridCertified : OptimalityStatus::LocalOptimum;
  return r;
}

/// H10: budget = interior nodes, equidistant when n + 1 >= 1/x0*.
/// H1: budget = nodes, x_1 = x*, x_n = 1 - x* with an equidistant interior
/// when n - 1 >= 1/x0*. Otherwise the small-n optimizer.
[[nodiscard]] inline OptimizationResult optimal_nodes(const Frequency& k, int budget, SpaceKind space,
                                                      const OptimizerConfig& cfg = {}) {
  if (budget < 1) throw Error(Errc::InvalidArgument, "budget must be positive");
  if (space == SpaceKind::H10) {
    const int m = budget + 1;
    if (regime(k, m, space) == Regime::Unknown) return small_n_optimizer(k, m, space, cfg);
    OptimizationResult r;
    r.partition = detail_opt::to_partition(std::vector<double>(static_cast<std::size_t>(m), 1.0 / m), space);
    r.best_radius = r.equidistant_radius = oscillatory::equidistant_error_h10(k, m);
    r.strategy = "equidistant";
    r.status = OptimalityStatus::ProvenEquidistant;
    return r;
  }
  if (budget < 2 || regime(k, budget, space) == Regime::Unknown) return small_n_optimizer(k, budget + 1, space, cfg);
  const auto xs = solve_x_star(k, budget);
  std::vector<double> L(static_cast<std::size_t>(budget) + 1, (1.0 - 2.0 * xs.x_star) / (budget - 1));
  L.front() = L.back() = xs.x_star;
  OptimizationResult r;
  r.partition = detail_opt::to_partition(L, space);
  r.best_radius = std::sqrt(oscillatory::radius_sq(k, r.partition));
  r.equidistant_radius = oscillatory::equidistant_error_h1(k, budget - 1);
  r.strategy = "endpoint-offset";
  r.status = OptimalityStatus::ProvenEquidistant;
  return r;
}

struct ScanPoint {
  long long n;
  double radius;
};

/// Equidistant radii for n = n_min..n_max. H10: n interior nodes j/(n+1).
/// H1: nodes j/n including both endpoints.
[[nodiscard]] inline std::vector<ScanPoint> scan_radius_over_n(const Frequency& k, long long n_min, long long n_max,
                                                               SpaceKind space) {
  if (n_min < 1 || n_max < n_min) throw Error(Errc::InvalidArgument, "scan needs 1 <= n_min <= n_max");
  std::vector<ScanPoint> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long long n = n_min; n <= n_max; ++n)
    out.push_back({n, space == SpaceKind::H10 ? oscillatory::equidistant_error_h10(k, n + 1)
                                              : oscillatory::equidistant_error_h1(k, n)});
  return out;
}

}  // namespace oscirad::optimal
