// SPDX-License-Identifier: MIT
#pragma once

// Exact worst-case quantities for the weight rho_k(x) = exp(-2 pi i k x).
//
// All radii are accumulated as left-to-right sums of per-interval squared
// errors. The one-shot "initial error squared minus correction" forms are
// provided separately for cross-checking only.

#include <oscirad/certificate.hpp>
#include <oscirad/core.hpp>
#include <oscirad/detail/series.hpp>

#include <cmath>
#include <span>
#include <vector>

namespace oscirad::oscillatory {

namespace detail {

inline void check_length(double L) {
  if (!(L >= 0.0) || L > 1.0 + 1e-12) throw Error(Errc::OutOfRange, "interval length must lie in [0,1]");
}

}  // namespace detail

/// ||R - c||_2^2 on an interval of length L with both end values pinned:
/// L/(4 pi^2 k^2) * (1 - sinc^2(pi k L)). Independent of the interval position.
[[nodiscard]] inline double interval_error_sq_pinned(const Frequency& k, double L) {
  detail::check_length(L);
  if (L == 0.0) return 0.0;
  const double ak = k.abs();
  return L / (4.0 * pi * pi * ak * ak) * oscirad::detail::one_minus_sinc_sq(pi * ak * L);
}

/// ||R||_2^2 on an end interval with one free end value:
/// (2L - sin(2 pi k L)/(pi k)) / (4 pi^2 k^2). Same for both ends.
[[nodiscard]] inline double interval_error_sq_free_end(const Frequency& k, double L) {
  detail::check_length(L);
  if (L == 0.0) return 0.0;
  const double ak = k.abs();
  return oscirad::detail::u_minus_sin(2.0 * pi * ak * L) / (pi * ak) / (4.0 * pi * pi * ak * ak);
}

[[nodiscard]] inline double interval_error_sq(const Frequency& k, double L, IntervalErrorKind kind) {
  return kind == IntervalErrorKind::InteriorH10 ? interval_error_sq_pinned(k, L) : interval_error_sq_free_end(k, L);
}

/// H10: 1/(2 pi |k|) for integer k, the pinned formula at L = 1 in general.
/// H1: sqrt(2)/(2 pi |k|) for integer k; infinite otherwise, because constants
/// have zero seminorm while I(rho_k) != 0.
[[nodiscard]] inline ErrorValue initial_error(const Frequency& k, SpaceKind space) {
  if (space == SpaceKind::H10) return ErrorValue::finite(std::sqrt(interval_error_sq_pinned(k, 1.0)));
  if (!k.is_integer()) return ErrorValue::infinite();
  return ErrorValue::finite(std::sqrt(2.0) / (2.0 * pi * k.abs()));
}

/// Per-interval squared errors in partition order.
[[nodiscard]] inline std::vector<double> interval_errors_sq(const Frequency& k, const Partition& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out.push_back(interval_error_sq(k, p.lengths[j], kind_of(p.roles[j])));
  return out;
}

[[nodiscard]] inline double radius_sq(const Frequency& k, const Partition& p) {
  double s = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) s += interval_error_sq(k, p.lengths[j], kind_of(p.roles[j]));
  return s;
}

[[nodiscard]] inline double radius_h10(const Frequency& k, const NodeSet& nodes) {
  if (nodes.space() != SpaceKind::H10) throw Error(Errc::InvalidCombination, "radius_h10 needs an H10 node set");
  return std::sqrt(radius_sq(k, nodes.partition()));
}

[[nodiscard]] inline double radius_h1(const Frequency& k, const NodeSet& nodes) {
  if (nodes.space() != SpaceKind::H1) throw Error(Errc::InvalidCombination, "radius_h1 needs an H1 node set");
  if (nodes.empty()) throw Error(Errc::DegenerateInformation, "radius_h1 needs at least one node");
  return std::sqrt(radius_sq(k, nodes.partition()));
}

/// Dispatches on the node set's space. For H1 without nodes this is the
/// initial error, which may be infinite.
[[nodiscard]] inline ErrorValue radius(const Frequency& k, const NodeSet& nodes) {
  if (nodes.space() == SpaceKind::H10) return ErrorValue::finite(radius_h10(k, nodes));
  if (nodes.empty()) return initial_error(k, SpaceKind::H1);
  return ErrorValue::finite(radius_h1(k, nodes));
}

/// (1/(2 pi |k|)) (1 - (1/(k^2 pi^2)) sum sin^2(pi k L_j)/L_j)^{1/2}, evaluated
/// literally. Loses digits when the radius is far below the initial error.
[[nodiscard]] inline double radius_h10_one_shot(const Frequency& k, const NodeSet& nodes) {
  const auto p = nodes.partition();
  const double ak = k.abs();
  double s = 0.0;
  for (double L : p.lengths)
    if (L > 0.0) s += std::pow(std::sin(pi * ak * L), 2) / L;
  return std::sqrt(std::max(0.0, 1.0 - s / (ak * ak * pi * pi))) / (2.0 * pi * ak);
}

/// Literal end-interval form of the H1 radius, for cross-checking.
[[nodiscard]] inline double radius_h1_one_shot(const Frequency& k, const NodeSet& nodes) {
  const auto p = nodes.partition();
  const double ak = k.abs();
  const double L0 = p.lengths.front(), Ln = p.lengths.back();
  double s = L0 - std::sin(2 * pi * ak * L0) / (pi * ak) + Ln - std::sin(2 * pi * ak * Ln) / (pi * ak) + 1.0;
  for (std::size_t j = 1; j + 1 < p.size(); ++j)
    if (p.lengths[j] > 0.0) s -= std::pow(std::sin(pi * ak * p.lengths[j]), 2) / (ak * ak * pi * pi * p.lengths[j]);
  return std::sqrt(std::max(0.0, s)) / (2.0 * pi * ak);
}

/// Equidistant H10 error with m = n + 1 intervals of length 1/m.
[[nodiscard]] inline double equidistant_error_h10(const Frequency& k, long long m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "interval count must be positive");
  const double ak = k.abs();
  return std::sqrt(oscirad::detail::one_minus_sinc_sq(pi * ak / static_cast<double>(m))) / (2.0 * pi * ak);
}

/// Equidistant H1 error with nodes j/n, j = 0..n (n intervals). Identical to
/// the H10 value with n intervals since the boundary values are sampled.
[[nodiscard]] inline double equidistant_error_h1(const Frequency& k, long long n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "interval count must be positive");
  return equidistant_error_h10(k, n);
}

/// Worst-case function f* in closed form on every interval.
[[nodiscard]] inline WorstCaseCertificate worst_case_certificate(const Frequency& k, const NodeSet& nodes) {
  if (nodes.space() == SpaceKind::H1 && nodes.empty()) {
    if (!k.is_integer()) throw Error(Errc::DegenerateInformation, "initial error is infinite for non-integer k in H1");
    // f(0) = f(1) = unknown: the integrand is shifted by a constant, which
    // rho_k annihilates, so the extremal problem reduces to a free right end
    // on [0,1] with f(0) = 0.
    std::vector<CertificatePiece> pieces(1);
    auto& p = pieces[0];
    p.a = 0.0;
    p.b = 1.0;
    p.kind = IntervalErrorKind::RightFree;
    p.local_error = std::sqrt(interval_error_sq_free_end(k, 1.0));
    p.scale = 1.0;
    AnalyticForm f;
    f.theta = 2.0 * pi * k.value();
    f.norm = p.local_error;
    p.form = f;
    return WorstCaseCertificate(p.local_error, SpaceKind::H1, {}, std::move(pieces));
  }
  const auto sq = interval_errors_sq(k, nodes.partition());
  std::vector<double> c(sq.size());
  for (std::size_t j = 0; j < sq.size(); ++j) c[j] = std::sqrt(sq[j]);
  return analytic_certificate(k, nodes, c);
}

// ----------------------------------------------------------------------------
// Asymptotic scans
// ----------------------------------------------------------------------------

enum class ScanMode { FixedK, FixedN };

struct ScanRow {
  double parameter;   ///< n (FixedK) or k (FixedN)
  double error;       ///< equidistant error with n intervals
  double normalized;  ///< error * n (FixedK) or error * |k| (FixedN)
  double limit;       ///< 1/(2 sqrt 3) or 1/(2 pi)
};

/// Equidistant errors with n intervals (nodes j/n including endpoints, or
/// equivalently n - 1 interior H10 nodes). FixedK scans n for the given k;
/// FixedN scans k for the given n.
[[nodiscard]] inline std::vector<ScanRow> asymptotic_scan(ScanMode mode, double fixed, std::span<const double> params) {
  if (params.empty()) throw Error(Errc::InvalidArgument, "scan range is empty");
  std::vector<ScanRow> rows;
  rows.reserve(params.size());
  if (mode == ScanMode::FixedK) {
    const Frequency k(fixed);
    for (double n : params) {
      const auto ni = static_cast<long long>(std::llround(n));
      const double e = equidistant_error_h1(k, ni);
      rows.push_back({static_cast<double>(ni), e, e * static_cast<double>(ni), 1.0 / (2.0 * std::sqrt(3.0))});
    }
  } else {
    const auto n = static_cast<long long>(std::llround(fixed));
    for (double kv : params) {
      const Frequency k(kv);
      const double e = equidistant_error_h1(k, n);
      rows.push_back({kv, e, e * k.abs(), 1.0 / (2.0 * pi)});
    }
  }
  return rows;
}

}  // namespace oscirad::oscillatory
