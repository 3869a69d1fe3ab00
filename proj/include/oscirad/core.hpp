// SPDX-License-Identifier: MIT
#pragma once

#include <oscirad/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscirad {

inline constexpr double pi = std::numbers::pi;

// ----------------------------------------------------------------------------
// Frequency
// ----------------------------------------------------------------------------

/// Oscillation parameter k of the weight exp(-2*pi*i*k*x). Nonzero, finite.
///
/// The integer flag is fixed at construction: it is set exactly when k has
/// no fractional part, so integer-only code paths never test with an epsilon.
class Frequency {
 public:
  explicit Frequency(double k) : k_(k), integer_(std::isfinite(k) && k == std::nearbyint(k)) {
    if (!std::isfinite(k) || k == 0.0)
      throw Error(Errc::InvalidArgument, "frequency must be finite and nonzero");
  }

  static Frequency from_integer(long long k) { return Frequency(static_cast<double>(k)); }

  [[nodiscard]] double value() const noexcept { return k_; }
  [[nodiscard]] double abs() const noexcept { return std::fabs(k_); }
  [[nodiscard]] bool is_integer() const noexcept { return integer_; }

  [[nodiscard]] long long as_integer() const {
    if (!integer_) throw Error(Errc::NonIntegerK, "operation requires an integer frequency");
    return static_cast<long long>(k_);
  }

  [[nodiscard]] Frequency negated() const { return Frequency(-k_); }

 private:
  double k_;
  bool integer_;
};

// ----------------------------------------------------------------------------
// SpaceKind
// ----------------------------------------------------------------------------

/// H10: zero boundary values; H1: full space with seminorm ||f'||_2.
enum class SpaceKind { H10, H1 };

[[nodiscard]] constexpr std::string_view to_string(SpaceKind s) noexcept {
  return s == SpaceKind::H10 ? "h10" : "h1";
}

[[nodiscard]] inline SpaceKind parse_space(std::string_view s) {
  if (s == "h10" || s == "H10") return SpaceKind::H10;
  if (s == "h1" || s == "H1") return SpaceKind::H1;
  throw Error(Errc::InvalidArgument, "unknown space '" + std::string(s) + "'");
}

// ----------------------------------------------------------------------------
// Extended error value
// ----------------------------------------------------------------------------

/// A worst-case error that may be infinite. Callers branch on is_infinite()
/// explicitly; value() on an infinite error throws.
class ErrorValue {
 public:
  static ErrorValue finite(double v) { return ErrorValue(v, false); }
  static ErrorValue infinite() { return ErrorValue(0.0, true); }

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
  [[nodiscard]] double value() const {
    if (infinite_) throw Error(Errc::DegenerateInformation, "error value is infinite");
    return v_;
  }

 private:
  ErrorValue(double v, bool inf) : v_(v), infinite_(inf) {}
  double v_;
  bool infinite_;
};

// ----------------------------------------------------------------------------
// Partition
// ----------------------------------------------------------------------------

enum class LengthRole { Interior, LeftEnd, RightEnd };

/// Interval lengths between consecutive nodes (and the ends of [0,1]).
/// LeftEnd / RightEnd roles only occur in H1 mode, where the value of f is
/// unknown at 0 (resp. 1).
struct Partition {
  std::vector<double> lengths;
  std::vector<LengthRole> roles;

  [[nodiscard]] std::size_t size() const noexcept { return lengths.size(); }

  [[nodiscard]] double total() const noexcept {
    double s = 0.0;
    for (double L : lengths) s += L;
    return s;
  }
};

// ----------------------------------------------------------------------------
// NodeSet
// ----------------------------------------------------------------------------

/// Strictly increasing sample nodes in [0,1] tied to a space.
class NodeSet {
 public:
  NodeSet(std::vector<double> values, SpaceKind space) : space_(space) {
    for (double v : values) {
      if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, "node is not finite");
      if (v < 0.0 || v > 1.0) throw Error(Errc::OutOfRange, "node outside [0,1]");
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
      throw Error(Errc::Duplicate, "two nodes coincide");
    nodes_ = std::move(values);
  }

  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
  [[nodiscard]] SpaceKind space() const noexcept { return space_; }
  [[nodiscard]] double operator[](std::size_t i) const { return nodes_[i]; }

  /// H10: x_0 = 0 and x_{n+1} = 1 are implicit, all pieces are interior.
  /// H1: L_0 = x_1 and L_n = 1 - x_n are end pieces. Needs n >= 1.
  [[nodiscard]] Partition partition() const {
    Partition p;
    const std::size_t n = nodes_.size();
    if (space_ == SpaceKind::H1 && n == 0)
      throw Error(Errc::DegenerateInformation, "H1 partition needs at least one node");
    p.lengths.reserve(n + 1);
    double prev = 0.0;
    for (double x : nodes_) {
      p.lengths.push_back(x - prev);
      prev = x;
    }
    p.lengths.push_back(1.0 - prev);
    p.roles.assign(p.lengths.size(), LengthRole::Interior);
    if (space_ == SpaceKind::H1) {
      p.roles.front() = LengthRole::LeftEnd;
      p.roles.back() = LengthRole::RightEnd;
    }
    return p;
  }

  /// Interval endpoints matching partition(): [breaks[j], breaks[j+1]].
  [[nodiscard]] std::vector<double> breakpoints() const {
    std::vector<double> b;
    b.reserve(nodes_.size() + 2);
    b.push_back(0.0);
    for (double x : nodes_) b.push_back(x);
    b.push_back(1.0);
    return b;
  }

 private:
  std::vector<double> nodes_;
  SpaceKind space_;
};

[[nodiscard]] inline NodeSet make_nodeset(std::vector<double> values, SpaceKind space) {
  return NodeSet(std::move(values), space);
}

/// H10 (include_endpoints = false): x_j = j/(n+1), j = 1..n.
/// H1 (include_endpoints = true): x_j = j/n, j = 0..n.
/// H1 without endpoints uses the H10 placement.
[[nodiscard]] inline NodeSet equidistant_nodes(int n, SpaceKind space, bool include_endpoints) {
  if (n < 1) throw Error(Errc::InvalidArgument, "equidistant_nodes needs n >= 1");
  if (space == SpaceKind::H10 && include_endpoints)
    throw Error(Errc::InvalidCombination, "H10 nodes never include the endpoints");
  std::vector<double> x;
  if (include_endpoints) {
    x.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) x.push_back(static_cast<double>(j) / n);
  } else {
    x.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) x.push_back(static_cast<double>(j) / (n + 1));
  }
  return NodeSet(std::move(x), space);
}

/// Inverse of NodeSet::partition(): rebuilds nodes from lengths via running sums.
/// H10 lengths give n = size-1 nodes; H1 lengths (ends included) likewise.
[[nodiscard]] inline NodeSet nodes_from_lengths(std::span<const double> lengths, SpaceKind space) {
  if (lengths.size() < 2 && space == SpaceKind::H1)
    throw Error(Errc::DegenerateInformation, "H1 needs at least two lengths");
  std::vector<double> x;
  x.reserve(lengths.size());
  double s = 0.0;
  for (std::size_t j = 0; j + 1 < lengths.size(); ++j) {
    s += lengths[j];
    x.push_back(std::min(s, 1.0));
  }
  return NodeSet(std::move(x), space);
}

}  // namespace oscirad
