// SPDX-License-Identifier: MIT
#pragma once

#include <oscirad/core.hpp>
#include <oscirad/detail/chebyshev.hpp>
#include <oscirad/detail/series.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string_view>
#include <variant>
#include <vector>

namespace oscirad {

using complex = std::complex<double>;

/// Which endpoint values are known to vanish on a subinterval.
enum class IntervalErrorKind {
  InteriorH10,  ///< f(a) = f(b) = 0
  LeftFree,     ///< f(a) unknown, f(b) = 0
  RightFree,    ///< f(a) = 0, f(b) unknown
};

[[nodiscard]] constexpr std::string_view to_string(IntervalErrorKind k) noexcept {
  switch (k) {
    case IntervalErrorKind::InteriorH10: return "pinned";
    case IntervalErrorKind::LeftFree: return "left-free";
    case IntervalErrorKind::RightFree: return "right-free";
  }
  return "?";
}

[[nodiscard]] constexpr IntervalErrorKind kind_of(LengthRole r) noexcept {
  switch (r) {
    case LengthRole::LeftEnd: return IntervalErrorKind::LeftFree;
    case LengthRole::RightEnd: return IntervalErrorKind::RightFree;
    case LengthRole::Interior: break;
  }
  return IntervalErrorKind::InteriorH10;
}

/// Closed-form extremal piece for rho_k on [a,b] with unit local seminorm.
///
/// With s = t - a, L = b - a, theta = 2*pi*k and N the local initial error:
///   pinned:     g(s) = -(e^{i theta a}/N) [s^2 phi2(i theta s) - L s phi2(i theta L)]
///   left-free:  g(s) =  (e^{i theta a}/N) [L^2 phi2(i theta L) - s^2 phi2(i theta s)]
///   right-free: g(s) =  (e^{i theta b}/N) [L^2 phi2(-i theta L) - w^2 phi2(-i theta w)], w = L - s
/// Every form vanishes exactly at the pinned ends.
struct AnalyticForm {
  double theta = 0.0;
  double norm = 0.0;
  /// Same function written as exp_coef * e^{i theta t} + linear * t + constant
  /// (already multiplied by the piece scale). Reporting only.
  complex exp_coef{}, linear{}, constant{};
};

/// Numerically integrated profile for a general density: value(t) is the
/// unit-seminorm local extremal function, derivative(t) its derivative.
struct ProfileForm {
  detail::PiecewiseCheb value;
  detail::PiecewiseCheb derivative;
};

struct CertificatePiece {
  double a = 0.0, b = 0.0;
  IntervalErrorKind kind = IntervalErrorKind::InteriorH10;
  double local_error = 0.0;  ///< c_j, the initial error of this interval
  double scale = 0.0;        ///< c_j / (sum c_i^2)^{1/2}
  std::variant<AnalyticForm, ProfileForm> form;

  [[nodiscard]] complex value(double t) const {
    if (scale == 0.0) return 0.0;
    return scale * std::visit([&](const auto& f) { return eval(f, t); }, form);
  }

  [[nodiscard]] complex derivative(double t) const {
    if (scale == 0.0) return 0.0;
    return scale * std::visit([&](const auto& f) { return eval_derivative(f, t); }, form);
  }

 private:
  [[nodiscard]] complex eval(const AnalyticForm& f, double t) const {
    using detail::phi2;
    const double L = b - a;
    const double s = std::clamp(t - a, 0.0, L);
    const complex i(0.0, 1.0);
    switch (kind) {
      case IntervalErrorKind::InteriorH10:
        return -std::polar(1.0 / f.norm, f.theta * a) *
               (s * s * phi2(i * (f.theta * s)) - L * s * phi2(i * (f.theta * L)));
      case IntervalErrorKind::LeftFree:
        return std::polar(1.0 / f.norm, f.theta * a) *
               (L * L * phi2(i * (f.theta * L)) - s * s * phi2(i * (f.theta * s)));
      case IntervalErrorKind::RightFree: {
        const double w = L - s;
        return std::polar(1.0 / f.norm, f.theta * b) *
               (L * L * phi2(-i * (f.theta * L)) - w * w * phi2(-i * (f.theta * w)));
      }
    }
    return 0.0;
  }

  [[nodiscard]] complex eval_derivative(const AnalyticForm& f, double t) const {
    using detail::phi1;
    using detail::phi2;
    const double L = b - a;
    const double s = std::clamp(t - a, 0.0, L);
    const complex i(0.0, 1.0);
    switch (kind) {
      case IntervalErrorKind::InteriorH10:
        return -std::polar(1.0 / f.norm, f.theta * a) * (s * phi1(i * (f.theta * s)) - L * phi2(i * (f.theta * L)));
      case IntervalErrorKind::LeftFree:
        return -std::polar(1.0 / f.norm, f.theta * a) * (s * phi1(i * (f.theta * s)));
      case IntervalErrorKind::RightFree: {
        const double w = L - s;
        return std::polar(1.0 / f.norm, f.theta * b) * (w * phi1(-i * (f.theta * w)));
      }
    }
    return 0.0;
  }

  [[nodiscard]] static complex eval(const ProfileForm& f, double t) { return f.value(t); }
  [[nodiscard]] static complex eval_derivative(const ProfileForm& f, double t) { return f.derivative(t); }
};

/// The extremal function f*: unit seminorm, zero at every node (and at 0, 1
/// in H10), with I_rho(f*) equal to the radius.
class WorstCaseCertificate {
 public:
  WorstCaseCertificate(double radius, SpaceKind space, std::vector<double> nodes, std::vector<CertificatePiece> pieces)
      : radius_(radius), space_(space), nodes_(std::move(nodes)), pieces_(std::move(pieces)) {}

  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] SpaceKind space() const noexcept { return space_; }
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const CertificatePiece> pieces() const noexcept { return pieces_; }

  [[nodiscard]] complex operator()(double t) const { return piece_at(t).value(t); }
  [[nodiscard]] complex derivative(double t) const { return piece_at(t).derivative(t); }

  /// Copy with every piece scale multiplied by `factor` (detector sanity checks).
  [[nodiscard]] WorstCaseCertificate scaled(double factor) const {
    auto copy = *this;
    for (auto& p : copy.pieces_) p.scale *= factor;
    return copy;
  }

  [[nodiscard]] const CertificatePiece& piece_at(double t) const {
    if (pieces_.empty()) throw Error(Errc::DegenerateInformation, "certificate has no pieces");
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                               [](double x, const CertificatePiece& p) { return x < p.b; });
    if (it == pieces_.end()) return pieces_.back();
    return *it;
  }

 private:
  double radius_;
  SpaceKind space_;
  std::vector<double> nodes_;
  std::vector<CertificatePiece> pieces_;
};

/// f* for rho_k from the per-interval analytic forms. `local_errors` are the
/// c_j (square roots of the per-interval squared errors) in partition order.
[[nodiscard]] inline WorstCaseCertificate analytic_certificate(const Frequency& k, const NodeSet& nodes,
                                                               std::span<const double> local_errors) {
  const auto breaks = nodes.breakpoints();
  const auto part = nodes.partition();
  double total = 0.0;
  for (double c : local_errors) total += c * c;
  const double radius = std::sqrt(total);
  const double theta = 2.0 * pi * k.value();
  const complex i(0.0, 1.0);

  std::vector<CertificatePiece> pieces;
  pieces.reserve(part.size());
  for (std::size_t j = 0; j < part.size(); ++j) {
    CertificatePiece p;
    p.a = breaks[j];
    p.b = breaks[j + 1];
    p.kind = kind_of(part.roles[j]);
    p.local_error = local_errors[j];
    p.scale = (radius > 0.0 && p.b > p.a) ? local_errors[j] / radius : 0.0;
    AnalyticForm f;
    f.theta = theta;
    f.norm = local_errors[j];
    if (p.scale > 0.0) {
      const double N = f.norm, L = p.b - p.a, th2 = theta * theta;
      const complex ea = std::polar(1.0, theta * p.a), eb = std::polar(1.0, theta * p.b);
      complex C, alpha_s, const_s;  // in the local coordinate s = t - a (or w = b - t)
      switch (p.kind) {
        case IntervalErrorKind::InteriorH10: {
          const complex ph = detail::phi2(i * (theta * L));
          C = 1.0 / (N * th2);
          alpha_s = ea * (-i / (N * theta) + L * ph / N);
          const_s = -ea / (N * th2);
          f.linear = alpha_s;
          f.constant = const_s - alpha_s * p.a;
          break;
        }
        case IntervalErrorKind::LeftFree: {
          const complex ph = detail::phi2(i * (theta * L));
          C = 1.0 / (N * th2);
          alpha_s = -i * ea / (N * theta);
          const_s = ea * L * L * ph / N - ea / (N * th2);
          f.linear = alpha_s;
          f.constant = const_s - alpha_s * p.a;
          break;
        }
        case IntervalErrorKind::RightFree: {
          const complex ph = detail::phi2(-i * (theta * L));
          C = 1.0 / (N * th2);
          f.linear = -i * eb / (N * theta);
          f.constant = eb * L * L * ph / N - eb / (N * th2) + i * eb * p.b / (N * theta);
          break;
        }
      }
      f.exp_coef = C * p.scale;
      f.linear *= p.scale;
      f.constant *= p.scale;
    }
    p.form = f;
    pieces.push_back(std::move(p));
  }
  return WorstCaseCertificate(radius, nodes.space(), std::vector<double>(nodes.nodes().begin(), nodes.nodes().end()),
                              std::move(pieces));
}

}  // namespace oscirad
