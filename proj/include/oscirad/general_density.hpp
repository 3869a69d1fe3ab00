// SPDX-License-Identifier: MIT
#pragma once

// Worst-case quantities for an arbitrary integrable weight rho.
//
// On each subinterval the antiderivative R is represented by adaptive
// piecewise Chebyshev panels (sampled from the exact antiderivative when the
// density provides one, otherwise integrated from samples of rho). Squared
// errors are then obtained by adaptive Gauss-Kronrod quadrature of |R - c|^2
// (pinned) or |R|^2 (free end), and f* by integrating conj(R - c) once more.

#include <oscirad/certificate.hpp>
#include <oscirad/core.hpp>
#include <oscirad/density.hpp>
#include <oscirad/detail/chebyshev.hpp>
#include <oscirad/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

namespace oscirad::general {

inline constexpr double default_tol = 1e-12;

/// R(t) = integral of rho from a to t, to absolute accuracy tol.
[[nodiscard]] inline complex antiderivative(const DensityFunction& rho, double a, double t, double tol = default_tol) {
  if (!(0.0 <= a && a <= t && t <= 1.0)) throw Error(Errc::OutOfRange, "antiderivative needs 0 <= a <= t <= 1");
  if (rho.has_antiderivative()) return rho.antiderivative(t) - rho.antiderivative(a);
  return oracle::adaptive_integral([&](double x) { return rho(x); }, a, t, tol, 1e-15).value;
}

struct IntervalSolution {
  double a = 0.0, b = 0.0;
  IntervalErrorKind kind = IntervalErrorKind::InteriorH10;
  double error_sq = 0.0;
  std::optional<complex> center;  ///< c = mean of R, pinned kind only
  detail::PiecewiseCheb profile;  ///< R - c (pinned) or R (free end)

  [[nodiscard]] double error() const { return std::sqrt(error_sq); }
};

namespace detail_general {

/// Piecewise Chebyshev representation of R on [a,b] for the given kind:
/// pinned and LeftFree use R(t) = int_a^t rho, RightFree uses int_t^b rho.
inline detail::PiecewiseCheb build_antiderivative(const DensityFunction& rho, double a, double b,
                                                  IntervalErrorKind kind, double tol) {
  const double cheb_tol = std::max(1e-14, std::min(tol, 1e-10));
  detail::PiecewiseCheb R;
  if (rho.has_antiderivative()) {
    const complex Aa = rho.antiderivative(a), Ab = rho.antiderivative(b);
    // R is a difference of antiderivative values; its rounding level is set by their size
    const double floor =
        64.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::abs(Aa), std::abs(Ab), std::abs(rho.antiderivative(0.5 * (a + b)))});
    if (kind == IntervalErrorKind::RightFree)
      R = detail::cheb_fit_adaptive([&](double t) { return Ab - rho.antiderivative(t); }, a, b, cheb_tol,
                                    oracle::default_panel_budget, 1, floor);
    else
      R = detail::cheb_fit_adaptive([&](double t) { return rho.antiderivative(t) - Aa; }, a, b, cheb_tol,
                                    oracle::default_panel_budget, 1, floor);
    return R;
  }
  auto dens = detail::cheb_fit_adaptive([&](double t) { return rho(t); }, a, b, cheb_tol, oracle::default_panel_budget);
  R = dens.antiderivative();
  if (kind == IntervalErrorKind::RightFree) {
    const complex total = R.panels.back()(b);
    R = R.affine(-1.0, total, false);
  }
  return R;
}

inline double integral_abs_sq(const detail::PiecewiseCheb& f, double tol) {
  double s = 0.0;
  for (const auto& p : f.panels) {
    auto g = [&](double t) {
      const complex v = p(t);
      return std::norm(v);
    };
    s += oracle::adaptive_integral(g, p.a, p.b, 1e-300, std::max(1e-13, std::min(tol, 1e-6))).value.real();
  }
  return s;
}

}  // namespace detail_general

/// Local initial error on [a,b]. Pinned: ||R - c||_2 with c the mean of R;
/// free-end kinds: ||R||_2 with R vanishing at the known end.
[[nodiscard]] inline IntervalSolution interval_initial_error(const DensityFunction& rho, double a, double b,
                                                             IntervalErrorKind kind, double tol = default_tol) {
  if (!(0.0 <= a && a < b && b <= 1.0)) throw Error(Errc::OutOfRange, "interval needs 0 <= a < b <= 1");
  IntervalSolution sol;
  sol.a = a;
  sol.b = b;
  sol.kind = kind;
  auto R = detail_general::build_antiderivative(rho, a, b, kind, tol);
  if (kind == IntervalErrorKind::InteriorH10) {
    const complex c = R.integral() / (b - a);
    sol.center = c;
    sol.profile = R.affine(1.0, -c, false);
  } else {
    sol.profile = std::move(R);
  }
  sol.error_sq = detail_general::integral_abs_sq(sol.profile, tol);
  return sol;
}

struct GeneralRadius {
  double radius = 0.0;
  std::vector<IntervalSolution> intervals;
  WorstCaseCertificate certificate;
};

namespace detail_general {

/// Unit-seminorm local extremal function from an interval solution.
inline ProfileForm local_profile(const IntervalSolution& s) {
  const double N = s.error();
  ProfileForm f;
  switch (s.kind) {
    case IntervalErrorKind::InteriorH10:
      // f(t) = -int_a^t conj(R - c) / N
      f.derivative = s.profile.affine(-1.0 / N, 0.0, true);
      f.value = f.derivative.antiderivative();
      break;
    case IntervalErrorKind::LeftFree: {
      // f(t) = int_t^b conj(R) / N
      f.derivative = s.profile.affine(-1.0 / N, 0.0, true);
      auto v = f.derivative.antiderivative();
      const complex at_b = v.panels.back()(s.b);
      f.value = v.affine(1.0, -at_b, false);
      break;
    }
    case IntervalErrorKind::RightFree:
      // f(t) = int_a^t conj(R) / N
      f.derivative = s.profile.affine(1.0 / N, 0.0, true);
      f.value = f.derivative.antiderivative();
      break;
  }
  return f;
}

inline WorstCaseCertificate assemble(std::vector<IntervalSolution>& sols, SpaceKind space,
                                     std::span<const double> nodes, double& radius_out) {
  double total = 0.0;
  for (const auto& s : sols) total += s.error_sq;
  const double radius = std::sqrt(total);
  radius_out = radius;
  std::vector<CertificatePiece> pieces;
  pieces.reserve(sols.size());
  for (const auto& s : sols) {
    CertificatePiece p;
    p.a = s.a;
    p.b = s.b;
    p.kind = s.kind;
    p.local_error = s.error();
    p.scale = (radius > 0.0 && s.error_sq > 0.0) ? p.local_error / radius : 0.0;
    if (p.scale > 0.0)
      p.form = local_profile(s);
    else
      p.form = AnalyticForm{};
    pieces.push_back(std::move(p));
  }
  return WorstCaseCertificate(radius, space, std::vector<double>(nodes.begin(), nodes.end()), std::move(pieces));
}

}  // namespace detail_general

/// Radius of information as the root of the sum of local squared errors,
/// with the free-end variants on [0, x_1] and [x_n, 1] in H1 mode, plus the
/// assembled worst-case certificate.
///
/// H1 without nodes: finite only when I(rho) = 0, in which case the
/// radius is ||int_t^1 rho||_2; otherwise DegenerateInformation.
[[nodiscard]] inline GeneralRadius radius_general(const DensityFunction& rho, const NodeSet& nodes,
                                                  double tol = default_tol) {
  std::vector<IntervalSolution> sols;
  GeneralRadius out{0.0, {}, WorstCaseCertificate(0.0, nodes.space(), {}, {})};
  if (nodes.space() == SpaceKind::H1 && nodes.empty()) {
    const complex total = antiderivative(rho, 0.0, 1.0, tol);
    if (std::abs(total) > std::max(1e-10, 100.0 * tol))
      throw Error(Errc::DegenerateInformation, "initial error is infinite: I(rho) != 0 in H1");
    sols.push_back(interval_initial_error(rho, 0.0, 1.0, IntervalErrorKind::RightFree, tol));
  } else {
    const auto part = nodes.partition();
    const auto breaks = nodes.breakpoints();
    for (std::size_t j = 0; j < part.size(); ++j) {
      const auto kind = kind_of(part.roles[j]);
      if (part.lengths[j] > 0.0) {
        sols.push_back(interval_initial_error(rho, breaks[j], breaks[j + 1], kind, tol));
      } else {
        IntervalSolution empty;
        empty.a = breaks[j];
        empty.b = breaks[j + 1];
        empty.kind = kind;
        sols.push_back(std::move(empty));
      }
    }
  }
  out.certificate = detail_general::assemble(sols, nodes.space(), nodes.nodes(), out.radius);
  out.intervals = std::move(sols);
  return out;
}

[[nodiscard]] inline complex evaluate_certificate(const WorstCaseCertificate& cert, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(Errc::OutOfRange, "certificate is defined on [0,1]");
  return cert(t);
}

struct CertificateReport {
  double norm = 0.0;               ///< ||(f*)'||_2
  double norm_residual = 0.0;      ///< |norm - 1|
  complex integral{};              ///< I_rho(f*)
  double integral_residual = 0.0;  ///< |I_rho(f*) - radius|
  double node_residual = 0.0;      ///< max |f*(x_j)| (and |f*(0)|, |f*(1)| in H10)
};

/// Numerical verification of the certificate invariants by adaptive quadrature.
[[nodiscard]] inline CertificateReport certificate_checks(const WorstCaseCertificate& cert, const DensityFunction& rho,
                                                          double tol = default_tol) {
  CertificateReport r;
  const double qtol = std::max(tol, 1e-14);
  double norm_sq = 0.0;
  complex integral = 0.0;
  for (const auto& p : cert.pieces()) {
    if (p.scale == 0.0 || p.b <= p.a) continue;
    const auto panels = static_cast<std::size_t>(
        1 + std::ceil((p.b - p.a) * (rho.oscillation() ? 4.0 * std::fabs(*rho.oscillation()) : 0.0)));
    norm_sq += oracle::adaptive_integral([&](double t) { return std::norm(p.derivative(t)); }, p.a, p.b, qtol * qtol,
                                         qtol, oracle::default_panel_budget, panels)
                   .value.real();
    integral += oracle::adaptive_integral([&](double t) { return p.value(t) * rho(t); }, p.a, p.b, qtol * qtol, qtol,
                                          oracle::default_panel_budget, panels)
                    .value;
  }
  r.norm = std::sqrt(norm_sq);
  r.norm_residual = std::fabs(r.norm - 1.0);
  r.integral = integral;
  r.integral_residual = std::abs(integral - cert.radius());
  for (double x : cert.nodes()) r.node_residual = std::max(r.node_residual, std::abs(cert(x)));
  if (cert.space() == SpaceKind::H10) {
    r.node_residual = std::max(r.node_residual, std::abs(cert(0.0)));
    r.node_residual = std::max(r.node_residual, std::abs(cert(1.0)));
  }
  return r;
}

}  // namespace oscirad::general
