// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>

// Cancellation-free kernels shared by the closed forms and the certificates.
// Each switches to its Taylor series below |u| = 0.5, where the series is
// summed until the terms drop below double precision (at most ~12 terms).

namespace oscirad::detail {

inline constexpr double series_switch = 0.5;

/// sin(u)/u with sinc(0) = 1.
[[nodiscard]] inline double sinc(double u) noexcept {
  if (std::fabs(u) < series_switch) {
    const double u2 = u * u;
    double term = 1.0, sum = 1.0;
    for (int j = 1; j < 16; ++j) {
      term *= -u2 / ((2.0 * j) * (2.0 * j + 1.0));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return std::sin(u) / u;
}

/// u - sin(u), accurate to full relative precision for small u.
[[nodiscard]] inline double u_minus_sin(double u) noexcept {
  if (std::fabs(u) < series_switch) {
    // u^3/3! - u^5/5! + ...
    const double u2 = u * u;
    double term = u * u2 / 6.0, sum = term;
    for (int j = 2; j < 16; ++j) {
      term *= -u2 / ((2.0 * j) * (2.0 * j + 1.0));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return u - std::sin(u);
}

/// 1 - (sin(u)/u)^2 = (u - sin u)(u + sin u)/u^2, >= 0.
[[nodiscard]] inline double one_minus_sinc_sq(double u) noexcept {
  if (u == 0.0) return 0.0;
  return u_minus_sin(u) * (u + std::sin(u)) / (u * u);
}

/// (e^z - 1)/z with value 1 at z = 0.
[[nodiscard]] inline std::complex<double> phi1(std::complex<double> z) noexcept {
  if (std::abs(z) < series_switch) {
    std::complex<double> term = 1.0, sum = 1.0;
    for (int j = 1; j < 24; ++j) {
      term *= z / static_cast<double>(j + 1);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

/// (e^z - 1 - z)/z^2 with value 1/2 at z = 0.
[[nodiscard]] inline std::complex<double> phi2(std::complex<double> z) noexcept {
  if (std::abs(z) < series_switch) {
    std::complex<double> term = 0.5, sum = 0.5;
    for (int j = 1; j < 24; ++j) {
      term *= z / static_cast<double>(j + 2);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0 - z) / (z * z);
}

}  // namespace oscirad::detail
