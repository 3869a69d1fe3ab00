// SPDX-License-Identifier: MIT
#pragma once

#include <oscirad/core.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oscirad {

using complex = std::complex<double>;
using ComplexFn = std::function<complex(double)>;

/// Weight rho on [0,1], optionally with an exact antiderivative.
///
/// A supplied antiderivative is checked against the evaluator at registration:
/// at 100 seeded points its central difference (best over a ladder of step
/// sizes) must match rho to 1e-6 relative.
class DensityFunction {
 public:
  DensityFunction(std::string name, ComplexFn rho, std::optional<ComplexFn> antiderivative = std::nullopt)
      : name_(std::move(name)), rho_(std::move(rho)), antiderivative_(std::move(antiderivative)) {
    validate();
  }

  [[nodiscard]] complex operator()(double x) const { return rho_(x); }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] bool has_antiderivative() const noexcept { return antiderivative_.has_value(); }
  [[nodiscard]] complex antiderivative(double x) const { return (*antiderivative_)(x); }

  /// Same density with the exact antiderivative dropped (forces quadrature).
  [[nodiscard]] DensityFunction without_antiderivative() const {
    DensityFunction d(name_ + "/numeric", rho_);
    d.k_ = k_;
    return d;
  }

  /// Set for rho_k so callers can select the closed forms.
  [[nodiscard]] const std::optional<double>& oscillation() const noexcept { return k_; }
  DensityFunction& with_oscillation(double k) {
    k_ = k;
    return *this;
  }

 private:
  void validate() const {
    std::mt19937_64 gen(0x5eed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double x = unit(gen);
      const complex v = rho_(x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(Errc::InvalidArgument, "density '" + name_ + "' is not finite at " + std::to_string(x));
      if (!antiderivative_) continue;
      double best = std::numeric_limits<double>::infinity();
      for (double h : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
        const double lo = std::max(0.0, x - h), hi = std::min(1.0, x + h);
        const complex d = ((*antiderivative_)(hi) - (*antiderivative_)(lo)) / (hi - lo);
        best = std::min(best, std::abs(d - v));
      }
      if (best > 1e-6 * std::max(1.0, std::abs(v)))
        throw Error(Errc::InvalidArgument, "antiderivative of '" + name_ + "' does not match the density");
    }
  }

  std::string name_;
  ComplexFn rho_;
  std::optional<ComplexFn> antiderivative_;
  std::optional<double> k_;
};

// ----------------------------------------------------------------------------
// Built-in densities
// ----------------------------------------------------------------------------

[[nodiscard]] inline DensityFunction oscillatory_density(const Frequency& k) {
  const double theta = 2.0 * pi * k.value();
  DensityFunction d(
      "osc:k=" + std::to_string(k.value()), [theta](double x) { return std::polar(1.0, -theta * x); },
      [theta](double x) {
        // (e^{-i theta x} - 1)/(-i theta), written as x * phi1(-i theta x)
        const double s = std::sin(0.5 * theta * x);
        const double sinc = (theta * x == 0.0) ? 1.0 : s / (0.5 * theta * x);
        return x * sinc * std::polar(1.0, -0.5 * theta * x);
      });
  d.with_oscillation(k.value());
  return d;
}

[[nodiscard]] inline DensityFunction constant_density() {
  return DensityFunction("const", [](double) { return complex(1.0); }, [](double x) { return complex(x); });
}

/// rho(x) = c0 + c1 x + c2 x^2 + ...
[[nodiscard]] inline DensityFunction polynomial_density(std::vector<double> coeffs) {
  if (coeffs.empty()) throw Error(Errc::InvalidArgument, "polynomial density needs coefficients");
  std::string name = "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) name += (i ? "," : "") + std::to_string(coeffs[i]);
  auto value = [coeffs](double x) {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i];
    return complex(s);
  };
  auto prim = [coeffs](double x) {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i] / static_cast<double>(i + 1);
    return complex(s * x);
  };
  return DensityFunction(std::move(name), value, prim);
}

/// Unnormalized Gaussian bump exp(-(x-mu)^2 / (2 sigma^2)).
[[nodiscard]] inline DensityFunction gaussian_density(double mu, double sigma) {
  if (!(sigma > 0.0)) throw Error(Errc::InvalidArgument, "gaussian density needs sigma > 0");
  auto value = [mu, sigma](double x) { return complex(std::exp(-0.5 * (x - mu) * (x - mu) / (sigma * sigma))); };
  auto prim = [mu, sigma](double x) {
    const double c = sigma * std::sqrt(pi / 2.0);
    return complex(c * (std::erf((x - mu) / (sigma * std::sqrt(2.0))) - std::erf(-mu / (sigma * std::sqrt(2.0)))));
  };
  return DensityFunction("gauss:" + std::to_string(mu) + "," + std::to_string(sigma), value, prim);
}

namespace detail {

inline double parse_real(std::string_view s) {
  // std::from_chars for double is available in libstdc++ 11.
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  while (first != last && *first == ' ') ++first;
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw Error(Errc::InvalidArgument, "cannot parse number '" + std::string(s) + "'");
  return v;
}

inline std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_real(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Registry names: "osc:k=<real>", "const", "poly:c0,c1,...", "gauss:mu,sigma".
[[nodiscard]] inline DensityFunction parse_density(std::string_view spec) {
  if (spec == "const") return constant_density();
  if (spec.starts_with("osc:k=")) return oscillatory_density(Frequency(detail::parse_real(spec.substr(6))));
  if (spec.starts_with("poly:")) return polynomial_density(detail::parse_list(spec.substr(5)));
  if (spec.starts_with("gauss:")) {
    const auto p = detail::parse_list(spec.substr(6));
    if (p.size() != 2) throw Error(Errc::InvalidArgument, "gauss density needs mu,sigma");
    return gaussian_density(p[0], p[1]);
  }
  throw Error(Errc::InvalidArgument, "unknown density '" + std::string(spec) + "'");
}

}  // namespace oscirad
