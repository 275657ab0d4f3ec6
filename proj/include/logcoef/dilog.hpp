#pragma once

/**
 * @file dilog.hpp
 * @brief Real dilogarithm Li2(x) = sum x^n / n^2 on [-1, 1].
 *
 * Fast path:
 *   |x| <= 1/2      direct series
 *   1/2 < x < 1     Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)
 *   -1 <= x < -1/2  Li2(x) = Li2(x^2)/2 - Li2(-x)
 *   x = 1           pi^2/6
 *
 * li2_quadrature_oracle integrates x * int_0^1 log(1/t)/(1 - t x) dt and shares
 * nothing with the fast path; it exists to cross-check it.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "logcoef/quadrature.hpp"

namespace logcoef {

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

enum class DilogMethod { series, reflection, quadrature };

inline const char* to_string(DilogMethod m) {
  switch (m) {
    case DilogMethod::series: return "series";
    case DilogMethod::reflection: return "reflection";
    case DilogMethod::quadrature: return "quadrature";
  }
  return "?";
}

struct DilogResult {
  double value = 0.0;
  DilogMethod method = DilogMethod::series;
  double est_error = 0.0;
};

inline void require_unit_interval(double x, const char* who) {
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error(std::string(who) + ": argument outside [-1, 1]");
}

namespace detail {

// Plain series for |x| <= 1/2; stops once the geometric tail bound is below 1e-18.
// Terms are summed smallest first.
inline DilogResult li2_series(double x) {
  std::array<double, 200> terms{};
  double power = x;
  double tail = 0.0;
  const double ax = std::abs(x);
  int count = 0;
  for (int n = 1; n < 200; ++n) {
    terms[static_cast<std::size_t>(count++)] = power / (static_cast<double>(n) * n);
    power *= x;
    const double next = std::abs(power) / ((n + 1.0) * (n + 1.0));
    tail = next / (1.0 - ax);
    if (tail < 1e-18) break;
  }
  double sum = 0.0;
  while (count > 0) sum += terms[static_cast<std::size_t>(--count)];
  return {sum, DilogMethod::series, tail + 4.0 * std::numeric_limits<double>::epsilon() *
                                              std::abs(sum)};
}

inline DilogResult li2_nonneg(double x) {
  if (x == 1.0) return {kZeta2, DilogMethod::reflection, 0.0};
  if (x <= 0.5) return li2_series(x);
  const DilogResult r = li2_series(1.0 - x);
  const double value = kZeta2 - std::log(x) * std::log1p(-x) - r.value;
  return {value, DilogMethod::reflection,
          r.est_error + 8.0 * std::numeric_limits<double>::epsilon() * (kZeta2 + std::abs(value))};
}

}  // namespace detail

inline DilogResult li2(double x) {
  require_unit_interval(x, "li2");
  if (x >= -0.5) {
    if (x < 0.0) return detail::li2_series(x);
    return detail::li2_nonneg(x);
  }
  const DilogResult sq = detail::li2_nonneg(x * x);
  const DilogResult neg = detail::li2_nonneg(-x);
  const double value = 0.5 * sq.value - neg.value;
  return {value, DilogMethod::reflection,
          0.5 * sq.est_error + neg.est_error +
              4.0 * std::numeric_limits<double>::epsilon() * std::abs(value)};
}

inline double li2_value(double x) { return li2(x).value; }

/// Integral representation on [eps, 1] (adaptive Gauss on dyadic panels) plus
/// the analytic weight integral eps (1 - ln eps) on [0, eps].
inline double li2_quadrature_oracle(double x) {
  require_unit_interval(x, "li2_quadrature_oracle");
  if (x == 0.0) return 0.0;
  constexpr double eps = 1e-12;
  auto integrand = [x](double t) { return -std::log(t) / (1.0 - t * x); };
  double total = eps * (1.0 - std::log(eps));
  double hi = 1.0;
  while (hi > eps) {
    const double lo = std::max(0.5 * hi, eps);
    total += quad::integrate(integrand, lo, hi, 1e-15).value;
    hi = lo;
  }
  return x * total;
}

}  // namespace logcoef
