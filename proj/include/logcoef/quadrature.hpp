#pragma once

// Gauss-Legendre rules with adaptive bisection. Shared by the dilogarithm
// cross-check and by the closed-form evaluation of integral-defined functions.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

namespace logcoef::quad {

template <std::size_t N>
struct GaussRule {
  std::array<double, N> nodes{};    // on [-1, 1]
  std::array<double, N> weights{};
};

/// Nodes by Newton iteration on P_N.
template <std::size_t N>
const GaussRule<N>& gauss_legendre() {
  static const GaussRule<N> rule = [] {
    GaussRule<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(N) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= N; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
          p0 = p1;
          p1 = pk;
        }
        dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

template <class F>
auto gauss_apply(F&& f, double a, double b) {
  const auto& rule = gauss_legendre<15>();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  decltype(f(mid)) acc{};
  for (std::size_t i = 0; i < 15; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
};

namespace detail {
template <class F, class T>
void adaptive_step(F& f, double a, double b, T whole, double tol, int depth, QuadResult<T>& out) {
  const double mid = 0.5 * (a + b);
  const T left = gauss_apply(f, a, mid);
  const T right = gauss_apply(f, mid, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= tol || depth >= 48) {
    out.value += left + right;
    out.error += diff;
    return;
  }
  adaptive_step(f, a, mid, left, 0.5 * tol, depth + 1, out);
  adaptive_step(f, mid, b, right, 0.5 * tol, depth + 1, out);
}
}  // namespace detail

/// Bisects until each panel's 15-point rule agrees with its two halves to `tol`.
template <class F>
auto integrate(F&& f, double a, double b, double tol = 1e-14) {
  using T = decltype(f(a));
  QuadResult<T> out;
  detail::adaptive_step(f, a, b, gauss_apply(f, a, b), tol, 0, out);
  return out;
}

}  // namespace logcoef::quad
