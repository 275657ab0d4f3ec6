#pragma once

// Dense complex polynomials as coefficient vectors (index k holds the z^k term).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "logcoef/series.hpp"

namespace logcoef::poly {

using Coeffs = std::vector<cplx>;

inline cplx eval(std::span<const cplx> c, cplx z) {
  cplx acc{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

struct Value2 {
  cplx p, dp, d2p;
};

/// p, p', p'' in one Horner pass.
inline Value2 eval2(std::span<const cplx> c, cplx z) {
  cplx p{0.0, 0.0}, dp{0.0, 0.0}, d2p{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) {
    d2p = d2p * z + 2.0 * dp;
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp, d2p};
}

inline Coeffs mul(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::size_t degree(std::span<const cplx> c) {
  std::size_t d = c.size();
  while (d > 1 && c[d - 1] == cplx{0.0, 0.0}) --d;
  return d == 0 ? 0 : d - 1;
}

struct CircleMax {
  double sampled = 0.0;   // best of the equiangular samples
  double polished = 0.0;  // after Newton refinement at the sampled peaks
};

/// Maximum of |p| over |z| = r from `samples` equiangular points (angle 2 pi j / samples),
/// with Newton polishing of |p(r e^{it})|^2 at the sampled peaks.
inline CircleMax circle_max(std::span<const cplx> c, std::size_t samples, double r = 1.0) {
  if (c.empty()) return {};
  if (degree(c) == 0) return {std::abs(c[0]), std::abs(c[0])};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::vector<double> mod2(samples);
  for (std::size_t j = 0; j < samples; ++j)
    mod2[j] = std::norm(eval(c, std::polar(r, step * static_cast<double>(j))));
  const double top = *std::max_element(mod2.begin(), mod2.end());
  double best = top;
  for (std::size_t j = 0; j < samples; ++j) {
    const double prev = mod2[(j + samples - 1) % samples];
    const double next = mod2[(j + 1) % samples];
    if (mod2[j] < prev || mod2[j] < next || mod2[j] < 0.99 * top) continue;
    double theta = step * static_cast<double>(j);
    for (int it = 0; it < 30; ++it) {
      const cplx z = std::polar(r, theta);
      const Value2 v = eval2(c, z);
      const cplx pt = cplx{0.0, 1.0} * z * v.dp;   // d/dtheta
      const cplx ptt = -z * v.dp - z * z * v.d2p;  // d^2/dtheta^2
      const double g1 = 2.0 * std::real(std::conj(v.p) * pt);
      const double g2 = 2.0 * (std::norm(pt) + std::real(std::conj(v.p) * ptt));
      if (!(g2 < 0.0)) break;
      const double delta = std::clamp(-g1 / g2, -step, step);
      theta += delta;
      if (std::abs(delta) < 1e-15) break;
    }
    best = std::max(best, std::norm(eval(c, std::polar(r, theta))));
  }
  return {std::sqrt(top), std::sqrt(best)};
}

/// Winding number of p around 0 along |z| = r from half-offset samples, with
/// each step bisected until its phase increment is below pi/8 so zeros close
/// to the circle cannot alias; also reports the smallest modulus evaluated.
struct Winding {
  long turns = 0;
  double min_modulus = 0.0;
};

namespace detail {
inline double phase_increment(std::span<const cplx> c, double r, double t0, cplx v0, double t1, cplx v1,
                              double& min_mod, int depth) {
  min_mod = std::min(min_mod, std::abs(v1));
  const double d = std::arg(v1 / v0);
  if (std::abs(d) <= std::numbers::pi / 8.0 || depth >= 48) return d;
  const double tm = 0.5 * (t0 + t1);
  const cplx vm = eval(c, std::polar(r, tm));
  return phase_increment(c, r, t0, v0, tm, vm, min_mod, depth + 1) +
         phase_increment(c, r, tm, vm, t1, v1, min_mod, depth + 1);
}
}  // namespace detail

inline Winding winding(std::span<const cplx> c, std::size_t samples, double r) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  Winding w;
  const cplx first = eval(c, std::polar(r, 0.5 * step));
  w.min_modulus = std::abs(first);
  if (w.min_modulus == 0.0) return w;
  cplx prev = first;
  double total = 0.0;
  for (std::size_t j = 1; j <= samples; ++j) {
    const double t0 = step * (static_cast<double>(j) - 0.5), t1 = t0 + step;
    const cplx cur = j == samples ? first : eval(c, std::polar(r, t1));
    if (cur == cplx{0.0, 0.0}) {
      w.min_modulus = 0.0;
      return w;
    }
    total += detail::phase_increment(c, r, t0, prev, t1, cur, w.min_modulus, 0);
    prev = cur;
  }
  w.turns = std::lround(total / (2.0 * std::numbers::pi));
  return w;
}

/// Smallest root modulus, from the eigenvalues of the companion matrix; +inf
/// for a nonzero constant. Leading coefficients below 1e-15 of the largest are
/// dropped (their roots lie far outside the unit disk). Double roots come out
/// to about sqrt(eps) accuracy.
inline double min_root_modulus(std::span<const cplx> c) {
  double big = 0.0;
  for (const cplx& x : c) big = std::max(big, std::abs(x));
  std::size_t d = degree(c);
  while (d > 0 && std::abs(c[d]) <= 1e-15 * big) --d;
  if (d == 0) return c.empty() || c[0] == cplx{0.0, 0.0} ? 0.0 : std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) m(0, static_cast<Eigen::Index>(k)) = -c[d - 1 - k] / c[d];
  for (std::size_t k = 1; k < d; ++k) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = 1.0;
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) return 0.0;
  return es.eigenvalues().cwiseAbs().minCoeff();
}

}  // namespace logcoef::poly
