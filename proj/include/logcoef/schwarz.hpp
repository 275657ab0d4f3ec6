#pragma once

/**
 * @file schwarz.hpp
 * @brief Bounded analytic parameters: polynomials omega with sup_{|z|=1} |omega| <= 1.
 *
 * A SchwarzParams value can only be obtained through validate() or project(),
 * so holding one is proof that the boundedness check ran. ExactUParams wraps
 * the data of z/f = 1 - a2 z - lambda z int_0^z psi, with its nonvanishing check.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logcoef/polynomial.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

class SchwarzParams {
 public:
  static constexpr std::size_t kValidationSamples = 1024;
  static constexpr double kSupTolerance = 1e-10;

  /// Accepts when the maximum over 1024 equiangular boundary samples is <= 1 + 1e-10.
  static std::optional<SchwarzParams> validate(poly::Coeffs coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    for (const auto& c : coeffs)
      if (!is_finite(c)) return std::nullopt;
    const double sup = poly::circle_max(coeffs, kValidationSamples).sampled;
    if (sup > 1.0 + kSupTolerance) return std::nullopt;
    return SchwarzParams(std::move(coeffs), sup);
  }

  /// Rescales by the polished boundary maximum when it exceeds 1. The sampled
  /// maximum of the rescaled polynomial is the old one divided by the factor,
  /// so the validation grid is not evaluated twice.
  static std::optional<SchwarzParams> project(poly::Coeffs coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    for (const auto& c : coeffs)
      if (!is_finite(c)) return std::nullopt;
    const poly::CircleMax m = poly::circle_max(coeffs, kValidationSamples);
    double sampled = m.sampled;
    if (m.polished > 1.0) {
      for (auto& c : coeffs) c /= m.polished;
      sampled /= m.polished;
    }
    if (!std::isfinite(sampled) || sampled > 1.0 + kSupTolerance) return std::nullopt;
    return SchwarzParams(std::move(coeffs), sampled);
  }

  static SchwarzParams constant(cplx c) {
    if (!(std::abs(c) <= 1.0)) throw std::domain_error("SchwarzParams::constant: |c| > 1");
    return SchwarzParams({c}, std::abs(c));
  }

  bool validated() const noexcept { return true; }
  const poly::Coeffs& coeffs() const noexcept { return coeffs_; }
  cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{0.0, 0.0}; }
  double sampled_sup() const noexcept { return sup_; }
  cplx eval(cplx z) const { return poly::eval(coeffs_, z); }
  TruncatedSeries series(std::size_t order) const { return TruncatedSeries(order, coeffs_); }

 private:
  SchwarzParams(poly::Coeffs c, double sup) : coeffs_(std::move(c)), sup_(sup) {}
  poly::Coeffs coeffs_;
  double sup_ = 0.0;
};

inline void require_lambda(double lambda, const char* who) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::domain_error(std::string(who) + ": lambda must lie in (0, 1]");
}

/// Coefficients of h = 1 - a2 z - lambda z int_0^z psi.
inline poly::Coeffs exact_u_denominator(double lambda, cplx a2, std::span<const cplx> psi) {
  poly::Coeffs h(psi.size() + 2, cplx{0.0, 0.0});
  h[0] = 1.0;
  h[1] = -a2;
  for (std::size_t k = 0; k < psi.size(); ++k)
    h[k + 2] = -lambda * psi[k] / static_cast<double>(k + 1);
  return h;
}

class ExactUParams {
 public:
  static constexpr double kNonvanishingRadius = 0.999;
  static constexpr double kMinModulus = 1e-6;
  static constexpr std::size_t kWindingSamples = 1024;
  static constexpr double kRootSlack = 1e-7;  // companion-matrix accuracy at a double root on |z| = 1

  /// nullopt when |a2| > 1 + lambda, when z/f has a zero in |z| <= 0.999 (or comes
  /// within 1e-6 of one), or when z/f has a root of modulus below 1 - 1e-7. The
  /// sampled test alone admits roots in 0.999 < |z| < 1, which put poles inside the disk.
  static std::optional<ExactUParams> make(double lambda, cplx a2, SchwarzParams psi) {
    require_lambda(lambda, "ExactUParams");
    if (!is_finite(a2) || std::abs(a2) > 1.0 + lambda + 1e-12) return std::nullopt;
    poly::Coeffs h = exact_u_denominator(lambda, a2, psi.coeffs());
    const poly::Winding w = poly::winding(h, kWindingSamples, kNonvanishingRadius);
    if (w.turns != 0 || !(w.min_modulus > kMinModulus)) return std::nullopt;
    if (!(poly::min_root_modulus(h) >= 1.0 - kRootSlack)) return std::nullopt;
    return ExactUParams(lambda, a2, std::move(psi), std::move(h), w.min_modulus);
  }

  double lambda() const noexcept { return lambda_; }
  cplx a2() const noexcept { return a2_; }
  const SchwarzParams& psi() const noexcept { return psi_; }
  bool nonvanishing_ok() const noexcept { return true; }
  const poly::Coeffs& z_over_f() const noexcept { return h_; }
  double min_modulus() const noexcept { return min_modulus_; }

 private:
  ExactUParams(double l, cplx a2, SchwarzParams psi, poly::Coeffs h, double m)
      : lambda_(l), a2_(a2), psi_(std::move(psi)), h_(std::move(h)), min_modulus_(m) {}
  double lambda_;
  cplx a2_;
  SchwarzParams psi_;
  poly::Coeffs h_;
  double min_modulus_;
};

// ---- random candidates -------------------------------------------------

using Rng = std::mt19937_64;

/// 53-bit uniform in [0, 1); independent of the standard library's distributions.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline cplx random_in_disk(Rng& rng, double radius = 1.0) {
  const double r = radius * std::sqrt(uniform01(rng));
  return std::polar(r, 2.0 * std::numbers::pi * uniform01(rng));
}

inline std::size_t random_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

/// Taylor coefficients z^0..z^degree of e^{i phase} prod (z - a)/(1 - conj(a) z).
inline poly::Coeffs blaschke_coefficients(std::span<const cplx> zeros, double phase,
                                          std::size_t degree) {
  TruncatedSeries b = TruncatedSeries::constant(degree, std::polar(1.0, phase));
  for (const cplx& a : zeros) {
    const TruncatedSeries numer(degree, {-a, 1.0});
    const TruncatedSeries denom(degree, {1.0, -std::conj(a)});
    b = b * numer * ts_reciprocal(denom);
  }
  return {b.coeffs().begin(), b.coeffs().end()};
}

struct CandidateOptions {
  std::size_t max_poly_degree = 6;
  std::size_t max_blaschke_degree = 3;
  double blaschke_zero_radius = 0.95;
};

/// Random polynomial in the unit polydisk, projected to the bounded set.
inline SchwarzParams random_polynomial_schwarz(Rng& rng, const CandidateOptions& opt = {}) {
  const std::size_t deg = random_index(rng, opt.max_poly_degree + 1);
  poly::Coeffs c(opt.max_poly_degree + 1, cplx{0.0, 0.0});
  for (std::size_t k = 0; k <= deg; ++k) c[k] = random_in_disk(rng);
  auto p = SchwarzParams::project(std::move(c));
  if (!p) throw std::logic_error("projection of a finite polynomial failed validation");
  return *std::move(p);
}

/// Finite Blaschke product truncated to the polynomial degree, then projected.
inline SchwarzParams random_blaschke_schwarz(Rng& rng, const CandidateOptions& opt = {}) {
  const std::size_t deg = random_index(rng, opt.max_blaschke_degree + 1);
  std::vector<cplx> zeros(deg);
  for (auto& a : zeros) a = random_in_disk(rng, opt.blaschke_zero_radius);
  const double phase = 2.0 * std::numbers::pi * uniform01(rng);
  auto p = SchwarzParams::project(blaschke_coefficients(zeros, phase, opt.max_poly_degree));
  if (!p) throw std::logic_error("projection of a Blaschke truncation failed validation");
  return *std::move(p);
}

inline SchwarzParams random_schwarz(Rng& rng, const CandidateOptions& opt = {}) {
  return uniform01(rng) < 0.5 ? random_polynomial_schwarz(rng, opt)
                              : random_blaschke_schwarz(rng, opt);
}

}  // namespace logcoef
