#pragma once

/**
 * @file atlas.hpp
 * @brief Named normalized analytic functions f(z) = z + a2 z^2 + ..., their
 *        Taylor expansions, pointwise evaluation, and closed-form logarithmic
 *        coefficients where one exists.
 *
 * Families (DSL name in parentheses):
 *   Koebe (koebe)             z (1 - e^{i theta} z)^{-2}
 *   GLambda (g_lambda)        z / ((1 - z)(1 - lambda z))
 *   FLambda (f_lambda)        z / ((1 - z)(1 - lambda z)(1 + lambda/(1+lambda) z))
 *   F0 (f0)                   z - z^2 / 2
 *   F1 (f1)                   z / (1 - 3z/2 + z^3/2)
 *   GFamily (g_family)        f' = (1 - z^n)^{1/n}, f(0) = 0
 *   KAlpha (k_alpha)          K'(z) = (1 - z)^{2 alpha - 2}, K(0) = 0
 *   HalfPlane (half_plane)    z / (1 - z)
 *   Rational (rational)       num(z) / den(z)
 *   SchwarzSuperset           z / ((1 - z w(z))(1 - lambda z w(z)))
 *   ExactU (exact_u)          z / (1 - a2 z - lambda z int_0^z psi)
 */

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "logcoef/polynomial.hpp"
#include "logcoef/quadrature.hpp"
#include "logcoef/schwarz.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

namespace family {
struct Koebe { double theta = 0.0; };
struct GLambda { double lambda = 1.0; };
struct FLambda { double lambda = 1.0; };
struct F0 {};
struct F1 {};
struct GFamily { int n = 1; };
struct KAlpha { double alpha = 0.0; };
struct HalfPlane {};
struct Rational { poly::Coeffs num, den; };
struct SchwarzSuperset { double lambda = 1.0; poly::Coeffs omega; };
struct ExactU { double lambda = 1.0; cplx a2{0.0, 0.0}; poly::Coeffs psi; };
}  // namespace family

enum class SpecErrc { syntax, out_of_range, normalization };

class SpecError : public std::invalid_argument {
 public:
  SpecError(SpecErrc code, const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), code_(code), position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  SpecErrc code() const noexcept { return code_; }
  /// Byte offset into the parsed text, or npos when the error is not positional.
  std::size_t position() const noexcept { return position_; }

 private:
  SpecErrc code_;
  std::size_t position_;
};

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr int kMaxGFamilyIndex = 64;

class FunctionSpec {
 public:
  using Variant = std::variant<family::Koebe, family::GLambda, family::FLambda, family::F0,
                               family::F1, family::GFamily, family::KAlpha, family::HalfPlane,
                               family::Rational, family::SchwarzSuperset, family::ExactU>;

  /// Validates parameters; throws SpecError.
  static FunctionSpec make(Variant v) {
    std::visit([](auto& f) { validate(f); }, v);
    return FunctionSpec(std::move(v));
  }

  const Variant& variant() const noexcept { return v_; }

  template <class F>
  bool is() const noexcept { return std::holds_alternative<F>(v_); }
  template <class F>
  const F& as() const { return std::get<F>(v_); }

 private:
  explicit FunctionSpec(Variant v) : v_(std::move(v)) {}

  static void lambda_range(double l) {
    if (!(l > 0.0 && l <= 1.0))
      throw SpecError(SpecErrc::out_of_range, "lambda must lie in (0, 1]");
  }
  static void validate(const family::Koebe& k) {
    if (!std::isfinite(k.theta)) throw SpecError(SpecErrc::out_of_range, "theta must be finite");
  }
  static void validate(const family::GLambda& g) { lambda_range(g.lambda); }
  static void validate(const family::FLambda& f) { lambda_range(f.lambda); }
  static void validate(const family::F0&) {}
  static void validate(const family::F1&) {}
  static void validate(const family::GFamily& g) {
    if (g.n < 1 || g.n > kMaxGFamilyIndex)
      throw SpecError(SpecErrc::out_of_range, "g_family index n must lie in [1, 64]");
  }
  static void validate(const family::KAlpha& k) {
    if (!(k.alpha >= 0.0 && k.alpha < 1.0))
      throw SpecError(SpecErrc::out_of_range, "alpha must lie in [0, 1)");
  }
  static void validate(const family::HalfPlane&) {}
  static void validate(const family::Rational& r) {
    for (const auto* list : {&r.num, &r.den})
      for (const auto& c : *list)
        if (!is_finite(c)) throw SpecError(SpecErrc::out_of_range, "non-finite rational coefficient");
    if (r.den.empty() || r.den[0] == cplx{0.0, 0.0})
      throw SpecError(SpecErrc::normalization, "rational: denominator needs a nonzero constant term");
    if (r.num.size() < 2 || std::abs(r.num[0]) > kNormalizationTolerance)
      throw SpecError(SpecErrc::normalization, "rational: f(0) must vanish");
    if (std::abs(r.num[1] / r.den[0] - 1.0) > kNormalizationTolerance)
      throw SpecError(SpecErrc::normalization, "rational: f'(0) must equal 1");
  }
  static void validate(const family::SchwarzSuperset& s) {
    lambda_range(s.lambda);
    if (!SchwarzParams::validate(s.omega))
      throw SpecError(SpecErrc::out_of_range, "schwarz_superset: omega exceeds 1 on the unit circle");
  }
  static void validate(const family::ExactU& e) {
    lambda_range(e.lambda);
    auto psi = SchwarzParams::validate(e.psi);
    if (!psi) throw SpecError(SpecErrc::out_of_range, "exact_u: psi exceeds 1 on the unit circle");
    if (!ExactUParams::make(e.lambda, e.a2, *std::move(psi)))
      throw SpecError(SpecErrc::out_of_range,
                      "exact_u: |a2| > 1 + lambda or z/f vanishes in the disk");
  }

  Variant v_;
};

inline FunctionSpec koebe(double theta = 0.0) { return FunctionSpec::make(family::Koebe{theta}); }
inline FunctionSpec g_lambda(double l) { return FunctionSpec::make(family::GLambda{l}); }
inline FunctionSpec f_lambda(double l) { return FunctionSpec::make(family::FLambda{l}); }
inline FunctionSpec f0() { return FunctionSpec::make(family::F0{}); }
inline FunctionSpec f1() { return FunctionSpec::make(family::F1{}); }
inline FunctionSpec g_family(int n) { return FunctionSpec::make(family::GFamily{n}); }
inline FunctionSpec k_alpha(double a) { return FunctionSpec::make(family::KAlpha{a}); }
inline FunctionSpec half_plane() { return FunctionSpec::make(family::HalfPlane{}); }
inline FunctionSpec rational(poly::Coeffs num, poly::Coeffs den) {
  return FunctionSpec::make(family::Rational{std::move(num), std::move(den)});
}
inline FunctionSpec schwarz_superset(double l, const SchwarzParams& w) {
  return FunctionSpec::make(family::SchwarzSuperset{l, w.coeffs()});
}
inline FunctionSpec exact_u(const ExactUParams& p) {
  return FunctionSpec::make(family::ExactU{p.lambda(), p.a2(), p.psi().coeffs()});
}

// ---- rational forms ----------------------------------------------------

struct RationalForm {
  poly::Coeffs num, den;
};

/// num/den for every family that is a rational function; nullopt for GFamily and KAlpha.
inline std::optional<RationalForm> rational_form(const FunctionSpec& spec) {
  using namespace family;
  const poly::Coeffs z{0.0, 1.0};
  return std::visit(
      [&](const auto& f) -> std::optional<RationalForm> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Koebe>) {
          const cplx u = std::polar(1.0, f.theta);
          return RationalForm{z, {1.0, -2.0 * u, u * u}};
        } else if constexpr (std::is_same_v<T, GLambda>) {
          return RationalForm{z, {1.0, -(1.0 + f.lambda), f.lambda}};
        } else if constexpr (std::is_same_v<T, FLambda>) {
          const double q = f.lambda / (1.0 + f.lambda);
          const poly::Coeffs a{1.0, -1.0}, b{1.0, -f.lambda}, c{1.0, q};
          return RationalForm{z, poly::mul(poly::mul(a, b), c)};
        } else if constexpr (std::is_same_v<T, F0>) {
          return RationalForm{{0.0, 1.0, -0.5}, {1.0}};
        } else if constexpr (std::is_same_v<T, F1>) {
          return RationalForm{z, {1.0, -1.5, 0.0, 0.5}};
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return RationalForm{z, {1.0, -1.0}};
        } else if constexpr (std::is_same_v<T, Rational>) {
          return RationalForm{f.num, f.den};
        } else if constexpr (std::is_same_v<T, SchwarzSuperset>) {
          poly::Coeffs zw(f.omega.size() + 1, cplx{0.0, 0.0});
          for (std::size_t k = 0; k < f.omega.size(); ++k) zw[k + 1] = f.omega[k];
          poly::Coeffs a(zw.size()), b(zw.size());
          for (std::size_t k = 0; k < zw.size(); ++k) {
            a[k] = -zw[k];
            b[k] = -f.lambda * zw[k];
          }
          a[0] += 1.0;
          b[0] += 1.0;
          return RationalForm{z, poly::mul(a, b)};
        } else if constexpr (std::is_same_v<T, ExactU>) {
          return RationalForm{z, exact_u_denominator(f.lambda, f.a2, f.psi)};
        } else {
          return std::nullopt;
        }
      },
      spec.variant());
}

// ---- Taylor expansion --------------------------------------------------

/// Series of f(z)/z to the given order.
inline TruncatedSeries f_over_z_series(const FunctionSpec& spec, std::size_t order) {
  if (auto rf = rational_form(spec)) {
    poly::Coeffs shifted(rf->num.begin() + 1, rf->num.end());
    return TruncatedSeries(order, shifted) * ts_reciprocal(TruncatedSeries(order, rf->den));
  }
  if (spec.is<family::GFamily>()) {
    const int n = spec.as<family::GFamily>().n;
    const std::size_t big = order + 1;
    const auto one_minus = TruncatedSeries::one(big) - TruncatedSeries::monomial(big, n);
    const TruncatedSeries fprime = ts_exp(ts_log(one_minus) * (1.0 / n));
    return ts_integrate(fprime).over_z().resized(order);
  }
  // KAlpha: K/z = -[(exp(eps L) - 1)/eps] / z with L = log(1 - z), eps = 2 alpha - 1.
  const double eps = 2.0 * spec.as<family::KAlpha>().alpha - 1.0;
  const std::size_t big = order + 1;
  const TruncatedSeries log1mz = ts_log(TruncatedSeries(big, {1.0, -1.0}));
  return (-ts_expm1_over(log1mz, eps)).over_z().resized(order);
}

/// Series of f itself: c0 = 0, c1 = 1.
inline TruncatedSeries taylor_of(const FunctionSpec& spec, std::size_t order) {
  if (order < 1) throw std::invalid_argument("taylor_of: order must be at least 1");
  return f_over_z_series(spec, order - 1).resized(order).times_z();
}

// ---- pointwise evaluation ----------------------------------------------

/// f, f', f'' at a point, with an error estimate for quadrature-defined values.
struct Jet {
  cplx f, df, d2f;
  double error = 0.0;
};

namespace detail {

inline cplx expm1c(cplx w) {
  if (std::abs(w) < 1e-2) {
    cplx term = w, sum = w;
    for (int k = 2; k <= 9; ++k) {
      term *= w / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return std::exp(w) - 1.0;
}

inline Jet rational_jet(const RationalForm& r, cplx z) {
  const poly::Value2 p = poly::eval2(r.num, z);
  const poly::Value2 q = poly::eval2(r.den, z);
  const cplx w = p.dp * q.p - p.p * q.dp;
  const cplx f = p.p / q.p;
  const cplx df = w / (q.p * q.p);
  const cplx d2f = (p.d2p * q.p - p.p * q.d2p) / (q.p * q.p) - 2.0 * q.dp * w / (q.p * q.p * q.p);
  return {f, df, d2f, 0.0};
}

inline cplx ipow(cplx z, int n) {
  cplx r{1.0, 0.0};
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

inline cplx g_family_derivative(int n, cplx z) {
  return std::exp(std::log(1.0 - ipow(z, n)) / static_cast<double>(n));
}

inline Jet g_family_jet(int n, cplx z) {
  const cplx zn = ipow(z, n);
  const cplx df = g_family_derivative(n, z);
  const cplx d2f = -ipow(z, n - 1) * df / (1.0 - zn);
  if (z == cplx{0.0, 0.0}) return {0.0, df, d2f, 0.0};
  auto integrand = [n, z](double s) { return z * g_family_derivative(n, s * z); };
  const auto q = quad::integrate(integrand, 0.0, 1.0, 1e-15);
  return {q.value, df, d2f, q.error};
}

inline Jet k_alpha_jet(double alpha, cplx z) {
  const double eps = 2.0 * alpha - 1.0;
  const cplx L = std::log(1.0 - z);
  const cplx f = eps == 0.0 ? -L : -expm1c(eps * L) / eps;
  const cplx df = std::exp((eps - 1.0) * L);
  const cplx d2f = (1.0 - eps) * std::exp((eps - 2.0) * L);
  return {f, df, d2f, 0.0};
}

}  // namespace detail

/// Closed-form jet for |z| < 1; GFamily's f is a quadrature of its closed-form f'.
inline Jet jet_at(const FunctionSpec& spec, cplx z) {
  if (!is_finite(z) || !(std::abs(z) < 1.0))
    throw std::domain_error("jet_at: z must lie in the open unit disk");
  Jet j;
  if (auto rf = rational_form(spec)) {
    j = detail::rational_jet(*rf, z);
  } else if (spec.is<family::GFamily>()) {
    j = detail::g_family_jet(spec.as<family::GFamily>().n, z);
  } else {
    j = detail::k_alpha_jet(spec.as<family::KAlpha>().alpha, z);
  }
  if (!is_finite(j.f) || !is_finite(j.df) || !is_finite(j.d2f))
    throw std::domain_error("jet_at: non-finite value (pole or zero of the denominator)");
  return j;
}

inline cplx eval_at(const FunctionSpec& spec, cplx z) { return jet_at(spec, z).f; }

// ---- closed-form logarithmic coefficients ------------------------------

/// gamma_n from the known closed forms; nullopt when no closed form is available.
inline std::optional<cplx> gamma_closed_form(const FunctionSpec& spec, int n) {
  using namespace family;
  if (n < 1) throw std::invalid_argument("gamma_closed_form: n must be >= 1");
  const double dn = n;
  auto f_lambda_gamma = [dn, n](double l) {
    const double q = l / (1.0 + l);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return 0.5 * ((1.0 + std::pow(l, dn)) / dn + sign * std::pow(q, dn) / dn);
  };
  return std::visit(
      [&](const auto& f) -> std::optional<cplx> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Koebe>) {
          return std::polar(1.0 / dn, dn * f.theta);
        } else if constexpr (std::is_same_v<T, GLambda>) {
          return (1.0 + std::pow(f.lambda, dn)) / (2.0 * dn);
        } else if constexpr (std::is_same_v<T, FLambda>) {
          return f_lambda_gamma(f.lambda);
        } else if constexpr (std::is_same_v<T, F1>) {
          return f_lambda_gamma(1.0);
        } else if constexpr (std::is_same_v<T, F0>) {
          return -1.0 / (dn * std::pow(2.0, dn + 1.0));
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return 1.0 / (2.0 * dn);
        } else if constexpr (std::is_same_v<T, GFamily>) {
          if (n != f.n) return std::nullopt;
          return -1.0 / (2.0 * dn * (dn + 1.0));
        } else {
          return std::nullopt;
        }
      },
      spec.variant());
}

// ---- text form ---------------------------------------------------------

namespace detail {

inline std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(cplx c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  std::string im = format_double(c.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(c.real()) + im + "i";
}

inline std::string format_list(const poly::Coeffs& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += format_complex(v[k]);
  }
  return s + "]";
}

}  // namespace detail

/// Canonical DSL text; parse_spec(render(s)) reproduces s exactly.
inline std::string render(const FunctionSpec& spec) {
  using namespace family;
  using detail::format_complex;
  using detail::format_double;
  using detail::format_list;
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Koebe>) return "koebe(theta=" + format_double(f.theta) + ")";
        else if constexpr (std::is_same_v<T, GLambda>) return "g_lambda(lambda=" + format_double(f.lambda) + ")";
        else if constexpr (std::is_same_v<T, FLambda>) return "f_lambda(lambda=" + format_double(f.lambda) + ")";
        else if constexpr (std::is_same_v<T, F0>) return "f0()";
        else if constexpr (std::is_same_v<T, F1>) return "f1()";
        else if constexpr (std::is_same_v<T, GFamily>) return "g_family(n=" + std::to_string(f.n) + ")";
        else if constexpr (std::is_same_v<T, KAlpha>) return "k_alpha(alpha=" + format_double(f.alpha) + ")";
        else if constexpr (std::is_same_v<T, HalfPlane>) return "half_plane()";
        else if constexpr (std::is_same_v<T, Rational>)
          return "rational(num=" + format_list(f.num) + ", den=" + format_list(f.den) + ")";
        else if constexpr (std::is_same_v<T, SchwarzSuperset>)
          return "schwarz_superset(lambda=" + format_double(f.lambda) + ", omega=" + format_list(f.omega) + ")";
        else
          return "exact_u(lambda=" + format_double(f.lambda) + ", a2=" + format_complex(f.a2) +
                 ", psi=" + format_list(f.psi) + ")";
      },
      spec.variant());
}

}  // namespace logcoef
