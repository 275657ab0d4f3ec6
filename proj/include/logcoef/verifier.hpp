#pragma once

/**
 * @file verifier.hpp
 * @brief Logarithmic coefficients, the closed-form bounds they are compared
 *        against, and the grid suite that pairs them into BoundCheck records.
 *
 * gamma_n is half the n-th coefficient of log(f(z)/z). Every partial sum
 * carries the tail bound it is allowed to claim: c^2/N when |gamma_n| <= c/n
 * is known for the family, a geometric tail for the F0 weighted sum, and
 * nothing otherwise.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "logcoef/atlas.hpp"
#include "logcoef/dilog.hpp"
#include "logcoef/quadrature.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

// ---- logarithmic coefficients ------------------------------------------

enum class GammaSource { series, closed_form };

inline const char* to_string(GammaSource s) { return s == GammaSource::series ? "series" : "closed_form"; }

struct LogCoeffProfile {
  std::vector<cplx> gammas;  // gammas[k] holds gamma_{k+1}
  GammaSource source = GammaSource::series;
  FunctionSpec spec;

  std::size_t size() const noexcept { return gammas.size(); }
  /// 1-based access.
  cplx gamma(std::size_t n) const { return gammas.at(n - 1); }
};

/// gamma_1..gamma_N from the truncated series of log(f/z).
inline LogCoeffProfile log_coefficients(const FunctionSpec& spec, std::size_t N) {
  if (N < 1) throw std::invalid_argument("log_coefficients: N must be at least 1");
  const TruncatedSeries L = ts_log(f_over_z_series(spec, N));
  LogCoeffProfile p{std::vector<cplx>(N), GammaSource::series, spec};
  for (std::size_t n = 1; n <= N; ++n) p.gammas[n - 1] = 0.5 * L[n];
  return p;
}

/// Closed-form profile; nullopt unless every gamma_1..gamma_N has a closed form.
inline std::optional<LogCoeffProfile> closed_form_profile(const FunctionSpec& spec, std::size_t N) {
  LogCoeffProfile p{std::vector<cplx>(N), GammaSource::closed_form, spec};
  for (std::size_t n = 1; n <= N; ++n) {
    auto g = gamma_closed_form(spec, static_cast<int>(n));
    if (!g) return std::nullopt;
    p.gammas[n - 1] = *g;
  }
  return p;
}

// ---- weighted square sums with tail notes ------------------------------

enum class Weights { unit, n_squared };

struct TailNote {
  bool available = false;
  double bound = 0.0;  // upper bound on the omitted sum over n > N
  std::string basis;   // how the bound was obtained
};

struct L2Sum {
  double partial = 0.0;
  TailNote tail;
};

/// inf of G_alpha on the disk, attained at z = -1.
inline double beta_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::domain_error("beta_alpha: alpha must lie in [0, 1)");
  if (alpha == 0.5) return 1.0 / (2.0 * std::numbers::ln2);
  const double x = 1.0 - 2.0 * alpha;
  return x / (2.0 * std::expm1(x * std::numbers::ln2));
}

/// The constant c of a known estimate |gamma_n| <= c / n, if the family has one.
inline std::optional<double> gamma_decay_constant(const FunctionSpec& spec) {
  using namespace family;
  return std::visit(
      [](const auto& f) -> std::optional<double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Koebe> || std::is_same_v<T, GLambda>) return 1.0;
        else if constexpr (std::is_same_v<T, FLambda> || std::is_same_v<T, F1>) return 1.25;
        else if constexpr (std::is_same_v<T, F0> || std::is_same_v<T, GFamily>) return 0.25;
        else if constexpr (std::is_same_v<T, HalfPlane>) return 0.5;
        else if constexpr (std::is_same_v<T, KAlpha>) return 1.0 - beta_alpha(f.alpha);  // starlike of order beta
        else return std::nullopt;
      },
      spec.variant());
}

inline L2Sum gamma_l2(const LogCoeffProfile& p, Weights w = Weights::unit) {
  L2Sum out;
  double comp = 0.0;  // Kahan compensation
  for (std::size_t n = 1; n <= p.size(); ++n) {
    const double wn = w == Weights::unit ? 1.0 : static_cast<double>(n) * static_cast<double>(n);
    const double y = wn * std::norm(p.gamma(n)) - comp;
    const double t = out.partial + y;
    comp = (t - out.partial) - y;
    out.partial = t;
  }
  const double N = static_cast<double>(p.size());
  const std::optional<double> c = gamma_decay_constant(p.spec);
  if (w == Weights::unit && c) {
    out.tail = {true, *c * *c / N, "|gamma_n| <= c/n with c = " + detail::format_double(*c)};
  } else if (w == Weights::n_squared && p.spec.is<family::F0>()) {
    out.tail = {true, std::pow(4.0, -(N + 1.0)) / 3.0, "geometric: n^2 |gamma_n|^2 = 4^-(n+1)"};
  } else {
    out.tail = {false, 0.0, "no tail bound"};
  }
  return out;
}

// ---- dilogarithm tails -------------------------------------------------

/// sum_{n > N} x^n / n^2 for x in [-1, 1].
inline double li2_tail(double x, std::size_t N) {
  require_unit_interval(x, "li2_tail");
  const double dN = static_cast<double>(N);
  if (x == 1.0 && N >= 16) {
    // Euler-Maclaurin for zeta(2) minus its partial sum; the first omitted term is below 1e-16 at N = 16
    const double i1 = 1.0 / dN, i2 = i1 * i1, i3 = i2 * i1, i5 = i3 * i2, i7 = i5 * i2, i9 = i7 * i2;
    return i1 - 0.5 * i2 + i3 / 6.0 - i5 / 30.0 + i7 / 42.0 - i9 / 30.0 + 5.0 * i9 * i2 / 66.0;
  }
  if (std::abs(x) <= 0.999) {
    double sum = 0.0, xn = std::pow(x, dN);
    for (std::size_t n = N + 1;; ++n) {
      xn *= x;
      const double term = xn / (static_cast<double>(n) * static_cast<double>(n));
      sum += term;
      if (std::abs(term) < 1e-20 * (std::abs(sum) + 1e-300) || xn == 0.0) break;
    }
    return sum;
  }
  double partial = 0.0, xn = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    xn *= x;
    partial += xn / (static_cast<double>(n) * static_cast<double>(n));
  }
  return li2_value(x) - partial;
}

// ---- closed-form right-hand sides --------------------------------------

inline double u_l2_bound(double lambda) {
  require_lambda(lambda, "u_l2_bound");
  return 0.25 * (kZeta2 + 2.0 * li2_value(lambda) + li2_value(lambda * lambda));
}

/// Exact tail sum_{n > N} ((1 + lambda^n) / (2n))^2 of the g_lambda square sum.
inline double g_lambda_tail(double lambda, std::size_t N) {
  return 0.25 * (li2_tail(1.0, N) + 2.0 * li2_tail(lambda, N) + li2_tail(lambda * lambda, N));
}

struct SharpnessValues {
  double A = 0.0;
  double B = 0.0;
  double N = 0.0;
  double denominator = 0.0;            // [(1+l)^2 - t^2 l^2][1 + l + t l^2]
  double consistency_residual = 0.0;   // |B * denominator - N|
};

inline double sharpness_A(double l) {
  require_lambda(l, "sharpness_A");
  const double q = l / (1.0 + l);
  return 2.0 * (li2_value(-l * q) + li2_value(-q)) + li2_value(q * q);
}

inline double sharpness_B(double l, double t) {
  return 2.0 / (1.0 + l + t * l) - 1.0 / (1.0 + l - t * l) + l / (1.0 + l + t * l * l);
}

inline double sharpness_N(double l, double t) {
  const double p = 1.0 + l;
  return p * p * p - (3.0 - l) * p * l * t - 4.0 * l * l * l * t * t;
}

inline SharpnessValues sharpness_functions(double l, double t) {
  require_lambda(l, "sharpness_functions");
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("sharpness_functions: t must lie in [0, 1]");
  SharpnessValues v;
  v.A = sharpness_A(l);
  v.B = sharpness_B(l, t);
  v.N = sharpness_N(l, t);
  v.denominator = ((1.0 + l) * (1.0 + l) - t * t * l * l) * (1.0 + l + t * l * l);
  v.consistency_residual = std::abs(v.B * v.denominator - v.N);
  return v;
}

/// A(lambda) = -2 lambda int_0^1 B(lambda, t) log(1/t) dt, by quadrature.
inline double sharpness_A_integral(double l) {
  require_lambda(l, "sharpness_A_integral");
  auto g = [l](double t) { return sharpness_B(l, t) * -std::log(t); };
  // split at 2^-k so the logarithmic endpoint is resolved geometrically
  double total = 0.0, hi = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double lo = hi * 0.5;
    total += quad::integrate(g, lo, hi, 1e-16).value;
    hi = lo;
  }
  return -2.0 * l * total;  // remaining [0, 2^-60] contributes below 1e-16
}

struct GAlphaBounds {
  double weighted_l2 = 0.0;  // bound on sum n^2 |gamma_n|^2
  double coef_bound = 0.0;   // |gamma_n| <= coef_bound / n
  double l2 = 0.0;           // bound on sum |gamma_n|^2
};

inline GAlphaBounds g_alpha_bounds(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("g_alpha_bounds: alpha must lie in (0, 1]");
  const double s = 1.0 / ((1.0 + alpha) * (1.0 + alpha));
  return {alpha / (4.0 * (alpha + 2.0)), alpha / (2.0 * (alpha + 1.0)), 0.25 * alpha * alpha * li2_value(s)};
}

struct ConvexOrderProfile {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> delta;        // delta_1..delta_N from G_alpha
  std::vector<double> delta_via_k;  // same coefficients as 2 n gamma_n(K_alpha)
  double max_imag = 0.0;            // largest |Im| met in either route
  double gamma_l2 = 0.0;            // 1/4 sum delta_n^2 / n^2
};

/// G_alpha - 1 expanded two ways: the closed quotient of G_alpha, and z K'/K - 1.
inline ConvexOrderProfile convex_order_profile(double alpha, std::size_t N) {
  ConvexOrderProfile p;
  p.alpha = alpha;
  p.beta = beta_alpha(alpha);
  const double eps = 2.0 * alpha - 1.0;
  const std::size_t big = N + 1;
  const TruncatedSeries L = ts_log(TruncatedSeries(big, {1.0, -1.0}));
  // (1-z)^{-eps} - 1 = -eps X with X = expm1_over(L, -eps); G = -1 / ((1 - z) X / z)
  const TruncatedSeries x_over_z = ts_expm1_over(L, -eps).over_z().resized(N);
  const TruncatedSeries den = TruncatedSeries(N, {1.0, -1.0}) * x_over_z;
  const TruncatedSeries G = -ts_reciprocal(den);
  const LogCoeffProfile k = log_coefficients(k_alpha(alpha), N);
  p.delta.resize(N);
  p.delta_via_k.resize(N);
  double comp = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const cplx dk = 2.0 * static_cast<double>(n) * k.gamma(n);
    p.delta[n - 1] = G[n].real();
    p.delta_via_k[n - 1] = dk.real();
    p.max_imag = std::max({p.max_imag, std::abs(G[n].imag()), std::abs(dk.imag())});
    const double y = 0.25 * G[n].real() * G[n].real() / (static_cast<double>(n) * static_cast<double>(n)) - comp;
    const double t = p.gamma_l2 + y;
    comp = (t - p.gamma_l2) - y;
    p.gamma_l2 = t;
  }
  return p;
}

// ---- bound checks ------------------------------------------------------

enum class CheckStatus { holds, equality, violated };
/// upper: lhs <= rhs on the partial sum; strict: lhs < rhs for the full quantity
/// (the tail bound is charged against the slack); equality: lhs == rhs within
/// tolerance plus tail; within: a residual lhs that must not exceed the threshold rhs.
enum class CheckKind { upper, strict, equality, within };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::equality: return "equality";
    case CheckStatus::violated: return "violated";
  }
  return "?";
}

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::upper: return "upper";
    case CheckKind::strict: return "strict";
    case CheckKind::equality: return "equality";
    case CheckKind::within: return "within";
  }
  return "?";
}

struct Tolerances {
  double equality = 1e-9;
  double violation = 1e-9;
};

struct BoundCheck {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CheckKind kind = CheckKind::upper;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  CheckStatus status = CheckStatus::violated;
  std::size_t N = 0;
  double tail_bound = 0.0;
  std::string error;  // non-empty when a constituent threw
};

inline CheckStatus classify(CheckKind kind, double slack, double tail, const Tolerances& tol) {
  if (!std::isfinite(slack)) return CheckStatus::violated;
  switch (kind) {
    case CheckKind::upper:
      if (std::abs(slack) <= tol.equality) return CheckStatus::equality;
      return slack < -tol.violation ? CheckStatus::violated : CheckStatus::holds;
    case CheckKind::strict:
      return slack - tail > tol.equality ? CheckStatus::holds : CheckStatus::violated;
    case CheckKind::equality:
      return std::abs(slack) <= tol.equality + tail ? CheckStatus::equality : CheckStatus::violated;
    case CheckKind::within:
      return slack >= 0.0 ? CheckStatus::holds : CheckStatus::violated;
  }
  return CheckStatus::violated;
}

inline nlohmann::ordered_json to_json(const BoundCheck& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["params"] = c.params;
  j["kind"] = to_string(c.kind);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["slack"] = c.slack;
  j["status"] = to_string(c.status);
  j["N"] = c.N;
  j["tail_bound"] = c.tail_bound;
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

struct SuiteConfig {
  std::vector<double> lambdas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::size_t N = 128;
  std::size_t t_steps = 100;  // t grid 0, 1/t_steps, ..., 1
  Tolerances tol;
};

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const SuiteConfig& cfg) : cfg_(cfg) {}

  /// Evaluates `body` (which returns {lhs, rhs, tail}) and records the check;
  /// an exception becomes a violated record carrying the message.
  template <class Body>
  void add(std::string name, nlohmann::ordered_json params, CheckKind kind, std::size_t N, Body&& body) {
    BoundCheck c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.kind = kind;
    c.N = N;
    try {
      const auto [lhs, rhs, tail] = body();
      c.lhs = lhs;
      c.rhs = rhs;
      c.tail_bound = tail;
      c.slack = rhs - lhs;
      c.status = classify(kind, c.slack, tail, cfg_.tol);
    } catch (const std::exception& e) {
      c.lhs = c.rhs = c.slack = std::numeric_limits<double>::quiet_NaN();
      c.status = CheckStatus::violated;
      c.error = e.what();
    }
    out_.push_back(std::move(c));
  }

  std::vector<BoundCheck> take() && { return std::move(out_); }

 private:
  const SuiteConfig& cfg_;
  std::vector<BoundCheck> out_;
};

struct Sides {
  double lhs, rhs, tail;
};

inline double max_abs_n_gamma(const LogCoeffProfile& p) {
  double m = 0.0;
  for (std::size_t n = 1; n <= p.size(); ++n) m = std::max(m, static_cast<double>(n) * std::abs(p.gamma(n)));
  return m;
}

/// sum_{k>=1} 4^-k (4k - 1) / (k^2 (2k - 1)^2), summed to double precision.
inline double f1_quarter_series() {
  double s = 0.0, p = 1.0;
  for (int k = 1; k <= 40; ++k) {
    p *= 0.25;
    const double dk = k, o = 2.0 * dk - 1.0;
    s += p * (4.0 * dk - 1.0) / (dk * dk * o * o);
  }
  return s;
}

/// sum_{n > N} |gamma_n(f_1)|^2 from the closed form 1/n + (-1)^n / (n 2^{n+1}).
inline double f1_tail(std::size_t N) {
  double extra = 0.0;
  for (std::size_t n = N + 1; n <= N + 80; ++n) {
    const double dn = static_cast<double>(n);
    const double e = (n % 2 == 0 ? 1.0 : -1.0) / (dn * std::pow(2.0, dn + 1.0));
    extra += 2.0 * e / dn + e * e;
  }
  return li2_tail(1.0, N) + extra;
}

inline nlohmann::ordered_json spec_params(const FunctionSpec& s) {
  return nlohmann::ordered_json{{"spec", render(s)}};
}

}  // namespace detail

/// Every inequality, equality case and sign claim over the configured grids,
/// in a fixed order: lambda checks, fixed-spec checks, then alpha checks.
inline std::vector<BoundCheck> run_suite(const SuiteConfig& cfg = {}) {
  using detail::Sides;
  using Json = nlohmann::ordered_json;
  for (double l : cfg.lambdas) require_lambda(l, "run_suite");
  for (double a : cfg.alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("run_suite: alpha must lie in [0, 1]");
  if (cfg.N < 16) throw std::invalid_argument("run_suite: N must be at least 16");
  if (cfg.t_steps < 1) throw std::invalid_argument("run_suite: t grid needs at least one step");

  detail::SuiteBuilder b(cfg);
  const std::size_t N = cfg.N;

  for (double l : cfg.lambdas) {
    const FunctionSpec g = g_lambda(l);
    const FunctionSpec f = f_lambda(l);
    Json lp{{"lambda", l}};

    b.add("u_l2_sharp", Json{{"lambda", l}, {"spec", render(g)}}, CheckKind::equality, N, [&] {
      const double s = gamma_l2(log_coefficients(g, N)).partial + g_lambda_tail(l, N);
      return Sides{s, u_l2_bound(l), 0.0};
    });
    b.add("u_l2_counterexample_sum", Json{{"lambda", l}, {"spec", render(f)}}, CheckKind::strict, N, [&] {
      const L2Sum s = gamma_l2(log_coefficients(f, N));
      return Sides{s.partial, u_l2_bound(l), s.tail.bound};
    });
    b.add("u_termwise_exceeded", Json{{"lambda", l}, {"spec", render(f)}}, CheckKind::strict, 10, [&] {
      // best even n <= 10: lhs is the g_lambda value, rhs the f_lambda modulus
      const LogCoeffProfile p = log_coefficients(f, 10);
      double best_gap = -std::numeric_limits<double>::infinity(), lhs = 0.0, rhs = 0.0;
      for (int n = 2; n <= 10; n += 2) {
        const double gl = (1.0 + std::pow(l, n)) / (2.0 * n);
        const double fl = std::abs(p.gamma(n));
        if (fl - gl > best_gap) {
          best_gap = fl - gl;
          lhs = gl;
          rhs = fl;
        }
      }
      return Sides{lhs, rhs, 0.0};
    });
    b.add("A_negative", lp, CheckKind::strict, 0, [&] { return Sides{sharpness_A(l), 0.0, 0.0}; });
    b.add("A_integral_representation", lp, CheckKind::equality, 0,
          [&] { return Sides{sharpness_A_integral(l), sharpness_A(l), 0.0}; });

    // t in [0, 1]; at lambda = 1 the claim is t in [0, 1) and N(1, 1) = 0 is listed separately
    const std::size_t t_last = l == 1.0 ? cfg.t_steps - 1 : cfg.t_steps;
    const double t_max = static_cast<double>(t_last) / static_cast<double>(cfg.t_steps);
    Json scan{{"lambda", l}, {"t_min", 0.0}, {"t_max", t_max}, {"t_points", t_last + 1}};
    auto scan_min = [&](auto fn) {
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k <= t_last; ++k)
        m = std::min(m, fn(static_cast<double>(k) / static_cast<double>(cfg.t_steps)));
      return m;
    };
    b.add("N_positive", scan, CheckKind::strict, 0,
          [&] { return Sides{0.0, scan_min([&](double t) { return sharpness_N(l, t); }), 0.0}; });
    b.add("B_positive", scan, CheckKind::strict, 0,
          [&] { return Sides{0.0, scan_min([&](double t) { return sharpness_B(l, t); }), 0.0}; });
    b.add("N_decreasing", scan, CheckKind::upper, 0, [&] {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < cfg.t_steps; ++k) {
        const double t0 = static_cast<double>(k) / static_cast<double>(cfg.t_steps);
        const double t1 = static_cast<double>(k + 1) / static_cast<double>(cfg.t_steps);
        worst = std::max(worst, sharpness_N(l, t1) - sharpness_N(l, t0));
      }
      return Sides{worst, 0.0, 0.0};
    });
    b.add("B_consistency", scan, CheckKind::within, 0, [&] {
      double worst = 0.0;
      for (std::size_t k = 0; k <= cfg.t_steps; ++k)
        worst = std::max(worst, sharpness_functions(l, static_cast<double>(k) / static_cast<double>(cfg.t_steps))
                                    .consistency_residual);
      return Sides{worst, 1e-12, 0.0};
    });
    if (l == 1.0)
      b.add("N_boundary_zero", Json{{"lambda", 1.0}, {"t", 1.0}}, CheckKind::equality, 0,
            [&] { return Sides{sharpness_N(1.0, 1.0), 0.0, 0.0}; });
  }

  for (const FunctionSpec& s : {koebe(0.0), g_lambda(1.0)}) {
    b.add("koebe_l2_sum", detail::spec_params(s), CheckKind::equality, N, [&] {
      const double sum = gamma_l2(log_coefficients(s, N)).partial + li2_tail(1.0, N);
      return Sides{sum, kZeta2, 0.0};
    });
    const std::size_t M = std::min<std::size_t>(N, 100);
    b.add("starlike_n_gamma", detail::spec_params(s), CheckKind::upper, M,
          [&] { return Sides{detail::max_abs_n_gamma(log_coefficients(s, M)), 1.0, 0.0}; });
  }

  {
    const FunctionSpec s = f1();
    const Json sp = detail::spec_params(s);
    auto direct = [&] { return gamma_l2(log_coefficients(s, N)).partial + detail::f1_tail(N); };
    b.add("f1_sum_dilog_route", sp, CheckKind::equality, N, [&] {
      return Sides{direct(), kZeta2 + 0.5 * (li2_value(0.5) + 3.0 * li2_value(-0.5)), 0.0};
    });
    b.add("f1_sum_quarter_series_route", sp, CheckKind::equality, N,
          [&] { return Sides{direct(), kZeta2 - 0.5 * detail::f1_quarter_series(), 0.0}; });
    b.add("f1_sum_below_zeta2", sp, CheckKind::strict, N, [&] { return Sides{direct(), kZeta2, 0.0}; });
    b.add("f1_gamma_exceeds_1_over_n", Json{{"spec", render(s)}, {"n", 2}}, CheckKind::strict, 2,
          [&] { return Sides{0.5, std::abs(log_coefficients(s, 2).gamma(2)), 0.0}; });
  }

  b.add("li2_duplication_zeta2", Json{{"lambda", 1.0}}, CheckKind::equality, 0,
        [&] { return Sides{u_l2_bound(1.0), kZeta2, 0.0}; });

  for (double a : cfg.alphas) {
    if (a > 0.0) {
      const GAlphaBounds gb = g_alpha_bounds(a);
      // z - (r/2) z^2 with r = alpha / (2 - alpha): sup Re(1 + z f''/f') = 1 + alpha/2 at z -> -1
      const double r = a / (2.0 - a);
      std::vector<FunctionSpec> members{rational({0.0, 1.0, -0.5 * r}, {1.0})};
      if (a == 1.0)
        for (int n = 1; n <= 6; ++n) members.push_back(g_family(n));
      for (const FunctionSpec& s : members) {
        Json p{{"alpha", a}, {"spec", render(s)}};
        const LogCoeffProfile prof = log_coefficients(s, N);
        b.add("g_weighted_l2", p, CheckKind::upper, N, [&] {
          const L2Sum v = gamma_l2(prof, Weights::n_squared);
          return Sides{v.partial, gb.weighted_l2, v.tail.available ? v.tail.bound : 0.0};
        });
        b.add("g_coef", p, CheckKind::upper, N,
              [&] { return Sides{detail::max_abs_n_gamma(prof), gb.coef_bound, 0.0}; });
        b.add("g_l2", p, CheckKind::upper, N, [&] {
          const L2Sum v = gamma_l2(prof);
          return Sides{v.partial, gb.l2, v.tail.available ? v.tail.bound : 0.0};
        });
      }
      if (a == 1.0) {
        const FunctionSpec s = f0();
        Json p{{"alpha", 1.0}, {"spec", render(s)}};
        b.add("g_weighted_l2_sharp", p, CheckKind::equality, 40, [&] {
          const L2Sum v = gamma_l2(log_coefficients(s, 40), Weights::n_squared);
          return Sides{v.partial, 1.0 / 12.0, v.tail.bound};
        });
        b.add("g_l2_sharp", p, CheckKind::equality, N, [&] {
          // gamma_n(f0)^2 = 4^-(n+1) / n^2: the tail is a quarter of the Li2(1/4) tail
          const double v = gamma_l2(log_coefficients(s, N)).partial + 0.25 * li2_tail(0.25, N);
          return Sides{v, gb.l2, 0.0};
        });
        for (int n = 1; n <= 6; ++n) {
          const FunctionSpec fn = g_family(n);
          const double gn = std::abs(log_coefficients(fn, static_cast<std::size_t>(n)).gamma(n));
          Json q{{"spec", render(fn)}, {"n", n}};
          b.add("g_family_leading_gamma", q, CheckKind::equality, static_cast<std::size_t>(n),
                [&] { return Sides{gn, 1.0 / (2.0 * n * (n + 1.0)), 0.0}; });
          if (n >= 2)
            b.add("g_family_exceeds_f0_pattern", q, CheckKind::strict, static_cast<std::size_t>(n),
                  [&] { return Sides{1.0 / (n * std::pow(2.0, n + 1.0)), gn, 0.0}; });
          else
            b.add("g_class_gamma1", q, CheckKind::upper, 1, [&] { return Sides{gn, 0.25, 0.0}; });
        }
      }
    }
    if (a < 1.0) {
      Json p{{"alpha", a}};
      const ConvexOrderProfile cp = convex_order_profile(a, N);
      const double beta = cp.beta;
      b.add("k_alpha_first_inequality_equality", Json{{"alpha", a}, {"spec", render(k_alpha(a))}},
            CheckKind::equality, N, [&] {
              return Sides{gamma_l2(log_coefficients(k_alpha(a), N)).partial, cp.gamma_l2, 0.0};
            });
      b.add("convex_order_l2_bound", p, CheckKind::upper, N,
            [&] { return Sides{cp.gamma_l2, (1.0 - beta) * (1.0 - beta) * kZeta2, 0.0}; });
      b.add("delta_bound", p, CheckKind::upper, N, [&] {
        double m = 0.0;
        for (double d : cp.delta) m = std::max(m, std::abs(d));
        return Sides{m, 2.0 * (1.0 - beta), 0.0};
      });
      b.add("delta_real", p, CheckKind::within, N, [&] { return Sides{cp.max_imag, 1e-12, 0.0}; });
      b.add("delta_routes_agree", p, CheckKind::within, N, [&] {
        double m = 0.0;
        for (std::size_t k = 0; k < cp.delta.size(); ++k) m = std::max(m, std::abs(cp.delta[k] - cp.delta_via_k[k]));
        return Sides{m, 1e-12, 0.0};
      });
      b.add("beta_is_G_at_minus_one", p, CheckKind::equality, 0, [&] {
        // G_alpha(-1) from the closed quotient with z = -1
        const double e = 2.0 * a - 1.0;
        const double g = e == 0.0 ? 1.0 / (2.0 * std::log(2.0)) : -e / (2.0 * (std::pow(2.0, -e) - 1.0));
        return Sides{beta, g, 0.0};
      });
      if (a == 0.0) {
        const FunctionSpec h = half_plane();
        b.add("beta_zero", p, CheckKind::equality, 0, [&] { return Sides{beta, 0.5, 0.0}; });
        b.add("convex_pi2_24", detail::spec_params(h), CheckKind::equality, N, [&] {
          const double s = gamma_l2(log_coefficients(h, N)).partial + 0.25 * li2_tail(1.0, N);
          return Sides{s, kZeta2 / 4.0, 0.0};
        });
      }
      if (a == 0.5)
        b.add("beta_half", p, CheckKind::equality, 0,
              [&] { return Sides{beta, 1.0 / (2.0 * std::log(2.0)), 0.0}; });
    }
  }
  return std::move(b).take();
}

inline bool any_violated(const std::vector<BoundCheck>& checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.status == CheckStatus::violated; });
}

inline nlohmann::ordered_json suite_report(const std::vector<BoundCheck>& checks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

}  // namespace logcoef
