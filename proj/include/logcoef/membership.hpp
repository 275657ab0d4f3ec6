#pragma once

/**
 * @file membership.hpp
 * @brief Circle-sampled class functionals.
 *
 *   U(lambda):          sup |(z/f)^2 f' - 1|        < lambda
 *   starlike order b:   inf Re(z f'/f)              > b
 *   G(alpha):           sup Re(1 + z f''/f')        < 1 + alpha/2
 *
 * Each functional is sampled on circles |z| = r (m equiangular points plus a
 * golden-ratio offset pass). The verdict is decided against a tolerance band;
 * margins inside the band are inconclusive. Sampling order is fixed, so a
 * report is reproducible bit for bit.
 */

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logcoef/atlas.hpp"

namespace logcoef {

enum class ClassKind { u_lambda, starlike_order, g_alpha };
enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::u_lambda: return "u_lambda";
    case ClassKind::starlike_order: return "starlike_order";
    case ClassKind::g_alpha: return "g_alpha";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ClassQuery {
  ClassKind kind = ClassKind::u_lambda;
  double param = 1.0;  // lambda, beta or alpha
};

struct MembershipConfig {
  std::vector<double> radii{0.9, 0.99, 0.999};
  std::size_t samples = 4096;
  double tolerance = 1e-6;
  bool golden_offset_pass = true;
  // evaluations whose own error estimate exceeds this make the report inconclusive
  double max_eval_error = 1e-8;
};

struct ClassMembershipReport {
  FunctionSpec spec;
  ClassQuery query;
  std::vector<double> radii;
  std::size_t samples = 0;
  std::vector<double> per_radius;  // extremum on each circle, same order as radii
  double measured = 0.0;
  double margin = 0.0;             // positive means inside the class
  Verdict verdict = Verdict::inconclusive;
  cplx extremal_point{0.0, 0.0};
  double eval_error = 0.0;
  bool near_boundary = false;      // margin is within 10 (1 - r_max) of the threshold
  std::string note;
};

namespace detail {

enum class Extremum { max, min };

template <class Functional>
ClassMembershipReport sample_functional(const FunctionSpec& spec, ClassQuery query,
                                        const MembershipConfig& cfg, Extremum ext,
                                        Functional&& functional) {
  if (cfg.radii.empty()) throw std::invalid_argument("membership: no radii");
  for (double r : cfg.radii)
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("membership: radii must lie in (0, 1)");
  if (cfg.samples < 64) throw std::invalid_argument("membership: at least 64 samples per circle");

  ClassMembershipReport rep{spec, query, cfg.radii, cfg.samples};
  const double worst_init = ext == Extremum::max ? -std::numeric_limits<double>::infinity()
                                                 : std::numeric_limits<double>::infinity();
  auto better = [ext](double a, double b) { return ext == Extremum::max ? a > b : a < b; };
  rep.measured = worst_init;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.samples);
  const double golden = (std::numbers::phi - 1.0) * step;
  const int passes = cfg.golden_offset_pass ? 2 : 1;
  for (double r : cfg.radii) {
    double circle = worst_init;
    for (int pass = 0; pass < passes; ++pass) {
      for (std::size_t j = 0; j < cfg.samples; ++j) {
        const cplx z = std::polar(r, step * static_cast<double>(j) + (pass ? golden : 0.0));
        const Jet jet = jet_at(spec, z);
        rep.eval_error = std::max(rep.eval_error, jet.error);
        const std::optional<double> v = functional(z, jet);
        if (!v) {
          rep.per_radius.push_back(circle);
          rep.measured = std::numeric_limits<double>::quiet_NaN();
          rep.verdict = Verdict::fail;
          rep.extremal_point = z;
          rep.note = "hard fail: degenerate point on |z| = " + std::to_string(r);
          return rep;
        }
        if (better(*v, circle)) circle = *v;
        if (better(*v, rep.measured)) {
          rep.measured = *v;
          rep.extremal_point = z;
        }
      }
    }
    rep.per_radius.push_back(circle);
  }
  return rep;
}

inline void decide(ClassMembershipReport& rep, const MembershipConfig& cfg) {
  if (rep.verdict == Verdict::fail && !rep.note.empty()) return;
  double r_max = 0.0;
  for (double r : rep.radii) r_max = std::max(r_max, r);
  if (std::abs(rep.margin) < cfg.tolerance) rep.verdict = Verdict::inconclusive;
  else rep.verdict = rep.margin > 0.0 ? Verdict::pass : Verdict::fail;
  rep.near_boundary = std::abs(rep.margin) <= 10.0 * (1.0 - r_max);
  if (rep.eval_error > cfg.max_eval_error) {
    rep.verdict = Verdict::inconclusive;
    rep.note = "evaluation error estimate above threshold";
  }
}

}  // namespace detail

/// sup |(z/f)^2 f' - 1| against U(lambda). A vanishing f at a sample is a hard fail.
inline ClassMembershipReport u_deficiency(const FunctionSpec& spec, double lambda,
                                          const MembershipConfig& cfg = {}) {
  auto rep = detail::sample_functional(
      spec, {ClassKind::u_lambda, lambda}, cfg, detail::Extremum::max,
      [](cplx z, const Jet& j) -> std::optional<double> {
        if (j.f == cplx{0.0, 0.0}) return std::nullopt;
        const cplx q = z / j.f;
        const double v = std::abs(q * q * j.df - 1.0);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
      });
  rep.margin = lambda - rep.measured;
  detail::decide(rep, cfg);
  return rep;
}

/// inf Re(z f'/f) against starlike of order beta.
inline ClassMembershipReport min_re_starlike(const FunctionSpec& spec, double beta,
                                             const MembershipConfig& cfg = {}) {
  auto rep = detail::sample_functional(
      spec, {ClassKind::starlike_order, beta}, cfg, detail::Extremum::min,
      [](cplx z, const Jet& j) -> std::optional<double> {
        if (j.f == cplx{0.0, 0.0}) return std::nullopt;
        const double v = std::real(z * j.df / j.f);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
      });
  rep.margin = rep.measured - beta;
  detail::decide(rep, cfg);
  return rep;
}

/// sup Re(1 + z f''/f') against G(alpha). A vanishing f' is a hard fail.
inline ClassMembershipReport g_class_sup(const FunctionSpec& spec, double alpha,
                                         const MembershipConfig& cfg = {}) {
  auto rep = detail::sample_functional(
      spec, {ClassKind::g_alpha, alpha}, cfg, detail::Extremum::max,
      [](cplx z, const Jet& j) -> std::optional<double> {
        if (j.df == cplx{0.0, 0.0}) return std::nullopt;
        const double v = std::real(1.0 + z * j.d2f / j.df);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
      });
  rep.margin = 1.0 + 0.5 * alpha - rep.measured;
  detail::decide(rep, cfg);
  return rep;
}

inline ClassMembershipReport check_membership(const FunctionSpec& spec, ClassQuery q,
                                              const MembershipConfig& cfg = {}) {
  switch (q.kind) {
    case ClassKind::u_lambda: return u_deficiency(spec, q.param, cfg);
    case ClassKind::starlike_order: return min_re_starlike(spec, q.param, cfg);
    case ClassKind::g_alpha: return g_class_sup(spec, q.param, cfg);
  }
  throw std::invalid_argument("unknown class");
}

}  // namespace logcoef
