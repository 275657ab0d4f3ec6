#pragma once

/**
 * @file search.hpp
 * @brief Coefficient maximization over two Schwarz-parametrized families.
 *
 *   superset:  f/z = 1 / ((1 - z w)(1 - lambda z w)),   sup |w| <= 1
 *   exact_u:   z/f = 1 - a2 z - lambda z int_0^z psi,    sup |psi| <= 1, |a2| <= 1 + lambda
 *
 * For exact_u, (z/f)^2 f' - 1 = lambda z^2 psi, so every nonvanishing candidate
 * lies in U(lambda); each accepted candidate is still re-measured by
 * u_deficiency before it is scored.
 *
 * The search is serial and consumes the RNG in a fixed order, so a
 * (lambda, n, family, budget, seed) tuple always yields the same record.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcoef/atlas.hpp"
#include "logcoef/membership.hpp"
#include "logcoef/schwarz.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

enum class SearchFamily { superset, exact_u };

inline const char* to_string(SearchFamily f) { return f == SearchFamily::superset ? "superset" : "exact_u"; }

inline std::optional<SearchFamily> parse_family(std::string_view s) {
  if (s == "superset") return SearchFamily::superset;
  if (s == "exact_u") return SearchFamily::exact_u;
  return std::nullopt;
}

/// sum_{k<n} lambda^k by direct summation (exactly n at lambda = 1).
inline double conjectured_bound(double lambda, int n) {
  double s = 0.0, p = 1.0;
  for (int k = 0; k < n; ++k) {
    s += p;
    p *= lambda;
  }
  return s;
}

// ---- family constructors -----------------------------------------------

/// Taylor series of f (order N) for the superset family.
inline TruncatedSeries build_superset_function(double lambda, const SchwarzParams& omega, std::size_t N) {
  require_lambda(lambda, "build_superset_function");
  if (N < 1) throw std::invalid_argument("build_superset_function: N must be at least 1");
  const std::size_t M = N - 1;  // order of f/z
  const TruncatedSeries zw = omega.series(M).times_z();
  const TruncatedSeries one = TruncatedSeries::one(M);
  const TruncatedSeries f_over_z = ts_reciprocal((one - zw) * (one - lambda * zw));
  return f_over_z.resized(N).times_z();
}

class PostCheckError : public std::runtime_error {
 public:
  PostCheckError(double measured, double lambda)
      : std::runtime_error("exact_u post-check failed: sup |U| = " + std::to_string(measured) +
                           " exceeds lambda = " + std::to_string(lambda)),
        measured_(measured) {}
  double measured() const noexcept { return measured_; }

 private:
  double measured_;
};

inline constexpr double kPostCheckRadius = 0.99;
inline constexpr std::size_t kPostCheckSamples = 64;
inline constexpr double kPostCheckSlack = 1e-6;

/// sup |U| at r = 0.99 for an exact_u candidate.
inline ClassMembershipReport exact_u_post_check(const ExactUParams& p) {
  MembershipConfig cfg;
  cfg.radii = {kPostCheckRadius};
  cfg.samples = kPostCheckSamples;
  cfg.golden_offset_pass = false;
  return u_deficiency(exact_u(p), p.lambda(), cfg);
}

/// Taylor series of f (order N); throws PostCheckError when sup |U| > lambda + 1e-6.
inline TruncatedSeries build_exact_u_function(const ExactUParams& p, std::size_t N) {
  if (N < 1) throw std::invalid_argument("build_exact_u_function: N must be at least 1");
  const ClassMembershipReport rep = exact_u_post_check(p);
  if (!(rep.measured <= p.lambda() + kPostCheckSlack)) throw PostCheckError(rep.measured, p.lambda());
  const TruncatedSeries h(N - 1, p.z_over_f());
  return ts_reciprocal(h).resized(N).times_z();
}

// ---- search ------------------------------------------------------------

struct SearchConfig {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  CandidateOptions candidates;
  double random_fraction = 0.6;  // share of the budget spent on random starts
  std::size_t refine_starts = 4;
  std::array<double, 3> sweep_radius{0.25, 0.1, 0.04};
  int golden_evals = 12;         // evaluations per coordinate per sweep
};

struct SearchRecord {
  double lambda = 0.0;
  int n = 0;
  SearchFamily family = SearchFamily::superset;
  std::uint64_t seed = 0;
  double achieved = 0.0;
  double bound = 0.0;
  double margin = 0.0;            // bound - achieved
  poly::Coeffs omega;             // superset parameter, or psi for exact_u
  cplx a2{0.0, 0.0};              // exact_u only
  std::size_t budget = 0;
  std::size_t evaluations = 0;
  std::size_t discarded = 0;      // candidates rejected by validation
  std::size_t best_index = 0;     // evaluation index of the best candidate (0 = start #0)
  double start0_achieved = 0.0;
};

inline nlohmann::ordered_json to_json(const SearchRecord& r) {
  auto clist = [](const poly::Coeffs& c) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const cplx& x : c) a.push_back({x.real(), x.imag()});
    return a;
  };
  nlohmann::ordered_json params;
  if (r.family == SearchFamily::superset) {
    params["omega"] = clist(r.omega);
  } else {
    params["a2"] = {r.a2.real(), r.a2.imag()};
    params["psi"] = clist(r.omega);
  }
  nlohmann::ordered_json j;
  j["lambda"] = r.lambda;
  j["n"] = r.n;
  j["family"] = to_string(r.family);
  j["seed"] = r.seed;
  j["achieved"] = r.achieved;
  j["bound"] = r.bound;
  j["margin"] = r.margin;
  j["params"] = params;
  j["evaluations"] = r.evaluations;
  j["discarded"] = r.discarded;
  j["best_index"] = r.best_index;
  j["start0_achieved"] = r.start0_achieved;
  return j;
}

namespace detail {

/// Real coordinates: [Re a2, Im a2] (exact_u only), then Re/Im of each polynomial coefficient.
class SearchProblem {
 public:
  SearchProblem(double lambda, int n, SearchFamily fam, const SearchConfig& cfg)
      : lambda_(lambda), n_(n), fam_(fam), cfg_(cfg), offset_(fam == SearchFamily::exact_u ? 2 : 0) {}

  std::size_t dims() const { return offset_ + 2 * (cfg_.candidates.max_poly_degree + 1); }

  std::vector<double> encode(cplx a2, const poly::Coeffs& w) const {
    std::vector<double> x(dims(), 0.0);
    if (offset_) {
      x[0] = a2.real();
      x[1] = a2.imag();
    }
    for (std::size_t k = 0; k < w.size() && offset_ + 2 * k + 1 < x.size(); ++k) {
      x[offset_ + 2 * k] = w[k].real();
      x[offset_ + 2 * k + 1] = w[k].imag();
    }
    return x;
  }

  struct Scored {
    double value;
    std::vector<double> x;  // projected coordinates
  };

  /// Projects x into the family and scores |a_n|; nullopt when the candidate is rejected.
  std::optional<Scored> score(const std::vector<double>& x) const {
    poly::Coeffs w(cfg_.candidates.max_poly_degree + 1);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = {x[offset_ + 2 * k], x[offset_ + 2 * k + 1]};
    auto proj = SchwarzParams::project(std::move(w));
    if (!proj) return std::nullopt;
    const std::size_t N = static_cast<std::size_t>(n_);
    if (fam_ == SearchFamily::superset) {
      const double v = std::abs(build_superset_function(lambda_, *proj, N)[N]);
      if (!std::isfinite(v)) return std::nullopt;
      return Scored{v, encode({}, proj->coeffs())};
    }
    cplx a2{x[0], x[1]};
    const double cap = 1.0 + lambda_;
    if (std::abs(a2) > cap) a2 *= cap / std::abs(a2);
    auto p = ExactUParams::make(lambda_, a2, *proj);
    if (!p) return std::nullopt;
    try {
      const double v = std::abs(build_exact_u_function(*p, N)[N]);
      if (!std::isfinite(v)) return std::nullopt;
      return Scored{v, encode(a2, proj->coeffs())};
    } catch (const PostCheckError&) {
      return std::nullopt;
    }
  }

 private:
  double lambda_;
  int n_;
  SearchFamily fam_;
  const SearchConfig& cfg_;
  std::size_t offset_;
};

}  // namespace detail

/// Multi-start random search plus coordinate golden-section refinement.
inline SearchRecord search_max_coeff(double lambda, int n, SearchFamily fam, const SearchConfig& cfg = {}) {
  require_lambda(lambda, "search_max_coeff");
  if (n < 2) throw std::invalid_argument("search_max_coeff: n must be at least 2");
  if (cfg.budget < 1) throw std::invalid_argument("search_max_coeff: budget must be at least 1");

  const detail::SearchProblem prob(lambda, n, fam, cfg);
  Rng rng(cfg.seed);
  SearchRecord rec;
  rec.lambda = lambda;
  rec.n = n;
  rec.family = fam;
  rec.seed = cfg.seed;
  rec.bound = conjectured_bound(lambda, n);
  rec.budget = cfg.budget;
  rec.achieved = -1.0;
  std::vector<double> best_x;

  struct Start {
    double value;
    std::size_t index;
    std::vector<double> x;
  };
  std::vector<Start> top;
  auto consider_top = [&](double v, std::size_t idx, const std::vector<double>& x) {
    top.push_back({v, idx, x});
    std::stable_sort(top.begin(), top.end(), [](const Start& a, const Start& b) {
      return a.value > b.value || (a.value == b.value && a.index < b.index);
    });
    if (top.size() > cfg.refine_starts) top.pop_back();
  };

  // one evaluation: projects, scores, updates the best record; returns the projected point
  auto evaluate = [&](const std::vector<double>& x) -> std::optional<detail::SearchProblem::Scored> {
    const std::size_t idx = rec.evaluations++;
    auto s = prob.score(x);
    if (!s) {
      ++rec.discarded;
      return std::nullopt;
    }
    if (s->value > rec.achieved) {
      rec.achieved = s->value;
      rec.best_index = idx;
      best_x = s->x;
    }
    return s;
  };

  // start #0: the extremal g_lambda (omega = 1; psi = -1 with a2 = 1 + lambda)
  {
    const auto x0 = fam == SearchFamily::superset ? prob.encode({}, {1.0})
                                                  : prob.encode(1.0 + lambda, {-1.0});
    auto s = evaluate(x0);
    rec.start0_achieved = s ? s->value : 0.0;
    if (s) consider_top(s->value, 0, s->x);
  }

  const auto n_random = static_cast<std::size_t>(cfg.random_fraction * static_cast<double>(cfg.budget));
  while (rec.evaluations < std::min(n_random, cfg.budget)) {
    const SchwarzParams w = random_schwarz(rng, cfg.candidates);
    cplx a2{0.0, 0.0};
    if (fam == SearchFamily::exact_u) a2 = random_in_disk(rng, 1.0 + lambda);
    const std::size_t idx = rec.evaluations;
    if (auto s = evaluate(prob.encode(a2, w.coeffs()))) consider_top(s->value, idx, s->x);
  }

  constexpr double kInvPhi = 0.6180339887498949;
  for (const Start& st : top) {
    std::vector<double> x = st.x;
    double fx = st.value;
    for (double radius : cfg.sweep_radius) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (rec.evaluations >= cfg.budget) break;
        auto at = [&](double xi) -> double {
          if (rec.evaluations >= cfg.budget) return -1.0;
          std::vector<double> y = x;
          y[i] = xi;
          auto s = evaluate(y);
          if (s && s->value > fx) {
            fx = s->value;
            x = s->x;
          }
          return s ? s->value : -1.0;
        };
        // golden-section maximization of the i-th coordinate on [x_i - r, x_i + r]
        double a = x[i] - radius, b = x[i] + radius;
        double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
        double fc = at(c), fd = at(d);
        for (int it = 2; it < cfg.golden_evals; ++it) {
          if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = at(c);
          } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = at(d);
          }
        }
      }
    }
  }

  if (!best_x.empty()) {
    const std::size_t off = fam == SearchFamily::exact_u ? 2 : 0;
    if (off) rec.a2 = {best_x[0], best_x[1]};
    for (std::size_t k = off; k + 1 < best_x.size(); k += 2) rec.omega.emplace_back(best_x[k], best_x[k + 1]);
    while (rec.omega.size() > 1 && rec.omega.back() == cplx{0.0, 0.0}) rec.omega.pop_back();
  } else {
    rec.achieved = 0.0;
  }
  rec.margin = rec.bound - rec.achieved;
  return rec;
}

// ---- coefficient identities --------------------------------------------

struct MuNu {
  double mu, nu;
};

inline MuNu mu_nu(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("mu_nu: lambda must lie in (0, 1)");
  const double d = 1.0 - lambda * lambda;
  return {2.0 * (1.0 - lambda * lambda * lambda) / d, (1.0 - lambda * lambda * lambda * lambda) / d};
}

inline bool in_ps_region(double mu, double nu) {
  return std::abs(mu) >= 2.0 && std::abs(mu) <= 4.0 && nu >= (mu * mu + 8.0) / 12.0;
}

struct RecursionResiduals {
  double a2 = 0.0, a3 = 0.0, a4 = 0.0;  // |lhs - rhs| of the three relations
  MuNu mn{};
  double max() const { return std::max({a2, a3, a4}); }
};

/// (1-l) a2 = (1-l^2) c1;  (1-l) a3 = (1-l^2) c2 + (1-l^3) c1^2;
/// (1-l) a4 = (1-l^2)(c3 + mu c1 c2 + nu c1^3), with omega = c1 + c2 z + c3 z^2 + ...
inline RecursionResiduals check_coefficient_recursion(double lambda, const SchwarzParams& omega) {
  RecursionResiduals r;
  r.mn = mu_nu(lambda);
  const TruncatedSeries f = build_superset_function(lambda, omega, 4);
  const cplx c1 = omega.coeff(0), c2 = omega.coeff(1), c3 = omega.coeff(2);
  const double l = lambda, l2 = l * l, l3 = l2 * l;
  r.a2 = std::abs((1.0 - l) * f[2] - (1.0 - l2) * c1);
  r.a3 = std::abs((1.0 - l) * f[3] - ((1.0 - l2) * c2 + (1.0 - l3) * c1 * c1));
  r.a4 = std::abs((1.0 - l) * f[4] - (1.0 - l2) * (c3 + r.mn.mu * c1 * c2 + r.mn.nu * c1 * c1 * c1));
  return r;
}

struct PsResult {
  double worst_ratio = 0.0;
  poly::Coeffs worst_sample;
  std::size_t samples = 0;
};

inline double ps_ratio(const SchwarzParams& w, double mu, double nu) {
  const cplx c1 = w.coeff(0), c2 = w.coeff(1), c3 = w.coeff(2);
  return std::abs(c3 + mu * c1 * c2 + nu * c1 * c1 * c1) / std::abs(nu);
}

/// max |c3 + mu c1 c2 + nu c1^3| / |nu| over random bounded omega.
inline PsResult check_prokhorov_szynal(std::size_t samples, std::uint64_t seed, double mu, double nu,
                                       const CandidateOptions& opt = {}) {
  if (!in_ps_region(mu, nu))
    throw std::domain_error("check_prokhorov_szynal: (mu, nu) outside 2 <= |mu| <= 4, nu >= (mu^2 + 8)/12");
  Rng rng(seed);
  PsResult out;
  for (std::size_t i = 0; i < samples; ++i) {
    const SchwarzParams w = random_schwarz(rng, opt);
    const double r = ps_ratio(w, mu, nu);
    if (r > out.worst_ratio) {
      out.worst_ratio = r;
      out.worst_sample = w.coeffs();
    }
  }
  out.samples = samples;
  return out;
}

}  // namespace logcoef
