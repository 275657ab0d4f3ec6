// logcoef: command-line front end.
//
// Exit codes: 0 success, 1 verify found a violated check, 2 usage/configuration/I-O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logcoef/logcoef.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

using namespace logcoef;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Comma-separated decimal list; rejects empty items and trailing garbage.
std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && (item[used] == ' ' || item[used] == '\t')) ++used;
    if (item.empty() || used != item.size() || !std::isfinite(v))
      throw ConfigError(std::string("malformed ") + what + " grid '" + text + "': bad item '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::optional<std::string>& out, const std::string& content) {
  if (out) write_atomic(*out, content);
  else std::cout << content;
}

int cmd_verify(const std::string& lambdas, const std::string& alphas, std::size_t order, Tolerances tol,
               const std::optional<std::string>& out) {
  SuiteConfig cfg;
  if (!(tol.equality >= 0.0 && tol.violation >= 0.0)) throw ConfigError("tolerances must be nonnegative");
  cfg.tol = tol;
  if (!lambdas.empty()) cfg.lambdas = parse_grid(lambdas, "lambda");
  if (!alphas.empty()) cfg.alphas = parse_grid(alphas, "alpha");
  cfg.N = order;
  for (double l : cfg.lambdas)
    if (!(l > 0.0 && l <= 1.0)) throw ConfigError("lambda grid value " + fmt(l) + " outside (0, 1]");
  for (double a : cfg.alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("alpha grid value " + fmt(a) + " outside [0, 1]");
  if (order < 16) throw ConfigError("--order must be at least 16");

  const std::vector<BoundCheck> checks = run_suite(cfg);
  emit(out, suite_report(checks).dump(2) + "\n");
  std::size_t violated = 0, equality = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::violated) {
      ++violated;
      std::cerr << "violated: " << c.name << ' ' << c.params.dump() << " slack=" << fmt(c.slack)
                << (c.error.empty() ? "" : " error=" + c.error) << '\n';
    }
    if (c.status == CheckStatus::equality) ++equality;
  }
  std::cerr << "checks=" << checks.size() << " equality=" << equality << " violated=" << violated << '\n';
  return violated ? kExitViolation : 0;
}

int cmd_search(const std::string& lambdas, const std::string& indices, const std::string& family,
               std::size_t budget, std::uint64_t seed, const std::optional<std::string>& out) {
  const auto fam = parse_family(family);
  if (!fam) throw ConfigError("--family must be 'superset' or 'exact_u', got '" + family + "'");
  const std::vector<double> ls = parse_grid(lambdas, "lambda");
  std::vector<int> ns;
  for (double v : parse_grid(indices, "index")) {
    if (v != std::floor(v) || v < 2 || v > 64) throw ConfigError("--index values must be integers in [2, 64]");
    ns.push_back(static_cast<int>(v));
  }
  for (double l : ls)
    if (!(l > 0.0 && l <= 1.0)) throw ConfigError("lambda value " + fmt(l) + " outside (0, 1]");
  if (budget < 1) throw ConfigError("--budget must be at least 1");

  SearchConfig cfg;
  cfg.budget = budget;
  cfg.seed = seed;
  std::string lines;
  for (double l : ls) {
    for (int n : ns) {
      const SearchRecord r = search_max_coeff(l, n, *fam, cfg);
      lines += to_json(r).dump() + "\n";
      std::cerr << "lambda=" << fmt(l) << " n=" << n << " family=" << to_string(*fam)
                << " achieved=" << fmt(r.achieved) << " bound=" << fmt(r.bound) << " margin=" << fmt(r.margin)
                << " evaluations=" << r.evaluations << " discarded=" << r.discarded << '\n';
    }
  }
  emit(out, lines);
  return 0;
}

int cmd_render(const std::string& spec_text, double r, std::size_t m, const std::string& format,
               const std::optional<std::string>& out) {
  const FunctionSpec spec = parse_spec(spec_text);
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("--radius must lie in (0, 1)");
  if (m < 16) throw ConfigError("--samples must be at least 16");
  if (format != "csv" && format != "svg") throw ConfigError("--format must be csv or svg");
  const RenderCurve c = render_curve(spec, r, m);
  emit(out, format == "csv" ? to_csv(c) : to_svg(c));
  return 0;
}

int cmd_li2(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw ConfigError("li2: x must lie in [-1, 1]");
  std::cout << fmt(li2(x).value) << '\n';
  return 0;
}

int cmd_gamma(const std::string& spec_text, std::size_t N) {
  const FunctionSpec spec = parse_spec(spec_text);
  if (N < 1) throw ConfigError("gamma: N must be at least 1");
  const LogCoeffProfile p = log_coefficients(spec, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const cplx g = p.gamma(n);
    if (g.imag() == 0.0) std::cout << fmt(g.real()) << '\n';
    else std::cout << nlohmann::json::array({g.real(), g.imag()}).dump() << '\n';
  }
  return 0;
}

int cmd_member(const std::string& spec_text, const std::string& cls, std::optional<double> param,
               const std::string& radii, std::size_t samples) {
  const FunctionSpec spec = parse_spec(spec_text);
  ClassQuery q;
  if (cls == "u_lambda") q = {ClassKind::u_lambda, param.value_or(1.0)};
  else if (cls == "starlike") q = {ClassKind::starlike_order, param.value_or(0.0)};
  else if (cls == "g_alpha") q = {ClassKind::g_alpha, param.value_or(1.0)};
  else throw ConfigError("class must be u_lambda, starlike or g_alpha");
  MembershipConfig cfg;
  if (!radii.empty()) cfg.radii = parse_grid(radii, "radius");
  for (double r : cfg.radii)
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("radii must lie in (0, 1)");
  if (samples < 64) throw ConfigError("--samples must be at least 64");
  cfg.samples = samples;
  const ClassMembershipReport rep = check_membership(spec, q, cfg);
  nlohmann::ordered_json j;
  j["spec"] = render(rep.spec);
  j["class"] = to_string(rep.query.kind);
  j["param"] = rep.query.param;
  j["radii"] = rep.radii;
  j["samples"] = rep.samples;
  j["per_radius"] = rep.per_radius;
  j["measured"] = rep.measured;
  j["margin"] = rep.margin;
  j["verdict"] = to_string(rep.verdict);
  j["near_boundary"] = rep.near_boundary;
  j["extremal_point"] = {rep.extremal_point.real(), rep.extremal_point.imag()};
  if (!rep.note.empty()) j["note"] = rep.note;
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic coefficients, class functionals and coefficient search"};
  app.require_subcommand(1);

  std::string lambdas, alphas, spec_text, format = "svg", family = "superset", indices, cls, radii;
  std::size_t order = 128, budget = 10000, samples = 2048, member_samples = 4096, gamma_n = 10;
  std::uint64_t seed = 0;
  double radius = 0.999, x = 0.0;
  std::optional<double> member_param;
  Tolerances tol;
  std::optional<std::string> out;

  auto* verify = app.add_subcommand("verify", "Run the inequality suite and write a JSON report");
  verify->add_option("--lambda", lambdas, "Comma-separated lambda grid in (0, 1]");
  verify->add_option("--alpha", alphas, "Comma-separated alpha grid in [0, 1]");
  verify->add_option("--order", order, "Truncation order N")->capture_default_str();
  verify->add_option("--equality-tol", tol.equality, "Equality band")->capture_default_str();
  verify->add_option("--violation-tol", tol.violation, "Violation threshold")->capture_default_str();
  verify->add_option("--out", out, "Report path (stdout when omitted)");

  auto* search = app.add_subcommand("search", "Maximize |a_n| over a Schwarz-parametrized family");
  search->add_option("--lambda", lambdas, "Comma-separated lambda values")->required();
  search->add_option("--index", indices, "Comma-separated coefficient indices n >= 2")->required();
  search->add_option("--family", family, "superset or exact_u")->capture_default_str();
  search->add_option("--budget", budget, "Evaluations per run")->capture_default_str();
  search->add_option("--seed", seed, "RNG seed")->capture_default_str();
  search->add_option("--out", out, "JSONL path (stdout when omitted)");

  auto* rend = app.add_subcommand("render", "Emit the boundary curve f(r e^{it})");
  rend->add_option("spec", spec_text, "Function spec")->required();
  rend->add_option("--radius", radius, "Circle radius in (0, 1)")->capture_default_str();
  rend->add_option("--samples", samples, "Number of points m")->capture_default_str();
  rend->add_option("--format", format, "csv or svg")->capture_default_str();
  rend->add_option("--out", out, "Output path (stdout when omitted)");

  auto* li2c = app.add_subcommand("li2", "Real dilogarithm on [-1, 1]");
  li2c->add_option("x", x, "Argument")->required();

  auto* gamma = app.add_subcommand("gamma", "Logarithmic coefficients gamma_1..gamma_N");
  gamma->add_option("spec", spec_text, "Function spec")->required();
  gamma->add_option("N", gamma_n, "Number of coefficients")->required();

  auto* member = app.add_subcommand("member", "Circle-sampled class functional");
  member->add_option("spec", spec_text, "Function spec")->required();
  member->add_option("class", cls, "u_lambda, starlike or g_alpha")->required();
  auto* lam = member->add_option("--lambda", member_param, "lambda for u_lambda");
  auto* bet = member->add_option("--beta", member_param, "order beta for starlike");
  auto* alp = member->add_option("--alpha", member_param, "alpha for g_alpha");
  lam->excludes(bet)->excludes(alp);
  bet->excludes(alp);
  member->add_option("--radii", radii, "Comma-separated radii in (0, 1)");
  member->add_option("--samples", member_samples, "Samples per circle")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*verify) return cmd_verify(lambdas, alphas, order, tol, out);
    if (*search) return cmd_search(lambdas, indices, family, budget, seed, out);
    if (*rend) return cmd_render(spec_text, radius, samples, format, out);
    if (*li2c) return cmd_li2(x);
    if (*gamma) return cmd_gamma(spec_text, gamma_n);
    if (*member) return cmd_member(spec_text, cls, member_param, radii, member_samples);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
