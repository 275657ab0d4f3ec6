#include <cmath>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "logcoef/search.hpp"
#include "test_util.hpp"

using namespace logcoef;

namespace {

SchwarzParams omega(std::initializer_list<cplx> c) { return *SchwarzParams::validate(poly::Coeffs(c)); }

SearchConfig budgeted(std::size_t budget, std::uint64_t seed = 1) {
  SearchConfig c;
  c.budget = budget;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(ConjecturedBound, GeometricSum) {
  EXPECT_EQ(conjectured_bound(1.0, 5), 5.0);
  EXPECT_EQ(conjectured_bound(0.5, 4), 1.875);
  EXPECT_NEAR(conjectured_bound(0.7, 5), (1.0 - std::pow(0.7, 5)) / 0.3, 1e-15);
}

TEST(ParseFamily, Names) {
  EXPECT_EQ(parse_family("superset"), SearchFamily::superset);
  EXPECT_EQ(parse_family("exact_u"), SearchFamily::exact_u);
  EXPECT_FALSE(parse_family("other").has_value());
}

TEST(SchwarzParamsTest, Validation) {
  EXPECT_TRUE(SchwarzParams::validate({0.5, 0.5}).has_value());
  EXPECT_FALSE(SchwarzParams::validate({0.6, 0.5}).has_value());
  EXPECT_FALSE(SchwarzParams::validate({cplx(std::nan(""), 0.0)}).has_value());
  const auto p = SchwarzParams::project({1.0, 1.0});
  ASSERT_TRUE(p.has_value());
  EXPECT_LE(p->sampled_sup(), 1.0 + 1e-10);
  EXPECT_NEAR(std::abs(p->coeff(0)), 0.5, 1e-9);
  EXPECT_THROW((void)SchwarzParams::constant(1.5), std::domain_error);
}

TEST(PolyWinding, DoubleRootOnCircleIsNotCounted) {
  // (1 - z)^2 at r = 0.999 passes within 1e-6 of zero between samples
  const poly::Coeffs k{1.0, -2.0, 1.0};
  const poly::Winding w = poly::winding(k, 1024, 0.999);
  EXPECT_EQ(w.turns, 0);
  EXPECT_NEAR(w.min_modulus, 1e-6, 1e-12);
  const poly::Coeffs inside{1.0, -1.0 / 0.99};  // zero at z = 0.99
  EXPECT_EQ(poly::winding(inside, 1024, 0.999).turns, 1);
  EXPECT_EQ(poly::winding(inside, 1024, 0.98).turns, 0);
}

TEST(PolyRoots, MinRootModulus) {
  EXPECT_EQ(poly::min_root_modulus(poly::Coeffs{2.0}), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(poly::min_root_modulus(poly::Coeffs{1.0, -2.0}), 0.5, 1e-15);
  EXPECT_NEAR(poly::min_root_modulus(poly::Coeffs{1.0, -2.0, 1.0}), 1.0, 1e-7);
  EXPECT_NEAR(poly::min_root_modulus(poly::Coeffs{4.0, 0.0, 1.0, 1e-300}), 2.0, 1e-14);
}

TEST(ExactU, RejectsRootInsideSampledRadius) {
  // z/f = 1 - a2 z + z^2/10 has a root at |z| = 0.999002, outside the sampled circle r = 0.999
  const cplx a2(1.0981726, 0.0633789);
  EXPECT_EQ(poly::winding(poly::Coeffs{1.0, -a2, 0.1}, 1024, 0.999).turns, 0);
  EXPECT_FALSE(ExactUParams::make(0.1, a2, SchwarzParams::constant(-1.0)).has_value());
}

TEST(BuildSuperset, Examples) {
  const TruncatedSeries g = build_superset_function(0.5, SchwarzParams::constant(1.0), 4);
  EXPECT_NEAR(g[2].real(), 1.5, 1e-15);
  EXPECT_NEAR(g[3].real(), 1.75, 1e-15);
  EXPECT_NEAR(g[4].real(), 1.875, 1e-15);

  const TruncatedSeries z = build_superset_function(0.5, SchwarzParams::constant(0.0), 6);
  EXPECT_EQ(z[1], cplx(1.0));
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(z[n], cplx(0.0));

  const TruncatedSeries k = build_superset_function(1.0, omega({0.0, 1.0}), 3);
  EXPECT_NEAR(std::abs(k[2]), 0.0, 1e-15);
  EXPECT_NEAR(k[3].real(), 2.0, 1e-15);
  EXPECT_THROW((void)build_superset_function(0.0, SchwarzParams::constant(1.0), 4), std::domain_error);
}

TEST(ExactU, Examples) {
  // psi = 1 with a2 = 1 + lambda puts a zero of z/f inside the disk
  EXPECT_FALSE(ExactUParams::make(0.5, 1.5, SchwarzParams::constant(1.0)).has_value());
  EXPECT_FALSE(ExactUParams::make(1.0, 2.0, SchwarzParams::constant(1.0)).has_value());
  EXPECT_FALSE(ExactUParams::make(0.5, 1.6, SchwarzParams::constant(0.0)).has_value());

  // psi = -1, a2 = 1 + lambda gives z/f = (1 - z)(1 - lambda z), i.e. g_lambda
  const auto g = ExactUParams::make(0.5, 1.5, SchwarzParams::constant(-1.0));
  ASSERT_TRUE(g.has_value());
  const TruncatedSeries f = build_exact_u_function(*g, 5);
  EXPECT_LE(logcoef::testing::max_abs_diff(f, taylor_of(g_lambda(0.5), 5)), 1e-14);
  EXPECT_LE(exact_u_post_check(*g).measured, 0.5 + kPostCheckSlack);

  const auto z = ExactUParams::make(0.5, 0.0, SchwarzParams::constant(0.0));
  const TruncatedSeries id = build_exact_u_function(*z, 5);
  EXPECT_EQ(id[1], cplx(1.0));
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(id[n], cplx(0.0));

  const auto k = ExactUParams::make(1.0, 2.0, SchwarzParams::constant(-1.0));
  ASSERT_TRUE(k.has_value());
  EXPECT_LE(logcoef::testing::max_abs_diff(build_exact_u_function(*k, 6), taylor_of(koebe(0.0), 6)), 1e-13);
}

TEST(ExactU, DeficiencyIsLambdaZSquaredPsi) {
  Rng rng(77);
  int checked = 0;
  while (checked < 50) {
    const double l = 0.1 + 0.9 * uniform01(rng);
    const auto p = ExactUParams::make(l, random_in_disk(rng, 1.0 + l), random_schwarz(rng));
    if (!p) continue;
    ++checked;
    const FunctionSpec s = exact_u(*p);
    for (int j = 0; j < 16; ++j) {
      const cplx z = std::polar(0.9, 0.39 * j);
      const Jet jt = jet_at(s, z);
      const cplx q = z / jt.f;
      EXPECT_CPLX_NEAR(q * q * jt.df - 1.0, l * z * z * p->psi().eval(z), 1e-10);
    }
    EXPECT_LE(exact_u_post_check(*p).measured, l + kPostCheckSlack);
  }
}

TEST(ExactU, DerivativeIdentityOnRandomRationals) {
  // (z/f)^2 f' - 1 = -z^2 d/dz (1/f - 1/z), with f = z P / Q and P(0) = Q(0) = 1
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    poly::Coeffs P{1.0}, Q{1.0};
    for (int k = 1; k <= 3; ++k) {
      P.push_back(0.3 * logcoef::testing::unit_disk(rng));
      Q.push_back(0.3 * logcoef::testing::unit_disk(rng));
    }
    const FunctionSpec f = rational(poly::mul(poly::Coeffs{0.0, 1.0}, P), Q);
    // 1/f - 1/z = D / P with D = (Q - P) / z
    poly::Coeffs D;
    for (std::size_t k = 1; k < P.size(); ++k) D.push_back(Q[k] - P[k]);
    for (int j = 0; j < 32; ++j) {
      const cplx z = std::polar(0.6, 0.2 * j + 0.05);
      const Jet jt = jet_at(f, z);
      const cplx q = z / jt.f;
      const cplx lhs = q * q * jt.df - 1.0;
      const poly::Value2 d = poly::eval2(D, z), p = poly::eval2(P, z);
      const cplx rhs = -z * z * (d.dp * p.p - d.p * p.dp) / (p.p * p.p);
      EXPECT_LE(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(lhs))) << trial << ' ' << j;
    }
  }
}

TEST(CoefficientRecursion, Examples) {
  const MuNu m = mu_nu(0.5);
  EXPECT_NEAR(m.mu, 2.0 * 0.875 / 0.75, 1e-15);
  EXPECT_NEAR(m.nu, 1.25, 1e-15);
  EXPECT_TRUE(in_ps_region(m.mu, m.nu));
  EXPECT_GE(m.nu, (m.mu * m.mu + 8.0) / 12.0);
  EXPECT_NEAR((m.mu * m.mu + 8.0) / 12.0, 1.12037037037037, 1e-13);
  EXPECT_LE(check_coefficient_recursion(0.5, SchwarzParams::constant(1.0)).max(), 1e-15);
  EXPECT_THROW((void)mu_nu(1.0), std::domain_error);
  EXPECT_THROW((void)check_coefficient_recursion(1.0, SchwarzParams::constant(1.0)), std::domain_error);
}

TEST(CoefficientRecursion, RandomOmega) {
  Rng rng(91);
  for (int i = 0; i < 200; ++i) {
    const double l = i == 0 ? 0.9 : 0.01 + 0.98 * uniform01(rng);
    EXPECT_LE(check_coefficient_recursion(l, random_schwarz(rng)).max(), 1e-11) << l;
  }
}

TEST(ProkhorovSzynal, SpecialCases) {
  const MuNu m = mu_nu(0.5);
  EXPECT_NEAR(ps_ratio(SchwarzParams::constant(1.0), m.mu, m.nu), 1.0, 1e-15);
  EXPECT_NEAR(ps_ratio(omega({0.0, 0.0, 1.0}), m.mu, m.nu), 1.0 / m.nu, 1e-15);
  EXPECT_LE(1.0 / m.nu, 1.0);
  EXPECT_THROW((void)check_prokhorov_szynal(10, 0, 1.0, 1.0), std::domain_error);
  EXPECT_THROW((void)check_prokhorov_szynal(10, 0, 3.0, 1.0), std::domain_error);
}

TEST(ProkhorovSzynal, RandomSamples) {
  for (double l : {0.1, 0.5, 0.9}) {
    const MuNu m = mu_nu(l);
    const PsResult r = check_prokhorov_szynal(20000, 3, m.mu, m.nu);
    EXPECT_EQ(r.samples, 20000u);
    EXPECT_LE(r.worst_ratio, 1.0 + 1e-9) << l;
    EXPECT_GT(r.worst_ratio, 0.5) << l;
  }
}

TEST(SchwarzProperties, CoefficientBounds) {
  Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    const SchwarzParams w = random_schwarz(rng);
    const double c1 = std::abs(w.coeff(0)), c2 = std::abs(w.coeff(1));
    EXPECT_LE(c1, 1.0 + 1e-12);
    EXPECT_LE(c2, 1.0 - c1 * c1 + 1e-9) << i;
    EXPECT_LE(poly::circle_max(w.coeffs(), 4096).sampled, 1.0 + 1e-9);
  }
}

TEST(Search, Examples) {
  const SearchRecord r = search_max_coeff(0.5, 3, SearchFamily::superset, budgeted(500));
  EXPECT_GE(r.achieved, 1.75 - 1e-12);
  EXPECT_LE(r.achieved, 1.75 + 1e-9);
  EXPECT_EQ(r.bound, 1.75);

  const SearchRecord e = search_max_coeff(1.0, 2, SearchFamily::exact_u, budgeted(500));
  EXPECT_LE(e.achieved, 2.0 + 1e-9);
  EXPECT_GE(e.achieved, 2.0 - 1e-12);
  EXPECT_EQ(e.start0_achieved, e.achieved);

  EXPECT_THROW((void)search_max_coeff(0.5, 1, SearchFamily::superset), std::invalid_argument);
  EXPECT_THROW((void)search_max_coeff(0.5, 3, SearchFamily::superset, budgeted(0)), std::invalid_argument);
}

TEST(Search, BudgetAccounting) {
  const SearchRecord r = search_max_coeff(0.7, 5, SearchFamily::exact_u, budgeted(300, 42));
  EXPECT_EQ(r.evaluations, 300u);
  EXPECT_LE(r.discarded, r.evaluations);
  EXPECT_EQ(r.margin, r.bound - r.achieved);
  const SearchRecord one = search_max_coeff(0.7, 5, SearchFamily::superset, budgeted(1));
  EXPECT_EQ(one.evaluations, 1u);
  EXPECT_EQ(one.best_index, 0u);
}

TEST(Search, RecordSerialization) {
  const auto j = to_json(search_max_coeff(0.5, 4, SearchFamily::exact_u, budgeted(50)));
  EXPECT_TRUE(j["params"].contains("a2"));
  EXPECT_TRUE(j["params"].contains("psi"));
  EXPECT_EQ(j["family"], "exact_u");
  const auto s = to_json(search_max_coeff(0.5, 4, SearchFamily::superset, budgeted(50)));
  EXPECT_TRUE(s["params"].contains("omega"));
}

TEST(Search, BestParametersReproduceAchieved) {
  const SearchRecord r = search_max_coeff(0.6, 4, SearchFamily::exact_u, budgeted(400, 7));
  const auto p = ExactUParams::make(0.6, r.a2, *SchwarzParams::project(r.omega));
  ASSERT_TRUE(p.has_value());
  EXPECT_NEAR(std::abs(build_exact_u_function(*p, 4)[4]), r.achieved, 1e-9);
  const SearchRecord s = search_max_coeff(0.6, 4, SearchFamily::superset, budgeted(400, 7));
  EXPECT_NEAR(std::abs(build_superset_function(0.6, *SchwarzParams::project(s.omega), 4)[4]), s.achieved, 1e-9);
}

TEST(SearchProperties, Deterministic) {
  for (auto fam : {SearchFamily::superset, SearchFamily::exact_u}) {
    const auto a = to_json(search_max_coeff(0.7, 5, fam, budgeted(400, 42))).dump();
    const auto b = to_json(search_max_coeff(0.7, 5, fam, budgeted(400, 42))).dump();
    EXPECT_EQ(a, b);
  }
}

TEST(SearchProperties, StartZeroRecovered) {
  for (double l : {0.1, 0.5, 0.9, 1.0}) {
    for (int n : {2, 3, 5, 8}) {
      for (auto fam : {SearchFamily::superset, SearchFamily::exact_u}) {
        const SearchRecord r = search_max_coeff(l, n, fam, budgeted(200, 3));
        EXPECT_GE(r.achieved, conjectured_bound(l, n) - 1e-12) << l << ' ' << n << ' ' << to_string(fam);
      }
    }
  }
}

TEST(SearchProperties, SupersetRespectsProvenBound) {
  for (double l : {0.1, 0.4, 0.7, 1.0}) {
    for (int n : {2, 3, 4}) {
      const SearchRecord r = search_max_coeff(l, n, SearchFamily::superset, budgeted(2000, 11));
      EXPECT_LE(r.achieved, conjectured_bound(l, n) + 1e-9) << l << ' ' << n;
    }
  }
}
