#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pspec/error.hpp"
#include "pspec/ideals.hpp"
#include "pspec/parse.hpp"
#include "structures.hpp"

using namespace pspec;

namespace {

Ideal I(const PoissonStructure& s, const std::string& gens) {
  return Ideal(s.nvars(), parse_poly_list(gens, s.names()));
}

const std::vector<std::string> kHPrimes{
    "0",
    "x2",
    "x3",
    "x1*x4 - x2*x3",
    "x1, x2",
    "x2, x4",
    "x2, x3",
    "x1, x3",
    "x3, x4",
    "x1, x2, x3",
    "x1, x2, x4",
    "x1, x3, x4",
    "x2, x3, x4",
    "x1, x2, x3, x4",
};

std::vector<Coeff> random_point(std::mt19937& rng, std::size_t n) {
  std::vector<Coeff> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(oracle::random_rational(rng, 3));
  return p;
}

}  // namespace

TEST(PoissonIdeal, Examples) {
  const auto q = fixtures::qmat();
  EXPECT_TRUE(is_poisson_ideal(q, I(q, "x2")));
  EXPECT_FALSE(is_poisson_ideal(q, I(q, "x1")));
  EXPECT_TRUE(is_poisson_ideal(q, I(q, "x1, x2")));
  EXPECT_THROW(is_poisson_ideal(q, Ideal(3, {})), ArityError);
}

TEST(PoissonIdeal, HPrimeList) {
  const auto q = fixtures::qmat();
  for (const auto& gens : kHPrimes) EXPECT_TRUE(is_poisson_ideal(q, I(q, gens))) << gens;
}

TEST(ResiduallyNull, Examples) {
  const auto q = fixtures::qmat();
  EXPECT_TRUE(is_residually_null(q, I(q, "x2, x3")));
  EXPECT_TRUE(is_residually_null(q, I(q, "x1, x2, x4")));
  EXPECT_TRUE(is_residually_null(q, I(q, "x1, x3, x4")));
  EXPECT_FALSE(is_residually_null(q, I(q, "x2")));
  const auto r = fixtures::pencil_null();
  EXPECT_TRUE(is_residually_null(r, I(r, "x1 + x2 + x3 + x4")));
  const auto s = fixtures::symm();
  EXPECT_TRUE(is_residually_null(s, I(s, "x1 - x2, x1 - x3, x1 - x4")));
  EXPECT_TRUE(is_residually_null(s, I(s, "x1 - 5, x2 - 5, x3 - 5, x4 - 5")));
}

TEST(Gamma, Examples) {
  const auto q = fixtures::qmat();
  const auto g = gamma_of(q, I(q, "x1, x3"));
  EXPECT_EQ(g.entries, (std::vector<GammaEntry>{{false, true}, {true, false}}));
  EXPECT_TRUE(g.dense);
  ASSERT_EQ(g.v_gamma.size(), 2u);
  EXPECT_EQ(g.v_gamma[0], RatFunc(fixtures::P(q, "x1*x4 - x2*x3")));
  EXPECT_EQ(g.v_gamma[1], RatFunc(fixtures::P(q, "x3"), fixtures::P(q, "x2")));
  EXPECT_EQ(g.s_gamma, (std::vector<Poly>{Poly::constant(4, 1), fixtures::P(q, "x2")}));

  const auto h = gamma_of(q, I(q, "x2, x3"));
  EXPECT_EQ(h.entries, (std::vector<GammaEntry>{{true, true}, {false, false}}));
  EXPECT_FALSE(h.dense);
  EXPECT_TRUE(h.v_gamma.empty());

  const auto d = gamma_of(q, I(q, "x1*x4 - x2*x3"));
  EXPECT_EQ(d.entries, (std::vector<GammaEntry>{{false, true}, {true, true}}));

  EXPECT_THROW(gamma_of(q, I(q, "x1, x1 - 1")), DomainError);
}

TEST(Gamma, NonDenseImpliesResiduallyNull) {
  const auto q = fixtures::qmat();
  for (const auto& gens : kHPrimes) {
    const Ideal p = I(q, gens);
    if (!gamma_of(q, p).dense) EXPECT_TRUE(is_residually_null(q, p)) << gens;
  }
}

TEST(Gamma, PoissonProperIdealsSplitPairs) {
  for (const auto& [name, s] : fixtures::all()) {
    std::vector<std::string> candidates(kHPrimes.begin(), kHPrimes.end());
    candidates.push_back("x1 + x2 + x3 + x4");
    candidates.push_back("x1 - x2, x1 - x3, x1 - x4");
    for (const auto& gens : candidates) {
      const Ideal p = I(s, gens);
      if (!p.is_proper() || !is_poisson_ideal(s, p) || is_residually_null(s, p)) continue;
      for (const auto& [si, ti] : s.pairs()) EXPECT_FALSE(p.contains(si) && p.contains(ti)) << name << " " << gens;
    }
  }
}

TEST(Pencil, Examples) {
  const auto q = fixtures::qmat();
  EXPECT_EQ(pencil_generators(q, {{1, 1}, {0, 1}}), parse_poly_list("x1*x4 - x2*x3, x2 - x3", q.names()));
  const auto s = fixtures::symm();
  EXPECT_EQ(pencil_generators(s, {{1, 1}, {4, 6}}),
            parse_poly_list("x1 + x2 + x3 + x4 - 4, x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4 - 6", s.names()));
  const auto r = fixtures::pencil_null();
  const auto gens = pencil_generators(r, {{1, 1}, {0, -1}});
  EXPECT_EQ(gens[0], gens[1]);
  EXPECT_EQ(pencil_ideal(r, {{1, 1}, {0, -1}}).basis(), parse_poly_list("x1 + x2 + x3 + x4", r.names()));
  EXPECT_THROW(pencil_generators(q, {{0, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(pencil_generators(q, {{1}, {1}}), ArityError);
}

TEST(Pencil, AlwaysPoisson) {
  std::mt19937 rng(51);
  for (const auto& [name, s] : fixtures::all()) {
    for (int trial = 0; trial < 12; ++trial) {
      PencilSpec spec;
      for (std::size_t i = 0; i < s.pairs().size(); ++i) {
        Coeff l = oracle::random_rational(rng), m = oracle::random_rational(rng);
        if (l == 0 && m == 0) l = 1;
        spec.lambdas.push_back(l);
        spec.mus.push_back(m);
      }
      EXPECT_TRUE(is_poisson_ideal(s, pencil_ideal(s, spec))) << name;
    }
  }
}

TEST(Classify, PinnedCases) {
  const auto q = fixtures::qmat();
  const std::vector<Coeff> origin(4, Coeff(0));
  auto r = classify_point(q, origin);
  ASSERT_TRUE(r.condition1.has_value());
  EXPECT_EQ(*r.condition1, 1u);
  EXPECT_TRUE(r.final);
  EXPECT_TRUE(r.direct_verdict);

  const std::vector<Coeff> ones(4, Coeff(1));
  r = classify_point(q, ones);
  EXPECT_FALSE(r.condition1.has_value());
  EXPECT_FALSE(r.condition2);
  ASSERT_TRUE(r.condition3.has_value());
  EXPECT_FALSE(*r.condition3);
  EXPECT_EQ(r.jacobian_rank_at_point, 2u);
  EXPECT_EQ(r.g, parse_poly_list("x1*x4 - x2*x3, x2 - x3", q.names()));
  EXPECT_FALSE(r.final);
  EXPECT_FALSE(r.direct_verdict);
  EXPECT_EQ(r.nonvanishing, (std::pair<std::size_t, std::size_t>{0, 1}));

  const auto s = fixtures::symm();
  const std::vector<Coeff> diag(4, Coeff(2));
  r = classify_point(s, diag);
  EXPECT_FALSE(r.condition1.has_value());
  EXPECT_FALSE(r.condition2);
  EXPECT_EQ(r.condition3, true);
  EXPECT_EQ(r.jacobian_rank_at_point, 1u);
  EXPECT_TRUE(r.direct_verdict);

  EXPECT_THROW(classify_point(q, std::vector<Coeff>{1, 2}), ArityError);
}

TEST(Classify, CriterionMatchesDirectCheck) {
  std::mt19937 rng(52);
  for (const auto& [name, s] : fixtures::all()) {
    for (int trial = 0; trial < 40; ++trial) {
      auto p = random_point(rng, 4);
      // Push some points onto special loci so every branch is exercised.
      if (trial % 4 == 1) p[1] = 0;
      if (trial % 4 == 2) p[2] = p[1];
      if (trial % 4 == 3) p = std::vector<Coeff>(4, p[0]);
      const auto r = classify_point(s, p);
      EXPECT_EQ(r.final, r.direct_verdict) << name;
    }
  }
}

TEST(Primitive, Examples) {
  const auto q = fixtures::qmat();
  const auto r = analyze_primitive_candidate(q, {{1, 1}, {0, 1}}, I(q, "x1*x4 - x2*x3, x2 - x3"));
  EXPECT_TRUE(r.pencil_poisson);
  EXPECT_FALSE(r.pencil_residually_null);
  EXPECT_FALSE(r.not_primitive);
  ASSERT_TRUE(r.candidate.has_value());
  EXPECT_TRUE(r.candidate->poisson);
  EXPECT_FALSE(r.candidate->residually_null);
  EXPECT_TRUE(r.candidate->proper);

  const auto n = fixtures::pencil_null();
  const auto rn = analyze_primitive_candidate(n, {{1, 1}, {0, -1}});
  EXPECT_TRUE(rn.pencil_residually_null);
  EXPECT_TRUE(rn.not_primitive);

  const auto s = fixtures::symm();
  // lambda_1 = 0 puts -mu_1 t_1 = -1 into the ideal.
  EXPECT_THROW(analyze_primitive_candidate(s, {{0, 1}, {1, 1}}), DomainError);
  EXPECT_THROW(analyze_primitive_candidate(q, {{1, 1}, {0, 1}}, I(q, "x1")), DomainError);
}

TEST(Smoothness, Examples) {
  const auto e = fixtures::det_minor();
  EXPECT_TRUE(smoothness_check(e, std::vector<Coeff>{1, 1}));
  EXPECT_FALSE(smoothness_check(e, std::vector<Coeff>{0, 0}));
  const auto s = fixtures::symm();
  EXPECT_FALSE(smoothness_check(s, std::vector<Coeff>{4, 6}));
  EXPECT_THROW(smoothness_check(fixtures::qmat(), std::vector<Coeff>{0, 0}), DomainError);
  EXPECT_THROW(smoothness_check(e, std::vector<Coeff>{0}), ArityError);
  const auto dep = PoissonStructure::build(
      4, {{Poly::variable(4, 0), Poly::constant(4, 1)}, {pow(Poly::variable(4, 0), 2), Poly::constant(4, 1)}});
  EXPECT_THROW(smoothness_check(dep, std::vector<Coeff>{0, 0}), DomainError);
}

TEST(Smoothness, WitnessPoints) {
  // A point on the fiber where every maximal minor of Jac(s) vanishes proves
  // the fiber singular.
  auto singular_witness = [](const PoissonStructure& s, const std::vector<Coeff>& mu, const std::vector<Coeff>& p) {
    for (std::size_t i = 0; i < s.pairs().size(); ++i)
      if (evaluate(s.pairs()[i].s, p) != mu[i]) return false;
    std::vector<std::vector<Coeff>> jac;
    for (const auto& [si, ti] : s.pairs()) {
      std::vector<Coeff> row;
      for (std::size_t j = 0; j < s.nvars(); ++j) row.push_back(evaluate(derivative(si, j), p));
      jac.push_back(std::move(row));
    }
    return oracle::gauss_rank(jac) < s.pairs().size();
  };
  EXPECT_TRUE(singular_witness(fixtures::det_minor(), {0, 0}, std::vector<Coeff>(4, Coeff(0))));
  EXPECT_TRUE(singular_witness(fixtures::symm(), {4, 6}, std::vector<Coeff>(4, Coeff(1))));

  // For mu = (1,1): x2*x3 = 1 and x1*x4 = 2 on the fiber, so x2, x3 are units
  // and the minor x1*x2 or x2*x4 vanishing would force x1 = x4 = 0. Sampled
  // fiber points all have full rank.
  std::mt19937 rng(53);
  const auto e = fixtures::det_minor();
  for (int trial = 0; trial < 20; ++trial) {
    Coeff a = oracle::random_rational(rng);
    Coeff b = oracle::random_rational(rng);
    if (a == 0 || b == 0) continue;
    const std::vector<Coeff> p{a, b, 1 / b, 2 / a};
    EXPECT_FALSE(singular_witness(e, {1, 1}, p));
  }
}

TEST(ResiduallyNull, ImpliesPoissonOnMonomialIdeals) {
  // Monomial ideals that contain every generator bracket of qmat.
  std::mt19937 rng(54);
  const auto q = fixtures::qmat();
  std::vector<Poly> table;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (const auto& t : q.generator_bracket(i, j).terms()) table.push_back(Poly::from_monomial(t.monomial));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens = table;
    const Poly extra = oracle::random_poly(rng, 4, 3, 1);
    if (!extra.is_zero()) gens.push_back(Poly::from_monomial(extra.leading_term().monomial));
    const Ideal ideal(4, gens);
    ASSERT_TRUE(is_residually_null(q, ideal));
    EXPECT_TRUE(is_poisson_ideal(q, ideal));
  }
  for (const auto& gens : kHPrimes) {
    const Ideal ideal = I(q, gens);
    if (is_residually_null(q, ideal)) EXPECT_TRUE(is_poisson_ideal(q, ideal));
  }
}
