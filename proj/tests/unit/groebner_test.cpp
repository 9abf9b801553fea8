#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "oracles.hpp"
#include "pspec/error.hpp"
#include "pspec/groebner.hpp"
#include "pspec/parse.hpp"

using namespace pspec;

namespace {

const std::vector<std::string> kNames = default_variable_names(4);

Poly P(const std::string& s) { return parse_poly(s, kNames); }

std::vector<Poly> Ps(const std::string& s) { return parse_poly_list(s, kNames); }

const MonomialOrder kLex(OrderKind::lex);

// Reduced-basis shape: monic leads, no lead divides another, no term of any
// element divisible by another element's lead.
void expect_reduced(const std::vector<Poly>& gb, const MonomialOrder& order) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Term& lt = gb[i].leading_term(order);
    EXPECT_EQ(lt.coeff, 1);
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[j].terms()) EXPECT_FALSE(lt.monomial.divides(t.monomial));
    }
    if (i + 1 < gb.size()) EXPECT_TRUE(order.greater(lt.monomial, gb[i + 1].leading_term(order).monomial));
  }
}

}  // namespace

TEST(NormalForm, Examples) {
  const std::vector<Poly> g{P("x1*x2 - 1")};
  EXPECT_EQ(normal_form(P("x1^2*x2"), g, kLex), P("x1"));
  EXPECT_TRUE(normal_form(P("x1*x2 - 1"), g, MonomialOrder()).is_zero());
  EXPECT_EQ(normal_form(P("x3"), Ps("x1, x2"), MonomialOrder()), P("x3"));
  EXPECT_EQ(normal_form(P("1/2*x1^2 + x3"), Ps("2*x1 - 1"), MonomialOrder()), P("1/8 + x3"));
}

TEST(Basis, Examples) {
  EXPECT_EQ(groebner_basis(Ps("x1 - x2, x1 + x2"), kLex), Ps("x1, x2"));
  EXPECT_EQ(groebner_basis(Ps("1"), MonomialOrder()), Ps("1"));
  EXPECT_EQ(groebner_basis(Ps("3*x1 - 2, x1^2"), MonomialOrder()), Ps("1"));
  EXPECT_EQ(groebner_basis(Ps("x1*x4 - x2*x3, x2"), MonomialOrder()), Ps("x1*x4, x2"));
  EXPECT_TRUE(groebner_basis(Ps("0"), MonomialOrder()).empty());
  // Twisted cubic, lex.
  const auto gb = groebner_basis(Ps("x2 - x1^2, x3 - x1^3"), kLex);
  EXPECT_EQ(gb, Ps("x1^2 - x2, x1*x2 - x3, x1*x3 - x2^2, x2^3 - x3^2"));
}

TEST(Basis, IsReducedUnderEveryOrder) {
  std::mt19937 rng(41);
  for (auto kind : {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex}) {
    const MonomialOrder order(kind);
    for (int i = 0; i < 15; ++i) {
      std::vector<Poly> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, 2, 3));
      for (auto& g : gens) g = with_nvars(g, 4);
      const auto gb = groebner_basis(gens, order);
      expect_reduced(gb, order);
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, order).is_zero());
    }
  }
}

TEST(Basis, SelectionStrategyDoesNotMatter) {
  std::mt19937 rng(42);
  for (int i = 0; i < 30; ++i) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 4, 3, 3));
    for (auto kind : {OrderKind::lex, OrderKind::grevlex}) {
      const MonomialOrder order(kind);
      EXPECT_EQ(groebner_basis(gens, order, PairSelection::sugar), groebner_basis(gens, order, PairSelection::fifo));
    }
  }
}

TEST(Basis, GeneratorOrderDoesNotMatter) {
  std::mt19937 rng(43);
  for (int i = 0; i < 20; ++i) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 4, 2, 4));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g *= Coeff(3, 7);
    EXPECT_EQ(groebner_basis(gens, MonomialOrder()), groebner_basis(shuffled, MonomialOrder()));
  }
}

TEST(Ideal, Membership) {
  const Ideal i(4, Ps("x1*x4 - x2*x3, x2"));
  EXPECT_TRUE(i.contains(P("x1*x4")));
  EXPECT_FALSE(Ideal(4, Ps("x1")).contains(P("1")));
  EXPECT_TRUE(i.contains(Poly(4)));
  EXPECT_TRUE(Ideal(4, {}).contains(Poly(4)));
  EXPECT_FALSE(Ideal(4, {}).contains(P("x1")));
  EXPECT_THROW(i.contains(Poly::variable(3, 0)), ArityError);
}

TEST(Ideal, Properness) {
  EXPECT_FALSE(Ideal(4, Ps("x1 - 1, x1")).is_proper());
  EXPECT_TRUE(Ideal(4, Ps("x1*x4 - x2*x3, x2 - x3")).is_proper());
  EXPECT_TRUE(Ideal(4, Ps("0")).is_proper());
}

TEST(Ideal, MembershipAgreesWithLinearAlgebraOracle) {
  std::mt19937 rng(44);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_homogeneous(rng, 3, 2, 3));
    const Ideal ideal(3, gens);
    for (int q = 0; q < 4; ++q) {
      Poly f;
      if (q % 2 == 0) {
        f = oracle::random_homogeneous(rng, 3, 2, 2) * gens[0] + oracle::random_homogeneous(rng, 3, 2, 2) * gens[1];
      } else {
        f = oracle::random_homogeneous(rng, 3, 4, 3);
      }
      if (f.is_zero()) continue;
      const bool expected = oracle::homogeneous_member(f, gens);
      (expected ? members : non_members)++;
      EXPECT_EQ(ideal.contains(f), expected) << to_string(f);
    }
  }
  EXPECT_GT(members, 10);
  EXPECT_GT(non_members, 10);
}

TEST(Ideal, SharedCacheIsThreadSafe) {
  const Ideal ideal(4, Ps("x1^2 - x2*x3, x2^2 - x1*x4, x3^2 - x4"));
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(4);
  for (std::size_t t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      const Ideal copy = ideal;
      sizes[t] = copy.basis().size();
    });
  }
  for (auto& th : threads) th.join();
  for (auto s : sizes) EXPECT_EQ(s, ideal.basis().size());
}

TEST(Eliminate, Examples) {
  const std::size_t drop0[] = {0};
  const std::size_t drop1[] = {1};
  EXPECT_TRUE(eliminate(Ideal(4, Ps("x1 - x2^2")), drop0).generators().empty());
  EXPECT_EQ(eliminate(Ideal(4, Ps("x1 - x2, x1 + x2")), drop0).basis(), Ps("x2"));
  EXPECT_EQ(eliminate(Ideal(4, Ps("x1*x2 - 1, x2 - x3")), drop1).basis(), Ps("x1*x3 - 1"));
  const std::size_t all[] = {0, 1, 2, 3};
  EXPECT_THROW(eliminate(Ideal(4, Ps("x1")), all), DomainError);
  const std::size_t bad[] = {4};
  EXPECT_THROW(eliminate(Ideal(4, Ps("x1")), bad), RangeError);
}

TEST(Eliminate, ResultLiesInOriginalIdeal) {
  std::mt19937 rng(45);
  const std::size_t drop[] = {0};
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(rng, 3, 2, 3));
    for (auto& g : gens) g = with_nvars(g, 4);
    const Ideal ideal(4, gens);
    const Ideal elim = eliminate(ideal, drop);
    for (const auto& g : elim.generators()) {
      EXPECT_FALSE(g.involves(0));
      EXPECT_TRUE(ideal.contains(g));
    }
  }
}

TEST(Saturate, Examples) {
  const Poly x2 = P("x2");
  EXPECT_EQ(saturate(Ideal(4, Ps("x2*(x1*x4 - x2*x3)")), x2).basis(), Ps("x2*x3 - x1*x4"));
  const Ideal i(4, Ps("x1^2 - x3, x2*x4"));
  EXPECT_EQ(saturate(i, P("1")).basis(), i.basis());
  EXPECT_EQ(saturate(Ideal(4, Ps("x1^2")), P("x1")).basis(), Ps("1"));
  EXPECT_EQ(saturate(Ideal(4, Ps("x1*x2, x1*x3")), P("x1")).basis(), Ps("x2, x3"));
  EXPECT_THROW(saturate(i, Poly(4)), DomainError);
}

TEST(Saturate, Properties) {
  std::mt19937 rng(46);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Poly> gens;
    const Poly f = oracle::random_poly(rng, 3, 1, 2);
    if (f.is_constant()) continue;
    const Poly g = oracle::random_poly(rng, 3, 2, 3);
    gens.push_back(with_nvars(f * g, 4));
    gens.push_back(with_nvars(oracle::random_poly(rng, 3, 2, 3), 4));
    const Ideal ideal(4, gens);
    const Poly f4 = with_nvars(f, 4);
    const Ideal sat = saturate(ideal, f4);
    EXPECT_TRUE(sat.contains(ideal));
    EXPECT_TRUE(sat.contains(with_nvars(g, 4)));
    EXPECT_EQ(saturate(sat, f4).basis(), sat.basis());
  }
}
