#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "pspec/error.hpp"
#include "pspec/parse.hpp"

using namespace pspec;

namespace {

const std::vector<std::string> kNames = default_variable_names(4);

Poly x(std::size_t i) { return Poly::variable(4, i); }

std::size_t error_column(const std::string& text) {
  try {
    parse_poly(text, kNames);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("x1*x4 - x2*x3", kNames), x(0) * x(3) - x(1) * x(2));
  EXPECT_EQ(parse_poly("(x1+x2)^2", kNames), x(0) * x(0) + Coeff(2) * x(0) * x(1) + x(1) * x(1));
  EXPECT_TRUE(parse_poly("3/2*x1 - 3/2*x1", kNames).is_zero());
  EXPECT_EQ(parse_poly("-x1^2", kNames), -(x(0) * x(0)));
  EXPECT_EQ(parse_poly("2^3", kNames), Poly::constant(4, 8));
  EXPECT_EQ(parse_poly("-(x1 - x2)*3", kNames), Coeff(3) * (x(1) - x(0)));
}

TEST(ParsePoly, Errors) {
  EXPECT_THROW(parse_poly("x1 x2", kNames), ParseError);
  EXPECT_THROW(parse_poly("x5", kNames), ParseError);
  EXPECT_THROW(parse_poly("x1/x2", kNames), ParseError);
  EXPECT_THROW(parse_poly("x1^-1", kNames), ParseError);
  EXPECT_THROW(parse_poly("x1^x2", kNames), ParseError);
  EXPECT_THROW(parse_poly("(x1 + x2", kNames), ParseError);
  EXPECT_THROW(parse_poly("x1 $ x2", kNames), ParseError);
  EXPECT_THROW(parse_poly("", kNames), ParseError);
  EXPECT_EQ(error_column("x1 + x9"), 6u);
  EXPECT_EQ(error_column("x1 + $"), 6u);
  EXPECT_GT(error_column("x1*x2 x3"), 0u);
}

TEST(ParsePoly, Lists) {
  const auto gens = parse_poly_list("x1*x4 - x2*x3, (x2 + x3)^2, 1", kNames);
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_TRUE(gens[2].is_one());
  const auto cs = parse_coeff_list("1,-2, 3/4");
  EXPECT_EQ(cs, (std::vector<Coeff>{1, -2, Coeff(3, 4)}));
  EXPECT_THROW(parse_coeff_list("1,,2"), Error);
}

TEST(Print, Canonical) {
  EXPECT_EQ(to_string(Poly(4)), "0");
  EXPECT_EQ(to_string(x(0) * x(3) - x(1) * x(2)), "x1*x4 - x2*x3");
  EXPECT_EQ(to_string(Coeff(2) * x(1) * x(2)), "2*x2*x3");
  EXPECT_EQ(to_string(Coeff(3, 2) * x(0) - Poly::constant(4, 1)), "3/2*x1 - 1");
  EXPECT_EQ(to_string(x(0) * x(0) * x(1)), "x1^2*x2");
  EXPECT_EQ(to_string(RatFunc(x(2), x(1)), kNames), "x3/x2");
  EXPECT_EQ(to_string(RatFunc(x(0) + x(1), x(2) - x(3)), kNames), "(x1 + x2)/(x3 - x4)");
}

TEST(Print, RoundTrip) {
  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) {
    Poly f = oracle::random_poly(rng, 4, 5, 6);
    f *= oracle::random_rational(rng);
    EXPECT_EQ(parse_poly(to_string(f), kNames), f) << to_string(f);
  }
}

TEST(Structure, ParsesQuantumMatrices) {
  const auto s = parse_structure(
      "# comment\r\n"
      "vars: x1 x2 x3 x4\r\n"
      "\r\n"
      "pair: s = x1*x4 - x2*x3 ; t = 1   # determinant\r\n"
      "pair: s = x2 ; t = x3\r\n");
  EXPECT_EQ(s.nvars(), 4u);
  EXPECT_EQ(s.generator_bracket(0, 3), Coeff(2) * x(1) * x(2));
}

TEST(Structure, CustomNames) {
  const auto s = parse_structure("vars: a b c\npair: s = a*b + c ; t = 1\n");
  EXPECT_EQ(s.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(to_string(s.generator_bracket(0, 1), s.names()), "1");
}

TEST(Structure, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_structure(text);
    } catch (const ParseError& e) {
      return e.line();
    } catch (const Error&) {
      return 0;
    }
    return 999;
  };
  EXPECT_EQ(line_of("vars: x1 x2 x3 x4\npair: s = x2 ; t = x2\npair: s = x1 ; t = 1\n"), 2u);
  EXPECT_EQ(line_of("vars: x1 x2 x3\npair: s = x1 ; t = 0\n"), 2u);
  EXPECT_EQ(line_of("vars: x1 x2 x3 x4\npair: s = x1 ; t = 1\n"), 3u);
  EXPECT_EQ(line_of("vars: x1 x2 x3\n\npair: s = x1 ** 2 ; t = 1\n"), 3u);
  EXPECT_EQ(line_of("# header\nvars: x1 x2\n"), 2u);
  EXPECT_EQ(line_of("vars: x1 x2 x3\nbogus\n"), 2u);
  EXPECT_THROW(parse_structure("vars: x1 x2 x3 x4\npair: s = x1 ; t = 1\n"), Error);
  EXPECT_THROW(parse_structure("pair: s = x1 ; t = 1\n"), Error);
  EXPECT_THROW(parse_structure("vars: x1 x1 x3\npair: s = x1 ; t = 1\n"), Error);

  try {
    parse_structure("vars: x1 x2 x3 x4\npair: s = x2 ; t = x2\npair: s = x1 ; t = 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("s and t not coprime"), std::string::npos);
  }
}

TEST(Structure, TextRoundTrip) {
  const auto s = parse_structure("vars: x1 x2 x3 x4\npair: s = x1 + x2 ; t = x3 + x4\npair: s = x1*x2 ; t = 1\n");
  const auto again = parse_structure(to_structure_text(s));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(s.generator_bracket(i, j), again.generator_bracket(i, j));
}

TEST(Structure, LoadFile) {
  EXPECT_THROW(load_structure_file("/nonexistent/none.psn"), DomainError);
  const auto s = load_structure_file(PSPEC_DATA_DIR "/symm.psn");
  EXPECT_EQ(s.nvars(), 4u);
}
