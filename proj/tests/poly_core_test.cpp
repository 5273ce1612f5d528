#include "palin/palin.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace palin {
namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

TEST(Parse, TermGrammar) {
  const auto f = P("1+4q+q^2");
  EXPECT_EQ(f.ord(), 0u);
  EXPECT_EQ(f, (Polynomial{1, 4, 1}));

  const auto g = P("q^3");
  EXPECT_EQ(g.ord(), 3u);
  ASSERT_EQ(g.coeffs().size(), 1u);
  EXPECT_EQ(g.coeffs()[0], 1);

  const auto h = P("1/2 + q - 1/2 q^2");
  EXPECT_EQ(h, (Polynomial{Coefficient(1, 2), 1, Coefficient(-1, 2)}));

  EXPECT_TRUE(P("0").is_zero());
  EXPECT_TRUE(P("q - q").is_zero());
  EXPECT_EQ(P("-q + 2*q^2 + q"), Polynomial::monomial(2, 2));
  EXPECT_EQ(P("  3 q ^ 2 "), Polynomial::monomial(3, 2));
  EXPECT_EQ(P("2/4q"), Polynomial::monomial(Coefficient(1, 2), 1));
}

TEST(Parse, Errors) {
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("1 +"), ParseError);
  EXPECT_THROW(P("1 2"), ParseError);
  EXPECT_THROW(P("x"), ParseError);
  EXPECT_THROW(P("q^"), ParseError);
  try {
    P("1 + 3/0 q");
    FAIL() << "zero denominator accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    P("1 + q + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(Parse, JsonCoefficientList) {
  EXPECT_EQ(P(R"({"ord": 1, "coeffs": ["1", "-1/2", "0", "3"]})"),
            Polynomial(1, {1, Coefficient(-1, 2), 0, 3}));
  EXPECT_TRUE(P(R"({"ord": 0, "coeffs": []})").is_zero());
  EXPECT_THROW(P(R"({"ord": 0})"), ParseError);
  EXPECT_THROW(P(R"({"ord": 0, "coeffs": ["1/0"]})"), ParseError);
  EXPECT_THROW(P("{nope"), ParseError);
}

TEST(Format, TextAndJsonRoundTrip) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = testing::uniform(rng, 0, 12);
    std::vector<Coefficient> c(n + 1);
    for (auto& x : c) {
      x = Coefficient(static_cast<long>(testing::uniform(rng, 0, 10)) - 5, static_cast<unsigned long>(testing::uniform(rng, 1, 3)));
      x.canonicalize();
    }
    const Polynomial f(testing::uniform(rng, 0, 3), c);
    EXPECT_EQ(parse_polynomial(to_string(f)), f) << to_string(f);
    EXPECT_EQ(parse_polynomial(to_json(f)), f) << to_json(f);
  }
  EXPECT_EQ(to_string(Polynomial{1, 4, 1}), "1 + 4q + q^2");
  EXPECT_EQ(to_string(Polynomial{Coefficient(1, 2), 0, Coefficient(-1, 2)}), "1/2 - 1/2q^2");
  EXPECT_EQ(to_string(-Polynomial::monomial(1, 1)), "-q");
  EXPECT_EQ(to_json(Polynomial(2, {3, Coefficient(-1, 2)})), R"({"ord":2,"coeffs":["3","-1/2"]})");
}

TEST(Polynomial, CanonicalTrimming) {
  const Polynomial f(1, {0, 0, 2, 0, 5, 0});
  EXPECT_EQ(f.ord(), 3u);
  EXPECT_EQ(f.degree(), 5u);
  EXPECT_EQ(f.coeffs().size(), 3u);
  EXPECT_TRUE(Polynomial(4, {0, 0}).is_zero());
  EXPECT_EQ(Polynomial(4, {0, 0}), Polynomial{});
}

TEST(Darga, Examples) {
  EXPECT_EQ(darga(P("1+q")), 1u);
  EXPECT_EQ(darga(P("q")), 2u);
  EXPECT_EQ(darga(P("7")), 0u);
  EXPECT_THROW(darga(Polynomial{}), DomainError);
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(P("1+2q+3q^2")), P("3+2q+q^2"));
  EXPECT_EQ(reciprocal(P("q+q^3")), P("q+q^3"));
  EXPECT_EQ(reciprocal(P("2q^2")), P("2q^2"));
  EXPECT_EQ(reciprocal(Polynomial{}), Polynomial{});
  EXPECT_EQ(reciprocal(P("q+2q^2+5q^4")), P("5q+2q^3+q^4"));
}

TEST(Palindromic, Examples) {
  EXPECT_TRUE(is_palindromic(P("1+4q+q^2")));
  EXPECT_FALSE(is_palindromic(P("1+2q")));
  EXPECT_TRUE(is_palindromic(P("q+q^3"), 4));
  EXPECT_FALSE(is_palindromic(P("q+q^3"), 3));
  EXPECT_TRUE(is_palindromic(Polynomial{}));
  EXPECT_TRUE(is_palindromic(Polynomial{}, 17));
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(P("1+q"), P("1+q")), P("1+2q+q^2"));
  EXPECT_EQ(multiply(P("1+q+q^2"), P("1+q^2+q^4")), P("1+q+2q^2+q^3+2q^4+q^5+q^6"));
  const auto h = multiply(P("q"), P("1+q^2"));
  EXPECT_EQ(h, P("q+q^3"));
  EXPECT_EQ(darga(h), 4u);
  EXPECT_TRUE(multiply(Polynomial{}, P("1+q")).is_zero());
}

TEST(DivideExact, Examples) {
  EXPECT_EQ(divide_exact(P("1+2q+q^2"), P("1+q")), P("1+q"));
  EXPECT_EQ(divide_exact(P("1+q+q^2+q^3"), P("1+q")), P("1+q^2"));
  EXPECT_EQ(divide_exact(P("q^3+q^4"), P("q")), P("q^2+q^3"));
  try {
    divide_exact(P("1+q^2"), P("1+q"));
    FAIL() << "inexact division accepted";
  } catch (const InexactDivision& e) {
    // Ascending division: quotient 1 - q leaves 2q^2.
    EXPECT_EQ(e.remainder(), P("2q^2"));
  }
  EXPECT_THROW(divide_exact(P("1+q"), Polynomial{}), DomainError);
  EXPECT_THROW(divide_exact(P("1+q"), P("q")), InexactDivision);
  EXPECT_THROW(divide_exact(P("1+q"), P("1+q+q^2")), InexactDivision);
  EXPECT_TRUE(divide_exact(Polynomial{}, P("1+q")).is_zero());
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(P("1+q+q^2"), 1), 3);
  EXPECT_EQ(evaluate(P("1+q"), -1), 0);
  EXPECT_EQ(evaluate(P("1+4q+q^2"), -1), -2);
  EXPECT_EQ(evaluate(P("q^2+q^3"), Coefficient(1, 2)), Coefficient(3, 8));
  EXPECT_EQ(evaluate(Polynomial{}, 5), 0);
}

TEST(Derivative, Basics) {
  EXPECT_EQ(P("1+3q+q^3").derivative(), P("3+3q^2"));
  EXPECT_EQ(P("q^4").derivative(), P("4q^3"));
  EXPECT_TRUE(P("7").derivative().is_zero());
}

TEST(FactorSpec, Examples) {
  FactorSpec lin;
  lin.linear_pairs.push_back({2, 1});
  EXPECT_EQ(construct_from_factors(lin), P("2+5q+2q^2"));

  FactorSpec bin;
  bin.one_plus_q_power = 2;
  EXPECT_EQ(construct_from_factors(bin), P("1+2q+q^2"));

  FactorSpec quad;
  quad.quadratic_pairs.push_back({1, 1, 1});
  EXPECT_EQ(construct_from_factors(quad), P("1+2q+3q^2+2q^3+q^4"));
}

TEST(FactorSpec, InvalidSpecsRejected) {
  FactorSpec s;
  s.linear_pairs.push_back({1, 1});
  EXPECT_THROW(construct_from_factors(s), DomainError);
  s.linear_pairs = {{-2, 1}};
  EXPECT_THROW(construct_from_factors(s), DomainError);
  s.linear_pairs.clear();
  s.quadratic_pairs.push_back({2, 1, 1});  // b^2 = 4c
  EXPECT_THROW(construct_from_factors(s), DomainError);
  s.quadratic_pairs = {{1, 1, 0}};
  EXPECT_THROW(construct_from_factors(s), DomainError);
  s.quadratic_pairs.clear();
  s.scale = 0;
  EXPECT_THROW(construct_from_factors(s), DomainError);
}

// Properties over random inputs.

TEST(PolyCoreProperty, ReciprocalInvolutionAndMultiplicativity) {
  testing::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto f = Polynomial(testing::uniform(rng, 0, 3), {static_cast<long>(testing::uniform(rng, 1, 9)), -3, 5,
                                                            static_cast<long>(testing::uniform(rng, 0, 4)), 1});
    const auto g = testing::random_palindromic(rng, testing::uniform(rng, 0, 9), -4, 4) +
                   Polynomial::monomial(static_cast<long>(testing::uniform(rng, 1, 3)), testing::uniform(rng, 0, 5));
    EXPECT_EQ(reciprocal(reciprocal(f)), f);
    EXPECT_EQ(reciprocal(f * g), reciprocal(f) * reciprocal(g));
    if (!g.is_zero()) EXPECT_EQ(darga(f * g), darga(f) + darga(g));
  }
}

TEST(PolyCoreProperty, ClosureUnderLinearCombination) {
  testing::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = testing::uniform(rng, 0, 20);
    const auto f = testing::random_palindromic(rng, n, -5, 5);
    const auto g = testing::random_palindromic(rng, n, -5, 5);
    const Coefficient a(static_cast<long>(testing::uniform(rng, 0, 6)) - 3, 2);
    EXPECT_TRUE(is_palindromic(f + g, n));
    EXPECT_TRUE(is_palindromic(a * f, n));
  }
}

TEST(PolyCoreProperty, ProductsAndQuotientsOfPalindromicsArePalindromic) {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = testing::uniform(rng, 0, 10), m = testing::uniform(rng, 0, 10);
    const auto f = testing::random_palindromic(rng, n, -3, 3);
    const auto g = testing::random_palindromic(rng, m, -3, 3);
    const auto fg = f * g;
    EXPECT_TRUE(is_palindromic(fg, n + m));
    EXPECT_EQ(divide_exact(fg, g), f);
    EXPECT_TRUE(is_palindromic(divide_exact(fg, f), m));
  }
}

TEST(PolyCoreProperty, OddDargaDivisibleByOnePlusQ) {
  testing::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 * testing::uniform(rng, 0, 15) + 1;
    const auto f = testing::random_palindromic(rng, n, -6, 6);
    EXPECT_EQ(evaluate(f, -1), 0);
    EXPECT_EQ(divide_exact(f, P("1+q")) * P("1+q"), f);
  }
}

TEST(PolyCoreProperty, ConstructedPolynomialsArePalindromicAndNonnegative) {
  testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto spec = testing::random_spec(rng, 24);
    const auto f = construct_from_factors(spec);
    EXPECT_TRUE(is_palindromic(f, spec.darga()));
    EXPECT_TRUE(f.all_nonnegative());
  }
}

}  // namespace
}  // namespace palin
