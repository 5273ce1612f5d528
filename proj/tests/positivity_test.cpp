#include "palin/palin.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace palin {
namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
std::vector<Coefficient> V(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
Polynomial seq(std::initializer_list<long> xs) { return Polynomial(0, V(xs)); }

TEST(Unimodal, Examples) {
  EXPECT_TRUE(is_unimodal(seq({1, 2, 1})));
  EXPECT_FALSE(is_unimodal(seq({1, 1, 2, 1, 2, 1, 1})));
  EXPECT_TRUE(is_unimodal(seq({1, 1, 1, 2, 1, 1, 1})));
  EXPECT_TRUE(is_unimodal(Polynomial{}));
  EXPECT_FALSE(is_unimodal(seq({1, 0, 1})));
  EXPECT_TRUE(is_unimodal(P("q^3 + 2q^4 + 2q^5")));
  EXPECT_EQ(first_unimodality_violation(seq({1, 1, 2, 1, 2, 1, 1})), 3u);
  EXPECT_EQ(first_unimodality_violation(P("q^2 + q^4")), 3u);
}

TEST(Unimodal, AgreesWithTripleEnumeration) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Coefficient> c(testing::uniform(rng, 1, 9));
    for (auto& x : c) x = static_cast<long>(testing::uniform(rng, 0, 4));
    c.front() = 1;
    c.back() = 1;
    const Polynomial f(0, c);
    EXPECT_EQ(is_unimodal(f), testing::unimodal_by_triples(c)) << to_string(f);
  }
}

TEST(LogConcave, Examples) {
  EXPECT_TRUE(is_log_concave(seq({1, 3, 3, 1})));
  EXPECT_FALSE(is_log_concave(seq({1, 1, 2, 1, 1})));
  EXPECT_FALSE(is_log_concave(seq({1, 0, 1})));
  EXPECT_TRUE(is_log_concave(P("q^5")));
  EXPECT_THROW(is_log_concave(seq({1, -1, 1})), DomainError);
}

TEST(LambdaTest, Examples) {
  auto r = lambda_test(P("1+q+2q^2+q^3+q^4"), 4);
  EXPECT_TRUE(r.lambda);
  EXPECT_EQ(r.a_coords.entries, V({1, 0, 1}));

  r = lambda_test(P("1+q+2q^2+q^3+2q^4+q^5+q^6"), 6);
  EXPECT_FALSE(r.lambda);
  EXPECT_EQ(r.a_coords.entries, V({1, 0, 1, -1}));

  r = lambda_test(P("q^2"), 4);
  EXPECT_TRUE(r.lambda);
  EXPECT_EQ(r.a_coords.entries, V({0, 0, 1}));

  EXPECT_THROW(lambda_test(P("1+2q"), 1), DomainError);
  EXPECT_THROW(lambda_test(P("1-q^2"), 2), DomainError);
}

TEST(GammaVector, Examples) {
  EXPECT_EQ(gamma_vector(P("1+4q+q^2"), 2).entries, V({1, 2}));
  EXPECT_EQ(gamma_vector(eulerian(4), 3).entries, V({1, 8}));
  for (std::size_t n = 0; n <= 12; ++n) {
    auto expected = std::vector<Coefficient>(space_dim(n));
    expected[0] = 1;
    EXPECT_EQ(gamma_vector(boolean_poly(n), n).entries, expected);
  }
  EXPECT_THROW(gamma_vector(P("1+2q"), 1), DomainError);
}

TEST(GammaVector, ClosedFormEqualsPeelOffAndIsIntegral) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 0, 40);
    const auto f = testing::random_palindromic(rng, n, -30, 30);
    const auto closed = gamma_closed_form(f, n);
    EXPECT_EQ(closed, coords(f, n, Basis::B));
    for (const auto& b : closed.entries) EXPECT_TRUE(is_integer(b));
  }
}

TEST(NewtonViolations, Examples) {
  EXPECT_TRUE(newton_violations(power(P("1+q"), 3)).empty());
  EXPECT_EQ(newton_violations(P("1+q+q^2")), std::vector<std::size_t>{1});
  EXPECT_TRUE(newton_violations(P("2+5q+2q^2")).empty());
  // Support-shifted indices.
  EXPECT_EQ(newton_violations(P("q^3+q^4+q^5")), std::vector<std::size_t>{1});
}

TEST(VerifyGammaRealRooted, Examples) {
  EXPECT_TRUE(verify_gamma_real_rooted(P("2+5q+2q^2"), 2));
  EXPECT_EQ(gamma_polynomial(gamma_vector(P("2+5q+2q^2"), 2)), P("2+q"));
  EXPECT_TRUE(verify_gamma_real_rooted(P("q") * power(P("1+q"), 2), 4));
  EXPECT_EQ(gamma_polynomial(gamma_vector(P("q+2q^2+q^3"), 4)), P("q"));
  EXPECT_TRUE(verify_gamma_real_rooted(narayana(3), 2));
  EXPECT_EQ(gamma_polynomial(gamma_vector(narayana(3), 2)), P("1+q"));

  EXPECT_THROW(verify_gamma_real_rooted(P("1+q+q^2"), 2), DomainError);  // not real-rooted
  EXPECT_THROW(verify_gamma_real_rooted(P("1+2q"), 1), DomainError);
}

TEST(GammaFromRealFactorization, Examples) {
  FactorSpec s;
  s.linear_pairs.push_back({2, 1});
  EXPECT_EQ(gamma_from_real_factorization(s), P("2+q"));

  FactorSpec cube;
  cube.one_plus_q_power = 3;
  EXPECT_EQ(gamma_from_real_factorization(cube), P("1"));

  FactorSpec shifted;
  shifted.q_power = 1;
  shifted.one_plus_q_power = 2;
  EXPECT_EQ(gamma_from_real_factorization(shifted), P("q"));

  FactorSpec quad;
  quad.quadratic_pairs.push_back({1, 1, 1});
  EXPECT_THROW(gamma_from_real_factorization(quad), DomainError);
}

TEST(BProductConvolution, Examples) {
  const CoordinateVector u{2, Basis::B, V({1, 2})};
  const CoordinateVector v{1, Basis::B, V({1})};
  const auto w = b_product_convolution(u, v);
  EXPECT_EQ(w.darga, 3u);
  EXPECT_EQ(w.entries, V({1, 2}));
  EXPECT_EQ(expand(w), P("1+5q+5q^2+q^3"));

  EXPECT_EQ(b_product_convolution({1, Basis::B, V({1})}, {1, Basis::B, V({1})}).entries, V({1, 0}));
  EXPECT_EQ(b_product_convolution({2, Basis::B, V({1, 0})}, {2, Basis::B, V({1, 0})}).entries, V({1, 0, 0}));
  EXPECT_EQ(b_product_convolution({2, Basis::B, V({1, 1})}, {2, Basis::B, V({1, 1})}).entries, V({1, 2, 1}));
  EXPECT_THROW(b_product_convolution({2, Basis::A, V({1, 1})}, u), DomainError);
}

TEST(PositivityProperty, AProductOfAElements) {
  // A_i A_j = sum_{k=0}^{min(i,j)} q^k A_{i+j-2k}.
  for (std::size_t i = 0; i <= 15; ++i)
    for (std::size_t j = 0; j <= 15; ++j) {
      const auto c = coords(chain_poly(i) * chain_poly(j), i + j, Basis::A).entries;
      for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(c[k], k <= std::min(i, j) ? 1 : 0) << i << "," << j << "," << k;
    }
}

TEST(PositivityProperty, BPositiveImpliesLambda) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 0, 30);
    const auto f = expand({n, Basis::B, testing::random_nonnegative_coords(rng, n, 6)});
    EXPECT_TRUE(lambda_test(f, n).lambda);
  }
}

TEST(PositivityProperty, RealRootedChain) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto spec = testing::random_real_rooted_spec(rng, 20);
    const auto f = construct_from_factors(spec);
    EXPECT_TRUE(newton_violations(f).empty()) << to_string(f);
    EXPECT_TRUE(is_log_concave(f));
    EXPECT_TRUE(is_unimodal(f));
    EXPECT_TRUE(verify_gamma_real_rooted(f, spec.darga()));
    EXPECT_EQ(gamma_from_real_factorization(spec), gamma_polynomial(gamma_vector(f, spec.darga())));
  }
}

TEST(AnalysisReport, Consistency) {
  const auto r = analyze(P("1+4q+q^2"));
  EXPECT_EQ(r.darga, 2u);
  EXPECT_TRUE(r.palindromic);
  EXPECT_TRUE(r.unimodal);
  EXPECT_TRUE(r.log_concave);
  EXPECT_TRUE(r.a_positive);
  EXPECT_TRUE(r.b_positive);
  EXPECT_EQ(r.a_coords->entries, V({1, 3}));
  EXPECT_EQ(r.gamma->entries, V({1, 2}));
  EXPECT_EQ(r.real_root_count, 2u);
  EXPECT_TRUE(r.real_rooted);

  const auto boolean = analyze(boolean_poly(4));
  EXPECT_TRUE(boolean.b_positive);
  EXPECT_FALSE(boolean.b_strictly_positive);

  const auto as_member = analyze(P("q^2"), 4);
  EXPECT_TRUE(as_member.palindromic);
  EXPECT_EQ(as_member.a_coords->entries, V({0, 0, 1}));

  const auto not_pal = analyze(P("1+2q"));
  EXPECT_FALSE(not_pal.palindromic);
  EXPECT_FALSE(not_pal.a_coords.has_value());

  EXPECT_FALSE(analyze(P("1-q+q^2")).log_concave);
  EXPECT_THROW(analyze(Polynomial{}), DomainError);
}

}  // namespace
}  // namespace palin
