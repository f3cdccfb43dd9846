#include "expoly/multipoly.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace expoly {
namespace {

const MultiPoly L = MultiPoly::lambda();
const MultiPoly X = MultiPoly::x();
const MultiPoly Y = MultiPoly::y();

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

TEST(PolyAdd, Examples) {
  EXPECT_TRUE(poly_add(X, -X).is_zero());
  EXPECT_EQ(poly_add(L * X, L * X), Rational(2) * L * X);
  EXPECT_EQ(poly_add(X - L, L), X);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(X - L, X + L), X * X - L * L);
  EXPECT_TRUE(poly_mul(X - L + Rational(3), MultiPoly()).is_zero());
  EXPECT_EQ(poly_mul(X - L, X - L), X * X - Rational(2) * L * X + L * L);
}

TEST(PolyPow, Examples) {
  EXPECT_EQ(poly_pow(X - L, 0), MultiPoly(1));
  EXPECT_EQ(poly_pow(X, 3), MultiPoly::monomial({0, 3, 0}));
  EXPECT_EQ(poly_pow(X - L, 2), poly_mul(X - L, X - L));
  EXPECT_EQ(poly_pow(MultiPoly(), 0), MultiPoly(1));
  EXPECT_TRUE(poly_pow(MultiPoly(), 3).is_zero());
}

TEST(PolySubstitute, Examples) {
  const MultiPoly p = L * (X - L);
  EXPECT_EQ(poly_substitute(p, {.lambda = -L, .x = -X}), L * X - L * L);
  EXPECT_EQ(poly_substitute(X, {}), X);
  const MultiPoly half_l = q(1, 2) * L;
  EXPECT_EQ(poly_substitute(p, {.lambda = half_l, .x = X - half_l}), half_l * (X - L));
}

TEST(PolySubstitute, SimultaneousNotSequential) {
  // x -> l, l -> x swaps the variables in one step.
  EXPECT_EQ(poly_substitute(L * L * X, {.lambda = X, .x = L}), X * X * L);
}

TEST(PolyDiff, Examples) {
  EXPECT_EQ(poly_diff(L * X * X, Var::x), Rational(2) * L * X);
  // λ(x−λ)² = λx² − 2λ²x + λ³, termwise: 2λx − 2λ² = 2λ(x−λ).
  EXPECT_EQ(poly_diff(L * (X - L).pow(2), Var::x), Rational(2) * L * (X - L));
  EXPECT_TRUE(poly_diff(X, Var::y).is_zero());
  EXPECT_EQ(poly_diff(L * L * L, Var::lambda), Rational(3) * L * L);
}

TEST(PolyIntegrate01, Examples) {
  EXPECT_EQ(poly_integrate01(Y * Y, Var::y), MultiPoly(q(1, 3)));
  EXPECT_EQ(poly_integrate01(X + Y, Var::y), X + MultiPoly(q(1, 2)));
  // Antiderivative λ(x−λ)y + λy²/2, at y=1 minus at y=0.
  EXPECT_EQ(poly_integrate01(L * (X + Y - L), Var::y), L * (X - L) + q(1, 2) * L);
  EXPECT_FALSE(poly_integrate01(L * X * Y.pow(4), Var::y).contains(Var::y));
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(L * (X - L), 1, 3, 0), Rational(2));
  EXPECT_EQ(poly_eval(MultiPoly(), q(5, 7), -3, 11), Rational(0));
  EXPECT_EQ(poly_eval(X * X - L * L, 2, 2, 0), Rational(0));
  EXPECT_EQ(poly_eval(MultiPoly(7), 0, 0, 0), Rational(7));
}

TEST(PolyEq, Examples) {
  EXPECT_TRUE(poly_eq((X - L).pow(2), X * X - Rational(2) * L * X + L * L));
  EXPECT_FALSE(poly_eq(X, Y));
  MultiPoly expansion;
  const int c[] = {1, 3, 3, 1};
  for (std::uint32_t k = 0; k <= 3; ++k) {
    expansion += MultiPoly::monomial({k + 1, 3 - k, 0}, Rational(k % 2 == 0 ? c[k] : -c[k]));
  }
  EXPECT_TRUE(poly_eq(L * (X - L).pow(3), expansion));
}

TEST(MultiPoly, CanonicalNoZeroCoefficients) {
  const MultiPoly p = (X + L) - X;
  EXPECT_EQ(p.term_count(), 1U);
  EXPECT_EQ(p, L);
  EXPECT_EQ(MultiPoly(Rational(0)).term_count(), 0U);
}

TEST(MultiPoly, Degrees) {
  const MultiPoly p = L * (X - L).pow(4);
  EXPECT_EQ(p.degree(Var::x), 4U);
  EXPECT_EQ(p.degree(Var::lambda), 5U);
  EXPECT_EQ(p.degree(Var::y), 0U);
  EXPECT_EQ(p.total_degree(), 5U);
}

TEST(MultiPoly, ShiftLambda) {
  EXPECT_EQ((L * X).shift_lambda(-1), X);
  EXPECT_EQ(X.shift_lambda(2), L * L * X);
  EXPECT_THROW((L + X).shift_lambda(-1), std::domain_error);
}

TEST(TextForm, Printing) {
  EXPECT_EQ(MultiPoly().to_string(), "0");
  EXPECT_EQ(L.to_string(), "l");
  EXPECT_EQ((L * X - L * L).to_string(), "l*x - l^2");
  EXPECT_EQ((-(L * L)).to_string(), "-l^2");
  EXPECT_EQ((L * L * X - Rational(2) * L * X + L.pow(3)).to_string(), "l^2*x - 2*l*x + l^3");
  EXPECT_EQ((q(1, 2) * X - MultiPoly(q(1, 4))).to_string(), "1/2*x - 1/4");
  EXPECT_EQ((L * X * Y - q(-3, 5) * Y.pow(2)).to_string(), "l*x*y + 3/5*y^2");
}

TEST(TextForm, Parsing) {
  EXPECT_EQ(MultiPoly::parse("l^2*x - 2*l*x + l^3"), L * L * X - Rational(2) * L * X + L.pow(3));
  EXPECT_EQ(MultiPoly::parse("0"), MultiPoly());
  EXPECT_EQ(MultiPoly::parse("-1/4 + 1/2*x"), q(1, 2) * X - MultiPoly(q(1, 4)));
  EXPECT_EQ(MultiPoly::parse("x*l + l*x"), Rational(2) * L * X);
  EXPECT_EQ(MultiPoly::parse("  -y^10 "), -Y.pow(10));
}

TEST(TextForm, ParseErrors) {
  for (const char* bad : {"", "x +", "2**x", "z", "x^", "1/0", "x y", "l^-1", "1.5*x"}) {
    EXPECT_THROW(MultiPoly::parse(bad), std::invalid_argument) << bad;
  }
}

}  // namespace
}  // namespace expoly
