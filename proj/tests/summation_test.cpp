#include "opcalc/summation.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace opcalc {
namespace {

TEST(SolveDifference, ZeroAndConstant) {
  EXPECT_EQ(solve_difference(Polynomial{}).particular, Polynomial{});
  EXPECT_EQ(solve_difference(Polynomial::constant(1)).particular, Polynomial::x());
  EXPECT_FALSE(solve_difference(Polynomial{}).normalization_note.empty());
}

TEST(SolveDifference, SquaresClosedForm) {
  EXPECT_EQ(solve_difference(Polynomial::monomial(1, 2)).particular,
            Polynomial({Rational(0), Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
}

TEST(SolveDifference, DifferenceIdentityOnRandomInputs) {
  test::Rng rng(7201);
  for (int i = 0; i < 80; ++i) {
    const Polynomial g = rng.polynomial(8);
    const Polynomial f = solve_difference(g).particular;
    EXPECT_EQ(shift(f, 1) - f, g) << to_string(g);
    EXPECT_EQ(eval(f, Rational(0)), Rational(0));
  }
}

TEST(Faulhaber, SmallCases) {
  EXPECT_EQ(faulhaber(0), Polynomial::x());
  EXPECT_EQ(faulhaber(1), Polynomial({Rational(0), Rational(-1, 2), Rational(1, 2)}));
  EXPECT_EQ(faulhaber(2),
            Polynomial({Rational(0), Rational(1, 6), Rational(-1, 2), Rational(1, 3)}));
  EXPECT_EQ(faulhaber(4),
            Polynomial({Rational(0), Rational(-1, 30), Rational(0), Rational(1, 3),
                        Rational(-1, 2), Rational(1, 5)}));
}

TEST(Faulhaber, MatchesBruteForceSums) {
  for (unsigned m = 0; m <= 8; ++m) {
    const Polynomial f = faulhaber(m);
    for (unsigned long long n = 1; n <= 20; ++n)
      EXPECT_EQ(eval(f, Rational(static_cast<long long>(n))), brute_force_sum(m, n))
          << "m = " << m << ", N = " << n;
  }
}

TEST(Faulhaber, ShapeProperties) {
  for (unsigned m = 0; m <= 8; ++m) {
    const Polynomial f = faulhaber(m);
    EXPECT_EQ(f.degree(), static_cast<int>(m) + 1);
    EXPECT_EQ(f.coeff(m + 1), Rational(1, static_cast<long long>(m) + 1));
    EXPECT_EQ(f.coeff(0), Rational(0));
  }
}

TEST(BruteForceSum, Examples) {
  EXPECT_EQ(brute_force_sum(2, 3), Rational(5));
  EXPECT_EQ(brute_force_sum(2, 1), Rational(0));
  EXPECT_EQ(brute_force_sum(4, 10), Rational(15333));
  EXPECT_EQ(brute_force_sum(0, 7), Rational(7));
}

TEST(IteratedIntegral, Examples) {
  EXPECT_EQ(iterated_integral(Polynomial::constant(1), 1),
            Polynomial::monomial(Rational(1, 2), 2));
  EXPECT_EQ(iterated_integral(Polynomial::constant(1), 0), Polynomial::x());
  EXPECT_EQ(iterated_integral(Polynomial::x(), 1),
            Polynomial::monomial(Rational(1, 6), 3));
  EXPECT_EQ(iterated_integral(Polynomial{}, 3), Polynomial{});
}

TEST(IteratedIntegral, MatchesRepeatedAntiderivative) {
  test::Rng rng(7202);
  for (int i = 0; i < 100; ++i) {
    const Polynomial g = rng.polynomial(6);
    const unsigned k = static_cast<unsigned>(rng.below(6));
    EXPECT_EQ(iterated_integral(g, k), antiderivative(g, k + 1))
        << to_string(g) << ", k = " << k;
  }
}

}  // namespace
}  // namespace opcalc
