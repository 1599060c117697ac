#include <gtest/gtest.h>

#include "support.hpp"
#include "vex/errors.hpp"
#include "vex/polynomial.hpp"

using namespace vex;

namespace {

Polynomial X(int i) { return Polynomial(xv(i)); }
Polynomial Y(int i) { return Polynomial(yv(i)); }
Polynomial T(int i) { return Polynomial(tv(i)); }

}  // namespace

TEST(Dyadic, CanonicalForm) {
  Dyadic a(BigInt(6), 3);
  EXPECT_EQ(a.num(), 3);
  EXPECT_EQ(a.log2den(), 2);
  Dyadic z(BigInt(0), 5);
  EXPECT_EQ(z.log2den(), 0);
  EXPECT_EQ(Dyadic(BigInt(3), -2), Dyadic(12));
  EXPECT_EQ(Dyadic::pow2(-3) * Dyadic(8), Dyadic(1));
  EXPECT_EQ(Dyadic(BigInt(1), 1) + Dyadic(BigInt(1), 1), Dyadic(1));
  EXPECT_EQ(Dyadic(BigInt(-5), 2).to_string(), "-5/4");
  EXPECT_THROW((void)Dyadic(1).divide_exact(Dyadic(3)), NotDivisible);
  EXPECT_EQ(Dyadic(6).divide_exact(Dyadic(-4)), Dyadic(BigInt(-3), 1));
}

TEST(PolyMul, Examples) {
  EXPECT_EQ((X(1) + Y(1)) * (X(1) - Y(1)), X(1) * X(1) - Y(1) * Y(1));
  const Polynomial p = X(1) * 3 + Y(2);
  EXPECT_EQ(p * Polynomial(1), p);
  EXPECT_EQ((1 + T(1)) * (1 + T(2)), 1 + T(1) + T(2) + T(1) * T(2));
}

TEST(PolySubstitute, Examples) {
  EXPECT_EQ(poly_substitute(1 + T(1), {{tv(1), X(1)}}), 1 + X(1));
  EXPECT_EQ(poly_substitute(X(1) * X(1), {{xv(1), -X(1)}}), X(1) * X(1));
  EXPECT_EQ(poly_substitute(T(1) * T(2), {{tv(1), X(1)}, {tv(2), Y(1)}}), X(1) * Y(1));
  // Simultaneous: swapping x1 and x2.
  EXPECT_EQ(poly_substitute(X(1) * X(1) * X(2), {{xv(1), X(2)}, {xv(2), X(1)}}), X(2) * X(2) * X(1));
  // Truncation.
  EXPECT_EQ(poly_substitute(X(1) * X(1), {{xv(1), 1 + Y(1)}}, 1), 1 + 2 * Y(1));
}

TEST(Star, Examples) {
  EXPECT_EQ(star(1 + X(1)), 1 - X(1));
  EXPECT_EQ(star(1 + T(1) + T(1) * T(2)), 1 - T(1) + T(1) * T(2));
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(X(1) * X(1) - X(2) * X(2), X(1) - X(2)), X(1) + X(2));
  EXPECT_EQ(exact_divide(Polynomial(), X(1) + 1), Polynomial());
  EXPECT_EQ(exact_divide(2 * X(1) * Y(1), -2 * X(1)), -Y(1));
  EXPECT_THROW(exact_divide(X(1) + 1, X(1) - X(2)), NotDivisible);
}

TEST(Polycore, Printing) {
  EXPECT_EQ((X(1) - Y(1)).to_string(), "x1 - y1");
  EXPECT_EQ((Y(1) - X(1)).to_string(), "-x1 + y1");
  EXPECT_EQ(Polynomial().to_string(), "0");
  // graded lex: higher degree first, x before y.
  EXPECT_EQ((Y(1) + X(2) * X(2) + X(1)).to_string(), "x2^2 + x1 + y1");
}

TEST(PolycoreProperties, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    const Polynomial a = testkit::random_poly(rng), b = testkit::random_poly(rng), c = testkit::random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(Polynomial::from_terms(a.terms()), a);
  }
}

TEST(PolycoreProperties, StarInvolutionAndMultiplicative) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const Polynomial a = testkit::random_poly(rng), b = testkit::random_poly(rng);
    EXPECT_EQ(star(star(a)), a);
    EXPECT_EQ(star(a * b), star(a) * star(b));
  }
}

TEST(PolycoreProperties, DivisionRoundTrip) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 60; ++it) {
    const Polynomial q = testkit::random_poly(rng), d = testkit::random_poly(rng, 3, 2);
    if (d.is_zero()) continue;
    EXPECT_EQ(exact_divide(q * d, d), q);
  }
}
