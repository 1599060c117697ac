#pragma once

#include <random>

#include "vex/polynomial.hpp"

namespace vex::testkit {

/// Random polynomial in x1..x3, y1..y2 with small integer and dyadic coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, int terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4), den(0, 2), e(0, max_exp), var(0, 4);
  PolyBuilder b;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int j = 0; j < 3; ++j) {
      const int v = var(rng);
      const Variable x = v < 3 ? xv(v + 1) : yv(v - 2);
      m = m * Monomial::of(x, e(rng));
    }
    b.add(m, Dyadic(BigInt(coeff(rng)), den(rng)));
  }
  return b.finish();
}

}  // namespace vex::testkit
