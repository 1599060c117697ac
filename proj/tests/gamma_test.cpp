#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "vex/errors.hpp"
#include "vex/gamma.hpp"

using namespace vex;

namespace {

GammaElement Q(std::vector<int> p) { return GammaElement::q_basis(StrictPartition(std::move(p))); }
GammaElement P(std::vector<int> p) { return GammaElement::p_basis(StrictPartition(std::move(p))); }
Polynomial X(int i) { return Polynomial(xv(i)); }
Polynomial T(int i) { return Polynomial(tv(i)); }

/// Truncated expansion of prod (1+v)/(1-v) over the given variables.
Polynomial ratio_series(const std::vector<Variable>& vars, int top) {
  Polynomial s(1);
  for (const auto& v : vars) {
    Polynomial f(1), power(1);
    for (int d = 1; d <= top; ++d) {
      power *= Polynomial(v);
      f += power * 2;
    }
    s = Polynomial::multiply_truncated(s, f, top);
  }
  return s;
}

/// Random gen-form polynomial in q_1..q_3 with coefficients in x1, t1.
Polynomial random_gen_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, 3), c(-3, 3), e(0, 1);
  PolyBuilder b;
  for (int i = 0; i < 4; ++i) {
    Monomial m = Monomial::of(xv(1), e(rng)) * Monomial::of(tv(1), e(rng));
    for (int j = 0; j < 2; ++j) {
      const int a = k(rng);
      if (a > 0) m = m * Monomial::of(qv(a));
    }
    b.add(m, Dyadic(c(rng)));
  }
  return b.finish();
}

}  // namespace

TEST(Straighten, Examples) {
  EXPECT_EQ(straighten(gen(1) * gen(1)), Q({2}) * Polynomial(2));
  EXPECT_EQ(straighten(gen(2) * gen(1)), Q({2, 1}) + Q({3}) * Polynomial(2));
  EXPECT_EQ(straighten(gen(5)), Q({5}));
  EXPECT_EQ(Q({1}) * Q({1}), Q({2}) * Polynomial(2));
}

TEST(Straighten, IdempotentOnCanonicalInput) {
  for (const auto& la : strict_partitions_bounded(4)) {
    EXPECT_EQ(straighten(pf_expansion(la)), q_lambda(la)) << la.to_string();
  }
}

TEST(QPair, Examples) {
  const GeneratorSeries q;
  const GeneratorSeries qt = GeneratorSeries::q_times(1 + T(1));
  EXPECT_TRUE(q_pair(3, 3, qt, qt).is_zero());
  EXPECT_EQ(q_pair(3, 1, qt, q), -q_pair(1, 3, q, qt));
  EXPECT_EQ(q_pair(2, 1, q, q), Q({2, 1}));
}

TEST(QLambda, Examples) {
  EXPECT_EQ(q_lambda(StrictPartition()), GammaElement(1));
  EXPECT_EQ(pf_expansion(StrictPartition({4})), gen(4));
  EXPECT_EQ(pf_expansion(StrictPartition({2, 1})), gen(2) * gen(1) - gen(3) * 2);
  EXPECT_EQ(p_lambda(StrictPartition({2, 1})), Q({2, 1}) * Polynomial(Dyadic::pow2(-2)));
}

TEST(SeriesCoeff, Examples) {
  EXPECT_EQ(series_coeff(GeneratorSeries(), 3), Q({3}));
  EXPECT_EQ(series_coeff(GeneratorSeries::q_times(1 + T(1)), 2), Q({2}) + Q({1}) * T(1));
  EXPECT_EQ(series_coeff(GeneratorSeries::plain((1 + T(1)) * (1 + T(2))), 2), GammaElement(T(1) * T(2)));
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(apply_symmetry(Symmetry::s0(), Q({1})), Q({1}) + GammaElement(X(1) * 2));
  EXPECT_EQ(apply_symmetry(Symmetry::s(1), Q({2}) * X(1)), Q({2}) * X(2));
  EXPECT_EQ(apply_symmetry(Symmetry::s0(), apply_symmetry(Symmetry::s0(), Q({2}))), Q({2}));
}

TEST(Symmetry, GeneratingSeriesForm) {
  // s_0 multiplies Q by (1+x1)/(1-x1); the hat symmetry by the two-variable analogue.
  for (int k = 1; k <= 5; ++k) {
    const auto s0 = GeneratorSeries::q_times(ratio_series({xv(1)}, k));
    EXPECT_EQ(apply_symmetry(Symmetry::s0(), Q({k})), series_coeff(s0, k));
    const auto sh = GeneratorSeries::q_times(ratio_series({xv(1), xv(2)}, k));
    EXPECT_EQ(apply_symmetry(Symmetry::s1hat(), Q({k})), series_coeff(sh, k));
  }
}

TEST(Symmetry, HatOnPFormula) {
  // Image of P_k: P_k + 2(x1+x2) sum_{j<k} v_{j-1} P_{k-j} + (x1+x2) v_{k-1}.
  const Polynomial s = X(1) + X(2);
  auto v = [&](int j) {
    Polynomial r;
    for (int a = 0; a <= j; ++a) r += X(1).pow(a) * X(2).pow(j - a);
    return r;
  };
  for (int k = 1; k <= 4; ++k) {
    GammaElement expect = P({k}) + GammaElement(s * v(k - 1));
    for (int j = 1; j < k; ++j) expect += P({k - j}) * (s * v(j - 1) * 2);
    EXPECT_EQ(apply_symmetry(Symmetry::s1hat(), P({k})), expect) << k;
  }
}

TEST(Symmetry, InvolutiveAndMultiplicative) {
  std::mt19937_64 rng(21);
  const std::vector<Symmetry> ops{Symmetry::s0(), Symmetry::s0(Family::y), Symmetry::s(1), Symmetry::s(2, Family::y),
                                  Symmetry::s1hat()};
  for (int it = 0; it < 20; ++it) {
    const GammaElement a = straighten(random_gen_form(rng) * (1 + X(2)));
    const GammaElement b = straighten(random_gen_form(rng));
    for (const auto& op : ops) {
      EXPECT_EQ(apply_symmetry(op, apply_symmetry(op, a)), a);
      EXPECT_EQ(apply_symmetry(op, a * b), apply_symmetry(op, a) * apply_symmetry(op, b));
    }
  }
}

TEST(Oracle, Examples) {
  const GammaElement q21 = q_pair(2, 1, GeneratorSeries::q_times(1 + T(1)), GeneratorSeries());
  EXPECT_TRUE(specialize_oracle(q21, NegT{{1}}).is_zero());
  EXPECT_EQ(specialize_oracle(Q({1}), SymFun{2, 1}), Polynomial(zv(1)) * 2 + Polynomial(zv(2)) * 2);
  EXPECT_EQ(specialize_oracle(GammaElement(1), SymFun{1, 0}), Polynomial(1));
  EXPECT_EQ(specialize_oracle(GammaElement(1), NegT{{2, 1}}), Polynomial(1));
  EXPECT_THROW(specialize_oracle(Q({3}), SymFun{3, 2}), TruncationTooSmall);
}

TEST(Oracle, BasisIndependence) {
  // Images of Q_λ, |λ| = n, are linearly independent: row-reduce over the rationals.
  using Rat = boost::multiprecision::cpp_rational;
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::map<std::string, Rat>> rows;
    for (const auto& la : strict_partitions_of(n)) {
      std::map<std::string, Rat> row;
      const Polynomial image = specialize_oracle(q_lambda(la), SymFun{n, n});
      for (const auto& t : image.terms())
        row[t.mono.to_string()] = Rat(t.coeff.num(), BigInt(1) << t.coeff.log2den());
      rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    std::set<std::string> keys;
    for (auto& r : rows)
      for (auto& [k, v] : r) keys.insert(k);
    for (const auto& key : keys) {
      std::size_t piv = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i] && rows[i].count(key) && rows[i][key] != 0) piv = i;
      if (piv == rows.size()) continue;
      used[piv] = true;
      ++rank;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == piv || !rows[i].count(key) || rows[i][key] == 0) continue;
        const Rat f = rows[i][key] / rows[piv][key];
        for (auto& [k, v] : rows[piv]) rows[i][k] -= f * v;
      }
    }
    EXPECT_EQ(rank, rows.size()) << "n=" << n;
  }
}

TEST(Oracle, PrimeRelation) {
  for (int k = 1; k <= 6; ++k) {
    GammaElement s = P({k}) * P({k});
    for (int j = 1; j < k; ++j) {
      GammaElement t = P({k + j}) * P({k - j}) * Polynomial(2);
      s += (j % 2 == 1) ? -t : t;
    }
    s += (k % 2 == 1) ? -P({2 * k}) : P({2 * k});
    EXPECT_TRUE(s.is_zero()) << k << ": " << s;
  }
}

TEST(Oracle, AgreesWithCanonicalEquality) {
  std::mt19937_64 rng(22);
  const Polynomial a = ratio_series({zv(1), zv(2), zv(3), zv(4), zv(5), zv(6)}, 6);
  Substitution sub;
  for (int k = 1; k <= 6; ++k) sub.emplace(qv(k), a.homogeneous_part(k));
  int equal_pairs = 0;
  for (int it = 0; it < 200; ++it) {
    const Polynomial g = random_gen_form(rng);
    // Oracle image of the raw generator form, computed without straightening.
    const Polynomial direct = poly_substitute(g, sub);
    const GammaElement e = straighten(g);
    EXPECT_EQ(specialize_oracle(e, SymFun{6, 8}), direct);
    // A second presentation of the same element, shifted by a relation.
    const int j = 1 + it % 3;
    Polynomial relation = gen(j) * gen(j);
    for (int i = 1; i <= j; ++i) relation += gen(j + i) * gen(j - i) * ((i % 2) ? -2 : 2);
    const Polynomial h = (it % 2) ? g + relation * Polynomial(xv(1)) : random_gen_form(rng);
    const GammaElement f = straighten(h);
    const bool canon = e == f;
    equal_pairs += canon;
    EXPECT_EQ(canon, specialize_oracle(e, SymFun{6, 8}) == specialize_oracle(f, SymFun{6, 8}));
  }
  EXPECT_GE(equal_pairs, 100);
}
