#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vex/errors.hpp"
#include "vex/multischur.hpp"
#include "vex/pfaffian.hpp"

using namespace vex;

namespace {

// Generic skew entry m_{ij} (i < j) as the variable u_{10 i + j}.
Polynomial sym_entry(int i, int j) { return Polynomial(uv(10 * (i + 1) + (j + 1))); }

Polynomial sym_pf(int r, const std::function<Polynomial(int, int)>& e) {
  return pfaffian<Polynomial>(
      r, e, [](int k) { return Polynomial(hv(k + 1)); }, Polynomial(), Polynomial(1));
}

GammaElement Q(std::vector<int> parts) { return GammaElement::q_basis(StrictPartition(std::move(parts))); }
GammaElement P(std::vector<int> parts) { return GammaElement::p_basis(StrictPartition(std::move(parts))); }

Polynomial e_part(int k, int i) { return elementary_series(k).homogeneous_part(i); }

Polynomial prod_over(const std::vector<int>& s, Family f = Family::t) { return one_plus_product(f, s); }

}  // namespace

TEST(Pfaffian, SmallSizes) {
  EXPECT_EQ(sym_pf(0, sym_entry), Polynomial(1));
  EXPECT_EQ(sym_pf(1, sym_entry), Polynomial(hv(1)));
  EXPECT_EQ(sym_pf(2, sym_entry), sym_entry(0, 1));
  const Polynomial expect = sym_entry(0, 1) * sym_entry(2, 3) - sym_entry(0, 2) * sym_entry(1, 3) +
                            sym_entry(0, 3) * sym_entry(1, 2);
  EXPECT_EQ(sym_pf(4, sym_entry), expect);
  // Odd size expands along the border.
  const Polynomial odd = Polynomial(hv(1)) * sym_entry(1, 2) - Polynomial(hv(2)) * sym_entry(0, 2) +
                         Polynomial(hv(3)) * sym_entry(0, 1);
  EXPECT_EQ(sym_pf(3, sym_entry), odd);
}

TEST(Pfaffian, MissingBorder) {
  SkewOddMatrix<Polynomial> m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) m.set(i, j, sym_entry(i, j));
  EXPECT_THROW(pfaffian(m, Polynomial(), Polynomial(1)), MissingBorder);
  for (int k = 0; k < 3; ++k) m.set_border(k, Polynomial(hv(k + 1)));
  EXPECT_EQ(pfaffian(m, Polynomial(), Polynomial(1)), sym_pf(3, sym_entry));
}

TEST(Pfaffian, AlternatingAndMultilinear) {
  for (int r = 2; r <= 5; ++r) {
    // Swapping two rows/columns negates the Pfaffian.
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[static_cast<std::size_t>(r - 1)]);
    auto skew = [](int i, int j) { return i < j ? sym_entry(i, j) : -sym_entry(j, i); };
    auto permuted = [&](int i, int j) { return skew(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]); };
    auto border = [](int k) { return Polynomial(hv(k + 1)); };
    auto pborder = [&](int k) { return border(perm[static_cast<std::size_t>(k)]); };
    const Polynomial base = pfaffian<Polynomial>(r, skew, border, Polynomial(), Polynomial(1));
    const Polynomial swapped = pfaffian<Polynomial>(r, permuted, pborder, Polynomial(), Polynomial(1));
    EXPECT_EQ(swapped, -base) << "r=" << r;

    // Repeating an index (row 1 a copy of row 0) gives zero.
    auto repeated = [&](int i, int j) {
      auto src = [](int a) { return a == 1 ? 0 : a; };
      if (src(i) == src(j)) return Polynomial();
      return skew(src(i), src(j));
    };
    auto rborder = [&](int k) { return border(k == 1 ? 0 : k); };
    EXPECT_TRUE(pfaffian<Polynomial>(r, repeated, rborder, Polynomial(), Polynomial(1)).is_zero()) << r;

    // Linear in row 0: scaling row/column 0 (and its border) scales the value.
    const Polynomial s = Polynomial(zv(1)) + Polynomial(2);
    auto scaled = [&](int i, int j) { return (i == 0 || j == 0) ? skew(i, j) * s : skew(i, j); };
    auto sborder = [&](int k) { return k == 0 ? border(k) * s : border(k); };
    EXPECT_EQ(pfaffian<Polynomial>(r, scaled, sborder, Polynomial(), Polynomial(1)), base * s);
  }
}

TEST(MultiSchurPf, Examples) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(multischur_pf(StrictPartition({k}), {GeneratorSeries()}), Q({k}));
  }
  EXPECT_EQ(multischur_pf(StrictPartition({2, 1}), {GeneratorSeries(), GeneratorSeries()}), Q({2, 1}));
  EXPECT_EQ(multischur_pf(StrictPartition({4, 2, 1}), std::vector<GeneratorSeries>(3)), Q({4, 2, 1}));
  EXPECT_EQ(multischur_pf(StrictPartition(), {}), GammaElement(1));
  EXPECT_THROW(multischur_pf(StrictPartition({2}), {}), SizeMismatch);
}

TEST(MultiSchurPf, GeneralizedIndices) {
  const std::vector<GeneratorSeries> c(2);
  // Equal indices vanish, swapped indices alternate.
  EXPECT_TRUE(multischur_pf(std::vector<int>{3, 3}, c).is_zero());
  EXPECT_EQ(multischur_pf(std::vector<int>{2, 4}, c), -Q({4, 2}));
  EXPECT_TRUE(multischur_pf(std::vector<int>{3, -1}, c).is_zero());
}

TEST(MultiSchurPf, SkewSymmetryWithinHypothesis) {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> lam(1, 5);
    const int lk = lam(rng);
    const int ll = lam(rng);
    auto random_set = [&](int bound) {
      std::vector<int> pool{1, 2, 3, 4, 5, 6};
      std::shuffle(pool.begin(), pool.end(), rng);
      const int size = std::uniform_int_distribution<int>(0, bound - 1)(rng);
      pool.resize(static_cast<std::size_t>(size));
      return pool;
    };
    const GeneratorSeries ck = GeneratorSeries::q_times(prod_over(random_set(lk)));
    const GeneratorSeries cl = GeneratorSeries::q_times(prod_over(random_set(ll)));
    const GammaElement kl = multischur_entry(lk, ll, ck, cl);
    const GammaElement lk_ = multischur_entry(ll, lk, cl, ck);
    EXPECT_EQ(kl + lk_, GammaElement()) << lk << "," << ll;
    EXPECT_TRUE(multischur_entry(lk, lk, ck, ck).is_zero());
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(MultiSchurPf, SkewCheckFailsOutsideHypothesis) {
  const GeneratorSeries big = GeneratorSeries::q_times(prod_over({1, 2}));
  const GeneratorSeries small = GeneratorSeries::q_times(prod_over({3}));
  EXPECT_THROW(multischur_pf(std::vector<int>{1, 1}, {big, small}), SkewCheckFailed);
  EXPECT_NO_THROW(multischur_pf(std::vector<int>{1, 1}, {big, small}, SkewPolicy::Trust));
}

TEST(MultiSchurPf, RedundancyInvariance) {
  std::mt19937 rng(77);
  int cases = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const int r = std::uniform_int_distribution<int>(2, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, std::min(2, r - 1))(rng);
    const int k = std::uniform_int_distribution<int>(0, r - 1 - m)(rng);
    // λ strictly decreasing with λ_i = λ_{i+1} + 1 on the block k..k+m.
    std::vector<int> la(static_cast<std::size_t>(r));
    int cur = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = r - 1; i >= 0; --i) {
      la[static_cast<std::size_t>(i)] = cur;
      const bool in_block = i - 1 >= k && i - 1 < k + m;
      cur += in_block ? 1 : std::uniform_int_distribution<int>(1, 2)(rng);
    }
    std::vector<GeneratorSeries> c;
    for (int i = 0; i < r; ++i) {
      std::vector<int> s;
      for (int j = 1; j < la[static_cast<std::size_t>(i)] && j <= 4; ++j) {
        if (rng() % 2) s.push_back(j);
      }
      c.push_back(GeneratorSeries::q_times(prod_over(s)));
    }
    for (int i = k + 1; i <= k + m; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(k)];
    // The shared series must satisfy the degree criterion at the bottom of the block.
    if (c[static_cast<std::size_t>(k)].multiplier.degree() >= la[static_cast<std::size_t>(k + m)]) continue;
    const GammaElement before = multischur_pf(la, c);
    auto changed = c;
    changed[static_cast<std::size_t>(k)].multiplier =
        changed[static_cast<std::size_t>(k)].multiplier * one_plus_product(Family::z, m);
    EXPECT_EQ(multischur_pf(la, changed), before) << "trial " << trial;
    ++cases;
  }
  EXPECT_GE(cases, 10);
}

TEST(MultiSchurPf, QLambdaOfT) {
  for (int k = 1; k <= 4; ++k) {
    GammaElement expect;
    for (int i = 0; i < k; ++i) expect += Q({k - i}) * e_part(k - 1, i);
    EXPECT_EQ(q_lambda_t(StrictPartition({k})), expect);
  }
  const GammaElement q21 = q_lambda_t(StrictPartition({2, 1}));
  EXPECT_EQ(q21.coefficient(StrictPartition({2, 1})), Polynomial(1));
  EXPECT_TRUE(q21.is_homogeneous(3));
  // ℙ scales by 2^-len.
  EXPECT_EQ(p_lambda_t(StrictPartition({3, 1})).coefficient(StrictPartition({3, 1}), Basis::P), Polynomial(1));
}

TEST(MultiSchurPfD, RExamples) {
  EXPECT_EQ(r_lambda_t(TypeDPartition({0})), GammaElement(1));
  EXPECT_EQ(r_lambda_t(TypeDPartition()), GammaElement(1));
  for (int k = 1; k <= 4; ++k) {
    GammaElement rk0;
    GammaElement rk;
    for (int i = 0; i < k; ++i) rk0 += P({k - i}) * e_part(k, i);
    rk = rk0 + GammaElement(e_part(k, k));
    EXPECT_EQ(r_lambda_t(TypeDPartition({k, 0})), rk0) << k;
    EXPECT_EQ(r_lambda_t(TypeDPartition({k})), rk) << k;
    EXPECT_NE(rk0, rk);
  }
  const GammaElement r31 = r_lambda_t(TypeDPartition({3, 1}));
  EXPECT_EQ(r31.coefficient(StrictPartition({3, 1}), Basis::P), Polynomial(1));
  EXPECT_TRUE(r31.is_homogeneous(4));
}

TEST(MultiSchurPfD, ReducesWhenDegreesAreSmall) {
  // c(i) of degree < λ_i: the type-D Pfaffian is the plain multi-Schur Pfaffian of d.
  const std::vector<int> la{4, 2, 1};
  const std::vector<Polynomial> cs{prod_over({1, 2}), prod_over({1}), Polynomial(1)};
  std::vector<DPairedSeries> pairs;
  std::vector<GeneratorSeries> ds;
  for (const auto& c : cs) {
    pairs.push_back({c, GeneratorSeries::q_times(c)});
    ds.push_back(pairs.back().d);
  }
  EXPECT_EQ(multischur_pf_D(la, pairs), multischur_pf(la, ds, SkewPolicy::Trust));
}

TEST(MultiSchurPfD, Preconditions) {
  // Divisibility: c(2) must divide c(1).
  std::vector<DPairedSeries> bad_div{{prod_over({1}), GeneratorSeries::q_times(prod_over({1}))},
                                     {prod_over({2}), GeneratorSeries::q_times(prod_over({2}))}};
  EXPECT_THROW(multischur_pf_D(std::vector<int>{2, 1}, bad_div), DivisibilityFailed);
  // Star relation: d(1) d(2)* must equal c(1) c(2)* in low degrees.
  std::vector<DPairedSeries> bad_star{{prod_over({1}), GeneratorSeries::q_times(prod_over({1}))},
                                      {Polynomial(1), GeneratorSeries::q_times(prod_over({3}))}};
  EXPECT_THROW(multischur_pf_D(std::vector<int>{2, 1}, bad_star), StarRelationFailed);
  std::vector<DPairedSeries> too_big{{prod_over({1, 2}), GeneratorSeries::q_times(prod_over({1, 2}))}};
  EXPECT_THROW(multischur_pf_D(std::vector<int>{1}, too_big), DomainError);
}

TEST(MultiSchurDet, Examples) {
  const GeneratorSeries a = GeneratorSeries::plain(prod_over({1, 2, 3}));
  EXPECT_EQ(multischur_det({2}, {a}), e_part(3, 2));
  const Polynomial e1 = e_part(3, 1);
  EXPECT_EQ(multischur_det({1, 1}, {a, a}), e1 * e1 - e_part(3, 2));
  EXPECT_EQ(multischur_det({0, 0, 0}, {a, a, a}), Polynomial(1));
  EXPECT_THROW(multischur_det({1}, {GeneratorSeries()}), WrongType);
}

TEST(MultiSchurDet, RowOperationIdentity) {
  // prod_i c_{p_i}((F_i/F_{i-1})^* ⊗ V/E_{p_i}) = s_{p}(c(V - E_{p_1} - F_1), ...)
  // with V/E_p of Chern roots x_1..x_p and F_i/F_{i-1} of root y_i.
  auto inverse_series = [](int i, int deg) {
    Polynomial inv(1);
    for (int j = 1; j <= i; ++j) {
      Polynomial geo;
      Polynomial power(1);
      for (int e = 0; e <= deg; ++e) {
        geo += e % 2 == 0 ? power : -power;
        power = power * Polynomial(yv(j));
      }
      inv = Polynomial::multiply_truncated(inv, geo, deg);
    }
    return inv;
  };
  int cases = 0;
  for (int s = 1; s <= 3; ++s) {
    std::vector<int> p(static_cast<std::size_t>(s));
    std::function<void(int, int)> rec = [&](int i, int max) {
      if (i == s) {
        Polynomial lhs(1);
        std::vector<GeneratorSeries> a;
        const int deg = p[0] + s;
        for (int k = 0; k < s; ++k) {
          for (int j = 1; j <= p[static_cast<std::size_t>(k)]; ++j) lhs = lhs * (Polynomial(xv(j)) - Polynomial(yv(k + 1)));
          a.push_back(GeneratorSeries::plain(Polynomial::multiply_truncated(
              one_plus_product(Family::x, p[static_cast<std::size_t>(k)]), inverse_series(k + 1, deg), deg)));
        }
        EXPECT_EQ(multischur_det(p, a), lhs);
        ++cases;
        return;
      }
      for (int v = 1; v <= max; ++v) {
        p[static_cast<std::size_t>(i)] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 3);
  }
  EXPECT_EQ(cases, 3 + 6 + 10);
}
