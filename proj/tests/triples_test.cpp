#include <gtest/gtest.h>

#include <map>

#include "vex/errors.hpp"
#include "vex/triples.hpp"

using namespace vex;

namespace {

SignedPermutation W(const std::string& s) { return parse_word(s); }
Triple T(const std::string& s) { return parse_triple(s); }

const Triple kExampleC = {{2, 3, 5, 8}, {8, 6, 6, 2}, {6, 5, 2, 2}, WeylType::C};
const Triple kExampleA = {{2, 6, 8}, {7, 4, 2}, {5, 7, 9}, WeylType::A};
const Triple kRedundantA = {{1, 2, 3, 4, 5, 6, 7, 8}, {7, 7, 6, 6, 5, 4, 3, 2}, {4, 5, 6, 7, 7, 7, 9, 9}, WeylType::A};

Triple top_d(int n) {
  Triple t;
  t.type = WeylType::D;
  for (int i = 1; i < n; ++i) {
    t.k.push_back(i);
    t.p.push_back(n - i);
    t.q.push_back(n - i);
  }
  return t;
}

/// Rank data of w as the triple sees it.
bool satisfies(const SignedPermutation& v, const Triple& t, bool at_least) {
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int r = t.type == WeylType::D ? rank_function(v, t.p[i], t.q[i], true) : rank_function(v, t.p[i], t.q[i], false);
    if (at_least ? r < t.k[i] : r != t.k[i]) return false;
  }
  return true;
}

}  // namespace

TEST(Triple, ParseAndPrint) {
  const Triple t = T("k=2,3,5,8;p=8,6,6,2;q=6,5,2,2;type=C");
  EXPECT_EQ(t, kExampleC);
  EXPECT_EQ(parse_triple(t.to_string()), t);
  EXPECT_THROW(T("k=1;p=1"), ParseError);
  EXPECT_THROW(T("k=1;p=1;q=x;type=C"), ParseError);
  EXPECT_TRUE(T("k=;p=;q=;type=C").empty());
}

TEST(Validate, Examples) {
  EXPECT_EQ(validate(kExampleC), Validity::Strict);
  EXPECT_EQ(validate(kRedundantA), Validity::Redundant);
  EXPECT_EQ(validate(T("k=1,2;p=3,3;q=3,3;type=C")), Validity::Invalid);
  EXPECT_EQ(validate(T("k=1,2;p=0,0;q=2,1;type=C")), Validity::Invalid);
  EXPECT_EQ(validate(T("k=1,2;p=1,0;q=2,0;type=D")), Validity::Strict);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce_redundant(kRedundantA), kExampleA);
  EXPECT_EQ(reduce_redundant(kExampleC), kExampleC);
  const Triple t = T("k=1,2;p=2,1;q=2,1;type=C");
  EXPECT_EQ(validate(t), Validity::Strict);
  EXPECT_EQ(reduce_redundant(t), t);
  EXPECT_THROW(reduce_redundant(T("k=1,2;p=3,3;q=3,3;type=C")), InvalidTriple);
}

TEST(Lambda, Examples) {
  for (int n = 1; n <= 5; ++n) {
    Triple t;
    std::vector<int> expect;
    for (int i = 1; i <= n; ++i) {
      t.k.push_back(i);
      t.p.push_back(n + 1 - i);
      t.q.push_back(n + 1 - i);
      expect.push_back(2 * (n - i) + 1);
    }
    EXPECT_EQ(lambda_of(t).parts(), expect);
  }
  EXPECT_EQ(lambda_of(kExampleC).parts(), (std::vector<int>{14, 13, 10, 8, 7, 5, 4, 3}));
  for (int n = 2; n <= 5; ++n) {
    Triple t = top_d(n);
    t.k.push_back(n);
    t.p.push_back(0);
    t.q.push_back(0);
    std::vector<int> expect;
    for (int i = 1; i <= n; ++i) expect.push_back(2 * (n - i));
    EXPECT_EQ(lambda_of_d(t).parts(), expect);
  }
  EXPECT_EQ(lambda_parts(kExampleA), (std::vector<int>{4, 4, 3, 3, 3, 3, 1, 1}));
}

TEST(WOfTriple, Examples) {
  EXPECT_EQ(w_of_triple(kExampleA), W("1 10 8 9 2 3 6 4 5 7"));
  EXPECT_EQ(w_of_triple(kExampleC), W("1 -9 -8 -4 10 -5 -3 -7 -6 -2"));
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> v{1};
    for (int i = 2; i <= n; ++i) v.push_back(-i);
    EXPECT_EQ(w_of_triple(top_d(n)), SignedPermutation(v));
  }
}

TEST(TripleOfW, Examples) {
  EXPECT_EQ(triple_of_w(W("1 -9 -8 -4 10 -5 -3 -7 -6 -2"), WeylType::C), kExampleC);
  EXPECT_FALSE(triple_of_w(W("-3 2 -1"), WeylType::C).has_value());
  auto e = triple_of_w(SignedPermutation::identity(3), WeylType::C);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->empty());
  EXPECT_EQ(triple_of_w(W("1 10 8 9 2 3 6 4 5 7"), WeylType::A), kExampleA);
  EXPECT_FALSE(triple_of_w(W("2 1 4 3"), WeylType::A).has_value());
}

TEST(Dual, Examples) {
  const Triple d = dual(kExampleA);
  EXPECT_EQ(d, (Triple{{1, 3, 4}, {9, 7, 5}, {2, 4, 7}, WeylType::A}));
  EXPECT_EQ(dual(d), kExampleA);
  EXPECT_EQ(w_of_triple(d), inverse(w_of_triple(kExampleA)));
  // λ(τ*) is the conjugate of λ(τ).
  const auto la = lambda_parts(kExampleA);
  std::vector<int> conj;
  for (int j = 1; j <= la.front(); ++j) {
    int c = 0;
    for (int x : la) c += x >= j;
    conj.push_back(c);
  }
  EXPECT_EQ(lambda_parts(d), conj);
  EXPECT_THROW(dual(kExampleC), WrongType);
  for (const auto& t : enumerate_triples(WeylType::A, 4, 4, 5)) {
    EXPECT_EQ(dual(dual(t)), t);
    EXPECT_EQ(validate(dual(t)), Validity::Strict) << t.to_string();
    EXPECT_EQ(w_of_triple(dual(t)), inverse(w_of_triple(t)).trimmed()) << t.to_string();
  }
}

TEST(PlusMap, Examples) {
  for (int n = 2; n <= 5; ++n) {
    const Triple d = top_d(n);
    const Triple c = plus_map(d);
    for (int i = 0; i < n - 1; ++i) {
      EXPECT_EQ(c.p[static_cast<std::size_t>(i)], n - i);
      EXPECT_EQ(c.q[static_cast<std::size_t>(i)], n - i);
    }
    EXPECT_EQ(lambda_of(c), lambda_of_d(d).plus());
    EXPECT_EQ(w_of_triple(c), w_of_triple(d));
  }
  EXPECT_THROW(plus_map(kExampleC), WrongType);
}

TEST(Census, RankThree) {
  int c = 0, d = 0;
  for (const auto& w : enumerate_group(3, WeylType::C)) c += triple_of_w(w, WeylType::C).has_value();
  for (const auto& w : enumerate_group(3, WeylType::D)) d += triple_of_w(w, WeylType::D).has_value();
  EXPECT_EQ(c, 33);
  EXPECT_EQ(d, 18);
  int a = 0;
  for (const auto& w : enumerate_group(4, WeylType::A)) a += triple_of_w(w, WeylType::A).has_value();
  EXPECT_EQ(a, 23);
}

TEST(TripleOfW, BruteForceOracle) {
  for (auto type : {WeylType::C, WeylType::D, WeylType::A}) {
    for (int n = 1; n <= 4; ++n) {
      if (type == WeylType::D && n < 2) continue;
      std::map<SignedPermutation, Triple> table;
      table.emplace(SignedPermutation::identity(n), Triple{{}, {}, {}, type});
      const int lo_shift = type == WeylType::D ? 1 : 0;
      for (const auto& t : enumerate_triples(type, n, n - lo_shift, n)) {
        const SignedPermutation w = w_of_triple(t);
        if (w.size() > n) continue;
        EXPECT_TRUE(table.emplace(w.embedded(n), t).second) << "two triples for " << w.to_string();
      }
      for (const auto& w : enumerate_group(n, type, true)) {
        const auto got = triple_of_w(w, type);
        const auto it = table.find(w);
        if (it == table.end()) {
          EXPECT_FALSE(got.has_value()) << w.to_string();
        } else {
          ASSERT_TRUE(got.has_value()) << w.to_string();
          EXPECT_EQ(*got, it->second);
        }
      }
    }
  }
}

TEST(TripleOfW, RoundTrip) {
  for (auto type : {WeylType::C, WeylType::D, WeylType::A}) {
    for (const auto& t : enumerate_triples(type, 5, 5, 5)) {
      const auto back = triple_of_w(w_of_triple(t), type);
      ASSERT_TRUE(back.has_value()) << t.to_string();
      EXPECT_EQ(*back, t);
    }
  }
}

TEST(TripleOfW, Minimality) {
  for (auto type : {WeylType::C, WeylType::D}) {
    const auto group = enumerate_group(3, type, true);
    for (const auto& w : group) {
      const auto t = triple_of_w(w, type);
      if (!t) continue;
      const int lw = length(w, type);
      for (const auto& v : group) {
        if (v == w || length(v, type) > lw) continue;
        if (type == WeylType::D && (v.bar_count() - w.bar_count()) % 2 != 0) continue;
        EXPECT_FALSE(satisfies(v, *t, true)) << w.to_string() << " vs " << v.to_string();
      }
    }
  }
}

TEST(TripleOfW, InverseClosure) {
  for (auto type : {WeylType::C, WeylType::D}) {
    for (const auto& w : enumerate_group(3, type, true))
      EXPECT_EQ(triple_of_w(w, type).has_value(), triple_of_w(inverse(w), type).has_value()) << w.to_string();
  }
}

TEST(Reduce, PreservesPermutation) {
  EXPECT_EQ(w_of_triple(kRedundantA), w_of_triple(kExampleA));
  for (auto type : {WeylType::C, WeylType::D, WeylType::A}) {
    int count = 0;
    for (const auto& t : enumerate_triples(type, 4, 4, 4, true)) {
      EXPECT_EQ(w_of_triple(t), w_of_triple(reduce_redundant(t))) << t.to_string();
      ++count;
    }
    EXPECT_GT(count, 10);
  }
}
