#include <gtest/gtest.h>

#include <deque>
#include <map>

#include "vex/errors.hpp"
#include "vex/weyl.hpp"

using namespace vex;

namespace {

SignedPermutation W(const std::string& s) { return parse_word(s); }

/// Word lengths by breadth-first search from the identity (the minimal-word definition).
std::map<SignedPermutation, int> bfs_lengths(int n, WeylType type) {
  std::map<SignedPermutation, int> dist;
  std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (int g : generators(n, type)) {
      const auto v = w.times_generator(g);
      if (dist.emplace(v, dist[w] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

const std::vector<WeylType> kTypes{WeylType::A, WeylType::C, WeylType::D};

}  // namespace

TEST(Length, Examples) {
  EXPECT_EQ(length(SignedPermutation::identity(3), WeylType::C), 0);
  EXPECT_EQ(length(W("-1"), WeylType::C), 1);
  EXPECT_EQ(length(W("-3 2 -1"), WeylType::C), 5);
}

TEST(Length, MatchesMinimalWords) {
  for (auto type : kTypes) {
    for (int n = 2; n <= 4; ++n) {
      const auto dist = bfs_lengths(n, type);
      for (const auto& [w, d] : dist) EXPECT_EQ(length(w, type), d) << w.to_string();
      EXPECT_EQ(dist.size(), enumerate_group(n, type).size());
    }
  }
}

TEST(ReducedWord, Examples) {
  EXPECT_TRUE(reduced_word(SignedPermutation::identity(3), WeylType::C).empty());
  EXPECT_EQ(reduced_word(W("2 1"), WeylType::C), std::vector<int>{1});
  EXPECT_EQ(reduced_word(longest_element(2, WeylType::C), WeylType::C).size(), 4u);
}

TEST(ReducedWord, AllOfRankThree) {
  for (auto type : kTypes) {
    for (const auto& w : enumerate_group(3, type)) {
      const auto word = reduced_word(w, type);
      EXPECT_EQ(static_cast<int>(word.size()), length(w, type));
      EXPECT_EQ(word_product(word, 3), w);
    }
  }
}

TEST(Longest, Examples) {
  EXPECT_EQ(longest_element(2, WeylType::C), W("-1 -2"));
  EXPECT_EQ(longest_element(3, WeylType::C), W("-1 -2 -3"));
  EXPECT_EQ(longest_element(2, WeylType::D), W("-1 -2"));
  for (auto type : kTypes) {
    for (int n = 2; n <= 4; ++n) {
      const auto top = longest_element(n, type);
      int best = 0, count = 0;
      for (const auto& w : enumerate_group(n, type)) best = std::max(best, length(w, type));
      for (const auto& w : enumerate_group(n, type)) count += length(w, type) == best;
      EXPECT_EQ(length(top, type), best);
      EXPECT_EQ(count, 1);
    }
  }
}

TEST(RankFunction, Examples) {
  const auto w = W("1 -9 -8 -4 10 -5 -3 -7 -6 -2");
  EXPECT_EQ(rank_function(w, 8, 6, false), 2);
  EXPECT_EQ(rank_function(w, 2, 2, false), 8);
  EXPECT_EQ(rank_function(SignedPermutation::identity(4), 1, 1, false), 0);
}

TEST(Group, Operations) {
  const auto w = W("3 -1 2");
  EXPECT_EQ(compose(w, SignedPermutation::identity(3)), w);
  EXPECT_EQ(inverse(W("-1 2")), W("-1 2"));
  EXPECT_EQ(compose(w, inverse(w)), SignedPermutation::identity(3));
  EXPECT_EQ(inverse(inverse(w)), w);
  EXPECT_THROW(compose(w, SignedPermutation::identity(2)), SizeMismatch);
  EXPECT_THROW(parse_word("1 1"), ParseError);
  EXPECT_THROW(parse_word("1 x"), ParseError);
}

TEST(Group, Census) {
  EXPECT_EQ(enumerate_group(3, WeylType::C).size(), 48u);
  EXPECT_EQ(enumerate_group(3, WeylType::D).size(), 24u);
  EXPECT_EQ(enumerate_group(3, WeylType::D, true).size(), 48u);
}

TEST(Group, ExchangeProperty) {
  for (auto type : kTypes) {
    for (const auto& w : enumerate_group(3, type, type == WeylType::D)) {
      for (int g : generators(3, type)) EXPECT_EQ(std::abs(length(w.times_generator(g), type) - length(w, type)), 1);
    }
  }
}

TEST(Group, Stability) {
  for (auto type : kTypes) {
    for (const auto& w : enumerate_group(3, type, type == WeylType::D)) {
      const auto e = w.embedded(4);
      EXPECT_EQ(length(e, type), length(w, type));
      for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
          EXPECT_EQ(rank_function(e, p, q, false), rank_function(w, p, q, false));
          EXPECT_EQ(rank_function(e, p, q, true), rank_function(w, p, q, true));
        }
    }
  }
}
