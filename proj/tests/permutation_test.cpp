#include "fjgraph/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "fjgraph/ordering.hpp"
#include "gtest/gtest.h"

namespace fj {
namespace {

PrefixSet set_of(std::initializer_list<int> values) {
  PrefixSet s;
  for (int v : values) s.set(v);
  return s;
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::span<const int>(v));
}

Permutation swap_positions(const Permutation& u, int i) {
  std::vector<int> v(u.entries().begin(), u.entries().end());
  std::swap(v[i - 1], v[i]);
  return Permutation(std::span<const int>(v));
}

// Shortest path between u and v in the graph whose moves swap two adjacent
// positions.
int transposition_bfs_distance(const Permutation& u, const Permutation& v) {
  std::map<Permutation, int> dist{{u, 0}};
  std::queue<Permutation> queue;
  queue.push(u);
  while (!queue.empty()) {
    const Permutation w = queue.front();
    queue.pop();
    if (w == v) return dist[w];
    for (int i = 1; i < w.size(); ++i) {
      const Permutation x = swap_positions(w, i);
      if (dist.emplace(x, dist[w] + 1).second) queue.push(x);
    }
  }
  return -1;
}

TEST(PermutationTest, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(Permutation::identity(0), std::invalid_argument);
  EXPECT_THROW(Permutation::identity(kMaxPermutationSize + 1), std::invalid_argument);
}

TEST(PermutationTest, ParsesBothNotations) {
  EXPECT_EQ(Permutation::parse("2314"), Permutation({2, 3, 1, 4}));
  EXPECT_EQ(Permutation::parse("2,3,1,4"), Permutation({2, 3, 1, 4}));
  const auto big = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(Permutation({3, 1, 2}).to_string(), "312");
  EXPECT_THROW(Permutation::parse("12a"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1,,2"), std::invalid_argument);
}

TEST(PermutationTest, StringRoundTripProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % kMaxPermutationSize;
    const auto u = random_permutation(n, rng);
    EXPECT_EQ(Permutation::parse(u.to_string()), u);
  }
}

TEST(PrefixSetTest, Examples) {
  EXPECT_EQ(prefix_set(Permutation({3, 1, 2, 4}), 2), set_of({3, 1}));
  EXPECT_EQ(prefix_set(Permutation({3, 1, 2, 4}), 0), PrefixSet{});
  EXPECT_EQ(prefix_set(Permutation({2, 1, 3, 5, 4}), 4), set_of({2, 1, 3, 5}));
  EXPECT_EQ(prefix_set(Permutation({2, 1, 3, 5, 4}), 5).count(), 5U);
  EXPECT_THROW(prefix_set(Permutation({1, 2}), 3), std::out_of_range);
  EXPECT_THROW(prefix_set(Permutation({1, 2}), -1), std::out_of_range);
}

TEST(PrefixMismatchTest, Examples) {
  const Permutation id{1, 2, 3, 4, 5};
  EXPECT_EQ(prefix_mismatch_count(id, Permutation({2, 1, 3, 5, 4})), 2);
  EXPECT_EQ(prefix_mismatch_count(id, Permutation({3, 2, 4, 1, 5})), 3);
  EXPECT_EQ(prefix_mismatch_count(id, id), 0);
  EXPECT_THROW(prefix_mismatch_count(id, Permutation({1, 2})), std::invalid_argument);
}

TEST(PrefixMismatchTest, FlagDualityAndBoundsProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 9;
    const auto u = random_permutation(n, rng);
    const auto v = random_permutation(n, rng);
    int equal = 0;
    for (int i = 1; i <= n; ++i) equal += prefix_set(u, i) == prefix_set(v, i);
    const int mismatches = prefix_mismatch_count(u, v);
    EXPECT_EQ(mismatches, n - equal);
    EXPECT_LE(mismatches, n - 1);
    EXPECT_EQ(mismatches == 0, u == v);
  }
}

TEST(PrefixMismatchTest, EqualPrefixesBoundEqualWindowsProperty) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const auto u = random_permutation(n, rng);
    const auto v = random_permutation(n, rng);
    for (int x = 0; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        if (prefix_set(u, x) != prefix_set(v, x) || prefix_set(u, y) != prefix_set(v, y)) continue;
        std::vector<int> a(u.entries().begin() + x, u.entries().begin() + y);
        std::vector<int> b(v.entries().begin() + x, v.entries().begin() + y);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(DisorderTest, Examples) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(disorder(Permutation::identity(n)), 0);
    EXPECT_EQ(disorder(Permutation::reversal(n)), static_cast<int>(binomial2(n)));
  }
  EXPECT_EQ(disorder(Permutation({2, 1, 3})), 1);
}

TEST(DisorderTest, NeighboringTranspositionChangesByOneProperty) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 10;
    const auto u = random_permutation(n, rng);
    const int f = disorder(u);
    EXPECT_GE(f, 0);
    EXPECT_LE(f, static_cast<int>(binomial2(n)));
    for (int i = 1; i < n; ++i) EXPECT_EQ(std::abs(disorder(swap_positions(u, i)) - f), 1);
  }
}

TEST(KendallDistanceTest, Examples) {
  EXPECT_EQ(kendall_distance(Permutation({1, 2, 3}), Permutation({1, 3, 2})), 1);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(kendall_distance(Permutation::identity(n), Permutation::reversal(n)),
              static_cast<int>(binomial2(n)));
  }
  // Every pair of values is discordant here; the BFS oracle agrees.
  EXPECT_EQ(transposition_bfs_distance(Permutation({2, 1, 3}), Permutation({3, 1, 2})), 3);
  EXPECT_EQ(kendall_distance(Permutation({2, 1, 3}), Permutation({3, 1, 2})), 3);
}

TEST(KendallDistanceTest, MatchesBfsOracleOnAllPairs) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_permutations(n);
    for (const auto& u : all) {
      for (const auto& v : all) {
        const int d = kendall_distance(u, v);
        ASSERT_EQ(d, transposition_bfs_distance(u, v)) << u.to_string() << " " << v.to_string();
        ASSERT_EQ(d, kendall_distance(v, u));
        ASSERT_EQ(d == 0, u == v);
      }
    }
  }
}

TEST(InsertionTest, Examples) {
  EXPECT_EQ(insertion(Permutation({1, 2, 3}), 1), Permutation({4, 1, 2, 3}));
  EXPECT_EQ(insertion(Permutation({1, 2, 3}), 4), Permutation({1, 2, 3, 4}));
  EXPECT_EQ(insertion(Permutation({3, 1, 2}), 2), Permutation({3, 4, 1, 2}));
  EXPECT_THROW(insertion(Permutation({1, 2, 3}), 0), std::out_of_range);
  EXPECT_THROW(insertion(Permutation({1, 2, 3}), 5), std::out_of_range);
}

TEST(InsertionTest, DeletingInsertedValueRecoversInput) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto u = random_permutation(n, rng);
    for (int i = 1; i <= n + 1; ++i) {
      const auto w = insertion(u, i);
      ASSERT_EQ(w.value(i), n + 1);
      std::vector<int> rest;
      for (int t = 1; t <= n + 1; ++t)
        if (t != i) rest.push_back(w.value(t));
      EXPECT_EQ(Permutation(std::span<const int>(rest)), u);
    }
  }
}

TEST(InsertionTest, OuterInsertionsPreserveMismatchCountProperty) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto u = random_permutation(n, rng);
    const auto v = random_permutation(n, rng);
    const int m = prefix_mismatch_count(u, v);
    EXPECT_EQ(prefix_mismatch_count(insertion(u, 1), insertion(v, 1)), m);
    EXPECT_EQ(prefix_mismatch_count(insertion(u, n + 1), insertion(v, n + 1)), m);
  }
}

TEST(IrreducibleTest, Examples) {
  EXPECT_TRUE(is_irreducible(Permutation({3, 1, 2})));
  EXPECT_FALSE(is_irreducible(Permutation({2, 1, 3})));
  EXPECT_TRUE(is_irreducible(Permutation({1})));
  EXPECT_FALSE(is_irreducible(Permutation({1, 2})));
  EXPECT_TRUE(is_irreducible(Permutation({2, 1})));
}

TEST(IrreducibleTest, InverseSymmetricProperty) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_permutations(n))
      ASSERT_EQ(is_irreducible(p), is_irreducible(p.inverse())) << p.to_string();
}

TEST(BlockBoundariesTest, Examples) {
  const auto id7 = Permutation::identity(7);
  const auto d = block_boundaries(id7, Permutation({2, 3, 1, 4, 6, 7, 5}));
  EXPECT_EQ(d.boundaries, (std::vector<int>{3, 4, 7}));
  EXPECT_EQ(d.block_count(), 3);
  EXPECT_EQ(block_boundaries(id7, id7).boundaries, (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(block_boundaries(Permutation({1, 2, 3, 4}), Permutation({4, 3, 2, 1})).boundaries,
            (std::vector<int>{4}));
  EXPECT_THROW(block_boundaries(id7, Permutation({1, 2})), std::invalid_argument);
}

TEST(BlockBoundariesTest, WindowsAreIrreducibleProperty) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 9;
    const auto u = random_permutation(n, rng);
    const auto v = random_permutation(n, rng);
    const auto d = block_boundaries(u, v);
    EXPECT_EQ(d.block_count(), n - prefix_mismatch_count(u, v));
    EXPECT_EQ(d.boundaries.back(), n);
    EXPECT_TRUE(std::is_sorted(d.boundaries.begin(), d.boundaries.end()));
    for (auto [first, last] : d.windows())
      EXPECT_TRUE(is_irreducible(relative_window(u, v, first, last)));
  }
}

TEST(ComposeTest, Examples) {
  EXPECT_EQ(compose(Permutation({2, 3, 1}), Permutation({1, 2, 3})), Permutation({2, 3, 1}));
  EXPECT_EQ(compose(Permutation({1, 2, 3}), Permutation({2, 1, 3})), Permutation({2, 1, 3}));
  EXPECT_EQ(compose(Permutation({3, 1, 2}), Permutation({2, 1, 3})), Permutation({1, 3, 2}));
  EXPECT_THROW(compose(Permutation({1, 2}), Permutation({1, 2, 3})), std::invalid_argument);
}

TEST(ComposeTest, MismatchDependsOnlyOnGeneratorProperty) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const auto g = random_permutation(n, rng);
    const int expected = prefix_mismatch_count(Permutation::identity(n), g);
    for (int rep = 0; rep < 5; ++rep) {
      const auto u = random_permutation(n, rng);
      EXPECT_EQ(prefix_mismatch_count(u, compose(u, g)), expected);
      EXPECT_EQ(compose(u, Permutation::identity(n)), u);
    }
  }
}

TEST(EnumerateTest, Examples) {
  const auto s3 = enumerate_permutations(3);
  std::vector<std::string> got;
  for (const auto& p : s3) got.push_back(p.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"123", "132", "213", "231", "312", "321"}));
  const auto s1 = enumerate_permutations(1);
  ASSERT_EQ(s1.size(), 1U);
  EXPECT_EQ(s1[0], Permutation({1}));
  const auto s4 = enumerate_permutations(4);
  ASSERT_EQ(s4.size(), 24U);
  EXPECT_EQ(s4[0], Permutation({1, 2, 3, 4}));
  EXPECT_EQ(s4[23], Permutation({4, 3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
  EXPECT_THROW(enumerate_permutations(11), CapExceeded);
  EXPECT_THROW(enumerate_permutations(0), std::invalid_argument);
}

TEST(RankTest, LexRankMatchesEnumerationOrder) {
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate_permutations(n);
    for (std::size_t r = 0; r < all.size(); ++r) {
      ASSERT_EQ(lex_rank(all[r]), r);
      ASSERT_EQ(lex_unrank(n, r), all[r]);
    }
  }
}

TEST(OrderingTest, RejectsDuplicatesAndGaps) {
  std::vector<Permutation> perms{Permutation({1, 2}), Permutation({1, 2})};
  EXPECT_THROW(VertexOrdering{perms}, std::invalid_argument);
  EXPECT_THROW(VertexOrdering{std::vector<Permutation>{Permutation({1, 2})}}, std::invalid_argument);
}

}  // namespace
}  // namespace fj
