#pragma once

// Brute-force reference constructions. Each one reaches its answer by a
// route independent of the fast path it is compared against: pairwise
// predicate scans instead of generator products, filtering all of S_n
// instead of composing irreducible blocks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fjgraph/flag_graph.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/ordering.hpp"
#include "fjgraph/permutation.hpp"

namespace fj::oracle {

/// Edges of FJ(n,k) by testing the prefix-set predicate on every pair.
inline std::vector<Edge> pairwise_edges(const FlagGraphSpec& spec, const Limits& limits = {}) {
  const auto all = enumerate_permutations(spec.n, limits);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (spec.k > 0 && adjacent(spec, all[a], all[b]))
        edges.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  return edges;
}

/// Generators of FJ(n,k) by filtering S_n: g with exactly n-k boundaries
/// against the identity.
inline std::vector<Permutation> filtered_generators(int n, int k, const Limits& limits = {}) {
  const auto all = enumerate_permutations(n, limits);
  const auto id = Permutation::identity(n);
  std::vector<Permutation> out;
  for (const auto& g : all)
    if (block_boundaries(id, g).block_count() == n - k) out.push_back(g);
  return out;
}

inline std::uint64_t filtered_irreducible_count(int m, const Limits& limits = {}) {
  const auto all = enumerate_permutations(m, limits);
  return static_cast<std::uint64_t>(
      std::count_if(all.begin(), all.end(), [](const Permutation& p) { return is_irreducible(p); }));
}

struct PairCheck {
  bool holds = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<Permutation, Permutation>> counterexample;
  std::string reason;
};

/// For every k in [1, n) and every pair (u, v): u ~ v in FJ(n,k) iff
/// u^{-1} v is a direct sum of n-k irreducible blocks, and every window of
/// block_boundaries(u, v) relates u to v by an irreducible pattern.
inline PairCheck reducibility_equivalence(int n, const Limits& limits = {}) {
  const auto all = enumerate_permutations(n, limits);
  PairCheck check;
  std::vector<std::vector<Permutation>> gens(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) gens[k] = generators(n, k).generators;
  auto fail = [&](const Permutation& u, const Permutation& v, std::string why) {
    check.holds = false;
    check.counterexample = std::make_pair(u, v);
    check.reason = std::move(why);
  };
  for (const auto& u : all) {
    const auto u_inv = u.inverse();
    for (const auto& v : all) {
      ++check.pairs_checked;
      const auto g = compose(u_inv, v);
      for (int k = 1; k < n; ++k) {
        const bool is_edge = adjacent(FlagGraphSpec{n, k}, u, v);
        const bool is_generator = std::binary_search(gens[k].begin(), gens[k].end(), g);
        if (is_edge != is_generator) {
          fail(u, v, "adjacency disagrees with (n-k)-reducibility at k=" + std::to_string(k));
          return check;
        }
      }
      for (auto [first, last] : block_boundaries(u, v).windows()) {
        if (!is_irreducible(relative_window(u, v, first, last))) {
          fail(u, v, "reducible window [" + std::to_string(first) + "," + std::to_string(last) + "]");
          return check;
        }
      }
    }
  }
  return check;
}

/// phi_1 and phi_{n+1} preserve adjacency and non-adjacency from FJ(n,k)
/// into FJ(n+1,k), for every k in [1, n).
inline PairCheck insertion_embedding(int n, const Limits& limits = {}) {
  const auto all = enumerate_permutations(n, limits);
  PairCheck check;
  for (int k = 1; k < n; ++k) {
    const FlagGraphSpec small{n, k}, big{n + 1, k};
    for (const auto& u : all) {
      for (const auto& v : all) {
        ++check.pairs_checked;
        const bool edge = adjacent(small, u, v);
        for (int pos : {1, n + 1}) {
          if (adjacent(big, insertion(u, pos), insertion(v, pos)) != edge) {
            check.holds = false;
            check.counterexample = std::make_pair(u, v);
            check.reason = "phi_" + std::to_string(pos) + " breaks adjacency at k=" + std::to_string(k);
            return check;
          }
        }
      }
    }
  }
  return check;
}

}  // namespace fj::oracle
