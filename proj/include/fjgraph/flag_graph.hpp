#pragma once

// The Full-Flag Johnson graph FJ(n,k): vertices are the n! full flags of [n]
// (permutations in one-line notation); u ~ v iff their prefix sets differ at
// exactly k flag indices. Equivalently FJ(n,k) is the Cayley graph on S_n
// generated by the direct sums of n-k irreducible permutations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fjgraph/errors.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/ordering.hpp"
#include "fjgraph/permutation.hpp"

namespace fj {

struct FlagGraphSpec {
  int n = 1;
  int k = 0;

  /// Validates 1 <= n <= kMaxPermutationSize and 0 <= k < n.
  static FlagGraphSpec make(int n, int k) {
    detail::require(n >= 1 && n <= kMaxPermutationSize, "n out of range: " + std::to_string(n));
    detail::require(k >= 0 && k < n, "k must satisfy 0 <= k < n (got n=" + std::to_string(n) +
                                         ", k=" + std::to_string(k) + ")");
    return FlagGraphSpec{n, k};
  }

  std::uint64_t order() const { return factorial(n); }
  bool trivial() const { return k == 0; }

  friend bool operator==(const FlagGraphSpec&, const FlagGraphSpec&) = default;
};

/// FJ(n,0) is stored edgeless. Read literally, every vertex is adjacent only
/// to itself; those loops are never materialized in edge lists, degrees or
/// matrices. Block checks that need A(FJ(n,0)) use the identity explicitly.
inline constexpr const char* kTrivialGraphConvention =
    "FJ(n,0) loops excluded: edgeless graph, identity used where A(FJ(n,0)) is required";

inline bool adjacent(const FlagGraphSpec& spec, const Permutation& u, const Permutation& v) {
  detail::require(u.size() == spec.n && v.size() == spec.n,
                  "permutation size does not match FJ(" + std::to_string(spec.n) + ",k)");
  return prefix_mismatch_count(u, v) == spec.k;
}

/// Number of irreducible permutations of [m], from
///   m! = sum_{i=1..m} irreducible_count(i) * (m-i)!.
inline std::uint64_t irreducible_count(int m) {
  detail::require(m >= 1 && m <= 20, "irreducible_count: m out of range");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) {
    std::uint64_t reducible = 0;
    for (int i = 1; i < j; ++i) reducible += counts[i] * factorial(j - i);
    counts[j] = factorial(j) - reducible;
  }
  return counts[m];
}

namespace detail {

// Calls visit(parts) for every composition of `total` into `parts_left`
// positive parts, in lexicographic order of the part sequence.
template <class Visit>
void for_each_composition(int total, int parts_left, std::vector<int>& parts, Visit&& visit) {
  if (parts_left == 0) {
    if (total == 0) visit(static_cast<const std::vector<int>&>(parts));
    return;
  }
  for (int first = 1; first <= total - (parts_left - 1); ++first) {
    parts.push_back(first);
    for_each_composition(total - first, parts_left - 1, parts, visit);
    parts.pop_back();
  }
}

inline const std::vector<Permutation>& irreducible_permutations(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Permutation> out;
  std::vector<int> current(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) current[i] = i + 1;
  do {
    Permutation p{std::span<const int>(current)};
    if (is_irreducible(p)) out.push_back(p);
  } while (std::next_permutation(current.begin(), current.end()));
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace detail

/// Sum over compositions (c_1..c_{n-k}) of n of prod irreducible_count(c_j).
inline std::uint64_t degree(int n, int k) {
  const auto spec = FlagGraphSpec::make(n, k);
  if (spec.k == 0) return 0;
  std::uint64_t total = 0;
  std::vector<int> parts;
  detail::for_each_composition(n, n - k, parts, [&](const std::vector<int>& c) {
    std::uint64_t product = 1;
    for (int part : c) product *= irreducible_count(part);
    total += product;
  });
  return total;
}

/// Cayley generators of FJ(n,k): every direct sum of n-k irreducible blocks.
struct GeneratorSet {
  int n = 1;
  int k = 0;
  std::vector<Permutation> generators;  // sorted lexicographically

  std::size_t size() const { return generators.size(); }
  auto begin() const { return generators.begin(); }
  auto end() const { return generators.end(); }
};

inline GeneratorSet generators(int n, int k) {
  const auto spec = FlagGraphSpec::make(n, k);
  GeneratorSet out{spec.n, spec.k, {}};
  if (k == 0) {
    out.generators.push_back(Permutation::identity(n));
    return out;
  }
  std::vector<int> parts;
  detail::for_each_composition(n, n - k, parts, [&](const std::vector<int>& composition) {
    // Odometer over one irreducible choice per part.
    std::vector<const std::vector<Permutation>*> choices;
    for (int part : composition) choices.push_back(&detail::irreducible_permutations(part));
    std::vector<std::size_t> index(composition.size(), 0);
    while (true) {
      PermutationBuilder g(n);
      int offset = 0;
      for (std::size_t b = 0; b < composition.size(); ++b) {
        const auto block = (*choices[b])[index[b]].entries();
        for (std::size_t t = 0; t < block.size(); ++t) {
          g.set(offset + static_cast<int>(t), offset + block[t]);
        }
        offset += composition[b];
      }
      out.generators.push_back(g.build());
      std::size_t b = composition.size();
      while (b > 0) {
        --b;
        if (++index[b] < choices[b]->size()) break;
        index[b] = 0;
        if (b == 0) return;
      }
    }
  });
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

/// The vertices adjacent to u. Empty for k = 0 (loops excluded).
inline std::vector<Permutation> neighbors(const FlagGraphSpec& spec, const GeneratorSet& gens,
                                          const Permutation& u) {
  detail::require(u.size() == spec.n, "permutation size does not match spec");
  detail::require(gens.n == spec.n && gens.k == spec.k, "generator set does not match spec");
  std::vector<Permutation> out;
  if (spec.k == 0) return out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(compose(u, g));
  return out;
}

inline std::vector<Permutation> neighbors(const FlagGraphSpec& spec, const Permutation& u) {
  return neighbors(spec, generators(spec.n, spec.k), u);
}

/// Undirected edge between lexicographic ranks, u < v.
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edges of FJ(n,k) over lexicographic ranks, sorted by (u, v), via generator
/// right-multiplication.
inline std::vector<Edge> build_edges(const FlagGraphSpec& spec, const Limits& limits = {}) {
  detail::require(spec.k >= 1, "build_edges requires k >= 1 (FJ(n,0) is edgeless)");
  detail::require_cap(spec.n, limits.graph_cap, "graph n");
  const auto gens = generators(spec.n, spec.k);
  const std::uint64_t order = spec.order();
  const std::uint64_t edge_count = order * gens.size() / 2;
  detail::require_cap(static_cast<long long>(edge_count),
                      static_cast<long long>(limits.edge_budget), "edge count");
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::uint64_t r = 0; r < order; ++r) {
    const Permutation u = lex_unrank(spec.n, r);
    for (const auto& g : gens) {
      const std::uint64_t s = lex_rank(compose(u, g));
      if (r < s) edges.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s)});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace fj
