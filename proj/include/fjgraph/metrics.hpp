#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fjgraph/errors.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/permutation.hpp"

namespace fj {

using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Shortest-path distances from one source, indexed by lexicographic rank.
struct DistanceProfile {
  Permutation source;
  std::vector<Distance> distances;
  int eccentricity = 0;  // max finite distance

  bool all_reachable() const {
    return std::find(distances.begin(), distances.end(), kUnreachable) == distances.end();
  }
  Distance distance_to(const Permutation& v) const { return distances[lex_rank(v)]; }
};

namespace detail {

inline DistanceProfile bfs_with(const FlagGraphSpec& spec, const GeneratorSet& gens,
                                const Permutation& source) {
  DistanceProfile profile{source, std::vector<Distance>(spec.order(), kUnreachable), 0};
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(lex_rank(source))};
  std::vector<std::uint32_t> next;
  profile.distances[frontier.front()] = 0;
  Distance level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (std::uint32_t r : frontier) {
      const Permutation u = lex_unrank(spec.n, r);
      for (const auto& g : gens) {
        const auto s = lex_rank(compose(u, g));
        if (profile.distances[s] == kUnreachable) {
          profile.distances[s] = level;
          next.push_back(static_cast<std::uint32_t>(s));
        }
      }
    }
    if (!next.empty()) profile.eccentricity = level;
    frontier.swap(next);
  }
  return profile;
}

inline void require_searchable(const FlagGraphSpec& spec, const Limits& limits) {
  require(spec.k >= 1, "search requires k >= 1 (FJ(n,0) is edgeless)");
  require_cap(spec.n, limits.graph_cap, "graph n");
}

}  // namespace detail

inline DistanceProfile bfs(const FlagGraphSpec& spec, const Permutation& source,
                           const Limits& limits = {}) {
  detail::require_searchable(spec, limits);
  detail::require(source.size() == spec.n, "source size does not match spec");
  return detail::bfs_with(spec, generators(spec.n, spec.k), source);
}

enum class DiameterMode { transitive, exhaustive };

/// Transitive mode reads the eccentricity of the identity, which equals the
/// diameter because Cayley graphs are vertex-transitive. Exhaustive mode takes
/// the maximum over every source. Throws TheoremViolation if any vertex is
/// unreachable.
inline int diameter(const FlagGraphSpec& spec, DiameterMode mode = DiameterMode::transitive,
                    const Limits& limits = {}) {
  detail::require_searchable(spec, limits);
  const auto gens = generators(spec.n, spec.k);
  auto eccentricity_from = [&](std::uint64_t rank) {
    const auto profile = detail::bfs_with(spec, gens, lex_unrank(spec.n, rank));
    if (!profile.all_reachable()) {
      throw TheoremViolation("FJ(" + std::to_string(spec.n) + "," + std::to_string(spec.k) +
                             ") is disconnected from " + profile.source.to_string());
    }
    return profile.eccentricity;
  };
  if (mode == DiameterMode::transitive) return eccentricity_from(0);

  // Independent sources split across workers; the reducer is a max.
  const std::uint64_t order = spec.order();
  const unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<std::future<int>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      int best = 0;
      for (std::uint64_t r = w; r < order; r += workers) best = std::max(best, eccentricity_from(r));
      return best;
    }));
  }
  int result = 0;
  for (auto& p : parts) result = std::max(result, p.get());
  return result;
}

/// FJ(n,0) on n >= 2 vertices is edgeless, hence disconnected; FJ(1,0) is a
/// single vertex.
inline bool is_connected(const FlagGraphSpec& spec, const Limits& limits = {}) {
  if (spec.k == 0) return spec.n == 1;
  return bfs(spec, Permutation::identity(spec.n), limits).all_reachable();
}

/// ceil(C(n,2) / C(k+1,2)).
inline int diameter_lower_bound(int n, int k) {
  const auto spec = FlagGraphSpec::make(n, k);
  detail::require(spec.k >= 1, "lower bound requires k >= 1");
  const auto num = binomial2(n);
  const auto den = binomial2(k + 1);
  return static_cast<int>((num + den - 1) / den);
}

struct TranspositionBoundResult {
  bool holds = true;
  int bound = 0;                          // C(k+1, 2)
  int max_observed = 0;                   // largest kendall distance over edges
  std::uint64_t edges_checked = 0;
  std::optional<std::pair<Permutation, Permutation>> counterexample;
};

/// Checks kendall_distance(u,v) <= C(k+1,2) on every edge of FJ(n,k).
inline TranspositionBoundResult edge_transposition_bound_check(const FlagGraphSpec& spec,
                                                               const Limits& limits = {}) {
  detail::require_searchable(spec, limits);
  TranspositionBoundResult result;
  result.bound = static_cast<int>(binomial2(spec.k + 1));
  const auto gens = generators(spec.n, spec.k);
  for (std::uint64_t r = 0; r < spec.order(); ++r) {
    const Permutation u = lex_unrank(spec.n, r);
    for (const auto& g : gens) {
      const Permutation v = compose(u, g);
      if (lex_rank(v) < r) continue;
      ++result.edges_checked;
      const int d = kendall_distance(u, v);
      result.max_observed = std::max(result.max_observed, d);
      if (d > result.bound && !result.counterexample) {
        result.holds = false;
        result.counterexample = std::make_pair(u, v);
      }
    }
  }
  return result;
}

}  // namespace fj
