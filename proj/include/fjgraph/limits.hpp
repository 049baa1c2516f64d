#pragma once

#include <cstdint>

namespace fj {

/// Size caps guarding against n! blowup. Defaults are sized for interactive
/// desk-scale runs; the CLI overrides them from flags or FJ_* variables.
struct Limits {
  int enumeration_cap = 10;            // largest n for enumerate_permutations
  int graph_cap = 8;                   // largest n for edge lists and BFS
  int matrix_cap = 7;                  // largest n for adjacency matrices
  int eigen_cap = 720;                 // largest order for dense eigensolves
  std::uint64_t edge_budget = 50'000'000;  // largest edge list materialized
};

}  // namespace fj
