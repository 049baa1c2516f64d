#pragma once

// One-shot structural verification of FJ(n,k) for every n up to a bound,
// within the configured caps. Checks run concurrently; results come back in
// a fixed order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "fjgraph/block_structure.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/metrics.hpp"
#include "fjgraph/oracles.hpp"
#include "fjgraph/ordering.hpp"
#include "fjgraph/spectra.hpp"

namespace fj {

struct CheckResult {
  std::string name;
  int n = 0;
  int k = -1;             // -1 when the check is not tied to a single k
  bool passed = false;
  bool asserted = true;   // false for conjecture evidence
  std::string detail;
};

struct VerifySuite {
  std::vector<CheckResult> results;

  bool passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed || !r.asserted; });
  }
};

inline constexpr int kOracleMaxN = 5;

namespace detail {

struct CheckTask {
  std::string name;
  int n = 0;
  int k = -1;
  std::function<CheckResult()> run;
};

inline CheckResult run_guarded(const CheckTask& task) {
  try {
    return task.run();
  } catch (const std::exception& e) {
    return CheckResult{task.name, task.n, task.k, false, true, std::string("exception: ") + e.what()};
  }
}

inline std::vector<CheckTask> suite_tasks(int max_n, const Limits& limits, const Tolerances& tol) {
  std::vector<CheckTask> tasks;
  const int graph_n = std::min(max_n, limits.graph_cap);
  const int matrix_n = std::min(max_n, limits.matrix_cap);

  for (int n = 1; n <= graph_n; ++n) {
    if (n >= 2) {
      tasks.push_back({"degree_permutahedron", n, 1, [n] {
        const auto d = degree(n, 1);
        return CheckResult{"degree_permutahedron", n, 1, d == static_cast<std::uint64_t>(n - 1), true,
                           "degree " + std::to_string(d)};
      }});
    }
    for (int k = 1; k < n; ++k) {
      tasks.push_back({"connectivity_and_diameter", n, k, [n, k, limits] {
        const FlagGraphSpec spec{n, k};
        const bool connected = is_connected(spec, limits);
        const int d = diameter(spec, DiameterMode::transitive, limits);
        const int bound = diameter_lower_bound(n, k);
        bool ok = connected && bound <= d;
        std::string detail = "diameter " + std::to_string(d) + ", lower bound " + std::to_string(bound);
        if (k == 1) {
          ok = ok && d == static_cast<int>(binomial2(n));
          detail += ", expected C(n,2) = " + std::to_string(binomial2(n));
        }
        if (k == n - 1 && n >= 3) {
          ok = ok && d == 2;
          detail += ", expected 2";
        }
        if (n <= kOracleMaxN) {
          const int ex = diameter(spec, DiameterMode::exhaustive, limits);
          ok = ok && ex == d;
          detail += ", exhaustive " + std::to_string(ex);
        }
        return CheckResult{"connectivity_and_diameter", n, k, ok, true, detail};
      }});
      tasks.push_back({"edge_transposition_bound", n, k, [n, k, limits] {
        const auto r = edge_transposition_bound_check(FlagGraphSpec{n, k}, limits);
        return CheckResult{"edge_transposition_bound", n, k, r.holds, true,
                           "max kendall " + std::to_string(r.max_observed) + " <= " +
                               std::to_string(r.bound) + " over " +
                               std::to_string(r.edges_checked) + " edges"};
      }});
      if (n <= kOracleMaxN) {
        tasks.push_back({"generator_oracle_equivalence", n, k, [n, k, limits] {
          const FlagGraphSpec spec{n, k};
          const bool edges_ok = build_edges(spec, limits) == oracle::pairwise_edges(spec, limits);
          const auto gens = generators(n, k);
          const bool gens_ok = gens.generators == oracle::filtered_generators(n, k, limits) &&
                               gens.size() == degree(n, k);
          return CheckResult{"generator_oracle_equivalence", n, k, edges_ok && gens_ok, true,
                             "edge set " + std::string(edges_ok ? "matches" : "differs") +
                                 ", generators " + std::string(gens_ok ? "match" : "differ") +
                                 " (degree " + std::to_string(degree(n, k)) + ")"};
        }});
      }
    }
    if (n <= kOracleMaxN && n >= 2) {
      tasks.push_back({"reducibility_equivalence", n, -1, [n, limits] {
        const auto r = oracle::reducibility_equivalence(n, limits);
        return CheckResult{"reducibility_equivalence", n, -1, r.holds, true,
                           r.holds ? std::to_string(r.pairs_checked) + " pairs" : r.reason};
      }});
    }
    if (n + 1 <= std::min(graph_n, kOracleMaxN + 1) && n >= 2) {
      tasks.push_back({"insertion_embedding", n, -1, [n, limits] {
        const auto r = oracle::insertion_embedding(n, limits);
        return CheckResult{"insertion_embedding", n, -1, r.holds, true,
                           r.holds ? std::to_string(r.pairs_checked) + " pairs" : r.reason};
      }});
    }
  }

  for (int n = 1; n + 1 <= matrix_n; ++n) {
    for (int k = 1; k < n; ++k) {
      tasks.push_back({"recursive_blocks", n, k, [n, k, limits] {
        const auto report = verify_recursive_blocks(n, k, enumerate_permutations(n, limits), limits);
        return CheckResult{"recursive_blocks", n, k, report.passed(), true,
                           std::to_string(report.assertions.size()) + " assertions"};
      }});
    }
    if (n >= 2) {
      tasks.push_back({"permutahedron_blocks", n, 1, [n, limits] {
        const auto report = verify_permutahedron_blocks(n, enumerate_permutations(n, limits), limits);
        return CheckResult{"permutahedron_blocks", n, 1, report.passed(), true,
                           std::to_string(report.assertions.size()) + " assertions"};
      }});
    }
  }

  for (int n = 2; n <= matrix_n; ++n) {
    tasks.push_back({"regularity_spectrum", n, 1, [n, limits, tol] {
      const auto s = enumerate_permutations(n - 1, limits);
      const bool inter = verify_intertwining(n, s, limits);
      const bool from_blocks = regularity_matrix_from_blocks(n, s, limits) == regularity_matrix(n);
      bool ok = inter && from_blocks;
      std::string detail = std::string("intertwining ") + (inter ? "exact" : "FAILED") +
                           ", block regularities " + (from_blocks ? "match M" : "differ from M");
      if (factorial(n) <= static_cast<std::uint64_t>(limits.eigen_cap)) {
        const auto m = eig_tridiagonal(regularity_matrix(n), tol);
        const auto full = permutahedron_spectrum(n, tol, limits);
        const auto match = spectrum_subset_check(m, full, tol.match);
        ok = ok && match.ok;
        detail += std::string(", spec(M) subset of spec(A): ") + (match.ok ? "yes" : "no");
      }
      return CheckResult{"regularity_spectrum", n, 1, ok, true, detail};
    }});
    if (factorial(n) <= static_cast<std::uint64_t>(limits.eigen_cap) && n >= 3) {
      tasks.push_back({"second_largest_conjecture", n, 1, [n, limits, tol] {
        const auto ev = conjecture_second_largest(n, tol, limits);
        return CheckResult{"second_largest_conjecture", n, 1, ev.holds, false,
                           "second-largest " + std::to_string(ev.second_largest) +
                               (ev.holds ? " is" : " is not") + " an eigenvalue of M"};
      }});
    }
  }
  return tasks;
}

}  // namespace detail

inline VerifySuite verify_all(int max_n, const Limits& limits = {}, const Tolerances& tol = {}) {
  detail::require(max_n >= 1, "max-n must be positive");
  const auto tasks = detail::suite_tasks(max_n, limits, tol);
  VerifySuite suite;
  suite.results.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1U, std::min(4U, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        suite.results[i] = detail::run_guarded(tasks[i]);
      }
    }));
  }
  for (auto& p : pool) p.get();
  return suite;
}

}  // namespace fj
