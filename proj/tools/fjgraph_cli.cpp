// fjgraph: command-line front end for Full-Flag Johnson graph computations.
//
//   fjgraph export    --n N --k K [--format dot|csv|json|text|rle] [--out FILE]
//   fjgraph diameter  --n N --k K [--exhaustive]
//   fjgraph blocks    --n N --k K --check recursive|permutahedron
//   fjgraph spectrum  --n N [--full] [--check-subset] [--conjecture]
//   fjgraph verify-all --max-n N [--format json|text]
//
// Exit status: 0 when every requested verification passes, 1 on a
// verification failure, 2 on invalid arguments or exceeded caps.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fjgraph/block_structure.hpp"
#include "fjgraph/export.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/metrics.hpp"
#include "fjgraph/report_json.hpp"
#include "fjgraph/spectra.hpp"
#include "fjgraph/verify_all.hpp"

namespace {

enum class Command { none, export_graph, diameter, blocks, spectrum, verify_all };

struct RunConfig {
  Command command = Command::none;
  int n = 0;
  int k = 1;
  int max_n = 5;
  std::string format;
  std::string out;
  std::string check = "recursive";
  bool exhaustive = false;
  bool full = false;
  bool check_subset = false;
  bool conjecture = false;
  fj::Limits limits;
  fj::Tolerances tol;
};

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalid = 2;

struct Outcome {
  std::string text;
  bool passed = true;
};

Outcome run_export(const RunConfig& cfg) {
  const auto spec = fj::FlagGraphSpec::make(cfg.n, cfg.k);
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  std::ostringstream out;
  if (format == "text" || format == "rle") {
    const auto a = fj::adjacency_matrix(spec, fj::enumerate_permutations(cfg.n, cfg.limits),
                                        fj::AdjacencyRoute::generators, cfg.limits);
    if (format == "text") fj::write_dense_grid(out, a.bits);
    else fj::write_rle(out, a.bits);
    return {out.str(), true};
  }
  const auto edges = fj::build_edges(spec, cfg.limits);
  if (format == "dot") fj::write_dot(out, spec, edges);
  else if (format == "csv") fj::write_csv(out, edges);
  else fj::write_json(out, spec, edges);
  return {out.str(), true};
}

Outcome run_diameter(const RunConfig& cfg) {
  const auto spec = fj::FlagGraphSpec::make(cfg.n, cfg.k);
  const auto start = std::chrono::steady_clock::now();
  const bool connected = fj::is_connected(spec, cfg.limits);
  const int diam = fj::diameter(
      spec, cfg.exhaustive ? fj::DiameterMode::exhaustive : fj::DiameterMode::transitive, cfg.limits);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  const int bound = fj::diameter_lower_bound(cfg.n, cfg.k);
  fj::Json j;
  j["schema_version"] = fj::kSchemaVersion;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["mode"] = cfg.exhaustive ? "exhaustive" : "transitive";
  j["diameter"] = diam;
  j["lower_bound"] = bound;
  j["connected"] = connected;
  j["runtime_ms"] = elapsed.count();
  return {j.dump(2) + "\n", connected && bound <= diam};
}

Outcome run_blocks(const RunConfig& cfg) {
  const auto s = fj::enumerate_permutations(cfg.n, cfg.limits);
  fj::BlockReport report;
  if (cfg.check == "permutahedron") {
    fj::detail::require(cfg.k == 1, "the permutahedron check is defined for k = 1");
    report = fj::verify_permutahedron_blocks(cfg.n, s, cfg.limits);
  } else {
    report = fj::verify_recursive_blocks(cfg.n, cfg.k, s, cfg.limits);
  }
  return {fj::to_json(report).dump(2) + "\n", report.passed()};
}

Outcome run_spectrum(const RunConfig& cfg) {
  const auto m = fj::regularity_matrix(cfg.n);
  const auto m_spec = fj::eig_tridiagonal(m, cfg.tol);
  fj::Json j;
  j["schema_version"] = fj::kSchemaVersion;
  j["n"] = cfg.n;
  j["regularity_matrix"] = m.rows();
  j["m_eigenvalues"] = fj::to_json(m_spec);
  bool passed = true;
  if (cfg.full || cfg.check_subset) {
    const auto full = fj::permutahedron_spectrum(cfg.n, cfg.tol, cfg.limits);
    if (cfg.full) j["full_distinct_eigenvalues"] = fj::to_json(full);
    if (cfg.check_subset) {
      const auto match = fj::spectrum_subset_check(m_spec, full, cfg.tol.match);
      j["subset_ok"] = match.ok;
      j["matching"] = fj::to_json(match)["matching"];
      if (match.unmatched) j["unmatched"] = fj::format_real(*match.unmatched);
      passed = match.ok;
    }
  }
  if (cfg.conjecture) {
    const auto ev = fj::conjecture_second_largest(cfg.n, cfg.tol, cfg.limits);
    j["second_largest"] = fj::format_real(ev.second_largest);
    j["second_largest_in_M"] = ev.holds;
  }
  return {j.dump(2) + "\n", passed};
}

Outcome run_verify_all(const RunConfig& cfg) {
  const auto suite = fj::verify_all(cfg.max_n, cfg.limits, cfg.tol);
  std::ostringstream out;
  if (cfg.format == "text") {
    for (const auto& r : suite.results) {
      out << (r.passed ? "PASS" : (r.asserted ? "FAIL" : "NOTE")) << "  " << r.name << " n=" << r.n;
      if (r.k >= 0) out << " k=" << r.k;
      out << "  " << r.detail << '\n';
    }
    out << (suite.passed() ? "all checks passed" : "verification FAILED") << '\n';
    return {out.str(), suite.passed()};
  }
  fj::Json j;
  j["schema_version"] = fj::kSchemaVersion;
  j["max_n"] = cfg.max_n;
  j["passed"] = suite.passed();
  auto checks = fj::Json::array();
  for (const auto& r : suite.results) {
    fj::Json c;
    c["name"] = r.name;
    c["n"] = r.n;
    if (r.k >= 0) c["k"] = r.k;
    c["passed"] = r.passed;
    c["asserted"] = r.asserted;
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return {j.dump(2) + "\n", suite.passed()};
}

Outcome dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::export_graph: return run_export(cfg);
    case Command::diameter: return run_diameter(cfg);
    case Command::blocks: return run_blocks(cfg);
    case Command::spectrum: return run_spectrum(cfg);
    case Command::verify_all: return run_verify_all(cfg);
    case Command::none: break;
  }
  throw std::invalid_argument("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Full-Flag Johnson graph constructions, diameters, block structure and spectra"};
  app.require_subcommand(1);

  app.add_option("--graph-cap", cfg.limits.graph_cap, "Largest n for edge lists and BFS")
      ->envname("FJ_GRAPH_CAP")->check(CLI::PositiveNumber);
  app.add_option("--matrix-cap", cfg.limits.matrix_cap, "Largest n for adjacency matrices")
      ->envname("FJ_MATRIX_CAP")->check(CLI::PositiveNumber);
  app.add_option("--eigen-cap", cfg.limits.eigen_cap, "Largest order for dense eigensolves")
      ->envname("FJ_EIGEN_CAP")->check(CLI::PositiveNumber);
  app.add_option("--eig-tol", cfg.tol.eig, "Eigensolver convergence tolerance")->check(CLI::PositiveNumber);
  app.add_option("--match-tol", cfg.tol.match, "Eigenvalue matching tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  app.fallthrough();

  auto* exp = app.add_subcommand("export", "Export the edge list or adjacency matrix of FJ(n,k)");
  exp->add_option("--n", cfg.n, "Permutation size")->required();
  exp->add_option("--k", cfg.k, "Number of differing flag positions")->required();
  exp->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"dot", "csv", "json", "text", "rle"}));
  exp->callback([&] { cfg.command = Command::export_graph; });

  auto* dia = app.add_subcommand("diameter", "Diameter of FJ(n,k) by breadth-first search");
  dia->add_option("--n", cfg.n, "Permutation size")->required();
  dia->add_option("--k", cfg.k, "Number of differing flag positions")->required();
  dia->add_flag("--exhaustive", cfg.exhaustive, "Search from every vertex");
  dia->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));
  dia->callback([&] { cfg.command = Command::diameter; });

  auto* blk = app.add_subcommand(
      "blocks", "Verify the block structure of A(FJ(n+1,k)) under the concatenated ordering");
  blk->add_option("--n", cfg.n, "Size of the base ordering S (the parent graph is FJ(n+1,k))")
      ->required();
  blk->add_option("--k", cfg.k, "Number of differing flag positions");
  blk->add_option("--check", cfg.check, "Which block identities to verify")
      ->check(CLI::IsMember({"recursive", "permutahedron"}));
  blk->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));
  blk->callback([&] { cfg.command = Command::blocks; });

  auto* spc = app.add_subcommand("spectrum", "Regularity-matrix spectrum of the permutahedron FJ(n,1)");
  spc->add_option("--n", cfg.n, "Permutation size")->required();
  spc->add_flag("--full", cfg.full, "Also compute the full adjacency spectrum");
  spc->add_flag("--check-subset", cfg.check_subset, "Check spec(M) is contained in spec(FJ(n,1))");
  spc->add_flag("--conjecture", cfg.conjecture,
                "Report whether the second-largest eigenvalue appears in spec(M)");
  spc->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));
  spc->callback([&] { cfg.command = Command::spectrum; });

  auto* all = app.add_subcommand("verify-all", "Run every structural check up to --max-n");
  all->add_option("--max-n", cfg.max_n, "Largest n to check")->check(CLI::PositiveNumber);
  all->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  all->callback([&] { cfg.command = Command::verify_all; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Outcome outcome;
  try {
    outcome = dispatch(cfg);
  } catch (const fj::TheoremViolation& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (cfg.out.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << outcome.text)) {
      std::cerr << "error: cannot write " << cfg.out << '\n';
      return kExitInvalid;
    }
  }
  return outcome.passed ? kExitOk : kExitVerificationFailed;
}
