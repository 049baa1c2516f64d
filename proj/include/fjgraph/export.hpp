#pragma once

// Edge-list and matrix serialization.
//
//   DOT   undirected graph, nodes are ranks labelled with one-line strings
//   CSV   "u,v" header then one edge per row (lexicographic ranks)
//   JSON  {"schema_version", "n", "k", "vertices", "edges": [[u,v], ...]}
//   text  dense 0/1 grid, one row per line, no separators
//   RLE   "rle <order>" header, then per row the alternating run lengths
//         starting with a (possibly empty) run of zeros

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fjgraph/block_structure.hpp"
#include "fjgraph/errors.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/permutation.hpp"

namespace fj {

inline constexpr int kSchemaVersion = 1;

inline void write_dot(std::ostream& out, const FlagGraphSpec& spec, const std::vector<Edge>& edges) {
  out << "graph FJ_" << spec.n << "_" << spec.k << " {\n";
  for (std::uint64_t r = 0; r < spec.order(); ++r) {
    out << "  " << r << " [label=\"" << lex_unrank(spec.n, r).to_string() << "\"];\n";
  }
  for (const auto& e : edges) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

inline void write_csv(std::ostream& out, const std::vector<Edge>& edges) {
  out << "u,v\n";
  for (const auto& e : edges) out << e.u << ',' << e.v << '\n';
}

inline nlohmann::ordered_json edges_to_json(const FlagGraphSpec& spec, const std::vector<Edge>& edges) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = spec.n;
  j["k"] = spec.k;
  auto vertices = nlohmann::ordered_json::array();
  for (std::uint64_t r = 0; r < spec.order(); ++r) vertices.push_back(lex_unrank(spec.n, r).to_string());
  j["vertices"] = std::move(vertices);
  auto list = nlohmann::ordered_json::array();
  for (const auto& e : edges) list.push_back({e.u, e.v});
  j["edges"] = std::move(list);
  return j;
}

inline void write_json(std::ostream& out, const FlagGraphSpec& spec, const std::vector<Edge>& edges) {
  out << edges_to_json(spec, edges).dump(2) << '\n';
}

template <BinaryMatrix M>
void write_dense_grid(std::ostream& out, const M& m) {
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) out << (m(r, c) ? '1' : '0');
    out << '\n';
  }
}

template <BinaryMatrix M>
void write_rle(std::ostream& out, const M& m) {
  out << "rle " << m.order() << '\n';
  for (std::size_t r = 0; r < m.order(); ++r) {
    bool current = false;
    std::size_t run = 0;
    bool first = true;
    auto flush = [&] {
      if (!first) out << ' ';
      out << run;
      first = false;
    };
    for (std::size_t c = 0; c < m.order(); ++c) {
      if (m(r, c) != current) {
        flush();
        current = !current;
        run = 0;
      }
      ++run;
    }
    flush();
    out << '\n';
  }
}

inline BitMatrix read_rle(std::istream& in) {
  std::string tag;
  std::size_t order = 0;
  in >> tag >> order;
  detail::require(in && tag == "rle", "not an rle matrix stream");
  BitMatrix m(order);
  std::string line;
  std::getline(in, line);
  for (std::size_t r = 0; r < order; ++r) {
    detail::require(static_cast<bool>(std::getline(in, line)), "rle stream truncated");
    std::istringstream runs(line);
    std::size_t col = 0, run = 0;
    bool value = false;
    while (runs >> run) {
      detail::require(col + run <= order, "rle row overflows matrix order");
      for (std::size_t t = 0; t < run; ++t, ++col)
        if (value) m.set(r, col);
      value = !value;
    }
    detail::require(col == order, "rle row does not cover matrix order");
  }
  return m;
}

}  // namespace fj
