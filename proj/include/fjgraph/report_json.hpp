#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "fjgraph/block_structure.hpp"
#include "fjgraph/export.hpp"
#include "fjgraph/spectra.hpp"

namespace fj {

using Json = nlohmann::ordered_json;

/// Fixed 12-digit formatting so reports are byte-identical across runs.
inline std::string format_real(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;  // no "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

inline Json to_json(const BlockReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["check"] = report.check;
  j["n"] = report.n;
  j["k"] = report.k;
  j["passed"] = report.passed();
  auto list = Json::array();
  for (const auto& a : report.assertions) {
    Json item;
    item["id"] = a.id;
    item["description"] = a.description;
    item["passed"] = a.passed;
    item["blocks_checked"] = a.blocks_checked;
    if (a.witness) {
      item["witness"] = {{"block", {a.witness->block_i, a.witness->block_j}},
                         {"entry", {a.witness->entry.row + 1, a.witness->entry.col + 1}}};
    }
    list.push_back(std::move(item));
  }
  j["assertions"] = std::move(list);
  j["notes"] = report.notes;
  return j;
}

inline Json to_json(const Spectrum& s) {
  auto list = Json::array();
  for (std::size_t i = 0; i < s.values.size(); ++i)
    list.push_back({{"value", format_real(s.values[i])}, {"multiplicity", s.multiplicities[i]}});
  return list;
}

inline Json to_json(const SubsetMatch& m) {
  Json j;
  j["ok"] = m.ok;
  auto pairs = Json::array();
  for (auto [a, b] : m.matching) pairs.push_back({a, b});
  j["matching"] = std::move(pairs);
  if (m.unmatched) j["unmatched"] = format_real(*m.unmatched);
  return j;
}

}  // namespace fj
