// Copyright 2026 The omlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omlkit/lattice_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace omlkit {

NamedRawLattice lattice_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers") ||
      !doc.contains("ortho"))
    throw input_error("lattice file needs elements, covers, and ortho fields");

  NamedRawLattice out;
  out.name = doc.value("name", "lattice");
  const auto& elements = doc.at("elements");
  if (!elements.is_array() || elements.empty())
    throw input_error("elements must be a nonempty array of labels");
  const int n = static_cast<int>(elements.size());
  out.raw = RawLattice(n);
  out.raw.labels.reserve(n);
  for (const auto& label : elements) out.raw.labels.push_back(label.get<std::string>());

  const auto& ortho = doc.at("ortho");
  if (!ortho.is_array() || static_cast<int>(ortho.size()) != n)
    throw input_error("ortho length does not match element count");
  for (int p = 0; p < n; ++p) {
    int q = ortho[p].get<int>();
    if (q < 0 || q >= n) throw input_error("ortho entry out of range");
    out.raw.ortho[p] = q;
  }

  for (int p = 0; p < n; ++p) out.raw.set_le(p, p);
  for (const auto& cover : doc.at("covers")) {
    if (!cover.is_array() || cover.size() != 2) throw input_error("covers must be index pairs");
    int lo = cover[0].get<int>(), hi = cover[1].get<int>();
    if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
      throw input_error("cover pair out of range");
    out.raw.set_le(lo, hi);
  }

  // Reflexive-transitive closure; a cycle shows up as two distinct mutually
  // comparable elements.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!out.raw.le(p, q)) continue;
        for (int r = 0; r < n; ++r)
          if (out.raw.le(q, r) && !out.raw.le(p, r)) {
            out.raw.set_le(p, r);
            changed = true;
          }
      }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && out.raw.le(p, q) && out.raw.le(q, p))
        throw input_error("covers contain a cycle");
  return out;
}

NamedRawLattice lattice_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("cannot parse JSON in " + path + ": " + e.what());
  }
  return lattice_from_json(doc);
}

namespace {

std::vector<std::pair<Elem, Elem>> hasse_covers(const Oml& lattice) {
  std::vector<std::pair<Elem, Elem>> covers;
  const int n = lattice.size();
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (p == q || !lattice.leq(p, q)) continue;
      bool direct = true;
      for (Elem r = 0; r < n && direct; ++r)
        if (r != p && r != q && lattice.leq(p, r) && lattice.leq(r, q)) direct = false;
      if (direct) covers.emplace_back(p, q);
    }
  return covers;
}

}  // namespace

nlohmann::json lattice_to_json(const Oml& lattice, const std::string& name) {
  nlohmann::json doc;
  doc["name"] = name;
  doc["elements"] = lattice.labels();
  auto covers = nlohmann::json::array();
  for (auto [lo, hi] : hasse_covers(lattice)) covers.push_back({lo, hi});
  doc["covers"] = covers;
  auto ortho = nlohmann::json::array();
  for (Elem p = 0; p < lattice.size(); ++p) ortho.push_back(lattice.ortho(p));
  doc["ortho"] = ortho;
  return doc;
}

std::string export_dot(const Oml& lattice, const std::string& name) {
  static const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                   "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  const int palette_size = 8;

  // Stable pair index: pairs {p, p'} ordered by their smaller member.
  std::vector<int> pair_index(lattice.size(), -1);
  int pairs = 0;
  for (Elem p = 0; p < lattice.size(); ++p) {
    if (pair_index[p] >= 0) continue;
    pair_index[p] = pairs;
    pair_index[lattice.ortho(p)] = pairs;
    ++pairs;
  }

  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse, style=filled, fillcolor=white];\n";
  for (Elem p = 0; p < lattice.size(); ++p)
    out << "  n" << p << " [label=\"" << lattice.label(p) << "\", color=\""
        << kPalette[pair_index[p] % palette_size] << "\", orthopair=" << pair_index[p] << "];\n";
  for (auto [lo, hi] : hasse_covers(lattice))
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace omlkit
