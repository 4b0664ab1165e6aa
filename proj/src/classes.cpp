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

#include "omlkit/classes.hpp"

namespace omlkit {

ClassTable class_table(const Oml& lattice) {
  const int n = lattice.size();
  ClassTable table;
  table.abelian.assign(n, 0);
  table.modular.assign(n, 0);
  table.locally_modular.assign(n, 0);
  table.complete.assign(n, 1);

  // Interval centers are kept (in parent coordinates) for the locally-modular
  // pass, which needs the modular flags of all elements first.
  std::vector<std::vector<Elem>> interval_centers(n);
  for (Elem p = 0; p < n; ++p) {
    SubOml sub = interval(lattice, p);
    table.abelian[p] = is_boolean_lattice(sub.lattice) ? 1 : 0;
    table.modular[p] = is_modular_lattice(sub.lattice) ? 1 : 0;
    for (Elem c : sub.lattice.central_elements()) interval_centers[p].push_back(sub.to_parent[c]);
  }

  for (Elem p = 0; p < n; ++p) {
    bool locally = true;
    for (Elem c : interval_centers[p]) {
      if (c == lattice.bottom()) continue;
      bool has_modular_piece = false;
      for (Elem q = 0; q < n && !has_modular_piece; ++q)
        if (q != lattice.bottom() && lattice.leq(q, c) && table.modular[q])
          has_modular_piece = true;
      if (!has_modular_piece) {
        locally = false;
        break;
      }
    }
    table.locally_modular[p] = locally ? 1 : 0;
  }
  return table;
}

ProjectionSet class_as_set(const ClassTable& table, CanonicalClass which) {
  const std::vector<std::uint8_t>* flags = nullptr;
  switch (which) {
    case CanonicalClass::Abelian: flags = &table.abelian; break;
    case CanonicalClass::Modular: flags = &table.modular; break;
    case CanonicalClass::LocallyModular: flags = &table.locally_modular; break;
    case CanonicalClass::Complete: flags = &table.complete; break;
  }
  ProjectionSet set(static_cast<int>(flags->size()));
  for (Elem p = 0; p < set.universe(); ++p)
    if ((*flags)[p]) set.add(p);
  return set;
}

ProjectionSet class_as_set(const Oml& lattice, CanonicalClass which) {
  return class_as_set(class_table(lattice), which);
}

CanonicalClass canonical_class_from_name(const std::string& name) {
  if (name == "abelian") return CanonicalClass::Abelian;
  if (name == "modular") return CanonicalClass::Modular;
  if (name == "locally-modular") return CanonicalClass::LocallyModular;
  if (name == "complete") return CanonicalClass::Complete;
  throw input_error("unknown class name: " + name);
}

}  // namespace omlkit
