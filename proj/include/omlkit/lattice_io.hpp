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

#ifndef OMLKIT_LATTICE_IO_HPP
#define OMLKIT_LATTICE_IO_HPP

#include <string>

#include <json.hpp>

#include "omlkit/oml.hpp"

namespace omlkit {

// On-disk lattice format: element labels, Hasse covers, and the ortho
// permutation.  The full order is recovered as the reflexive-transitive
// closure of the covers, so inconsistent inputs are caught on re-validation.
//
//   {"name": "...", "elements": ["0","a","a'","1"],
//    "covers": [[0,1],[0,2],[1,3],[2,3]], "ortho": [3,2,1,0]}

struct NamedRawLattice {
  std::string name;
  RawLattice raw;
};

NamedRawLattice lattice_from_json(const nlohmann::json& doc);
NamedRawLattice lattice_from_file(const std::string& path);

nlohmann::json lattice_to_json(const Oml& lattice, const std::string& name);

// Hasse diagram in DOT, bottom-up ranking, deterministic node order; the two
// members of each orthocomplement pair carry the same color attribute.
std::string export_dot(const Oml& lattice, const std::string& name);

}  // namespace omlkit

#endif  // OMLKIT_LATTICE_IO_HPP
