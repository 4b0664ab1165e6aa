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

#ifndef OMLKIT_CLASSES_HPP
#define OMLKIT_CLASSES_HPP

#include <string>

#include "omlkit/oml.hpp"
#include "omlkit/td_sets.hpp"

namespace omlkit {

// Per-element interval classification.  An element is abelian when its
// interval is boolean, modular when the interval is modular, locally modular
// when every nonzero central element of the interval dominates a nonzero
// element with modular interval, and complete always (finite lattices).
struct ClassTable {
  std::vector<std::uint8_t> abelian;
  std::vector<std::uint8_t> modular;
  std::vector<std::uint8_t> locally_modular;
  std::vector<std::uint8_t> complete;
};

ClassTable class_table(const Oml& lattice);

enum class CanonicalClass { Abelian, Modular, LocallyModular, Complete };

ProjectionSet class_as_set(const Oml& lattice, CanonicalClass which);
ProjectionSet class_as_set(const ClassTable& table, CanonicalClass which);

// Parses the CLI tokens "abelian", "modular", "locally-modular", "complete".
CanonicalClass canonical_class_from_name(const std::string& name);

}  // namespace omlkit

#endif  // OMLKIT_CLASSES_HPP
