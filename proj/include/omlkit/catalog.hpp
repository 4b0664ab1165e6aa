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

#ifndef OMLKIT_CATALOG_HPP
#define OMLKIT_CATALOG_HPP

#include <string>

#include "omlkit/oml.hpp"

namespace omlkit {

// Built-in lattices addressed by a small token grammar:
//
//   boolean:n          power set of an n-element set (2^n elements)
//   mo:n               horizontal sum with 2n atoms (MO_n)
//   o6                 the hexagon; fails the orthomodular law
//   product(ID,...)    coordinatewise product
//   interval(ID,e)     the sublattice [0, e] with relative complement
//
// Every catalog lattice except o6 validates.

RawLattice boolean_raw(int exponent);
RawLattice mo_raw(int atom_pairs);
RawLattice o6_raw();

bool looks_like_catalog_id(const std::string& token);

// Builds the raw lattice for a catalog token.  Components of products and
// intervals must themselves validate; a grammar problem or an out-of-range
// interval element throws input_error.
RawLattice catalog_raw(const std::string& token);

// catalog_raw followed by validation.
Oml catalog_oml(const std::string& token);

}  // namespace omlkit

#endif  // OMLKIT_CATALOG_HPP
