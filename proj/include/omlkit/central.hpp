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

#ifndef OMLKIT_CENTRAL_HPP
#define OMLKIT_CENTRAL_HPP

#include <span>
#include <string>
#include <vector>

#include "omlkit/oml.hpp"

namespace omlkit {

// Elements compatible with everything; always a boolean sublattice
// containing bottom and top.
std::vector<Elem> center(const Oml& lattice);

// Center is exactly {bottom, top}; requires at least two elements.
bool is_irreducible(const Oml& lattice);

// The element-to-least-dominating-central-element map, materialized.
struct CentralCoverMap {
  std::vector<Elem> gamma;
  Elem operator()(Elem p) const { return gamma[p]; }
};

CentralCoverMap central_cover_map(const Oml& lattice);

Elem central_cover(const Oml& lattice, Elem p);

// A family is centrally orthogonal iff the central covers are pairwise
// orthogonal; this matches the definition via dominating central elements.
bool is_centrally_orthogonal(const Oml& lattice, std::span<const Elem> family);

// Every interval center consists of p ^ c for central c.
bool has_relative_center_property(const Oml& lattice);

// Outcome of checking that joining coordinates is an isomorphism from the
// product of the intervals [0, p_i] onto [0, v p_i].
struct CarprodReport {
  bool ok = true;
  std::string failure;        // empty when ok
  Elem family_sup = 0;
  std::size_t product_size = 0;
  std::size_t interval_size = 0;
};

// Builds the coordinatewise-join map for a centrally orthogonal family and
// verifies bijectivity, order preservation both ways, preservation of
// relative orthocomplements, and the meet-with-cover inverse formula.
CarprodReport carprod_iso(const Oml& lattice, std::span<const Elem> family);

}  // namespace omlkit

#endif  // OMLKIT_CENTRAL_HPP
