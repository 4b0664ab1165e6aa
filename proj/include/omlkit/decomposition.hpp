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

#ifndef OMLKIT_DECOMPOSITION_HPP
#define OMLKIT_DECOMPOSITION_HPP

#include "omlkit/oml.hpp"
#include "omlkit/td_sets.hpp"

namespace omlkit {

// How a central element sits relative to a type-determining set.  Every flag
// is computed twice, from the membership definitions and from the type-cover
// inequalities, and the routes must agree.
struct CentralClassification {
  bool is_type_q = false;
  bool is_locally_type_q = false;
  bool is_purely_non_q = false;
  bool is_properly_non_q = false;
};

CentralClassification classify_central(const Oml& lattice, const ProjectionSet& set, Elem c);

// Three-way splitting of the unit: a type-Q summand, a locally-type-Q but
// properly-non-Q summand, and a purely-non-Q summand.  The closed-form
// triple is checked against a brute-force search over central triples, which
// must find it and nothing else.
struct FundamentalDecomposition {
  Elem c1, c2, c3;
};

FundamentalDecomposition fundamental_decomposition(const Oml& lattice, const ProjectionSet& set);

// Full type splitting for a nested pair of type-determining sets, with the
// refinements of the first two summands.
struct TypeDecomposition {
  Elem cI, cII, cIII;
  Elem cIK, cIKt;   // cI  = cIK  v cIKt
  Elem cIIK, cIIKt; // cII = cIIK v cIIKt
  Elem c11, c21;    // cIK = c11  v c21
};

TypeDecomposition type_decomposition(const Oml& lattice, const ProjectionSet& inner,
                                     const ProjectionSet& outer);

// Five independently evaluated characterizations of "locally type-Q" for a
// central element; the routes must agree.
struct TypeIConditions {
  bool locally_type_q = false;     // member of the image of the central cover map
  bool witness_in_q = false;       // some member's central cover equals c
  bool faithful_witness = false;   // some member below c is faithful in [0, c]
  bool summands_meet_q = false;    // every nonzero summand of [0, c] meets the set
  bool below_type_cover = false;   // c <= type cover
};

TypeIConditions alt_type_I_conditions(const Oml& lattice, const ProjectionSet& set, Elem c);

}  // namespace omlkit

#endif  // OMLKIT_DECOMPOSITION_HPP
