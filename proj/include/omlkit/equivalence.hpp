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

#ifndef OMLKIT_EQUIVALENCE_HPP
#define OMLKIT_EQUIVALENCE_HPP

#include <vector>

#include "omlkit/oml.hpp"

namespace omlkit {

// Partition of the carrier into projectivity classes: connected components
// of the perspectivity graph.
struct EquivalencePartition {
  std::vector<int> class_of;              // element -> class id
  std::vector<std::vector<Elem>> classes; // class id -> sorted members

  bool same_class(Elem p, Elem q) const { return class_of[p] == class_of[q]; }
};

// All x with p v x = top and p ^ x = bottom.
std::vector<Elem> complements(const Oml& lattice, Elem p);

// p and q share a common complement.
bool are_perspective(const Oml& lattice, Elem p, Elem q);

// p and q are perspective inside the interval [0, p v q] with its relative
// orthocomplement.
bool are_strongly_perspective(const Oml& lattice, Elem p, Elem q);

EquivalencePartition projectivity_classes(const Oml& lattice);

bool are_projective(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q);

// p is projective to some subelement of q.
bool is_subequivalent(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q);

// Nonzero projective subelements p1 <= p, q1 <= q exist.
bool are_related(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q);

// h is unrelated to its orthocomplement.
bool is_invariant(const Oml& lattice, const EquivalencePartition& classes, Elem h);

// Convenience overloads that compute the partition on the fly.
bool is_subequivalent(const Oml& lattice, Elem p, Elem q);
bool are_related(const Oml& lattice, Elem p, Elem q);
bool is_invariant(const Oml& lattice, Elem h);

}  // namespace omlkit

#endif  // OMLKIT_EQUIVALENCE_HPP
