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

#ifndef OMLKIT_TD_SETS_HPP
#define OMLKIT_TD_SETS_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "omlkit/equivalence.hpp"
#include "omlkit/oml.hpp"

namespace omlkit {

// A subset of the elements of one fixed lattice.  Membership is exact.
class ProjectionSet {
 public:
  ProjectionSet() = default;
  explicit ProjectionSet(int universe) : in_(universe, 0) {}

  static ProjectionSet empty(const Oml& lattice) { return ProjectionSet(lattice.size()); }
  static ProjectionSet all(const Oml& lattice);
  static ProjectionSet of(const Oml& lattice, std::initializer_list<Elem> members);
  static ProjectionSet of(const Oml& lattice, const std::vector<Elem>& members);

  int universe() const { return static_cast<int>(in_.size()); }
  bool contains(Elem p) const { return in_[p] != 0; }
  void add(Elem p) {
    if (!in_[p]) {
      in_[p] = 1;
      ++count_;
    }
  }
  std::size_t size() const { return count_; }
  std::vector<Elem> members() const;
  bool subset_of(const ProjectionSet& other) const;
  bool operator==(const ProjectionSet& other) const = default;

 private:
  std::vector<std::uint8_t> in_;
  std::size_t count_ = 0;
};

// All suprema of centrally orthogonal families drawn from the set; the
// empty family contributes bottom.  Computed as a pairwise-join fixpoint,
// which is exact because partial joins of centrally orthogonal families are
// again centrally orthogonal to the rest.
ProjectionSet closure_centorth_sups(const Oml& lattice, const ProjectionSet& set);

// { q ^ c : q in set, c central }.
ProjectionSet gamma_restrict(const Oml& lattice, const ProjectionSet& set);

// Union of the intervals [0, q] over q in the set.
ProjectionSet down_closure(const Oml& lattice, const ProjectionSet& set);

// Smallest type-determining superset, and smallest strongly type-determining
// superset.
ProjectionSet td_closure(const Oml& lattice, const ProjectionSet& set);
ProjectionSet std_closure(const Oml& lattice, const ProjectionSet& set);

struct SetClassification {
  bool is_td = false;
  bool is_std = false;
  bool is_projective = false;
  bool is_order_ideal = false;
  bool is_oml_ideal = false;
  bool is_p_ideal = false;
};

// Evaluates each defining property directly, so this doubles as an oracle
// for the closure operators.
SetClassification classify_set(const Oml& lattice, const ProjectionSet& set);
SetClassification classify_set(const Oml& lattice, const ProjectionSet& set,
                               const EquivalencePartition& classes);

// Largest element of { central_cover(q) : q in set }; requires a TD set.
Elem type_cover(const Oml& lattice, const ProjectionSet& set);

// Largest central member of the set; requires a TD set.
Elem restricted_type_cover(const Oml& lattice, const ProjectionSet& set);

// central_cover(f) = top.
bool is_faithful(const Oml& lattice, Elem f);

// Every p <= c is the supremum of a pairwise-orthogonal subfamily of the
// set.  Greedy peeling first, exhaustive search only when greedy fails.
bool is_orthodense(const Oml& lattice, const ProjectionSet& set, Elem c);

// When every central d with p ^ d != 0 admits a nonzero member of the set
// below p ^ d, returns a nonzero member q <= p with the same central cover
// as p; otherwise nullopt.
std::optional<Elem> faithful_q_with_same_cover(const Oml& lattice, const ProjectionSet& set,
                                               Elem p);

}  // namespace omlkit

#endif  // OMLKIT_TD_SETS_HPP
