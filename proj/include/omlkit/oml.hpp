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

#ifndef OMLKIT_OML_HPP
#define OMLKIT_OML_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "omlkit/errors.hpp"

namespace omlkit {

// Lattice elements are indices into a fixed finite carrier.  Bottom and top
// are discovered from the order relation, never assumed to sit at fixed
// positions.
using Elem = int;

// An unvalidated order relation plus orthocomplementation map, as read from
// a file or assembled by a builder.  leq is row-major: le(p, q) holds iff
// p <= q.
struct RawLattice {
  int n = 0;
  std::vector<std::uint8_t> leq;
  std::vector<Elem> ortho;
  std::vector<std::string> labels;  // optional; empty or size n

  RawLattice() = default;
  explicit RawLattice(int count)
      : n(count), leq(static_cast<std::size_t>(count) * count, 0), ortho(count, 0) {}

  bool le(Elem p, Elem q) const { return leq[static_cast<std::size_t>(p) * n + q] != 0; }
  void set_le(Elem p, Elem q, bool v = true) {
    leq[static_cast<std::size_t>(p) * n + q] = v ? 1 : 0;
  }
};

struct ValidationFailure {
  std::string axiom;           // e.g. "orthomodular-law"
  std::vector<Elem> witness;   // minimal witness tuple, replayable on the raw input
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
};

// Checks every orthomodular-lattice axiom on the raw relation.  Structural
// problems (non-square relation, ortho not a permutation) throw input_error;
// axiom violations are reported, in dependency order, with a first witness
// each.
ValidationReport validate_oml(const RawLattice& raw);

// Thrown by Oml::from_raw when the input fails validation.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class Oml;

// An interval sublattice [0, p] of a parent lattice, packaged as an OML of
// its own together with the embedding of its elements back into the parent.
struct SubOml;

// A validated finite orthomodular lattice with cached meet/join tables and
// center data.  Immutable after construction; all member functions are pure
// and safe to call concurrently.
class Oml {
 public:
  static Oml from_raw(const RawLattice& raw);

  int size() const { return n_; }
  bool leq(Elem p, Elem q) const { check(p); check(q); return le(p, q); }
  Elem meet(Elem p, Elem q) const { check(p); check(q); return meet_[idx(p, q)]; }
  Elem join(Elem p, Elem q) const { check(p); check(q); return join_[idx(p, q)]; }
  Elem ortho(Elem p) const { check(p); return ortho_[p]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  // p is orthogonal to q iff p <= q-perp.
  bool is_orthogonal(Elem p, Elem q) const { check(p); check(q); return le(p, ortho_[q]); }

  // Mackey compatibility: p splits as x v y with x <= q and y <= q-perp.
  // The pair (p^q, p^q') works whenever any pair does, so the test is exact.
  bool is_compatible(Elem p, Elem q) const {
    check(p);
    check(q);
    return p == join_[idx(meet_[idx(p, q)], meet_[idx(p, ortho_[q])])];
  }

  Elem sup(std::span<const Elem> elems) const;   // bottom for the empty family
  Elem inf(std::span<const Elem> elems) const;   // top for the empty family

  const std::string& label(Elem p) const { check(p); return labels_[p]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<Elem> atoms() const;

  // Center support, computed once at construction.
  const std::vector<Elem>& central_elements() const { return center_; }
  bool is_central(Elem p) const { check(p); return is_central_[p] != 0; }
  // The least central element above p.
  Elem central_cover(Elem p) const { check(p); return gamma_[p]; }

  RawLattice raw() const;

 private:
  Oml() = default;
  void build_caches();
  void check(Elem p) const {
    if (p < 0 || p >= n_) throw input_error("element index out of range: " + std::to_string(p));
  }
  bool le(Elem p, Elem q) const { return leq_[idx(p, q)] != 0; }
  std::size_t idx(Elem p, Elem q) const { return static_cast<std::size_t>(p) * n_ + q; }

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> ortho_;
  std::vector<Elem> meet_, join_;
  Elem bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
  std::vector<Elem> center_;
  std::vector<std::uint8_t> is_central_;
  std::vector<Elem> gamma_;

  friend SubOml interval(const Oml& lattice, Elem p);
};

struct SubOml {
  Oml lattice;
  std::vector<Elem> to_parent;  // to_parent[i] = parent element of interval element i
};

// The interval [0, p] as an OML with relative orthocomplement q -> p ^ q'.
// Meets and joins agree with the parent's.
SubOml interval(const Oml& lattice, Elem p);

// Coordinatewise product.  The result is re-validated.
Oml direct_product(const std::vector<Oml>& factors);

// Brute-force modular law over all triples.
bool is_modular_lattice(const Oml& lattice);

// Brute-force distributivity over all triples; complements exist by the OML
// axioms, so distributivity alone settles booleanness.
bool is_boolean_lattice(const Oml& lattice);

}  // namespace omlkit

#endif  // OMLKIT_OML_HPP
