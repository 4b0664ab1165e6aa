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

#include "omlkit/td_sets.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace omlkit {

ProjectionSet ProjectionSet::all(const Oml& lattice) {
  ProjectionSet s(lattice.size());
  for (Elem p = 0; p < lattice.size(); ++p) s.add(p);
  return s;
}

ProjectionSet ProjectionSet::of(const Oml& lattice, std::initializer_list<Elem> members) {
  return of(lattice, std::vector<Elem>(members));
}

ProjectionSet ProjectionSet::of(const Oml& lattice, const std::vector<Elem>& members) {
  ProjectionSet s(lattice.size());
  for (Elem p : members) {
    if (p < 0 || p >= lattice.size())
      throw input_error("set member out of range: " + std::to_string(p));
    s.add(p);
  }
  return s;
}

std::vector<Elem> ProjectionSet::members() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for (Elem p = 0; p < universe(); ++p)
    if (in_[p]) out.push_back(p);
  return out;
}

bool ProjectionSet::subset_of(const ProjectionSet& other) const {
  if (universe() != other.universe()) return false;
  for (Elem p = 0; p < universe(); ++p)
    if (in_[p] && !other.in_[p]) return false;
  return true;
}

namespace {

void check_universe(const Oml& lattice, const ProjectionSet& set) {
  if (set.universe() != lattice.size())
    throw input_error("projection set belongs to a different lattice");
}

}  // namespace

ProjectionSet closure_centorth_sups(const Oml& lattice, const ProjectionSet& set) {
  check_universe(lattice, set);
  ProjectionSet result = set;
  result.add(lattice.bottom());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> current = result.members();
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (!lattice.is_orthogonal(lattice.central_cover(current[i]),
                                   lattice.central_cover(current[j])))
          continue;
        Elem joined = lattice.join(current[i], current[j]);
        if (!result.contains(joined)) {
          result.add(joined);
          changed = true;
        }
      }
  }
  return result;
}

ProjectionSet gamma_restrict(const Oml& lattice, const ProjectionSet& set) {
  check_universe(lattice, set);
  ProjectionSet result(lattice.size());
  for (Elem q : set.members())
    for (Elem c : lattice.central_elements()) result.add(lattice.meet(q, c));
  return result;
}

ProjectionSet down_closure(const Oml& lattice, const ProjectionSet& set) {
  check_universe(lattice, set);
  ProjectionSet result(lattice.size());
  for (Elem q : set.members())
    for (Elem r = 0; r < lattice.size(); ++r)
      if (lattice.leq(r, q)) result.add(r);
  return result;
}

ProjectionSet td_closure(const Oml& lattice, const ProjectionSet& set) {
  return closure_centorth_sups(lattice, gamma_restrict(lattice, set));
}

ProjectionSet std_closure(const Oml& lattice, const ProjectionSet& set) {
  return closure_centorth_sups(lattice, down_closure(lattice, set));
}

SetClassification classify_set(const Oml& lattice, const ProjectionSet& set) {
  return classify_set(lattice, set, projectivity_classes(lattice));
}

SetClassification classify_set(const Oml& lattice, const ProjectionSet& set,
                               const EquivalencePartition& classes) {
  check_universe(lattice, set);
  SetClassification out;
  const ProjectionSet sups = closure_centorth_sups(lattice, set);
  const ProjectionSet gamma = gamma_restrict(lattice, set);
  const ProjectionSet down = down_closure(lattice, set);

  const bool sups_inside = sups.subset_of(set);
  out.is_td = sups_inside && gamma.subset_of(set);
  out.is_std = sups_inside && down.subset_of(set);

  out.is_projective = true;
  for (Elem q : set.members()) {
    for (Elem p : classes.classes[classes.class_of[q]])
      if (!set.contains(p)) {
        out.is_projective = false;
        break;
      }
    if (!out.is_projective) break;
  }

  out.is_order_ideal = set.size() > 0 && down.subset_of(set);
  out.is_oml_ideal = out.is_order_ideal;
  if (out.is_oml_ideal) {
    std::vector<Elem> members = set.members();
    for (std::size_t i = 0; i < members.size() && out.is_oml_ideal; ++i)
      for (std::size_t j = i; j < members.size(); ++j)
        if (!set.contains(lattice.join(members[i], members[j]))) {
          out.is_oml_ideal = false;
          break;
        }
  }
  out.is_p_ideal = out.is_oml_ideal && out.is_projective;

  if (out.is_std && !out.is_td)
    throw internal_error("set classified strongly type determining but not type determining");
  return out;
}

namespace {

void require_td(const Oml& lattice, const ProjectionSet& set) {
  check_universe(lattice, set);
  if (!closure_centorth_sups(lattice, set).subset_of(set))
    throw precondition_error("set is not type determining: not closed under suprema of "
                             "centrally orthogonal families");
  if (!gamma_restrict(lattice, set).subset_of(set))
    throw precondition_error("set is not type determining: not closed under meets with "
                             "central elements");
}

}  // namespace

Elem type_cover(const Oml& lattice, const ProjectionSet& set) {
  require_td(lattice, set);
  ProjectionSet covers(lattice.size());
  Elem c = lattice.bottom();
  for (Elem q : set.members()) {
    covers.add(lattice.central_cover(q));
    c = lattice.join(c, lattice.central_cover(q));
  }
  if (!covers.contains(c))
    throw internal_error("type cover is not attained by any member's central cover");
  return c;
}

Elem restricted_type_cover(const Oml& lattice, const ProjectionSet& set) {
  require_td(lattice, set);
  Elem c = lattice.bottom();
  bool found = false;
  for (Elem q : set.members())
    if (lattice.is_central(q)) {
      c = lattice.join(c, q);
      found = true;
    }
  if (!found || !set.contains(c) || !lattice.is_central(c))
    throw internal_error("restricted type cover is not attained inside the set");
  return c;
}

bool is_faithful(const Oml& lattice, Elem f) {
  return lattice.central_cover(f) == lattice.top();
}

namespace {

// Largest candidate under a single growing pass: the result is maximal in
// the candidate set because the running value only ever increases.
std::optional<Elem> maximal_member_below(const Oml& lattice, const std::vector<Elem>& members,
                                         Elem bound) {
  std::optional<Elem> best;
  for (Elem q : members) {
    if (q == lattice.bottom() || !lattice.leq(q, bound)) continue;
    if (!best || lattice.leq(*best, q)) best = q;
  }
  return best;
}

bool cover_by_orthogonal_family_search(const Oml& lattice, const std::vector<Elem>& members,
                                       Elem target, Elem partial, std::size_t start,
                                       std::set<std::pair<Elem, std::size_t>>& seen) {
  if (partial == target) return true;
  if (!seen.insert({partial, start}).second) return false;
  for (std::size_t i = start; i < members.size(); ++i) {
    Elem q = members[i];
    if (q == lattice.bottom()) continue;
    // q must stay inside the target and orthogonal to everything chosen.
    if (!lattice.leq(q, lattice.meet(target, lattice.ortho(partial)))) continue;
    if (cover_by_orthogonal_family_search(lattice, members, target, lattice.join(partial, q),
                                          i + 1, seen))
      return true;
  }
  return false;
}

bool is_sup_of_orthogonal_subfamily(const Oml& lattice, const std::vector<Elem>& members,
                                    Elem target) {
  // Greedy peeling: keep joining a maximal member of the residual interval.
  Elem partial = lattice.bottom();
  while (partial != target) {
    Elem residual = lattice.meet(target, lattice.ortho(partial));
    auto next = maximal_member_below(lattice, members, residual);
    if (!next) break;
    partial = lattice.join(partial, *next);
  }
  if (partial == target) return true;
  std::set<std::pair<Elem, std::size_t>> seen;
  return cover_by_orthogonal_family_search(lattice, members, target, lattice.bottom(), 0, seen);
}

}  // namespace

bool is_orthodense(const Oml& lattice, const ProjectionSet& set, Elem c) {
  check_universe(lattice, set);
  if (!lattice.is_central(c)) throw precondition_error("orthodensity bound is not central");
  const std::vector<Elem> members = set.members();
  for (Elem p = 0; p < lattice.size(); ++p) {
    if (!lattice.leq(p, c)) continue;
    if (!is_sup_of_orthogonal_subfamily(lattice, members, p)) return false;
  }
  return true;
}

std::optional<Elem> faithful_q_with_same_cover(const Oml& lattice, const ProjectionSet& set,
                                               Elem p) {
  require_td(lattice, set);
  if (p == lattice.bottom()) throw precondition_error("element must be nonzero");

  for (Elem d : lattice.central_elements()) {
    Elem pd = lattice.meet(p, d);
    if (pd == lattice.bottom()) continue;
    bool nonzero_member = false;
    for (Elem q : set.members())
      if (q != lattice.bottom() && lattice.leq(q, pd)) {
        nonzero_member = true;
        break;
      }
    if (!nonzero_member) return std::nullopt;
  }

  for (Elem q : set.members())
    if (q != lattice.bottom() && lattice.leq(q, p) &&
        lattice.central_cover(q) == lattice.central_cover(p))
      return q;
  throw internal_error("summand condition held but no member attains the cover");
}

}  // namespace omlkit
