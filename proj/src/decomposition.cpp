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

#include "omlkit/decomposition.hpp"

#include <string>

namespace omlkit {

namespace {

struct TypeCovers {
  Elem full;        // largest attained central cover
  Elem restricted;  // largest central member
};

TypeCovers covers_of(const Oml& lattice, const ProjectionSet& set) {
  return TypeCovers{type_cover(lattice, set), restricted_type_cover(lattice, set)};
}

CentralClassification flags_from_definitions(const Oml& lattice, const ProjectionSet& set,
                                             Elem c) {
  CentralClassification f;
  f.is_type_q = set.contains(c);
  f.is_locally_type_q = false;
  for (Elem q : set.members())
    if (lattice.central_cover(q) == c) {
      f.is_locally_type_q = true;
      break;
    }
  f.is_purely_non_q = true;
  f.is_properly_non_q = true;
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (x == lattice.bottom() || !lattice.leq(x, c) || !set.contains(x)) continue;
    f.is_purely_non_q = false;
    if (lattice.is_central(x)) f.is_properly_non_q = false;
  }
  return f;
}

CentralClassification flags_from_covers(const Oml& lattice, const TypeCovers& covers, Elem c) {
  CentralClassification f;
  f.is_type_q = lattice.leq(c, covers.restricted);
  f.is_locally_type_q = lattice.leq(c, covers.full);
  f.is_purely_non_q = lattice.leq(c, lattice.ortho(covers.full));
  f.is_properly_non_q = lattice.leq(c, lattice.ortho(covers.restricted));
  return f;
}

CentralClassification dual_route_flags(const Oml& lattice, const ProjectionSet& set,
                                       const TypeCovers& covers, Elem c) {
  CentralClassification by_def = flags_from_definitions(lattice, set, c);
  CentralClassification by_cover = flags_from_covers(lattice, covers, c);
  if (by_def.is_type_q != by_cover.is_type_q ||
      by_def.is_locally_type_q != by_cover.is_locally_type_q ||
      by_def.is_purely_non_q != by_cover.is_purely_non_q ||
      by_def.is_properly_non_q != by_cover.is_properly_non_q)
    throw internal_error("central classification: definition and cover routes disagree at " +
                         lattice.label(c));
  return by_def;
}

void require_central(const Oml& lattice, Elem c) {
  if (!lattice.is_central(c))
    throw precondition_error("element is not central: " + lattice.label(c));
}

}  // namespace

CentralClassification classify_central(const Oml& lattice, const ProjectionSet& set, Elem c) {
  require_central(lattice, c);
  return dual_route_flags(lattice, set, covers_of(lattice, set), c);
}

FundamentalDecomposition fundamental_decomposition(const Oml& lattice,
                                                   const ProjectionSet& set) {
  const TypeCovers covers = covers_of(lattice, set);
  FundamentalDecomposition d;
  d.c1 = covers.restricted;
  d.c2 = lattice.meet(covers.full, lattice.ortho(covers.restricted));
  d.c3 = lattice.ortho(covers.full);

  auto matches = [&](Elem e1, Elem e2, Elem e3) {
    CentralClassification f1 = dual_route_flags(lattice, set, covers, e1);
    CentralClassification f2 = dual_route_flags(lattice, set, covers, e2);
    CentralClassification f3 = dual_route_flags(lattice, set, covers, e3);
    return f1.is_type_q && f2.is_locally_type_q && f2.is_properly_non_q && f3.is_purely_non_q;
  };

  if (!lattice.is_orthogonal(d.c1, d.c2) || !lattice.is_orthogonal(d.c1, d.c3) ||
      !lattice.is_orthogonal(d.c2, d.c3) ||
      lattice.join(d.c1, lattice.join(d.c2, d.c3)) != lattice.top())
    throw internal_error("fundamental decomposition does not partition the unit");
  if (!matches(d.c1, d.c2, d.c3))
    throw internal_error("fundamental decomposition summand fails its label");

  // The label-plus-partition contract must pin the triple down uniquely; the
  // third component is forced once the first two are chosen.
  int solutions = 0;
  for (Elem e1 : lattice.central_elements()) {
    for (Elem e2 : lattice.central_elements()) {
      if (!lattice.is_orthogonal(e1, e2)) continue;
      Elem e3 = lattice.ortho(lattice.join(e1, e2));
      if (!matches(e1, e2, e3)) continue;
      ++solutions;
      if (e1 != d.c1 || e2 != d.c2 || e3 != d.c3)
        throw internal_error("fundamental decomposition is not unique");
    }
  }
  if (solutions != 1)
    throw internal_error("fundamental decomposition search found " +
                         std::to_string(solutions) + " solutions");
  return d;
}

TypeDecomposition type_decomposition(const Oml& lattice, const ProjectionSet& inner,
                                     const ProjectionSet& outer) {
  const TypeCovers q = covers_of(lattice, inner);
  const TypeCovers k = covers_of(lattice, outer);
  if (!inner.subset_of(outer))
    throw precondition_error("inner set is not contained in outer set");

  auto meet3 = [&](Elem a, Elem b, Elem c) { return lattice.meet(a, lattice.meet(b, c)); };

  TypeDecomposition d;
  d.cI = q.full;
  d.cII = lattice.meet(k.full, lattice.ortho(q.full));
  d.cIII = lattice.ortho(k.full);
  d.cIK = lattice.meet(q.full, k.restricted);
  d.cIKt = lattice.meet(q.full, lattice.ortho(k.restricted));
  d.cIIK = lattice.meet(k.restricted, lattice.ortho(q.full));
  d.cIIKt = meet3(k.full, lattice.ortho(k.restricted), lattice.ortho(q.full));
  d.c11 = q.restricted;
  d.c21 = meet3(k.restricted, q.full, lattice.ortho(q.restricted));

  auto check_partition = [&](Elem whole, Elem a, Elem b, const char* what) {
    if (!lattice.is_orthogonal(a, b) || lattice.join(a, b) != whole)
      throw internal_error(std::string("type decomposition: ") + what +
                           " does not partition its summand");
  };
  if (!lattice.is_orthogonal(d.cI, d.cII) || !lattice.is_orthogonal(d.cI, d.cIII) ||
      !lattice.is_orthogonal(d.cII, d.cIII) ||
      lattice.join(d.cI, lattice.join(d.cII, d.cIII)) != lattice.top())
    throw internal_error("type decomposition does not partition the unit");
  check_partition(d.cI, d.cIK, d.cIKt, "refinement of the first summand");
  check_partition(d.cII, d.cIIK, d.cIIKt, "refinement of the second summand");
  check_partition(d.cIK, d.c11, d.c21, "refinement of the first refined summand");

  // Re-verify every label from the definitions.
  auto qf = [&](Elem c) { return dual_route_flags(lattice, inner, q, c); };
  auto kf = [&](Elem c) { return dual_route_flags(lattice, outer, k, c); };
  auto expect = [](bool cond, const char* what) {
    if (!cond) throw internal_error(std::string("type decomposition label failed: ") + what);
  };
  expect(qf(d.cI).is_locally_type_q, "first summand locally inner-type");
  expect(kf(d.cII).is_locally_type_q && qf(d.cII).is_purely_non_q,
         "second summand locally outer-type and purely non-inner");
  expect(kf(d.cIII).is_purely_non_q, "third summand purely non-outer");
  expect(qf(d.cIK).is_locally_type_q && kf(d.cIK).is_type_q, "cIK");
  expect(qf(d.cIKt).is_locally_type_q && kf(d.cIKt).is_properly_non_q, "cIKt");
  expect(kf(d.cIIK).is_locally_type_q && qf(d.cIIK).is_purely_non_q && kf(d.cIIK).is_type_q,
         "cIIK");
  expect(kf(d.cIIKt).is_locally_type_q && qf(d.cIIKt).is_purely_non_q &&
             kf(d.cIIKt).is_properly_non_q,
         "cIIKt");
  expect(qf(d.c11).is_type_q, "c11");
  expect(kf(d.c21).is_type_q && qf(d.c21).is_locally_type_q && qf(d.c21).is_properly_non_q,
         "c21");

  // Containments that hold for any nested pair.
  for (Elem e : inner.members())
    if (!lattice.leq(e, d.cI))
      throw internal_error("inner set escapes the first summand");
  for (Elem e : outer.members())
    if (!lattice.leq(e, lattice.join(d.cI, d.cII)))
      throw internal_error("outer set escapes the first two summands");
  return d;
}

TypeIConditions alt_type_I_conditions(const Oml& lattice, const ProjectionSet& set, Elem c) {
  require_central(lattice, c);
  const Elem cover = type_cover(lattice, set);

  TypeIConditions out;
  // (1) membership in the image of the central cover map, via the image set.
  ProjectionSet image(lattice.size());
  for (Elem q : set.members()) image.add(lattice.central_cover(q));
  out.locally_type_q = image.contains(c);

  // (2) direct scan for a member whose cover is c.
  for (Elem q : set.members())
    if (lattice.central_cover(q) == c) {
      out.witness_in_q = true;
      break;
    }

  // (3) a member below c that is faithful in the interval [0, c].
  SubOml sub = interval(lattice, c);
  for (Elem i = 0; i < sub.lattice.size(); ++i)
    if (set.contains(sub.to_parent[i]) &&
        sub.lattice.central_cover(i) == sub.lattice.top()) {
      out.faithful_witness = true;
      break;
    }

  // (4) every nonzero summand of [0, c] contains a nonzero member.
  out.summands_meet_q = true;
  for (Elem d : sub.lattice.central_elements()) {
    if (d == sub.lattice.bottom()) continue;
    const Elem bound = sub.to_parent[d];
    bool found = false;
    for (Elem x : set.members())
      if (x != lattice.bottom() && lattice.leq(x, bound)) {
        found = true;
        break;
      }
    if (!found) {
      out.summands_meet_q = false;
      break;
    }
  }

  // (5) comparison with the type cover.
  out.below_type_cover = lattice.leq(c, cover);

  if (out.locally_type_q != out.witness_in_q || out.locally_type_q != out.faithful_witness ||
      out.locally_type_q != out.summands_meet_q || out.locally_type_q != out.below_type_cover)
    throw internal_error("alternative characterizations of a locally typed summand disagree");
  return out;
}

}  // namespace omlkit
