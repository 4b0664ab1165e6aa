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

#include "omlkit/equivalence.hpp"

#include <algorithm>
#include <numeric>

namespace omlkit {

std::vector<Elem> complements(const Oml& lattice, Elem p) {
  std::vector<Elem> result;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (lattice.join(p, x) == lattice.top() && lattice.meet(p, x) == lattice.bottom())
      result.push_back(x);
  return result;
}

bool are_perspective(const Oml& lattice, Elem p, Elem q) {
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (lattice.join(p, x) != lattice.top() || lattice.meet(p, x) != lattice.bottom()) continue;
    if (lattice.join(q, x) == lattice.top() && lattice.meet(q, x) == lattice.bottom()) return true;
  }
  return false;
}

bool are_strongly_perspective(const Oml& lattice, Elem p, Elem q) {
  const Elem r = lattice.join(p, q);
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (!lattice.leq(x, r)) continue;
    if (lattice.join(p, x) == r && lattice.meet(p, x) == lattice.bottom() &&
        lattice.join(q, x) == r && lattice.meet(q, x) == lattice.bottom())
      return true;
  }
  return false;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EquivalencePartition projectivity_classes(const Oml& lattice) {
  const int n = lattice.size();
  // Complement sets as bitmasks so the pairwise intersection test is cheap.
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> comp(static_cast<std::size_t>(n) * words, 0);
  for (Elem p = 0; p < n; ++p)
    for (Elem x = 0; x < n; ++x)
      if (lattice.join(p, x) == lattice.top() && lattice.meet(p, x) == lattice.bottom())
        comp[static_cast<std::size_t>(p) * words + x / 64] |= std::uint64_t{1} << (x % 64);

  Dsu dsu(n);
  for (Elem p = 0; p < n; ++p)
    for (Elem q = p + 1; q < n; ++q) {
      const std::uint64_t* a = &comp[static_cast<std::size_t>(p) * words];
      const std::uint64_t* b = &comp[static_cast<std::size_t>(q) * words];
      for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) {
          dsu.unite(p, q);
          break;
        }
    }

  EquivalencePartition part;
  part.class_of.assign(n, -1);
  for (Elem p = 0; p < n; ++p) {
    int root = dsu.find(p);
    if (part.class_of[root] < 0) {
      part.class_of[root] = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
    }
    part.class_of[p] = part.class_of[root];
    part.classes[part.class_of[p]].push_back(p);
  }
  return part;
}

bool are_projective(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q) {
  (void)lattice;
  return classes.same_class(p, q);
}

bool is_subequivalent(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q) {
  for (Elem q1 = 0; q1 < lattice.size(); ++q1)
    if (lattice.leq(q1, q) && classes.same_class(p, q1)) return true;
  return false;
}

bool are_related(const Oml& lattice, const EquivalencePartition& classes, Elem p, Elem q) {
  for (Elem p1 = 0; p1 < lattice.size(); ++p1) {
    if (p1 == lattice.bottom() || !lattice.leq(p1, p)) continue;
    for (Elem q1 = 0; q1 < lattice.size(); ++q1)
      if (q1 != lattice.bottom() && lattice.leq(q1, q) && classes.same_class(p1, q1)) return true;
  }
  return false;
}

bool is_invariant(const Oml& lattice, const EquivalencePartition& classes, Elem h) {
  return !are_related(lattice, classes, h, lattice.ortho(h));
}

bool is_subequivalent(const Oml& lattice, Elem p, Elem q) {
  return is_subequivalent(lattice, projectivity_classes(lattice), p, q);
}

bool are_related(const Oml& lattice, Elem p, Elem q) {
  return are_related(lattice, projectivity_classes(lattice), p, q);
}

bool is_invariant(const Oml& lattice, Elem h) {
  return is_invariant(lattice, projectivity_classes(lattice), h);
}

}  // namespace omlkit
