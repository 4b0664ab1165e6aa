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

#include "omlkit/central.hpp"

#include <algorithm>

namespace omlkit {

std::vector<Elem> center(const Oml& lattice) { return lattice.central_elements(); }

bool is_irreducible(const Oml& lattice) {
  return lattice.size() >= 2 && lattice.central_elements().size() == 2;
}

CentralCoverMap central_cover_map(const Oml& lattice) {
  CentralCoverMap map;
  map.gamma.resize(lattice.size());
  for (Elem p = 0; p < lattice.size(); ++p) map.gamma[p] = lattice.central_cover(p);
  return map;
}

Elem central_cover(const Oml& lattice, Elem p) { return lattice.central_cover(p); }

bool is_centrally_orthogonal(const Oml& lattice, std::span<const Elem> family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!lattice.is_orthogonal(lattice.central_cover(family[i]),
                                 lattice.central_cover(family[j])))
        return false;
  return true;
}

bool has_relative_center_property(const Oml& lattice) {
  for (Elem p = 0; p < lattice.size(); ++p) {
    SubOml sub = interval(lattice, p);
    std::vector<Elem> interval_center;
    for (Elem c : sub.lattice.central_elements()) interval_center.push_back(sub.to_parent[c]);
    std::sort(interval_center.begin(), interval_center.end());
    std::vector<Elem> meets;
    for (Elem c : lattice.central_elements()) meets.push_back(lattice.meet(p, c));
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    if (interval_center != meets) return false;
  }
  return true;
}

CarprodReport carprod_iso(const Oml& lattice, std::span<const Elem> family) {
  if (!is_centrally_orthogonal(lattice, family))
    throw precondition_error("family is not centrally orthogonal");

  CarprodReport report;
  report.family_sup = lattice.sup(family);
  SubOml target = interval(lattice, report.family_sup);
  report.interval_size = static_cast<std::size_t>(target.lattice.size());

  const int k = static_cast<int>(family.size());
  std::vector<SubOml> parts;
  parts.reserve(k);
  std::size_t product_size = 1;
  for (Elem p : family) {
    parts.push_back(interval(lattice, p));
    product_size *= static_cast<std::size_t>(parts.back().lattice.size());
  }
  report.product_size = product_size;

  auto fail = [&report](std::string why) {
    report.ok = false;
    if (report.failure.empty()) report.failure = std::move(why);
  };

  if (product_size != report.interval_size) {
    fail("product size differs from interval size");
    return report;
  }

  // Enumerate tuples in mixed radix, first coordinate most significant.
  std::vector<std::size_t> stride(k, 1);
  for (int i = k - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * static_cast<std::size_t>(parts[i + 1].lattice.size());
  auto coord = [&](std::size_t t, int i) {
    return static_cast<Elem>((t / stride[i]) % parts[i].lattice.size());
  };

  // phi(tuple) in parent-element terms.
  std::vector<Elem> phi(product_size);
  for (std::size_t t = 0; t < product_size; ++t) {
    Elem s = lattice.bottom();
    for (int i = 0; i < k; ++i) s = lattice.join(s, parts[i].to_parent[coord(t, i)]);
    phi[t] = s;
  }

  // Bijectivity onto the interval.
  std::vector<std::uint8_t> hit(lattice.size(), 0);
  for (std::size_t t = 0; t < product_size; ++t) {
    if (!lattice.leq(phi[t], report.family_sup)) {
      fail("image escapes the interval");
      return report;
    }
    if (hit[phi[t]]) {
      fail("map is not injective");
      return report;
    }
    hit[phi[t]] = 1;
  }

  // Order preservation in both directions.
  for (std::size_t s = 0; s < product_size && report.ok; ++s)
    for (std::size_t t = 0; t < product_size; ++t) {
      bool coord_le = true;
      for (int i = 0; i < k && coord_le; ++i)
        coord_le = parts[i].lattice.leq(coord(s, i), coord(t, i));
      if (coord_le != lattice.leq(phi[s], phi[t])) {
        fail("order is not preserved both ways");
        break;
      }
    }
  if (!report.ok) return report;

  // Relative orthocomplements map to the relative orthocomplement.
  for (std::size_t t = 0; t < product_size; ++t) {
    Elem s = lattice.bottom();
    for (int i = 0; i < k; ++i)
      s = lattice.join(s, parts[i].to_parent[parts[i].lattice.ortho(coord(t, i))]);
    Elem expected = lattice.meet(report.family_sup, lattice.ortho(phi[t]));
    if (s != expected) {
      fail("relative orthocomplement is not preserved");
      return report;
    }
  }

  // Inverse formula: q -> (q ^ gamma p_i), and its q ^ p_i variant.
  for (Elem q = 0; q < lattice.size(); ++q) {
    if (!lattice.leq(q, report.family_sup)) continue;
    Elem rebuilt = lattice.bottom();
    for (int i = 0; i < k; ++i) {
      Elem with_cover = lattice.meet(q, lattice.central_cover(family[i]));
      Elem with_member = lattice.meet(q, family[i]);
      if (with_cover != with_member) {
        fail("cover and member forms of the inverse disagree");
        return report;
      }
      rebuilt = lattice.join(rebuilt, with_cover);
    }
    if (rebuilt != q) {
      fail("inverse does not round-trip");
      return report;
    }
  }

  return report;
}

}  // namespace omlkit
