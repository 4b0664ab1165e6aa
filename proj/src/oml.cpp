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

#include "omlkit/oml.hpp"

#include <algorithm>
#include <optional>

namespace omlkit {

namespace {

void check_structure(const RawLattice& raw) {
  if (raw.n < 1) throw input_error("lattice needs at least one element");
  const auto n = static_cast<std::size_t>(raw.n);
  if (raw.leq.size() != n * n) throw input_error("order relation is not an n-by-n table");
  if (raw.ortho.size() != n) throw input_error("ortho map length does not match element count");
  std::vector<std::uint8_t> seen(n, 0);
  for (Elem p = 0; p < raw.n; ++p) {
    Elem q = raw.ortho[p];
    if (q < 0 || q >= raw.n || seen[q]) throw input_error("ortho map is not a permutation");
    seen[q] = 1;
  }
  if (!raw.labels.empty() && raw.labels.size() != n)
    throw input_error("label list length does not match element count");
}

// Meet/join of one pair by scanning the bound set; nullopt when the bound
// set has no maximum (resp. minimum), i.e. the glb/lub does not exist.
std::optional<Elem> bound_of_pair(const RawLattice& raw, Elem p, Elem q, bool lower) {
  std::vector<Elem> bounds;
  for (Elem r = 0; r < raw.n; ++r) {
    bool in = lower ? (raw.le(r, p) && raw.le(r, q)) : (raw.le(p, r) && raw.le(q, r));
    if (in) bounds.push_back(r);
  }
  if (bounds.empty()) return std::nullopt;
  Elem best = bounds.front();
  for (Elem r : bounds) {
    bool better = lower ? raw.le(best, r) : raw.le(r, best);
    if (better) best = r;
  }
  for (Elem r : bounds) {
    bool ok = lower ? raw.le(r, best) : raw.le(best, r);
    if (!ok) return std::nullopt;
  }
  return best;
}

struct BuiltTables {
  std::vector<Elem> meet, join;
  Elem bottom = 0, top = 0;
};

// Runs the axiom checks in dependency order.  Returns tables when the input
// is a lattice so that Oml construction does not recompute them.
ValidationReport run_validation(const RawLattice& raw, BuiltTables* out) {
  check_structure(raw);
  const int n = raw.n;
  ValidationReport rep;
  auto fail = [&rep](const char* axiom, std::vector<Elem> witness) {
    rep.ok = false;
    rep.failures.push_back({axiom, std::move(witness)});
  };

  // Partial-order axioms.
  for (Elem p = 0; p < n; ++p)
    if (!raw.le(p, p)) {
      fail("reflexivity", {p});
      break;
    }
  for (Elem p = 0; p < n && rep.ok; ++p)
    for (Elem q = 0; q < n; ++q)
      if (p != q && raw.le(p, q) && raw.le(q, p)) {
        fail("antisymmetry", {p, q});
        break;
      }
  for (Elem p = 0; p < n && rep.ok; ++p)
    for (Elem q = 0; q < n && rep.ok; ++q) {
      if (!raw.le(p, q)) continue;
      for (Elem r = 0; r < n; ++r)
        if (raw.le(q, r) && !raw.le(p, r)) {
          fail("transitivity", {p, q, r});
          break;
        }
    }
  if (!rep.ok) return rep;

  // Lattice axioms: unique glb/lub for every pair.
  BuiltTables tables;
  tables.meet.assign(static_cast<std::size_t>(n) * n, 0);
  tables.join.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem p = 0; p < n && rep.ok; ++p)
    for (Elem q = p; q < n; ++q) {
      auto m = bound_of_pair(raw, p, q, true);
      if (!m) {
        fail("lattice-meet", {p, q});
        break;
      }
      auto j = bound_of_pair(raw, p, q, false);
      if (!j) {
        fail("lattice-join", {p, q});
        break;
      }
      tables.meet[static_cast<std::size_t>(p) * n + q] = *m;
      tables.meet[static_cast<std::size_t>(q) * n + p] = *m;
      tables.join[static_cast<std::size_t>(p) * n + q] = *j;
      tables.join[static_cast<std::size_t>(q) * n + p] = *j;
    }
  if (!rep.ok) return rep;

  auto meet = [&](Elem p, Elem q) { return tables.meet[static_cast<std::size_t>(p) * n + q]; };
  auto join = [&](Elem p, Elem q) { return tables.join[static_cast<std::size_t>(p) * n + q]; };
  tables.bottom = 0;
  tables.top = 0;
  for (Elem p = 1; p < n; ++p) {
    tables.bottom = meet(tables.bottom, p);
    tables.top = join(tables.top, p);
  }

  // Orthocomplementation axioms.
  for (Elem p = 0; p < n; ++p)
    if (raw.ortho[raw.ortho[p]] != p) {
      fail("ortho-involution", {p});
      break;
    }
  for (Elem p = 0; p < n && rep.ok; ++p)
    for (Elem q = 0; q < n; ++q)
      if (raw.le(p, q) && !raw.le(raw.ortho[q], raw.ortho[p])) {
        fail("ortho-order-reversing", {p, q});
        break;
      }
  for (Elem p = 0; p < n && rep.ok; ++p)
    if (join(p, raw.ortho[p]) != tables.top || meet(p, raw.ortho[p]) != tables.bottom) {
      fail("complement-law", {p});
      break;
    }
  if (!rep.ok) return rep;

  // Orthomodular law: p <= q implies q = p v (q ^ p').
  for (Elem p = 0; p < n && rep.ok; ++p)
    for (Elem q = 0; q < n; ++q)
      if (raw.le(p, q) && join(p, meet(q, raw.ortho[p])) != q) {
        fail("orthomodular-law", {p, q});
        break;
      }

  if (rep.ok && out) *out = std::move(tables);
  return rep;
}

}  // namespace

ValidationReport validate_oml(const RawLattice& raw) { return run_validation(raw, nullptr); }

validation_error::validation_error(ValidationReport report)
    : std::runtime_error(report.failures.empty()
                             ? "lattice failed validation"
                             : "lattice failed validation: " + report.failures.front().axiom),
      report_(std::move(report)) {}

Oml Oml::from_raw(const RawLattice& raw) {
  BuiltTables tables;
  ValidationReport rep = run_validation(raw, &tables);
  if (!rep.ok) throw validation_error(std::move(rep));
  Oml lattice;
  lattice.n_ = raw.n;
  lattice.leq_ = raw.leq;
  lattice.ortho_ = raw.ortho;
  lattice.meet_ = std::move(tables.meet);
  lattice.join_ = std::move(tables.join);
  lattice.bottom_ = tables.bottom;
  lattice.top_ = tables.top;
  if (raw.labels.empty()) {
    lattice.labels_.reserve(raw.n);
    for (Elem p = 0; p < raw.n; ++p) lattice.labels_.push_back(std::to_string(p));
  } else {
    lattice.labels_ = raw.labels;
  }
  lattice.build_caches();
  return lattice;
}

void Oml::build_caches() {
  is_central_.assign(n_, 0);
  for (Elem c = 0; c < n_; ++c) {
    bool central = true;
    for (Elem p = 0; p < n_ && central; ++p) central = is_compatible(c, p);
    if (central) {
      is_central_[c] = 1;
      center_.push_back(c);
    }
  }
  // gamma(p) = meet of all central elements above p; the center is closed
  // under meets, so the fold lands back in the center.
  gamma_.assign(n_, top_);
  for (Elem p = 0; p < n_; ++p) {
    Elem g = top_;
    for (Elem c : center_)
      if (le(p, c)) g = meet_[idx(g, c)];
    gamma_[p] = g;
  }
}

Elem Oml::sup(std::span<const Elem> elems) const {
  Elem s = bottom_;
  for (Elem p : elems) {
    check(p);
    s = join_[idx(s, p)];
  }
  return s;
}

Elem Oml::inf(std::span<const Elem> elems) const {
  Elem s = top_;
  for (Elem p : elems) {
    check(p);
    s = meet_[idx(s, p)];
  }
  return s;
}

std::vector<Elem> Oml::atoms() const {
  std::vector<Elem> result;
  for (Elem p = 0; p < n_; ++p) {
    if (p == bottom_) continue;
    bool atom = true;
    for (Elem r = 0; r < n_ && atom; ++r)
      if (r != bottom_ && r != p && le(r, p)) atom = false;
    if (atom) result.push_back(p);
  }
  return result;
}

RawLattice Oml::raw() const {
  RawLattice out(n_);
  out.leq = leq_;
  out.ortho = ortho_;
  out.labels = labels_;
  return out;
}

SubOml interval(const Oml& lattice, Elem p) {
  lattice.check(p);
  std::vector<Elem> members;
  std::vector<int> pos(lattice.n_, -1);
  for (Elem q = 0; q < lattice.n_; ++q)
    if (lattice.le(q, p)) {
      pos[q] = static_cast<int>(members.size());
      members.push_back(q);
    }
  const int m = static_cast<int>(members.size());

  Oml sub;
  sub.n_ = m;
  sub.leq_.assign(static_cast<std::size_t>(m) * m, 0);
  sub.ortho_.resize(m);
  sub.meet_.resize(static_cast<std::size_t>(m) * m);
  sub.join_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    // Relative orthocomplement q -> p ^ q'.
    sub.ortho_[i] = pos[lattice.meet_[lattice.idx(p, lattice.ortho_[members[i]])]];
    for (int j = 0; j < m; ++j) {
      sub.leq_[sub.idx(i, j)] = lattice.le(members[i], members[j]) ? 1 : 0;
      sub.meet_[sub.idx(i, j)] = pos[lattice.meet_[lattice.idx(members[i], members[j])]];
      sub.join_[sub.idx(i, j)] = pos[lattice.join_[lattice.idx(members[i], members[j])]];
    }
  }
  sub.bottom_ = pos[lattice.bottom_];
  sub.top_ = pos[p];
  sub.labels_.reserve(m);
  for (Elem q : members) sub.labels_.push_back(lattice.labels_[q]);
  sub.build_caches();
  return SubOml{std::move(sub), std::move(members)};
}

Oml direct_product(const std::vector<Oml>& factors) {
  if (factors.empty()) throw input_error("direct product needs at least one factor");
  const int k = static_cast<int>(factors.size());
  long long total = 1;
  for (const Oml& f : factors) {
    total *= f.size();
    if (total > 1 << 20) throw input_error("direct product too large");
  }
  const int n = static_cast<int>(total);

  // Row-major tuple encoding, first factor most significant.
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].size();
  auto coord = [&](int e, int i) { return (e / stride[i]) % factors[i].size(); };

  RawLattice raw(n);
  raw.labels.resize(n);
  for (int e = 0; e < n; ++e) {
    int o = 0;
    std::string label = k > 1 ? "(" : "";
    for (int i = 0; i < k; ++i) {
      int c = coord(e, i);
      o += factors[i].ortho(c) * stride[i];
      if (i) label += ",";
      label += factors[i].label(c);
    }
    if (k > 1) label += ")";
    raw.ortho[e] = o;
    raw.labels[e] = label;
    for (int f = 0; f < n; ++f) {
      bool le = true;
      for (int i = 0; i < k && le; ++i) le = factors[i].leq(coord(e, i), coord(f, i));
      raw.set_le(e, f, le);
    }
  }
  return Oml::from_raw(raw);
}

bool is_modular_lattice(const Oml& lattice) {
  const int n = lattice.size();
  for (Elem p = 0; p < n; ++p)
    for (Elem r = 0; r < n; ++r) {
      if (!lattice.leq(p, r)) continue;
      for (Elem q = 0; q < n; ++q)
        if (lattice.join(p, lattice.meet(q, r)) != lattice.meet(lattice.join(p, q), r))
          return false;
    }
  return true;
}

bool is_boolean_lattice(const Oml& lattice) {
  const int n = lattice.size();
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      for (Elem r = 0; r < n; ++r)
        if (lattice.meet(p, lattice.join(q, r)) !=
            lattice.join(lattice.meet(p, q), lattice.meet(p, r)))
          return false;
  return true;
}

}  // namespace omlkit
