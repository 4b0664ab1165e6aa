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

#include "omlkit/catalog.hpp"

#include <cctype>
#include <vector>

namespace omlkit {

RawLattice boolean_raw(int exponent) {
  if (exponent < 0 || exponent > 16) throw input_error("boolean exponent out of range");
  const int n = 1 << exponent;
  RawLattice raw(n);
  raw.labels.resize(n);
  for (int p = 0; p < n; ++p) {
    raw.ortho[p] = (n - 1) ^ p;
    std::string label;
    for (int b = exponent - 1; b >= 0; --b) label += (p >> b) & 1 ? '1' : '0';
    raw.labels[p] = exponent == 0 ? "0" : label;
    for (int q = 0; q < n; ++q) raw.set_le(p, q, (p & q) == p);
  }
  return raw;
}

RawLattice mo_raw(int atom_pairs) {
  if (atom_pairs < 1 || atom_pairs > 500) throw input_error("atom pair count out of range");
  const int n = 2 * atom_pairs + 2;
  const Elem bottom = 0, top = n - 1;
  RawLattice raw(n);
  raw.labels.assign(n, "");
  raw.labels[bottom] = "0";
  raw.labels[top] = "1";
  raw.ortho[bottom] = top;
  raw.ortho[top] = bottom;
  for (int i = 1; i <= atom_pairs; ++i) {
    Elem a = 2 * i - 1, ap = 2 * i;
    raw.labels[a] = "a" + std::to_string(i);
    raw.labels[ap] = "a" + std::to_string(i) + "'";
    raw.ortho[a] = ap;
    raw.ortho[ap] = a;
  }
  for (Elem p = 0; p < n; ++p) {
    raw.set_le(p, p);
    raw.set_le(bottom, p);
    raw.set_le(p, top);
  }
  return raw;
}

RawLattice o6_raw() {
  // Two chains 0 < a < b < 1 and 0 < b' < a' < 1 with a <-> a', b <-> b'.
  RawLattice raw(6);
  raw.labels = {"0", "a", "b", "b'", "a'", "1"};
  raw.ortho = {5, 4, 3, 2, 1, 0};
  const Elem bottom = 0, a = 1, b = 2, bp = 3, ap = 4, top = 5;
  for (Elem p = 0; p < 6; ++p) {
    raw.set_le(p, p);
    raw.set_le(bottom, p);
    raw.set_le(p, top);
  }
  raw.set_le(a, b);
  raw.set_le(bp, ap);
  return raw;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw input_error("catalog id: expected '" + std::string(1, c) + "' in: " + text);
  }

  int number() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw input_error("catalog id: expected a number in: " + text);
    return std::stoi(text.substr(start, pos - start));
  }

  std::string word() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
      ++pos;
    return text.substr(start, pos - start);
  }

  RawLattice lattice() {
    std::string head = word();
    if (head == "boolean") {
      expect(':');
      return boolean_raw(number());
    }
    if (head == "mo") {
      expect(':');
      return mo_raw(number());
    }
    if (head == "o6") return o6_raw();
    if (head == "product") {
      expect('(');
      std::vector<Oml> factors;
      factors.push_back(Oml::from_raw(lattice()));
      while (eat(',')) factors.push_back(Oml::from_raw(lattice()));
      expect(')');
      return direct_product(factors).raw();
    }
    if (head == "interval") {
      expect('(');
      Oml parent = Oml::from_raw(lattice());
      expect(',');
      int elem = number();
      expect(')');
      if (elem < 0 || elem >= parent.size())
        throw input_error("catalog id: interval element out of range");
      return interval(parent, elem).lattice.raw();
    }
    throw input_error("catalog id: unknown head '" + head + "' in: " + text);
  }
};

}  // namespace

bool looks_like_catalog_id(const std::string& token) {
  for (const char* head : {"boolean:", "mo:", "o6", "product(", "interval("})
    if (token.rfind(head, 0) == 0) return true;
  return false;
}

RawLattice catalog_raw(const std::string& token) {
  Parser parser{token};
  RawLattice raw = parser.lattice();
  parser.skip_spaces();
  if (parser.pos != token.size())
    throw input_error("catalog id: trailing characters in: " + token);
  return raw;
}

Oml catalog_oml(const std::string& token) { return Oml::from_raw(catalog_raw(token)); }

}  // namespace omlkit
