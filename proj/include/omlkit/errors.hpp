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

#ifndef OMLKIT_ERRORS_HPP
#define OMLKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omlkit {

// Malformed input: bad indices, non-square relations, ortho maps that are
// not permutations, unreadable files.  Distinct from lattice-axiom failures,
// which are reported through ValidationReport.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold (set not type
// determining, element not central, family not centrally orthogonal, ...).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes to the same value disagreed.  Indicates a bug in
// this library, never bad user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace omlkit

#endif  // OMLKIT_ERRORS_HPP
