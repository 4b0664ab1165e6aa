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

#ifndef OMLKIT_MATMODEL_LINALG_HPP
#define OMLKIT_MATMODEL_LINALG_HPP

#include "omlkit/matmodel/matrix.hpp"

namespace omlkit::matmodel {

// Exact rational linear algebra by fraction-free-enough Gaussian
// elimination; entries stay rational throughout.

int rank_exact(RatMat a);

// Columns form a basis of the column space (empty matrix for rank 0).
RatMat column_space_basis(const RatMat& a);

// Columns form a basis of the kernel.
RatMat kernel_basis(const RatMat& a);

RatMat inverse_exact(const RatMat& a);  // throws input_error when singular

// Orthogonal projection onto the column space: b (b^T b)^-1 b^T over a
// column basis b of the input.
RatMat projector_onto_columns(const RatMat& a);

// Positive semidefiniteness of a symmetric matrix by congruence
// elimination: a negative pivot or a zero pivot with nonzero row refutes.
bool is_psd(RatMat a);

}  // namespace omlkit::matmodel

#endif  // OMLKIT_MATMODEL_LINALG_HPP
