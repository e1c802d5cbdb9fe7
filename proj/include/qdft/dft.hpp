// Copyright 2026 The qdft Authors
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

#pragma once

#include <cstddef>

#include "qdft/types.hpp"

namespace qdft {

// Unitary transform convention: the matrix W has entries
// exp(-i*2*pi*j*k/n) / sqrt(n), so forward and inverse both preserve
// energy and the inverse is the conjugate transpose. W is symmetric.
//
// Coefficients are the plain (unconjugated) matrix-vector product
// c_i = row_i . x. Conjugating would break the c = W x identity the
// search modules are built on, so no sesquilinear variant exists here.

/// Row i of the n-point transform matrix. Unit Euclidean norm.
ComplexVec fourier_row(std::size_t n, std::size_t i);

/// The full explicit n-by-n transform matrix (test and small-n use).
ComplexMatrix fourier_matrix(std::size_t n);

ComplexVec dft_1d(const ComplexVec& x);
ComplexVec idft_1d(const ComplexVec& c);

/// 2-D transform C = W F W, computed separably: transforms along the
/// columns of f, then along the rows of the intermediate (W symmetric,
/// so right-multiplication is a row transform).
ComplexMatrix dft_2d(const ComplexMatrix& f);
ComplexMatrix idft_2d(const ComplexMatrix& c);

double energy(const ComplexVec& x);
double energy(const ComplexMatrix& m);

/// Squared modulus of one transform coefficient, |row_i . x|^2,
/// evaluated straight from the definition (no FFT shortcut). This is the
/// classical verification oracle for the search modules.
double inner_sq(std::size_t n, std::size_t i, const ComplexVec& x);

}  // namespace qdft
