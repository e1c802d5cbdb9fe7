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

#include <complex>
#include <cstddef>
#include <vector>

namespace qdft {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

/// Dense row-major matrix of complex samples. Every transform in this
/// library is square; rectangular instances only appear as I/O staging
/// before the crop.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ComplexVec data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool square() const { return rows == cols; }
};

ComplexMatrix transpose(const ComplexMatrix& m);
ComplexVec matrix_column(const ComplexMatrix& m, std::size_t j);
ComplexVec matrix_row(const ComplexMatrix& m, std::size_t i);

}  // namespace qdft
