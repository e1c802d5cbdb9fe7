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

#include "qdft/sparse_spectrum.hpp"

#include <stdexcept>

#include "qdft/util.hpp"

namespace qdft {

double SparseSpectrum::retained_energy() const {
  detail::KahanSum s;
  for (const auto& [i, c] : entries) s.add(std::norm(c));
  return s.value();
}

ComplexVec densify(const SparseSpectrum& s) {
  ComplexVec out(s.n, Complex(0.0, 0.0));
  for (const auto& [i, c] : s.entries) {
    if (i >= s.n) throw std::domain_error("densify: entry index out of range");
    out[i] = c;
  }
  return out;
}

double SparseMatrixSpectrum::retained_energy() const {
  detail::KahanSum s;
  for (const auto& [p, c] : entries) s.add(std::norm(c));
  return s.value();
}

ComplexMatrix densify(const SparseMatrixSpectrum& s) {
  ComplexMatrix out(s.n, s.n);
  for (const auto& [p, c] : s.entries) {
    if (p.row >= s.n || p.col >= s.n) {
      throw std::domain_error("densify: entry coordinates out of range");
    }
    out(p.row, p.col) = c;
  }
  return out;
}

}  // namespace qdft
