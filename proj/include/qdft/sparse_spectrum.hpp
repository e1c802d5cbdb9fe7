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

#include <compare>
#include <cstddef>
#include <map>
#include <unordered_set>

#include "qdft/types.hpp"

namespace qdft {

/// Relative slack on window comparisons. Equal-magnitude coefficients sit
/// exactly on the lower edge alpha = residual / remaining, and the edge
/// must not be lost to the last ulp of either side.
inline constexpr double kWindowSlack = 1e-12;

/// Energy acceptance window [alpha, beta] plus the set of indices already
/// claimed by earlier rounds. alpha <= beta (up to slack), both >= 0.
struct ThresholdWindow {
  double alpha = 0.0;
  double beta = 0.0;
  std::unordered_set<std::size_t> excluded;

  bool contains(double e) const {
    return e >= alpha * (1.0 - kWindowSlack) && e <= beta * (1.0 + kWindowSlack);
  }
};

/// Sparse view of a 1-D spectrum: the found coefficients plus energy
/// bookkeeping. residual_energy tracks total_energy minus the energy of
/// the entries; both are nonnegative. std::map keeps iteration (and so
/// serialization) deterministic.
struct SparseSpectrum {
  std::size_t n = 0;
  std::map<std::size_t, Complex> entries;
  double residual_energy = 0.0;
  double total_energy = 0.0;

  double retained_energy() const;
};

/// Embed the entries into a zero-filled length-n vector.
ComplexVec densify(const SparseSpectrum& s);

/// Row/column coordinate of a 2-D spectrum entry. Flattened key is
/// row * n + col; the search modules run over that flattened space.
struct PairIndex {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

struct SparseMatrixSpectrum {
  std::size_t n = 0;  // side length; entries live in [0,n) x [0,n)
  std::map<PairIndex, Complex> entries;
  double residual_energy = 0.0;
  double total_energy = 0.0;

  double retained_energy() const;
};

ComplexMatrix densify(const SparseMatrixSpectrum& s);

}  // namespace qdft
