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
#include <vector>

#include "qdft/qdft1d.hpp"
#include "qdft/sparse_spectrum.hpp"
#include "qdft/types.hpp"

namespace qdft {

/// One search pass over all n^2 (row, column) pairs of W * input: the 1-D
/// outer loop verbatim, with the index space flattened to row * n + col
/// and coefficient energies |row_i(W) . column_j(input)|^2. Entries come
/// back keyed by their PairIndex. Counters accumulate into the caller's
/// ledger; an optional trace records accepted rounds with flattened keys.
SparseMatrixSpectrum pair_search_pass(const ComplexMatrix& columns, double epsilon_pass,
                                      RngStream& rng, QueryLedger& ledger,
                                      const SearchOptions& opt = {},
                                      std::vector<TraceRow>* trace = nullptr);

struct Search2dOptions {
  SearchOptions search;

  /// Compute the first pass exactly with the reference transform instead
  /// of searching. Debug aid for separating the two passes' effects.
  bool exhaustive_first_pass = false;

  /// Fraction of epsilon given to pass 1; the remainder goes to pass 2.
  double epsilon_split = 0.5;
};

struct Qdft2dRun {
  /// Entries of the full 2-D transform C = W F W found by pass 2.
  SparseMatrixSpectrum spectrum;

  /// Pass-1 entries (transform along columns only), kept for reporting.
  SparseMatrixSpectrum column_pass;

  QueryLedger ledger;
  std::vector<TraceRow> trace_pass1;
  std::vector<TraceRow> trace_pass2;  // keys already in output orientation
};

/// Sparse 2-D transform. Pass 1 extracts G = W F, the retained entries
/// are densified (missing entries become zero), and pass 2 computes
/// C = G W by searching over W G^T: since W is symmetric,
/// (W G^T)[a][b] = row_a(W) . row_b(G) = C[b][a], so pass-2 entries are
/// transposed back into C's orientation on return.
Qdft2dRun qdft_2d(const ComplexMatrix& f, double epsilon, RngStream& rng,
                  const Search2dOptions& opt = {});

/// Largest supported side length: the flattened pair space n^2 must fit
/// the dense amplitude cutoff.
inline constexpr std::size_t kMaxImageSide = 2048;

}  // namespace qdft
