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
#include <optional>
#include <utility>

#include "qdft/qdft1d.hpp"
#include "qdft/query_ledger.hpp"
#include "qdft/rng.hpp"
#include "qdft/sparse_spectrum.hpp"
#include "qdft/types.hpp"

namespace qdft {

/// Exact circular convolution w_k = sum_j u_j * v_{(k-j) mod n}, O(n^2).
/// Lengths must match (pad first).
ComplexVec conv_direct(const ComplexVec& u, const ComplexVec& v);

/// Zero-extend the shorter vector to the longer one's length.
std::pair<ComplexVec, ComplexVec> pad_to_common(ComplexVec u, ComplexVec v);

/// Pointwise product of two sparse spectra at the indices both carry,
/// scaled by sqrt(n): under the unitary transform convention the
/// convolution theorem reads dft(u conv v) = sqrt(n) * dft(u) . dft(v),
/// and the factor belongs here so reconstruct() needs no special casing.
/// The product's total_energy is its own retained energy (the true total
/// of the unobserved exact product is unknown), so residual is zero.
SparseSpectrum spectrum_product(const SparseSpectrum& cu, const SparseSpectrum& cv);

struct ConvolutionOptions {
  /// Also run the exact O(n^2) path and report the relative error.
  bool compute_exact = true;
  SearchOptions search;
};

struct ConvolutionReport {
  ComplexVec w_hat;
  std::optional<ComplexVec> w_exact;
  std::optional<double> relative_l2_error;
  SparseSpectrum product;
  QueryLedger ledger_u;
  QueryLedger ledger_v;
};

/// Convolution estimate through the sparse-transform pipeline: pad both
/// signals, extract each spectrum at `epsilon`, multiply the spectra
/// where both were found, inverse-transform. The two extractions run on
/// independent child streams of rng. A zero operand short-circuits to a
/// zero estimate with zero reported error.
ConvolutionReport conv_via_qdft(const ComplexVec& u, const ComplexVec& v, double epsilon,
                                RngStream& rng, const ConvolutionOptions& opt = {});

}  // namespace qdft
