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
#include <cstdint>
#include <optional>
#include <vector>

#include "qdft/query_ledger.hpp"
#include "qdft/rng.hpp"
#include "qdft/sparse_spectrum.hpp"
#include "qdft/types.hpp"

namespace qdft {

/// Classical table of transform coefficients: the stored-row database and
/// the inner-product oracle rolled into one, evaluated up front so each
/// predicate query is O(1). The search never touches coefficients except
/// through this table, which keeps the simulated oracle and the classical
/// verification consistent by construction.
class SpectrumTable {
 public:
  static SpectrumTable from_signal(const ComplexVec& x);
  static SpectrumTable from_coefficients(ComplexVec coeffs);

  std::size_t size() const { return coeffs_.size(); }
  const Complex& coeff(std::size_t i) const { return coeffs_[i]; }
  double energy_at(std::size_t i) const { return energies_[i]; }
  double total_energy() const { return total_; }

 private:
  ComplexVec coeffs_;
  std::vector<double> energies_;
  double total_ = 0.0;
};

struct SearchOptions {
  /// Mark the window without excluding already-found indices; the outer
  /// loop then discards repeats classically. Off by default: exclusion
  /// keeps the marked set fresh and guarantees progress per round.
  bool literal_oracle = false;

  /// Per-search Grover iteration cap = ceil(budget_multiplier * sqrt(n)).
  double budget_multiplier = 3.0;
};

/// One accepted outer round: the window that was searched and what it
/// yielded. Rows are in acceptance order.
struct TraceRow {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t index = 0;
  Complex coeff;
  double coeff_energy = 0.0;
};

struct QdftRun {
  SparseSpectrum spectrum;
  QueryLedger ledger;
  std::vector<TraceRow> trace;
};

/// One randomized search for an index whose coefficient energy lies in
/// the window (and is not excluded). Iteration counts are drawn uniformly
/// below a bound m that starts at 1, grows by a factor 6/5 after each
/// failed round, and is capped at sqrt(n) -- the standard schedule for an
/// unknown number of marked indices. Every candidate is verified
/// classically against the table before being returned. Returns nothing
/// once `budget` Grover iterations have been spent: with an empty window
/// the schedule alone would never halt. budget >= 1.
std::optional<std::size_t> find_in_window(const SpectrumTable& table,
                                          const ThresholdWindow& w, RngStream& rng,
                                          QueryLedger& ledger, std::uint64_t budget);

std::optional<std::size_t> find_in_window(const ComplexVec& x, const ThresholdWindow& w,
                                          RngStream& rng, QueryLedger& ledger,
                                          std::uint64_t budget);

/// Sparse extraction driver over an arbitrary coefficient table. Repeats:
/// window [residual/(n - found), residual], search, verify, subtract the
/// accepted coefficient's energy from the residual; stops once
/// residual / total < epsilon (or the residual falls below a 1e-12
/// relative floor). epsilon must lie strictly in (0, 1).
QdftRun extract_sparse_spectrum(const SpectrumTable& table, double epsilon,
                                RngStream& rng, const SearchOptions& opt = {});

/// Sparse 1-D transform of x: extract_sparse_spectrum over the spectrum
/// of x. A zero signal yields an empty spectrum and no search work.
QdftRun qdft_1d(const ComplexVec& x, double epsilon, RngStream& rng,
                const SearchOptions& opt = {});

/// Inverse-transform the densified entries back to the signal domain.
/// The energy of x - reconstruct(qdft_1d(x)) equals the run's residual.
ComplexVec reconstruct(const SparseSpectrum& s);

}  // namespace qdft
