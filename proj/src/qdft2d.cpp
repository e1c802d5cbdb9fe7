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

#include "qdft/qdft2d.hpp"

#include <stdexcept>

#include "qdft/dft.hpp"
#include "qdft/util.hpp"

namespace qdft {

namespace {

void require_square_supported(const ComplexMatrix& m, const char* who) {
  if (!m.square() || m.rows == 0) {
    throw std::domain_error(std::string(who) + ": nonempty square matrix required");
  }
  if (m.rows > kMaxImageSide) {
    throw std::domain_error(std::string(who) +
                            ": side exceeds the supported pair-search space");
  }
}

// Flattened coefficient table of W * input: key row * n + col.
SpectrumTable column_transform_table(const ComplexMatrix& input) {
  const std::size_t n = input.rows;
  ComplexVec flat(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexVec g = dft_1d(matrix_column(input, j));
    for (std::size_t i = 0; i < n; ++i) flat[i * n + j] = g[i];
  }
  return SpectrumTable::from_coefficients(std::move(flat));
}

SparseMatrixSpectrum to_pairs(const SparseSpectrum& s, std::size_t n) {
  SparseMatrixSpectrum out;
  out.n = n;
  out.residual_energy = s.residual_energy;
  out.total_energy = s.total_energy;
  for (const auto& [k, c] : s.entries) {
    out.entries.emplace(PairIndex{k / n, k % n}, c);
  }
  return out;
}

}  // namespace

SparseMatrixSpectrum pair_search_pass(const ComplexMatrix& columns, double epsilon_pass,
                                      RngStream& rng, QueryLedger& ledger,
                                      const SearchOptions& opt,
                                      std::vector<TraceRow>* trace) {
  require_square_supported(columns, "pair_search_pass");
  const std::size_t n = columns.rows;
  const SpectrumTable table = column_transform_table(columns);
  QdftRun run = extract_sparse_spectrum(table, epsilon_pass, rng, opt);
  ledger.merge(run.ledger);
  if (trace != nullptr) {
    trace->insert(trace->end(), run.trace.begin(), run.trace.end());
  }
  return to_pairs(run.spectrum, n);
}

Qdft2dRun qdft_2d(const ComplexMatrix& f, double epsilon, RngStream& rng,
                  const Search2dOptions& opt) {
  require_square_supported(f, "qdft_2d");
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::domain_error("qdft_2d: epsilon must lie strictly in (0, 1)");
  }
  if (!(opt.epsilon_split > 0.0) || !(opt.epsilon_split < 1.0)) {
    throw std::domain_error("qdft_2d: epsilon split must lie strictly in (0, 1)");
  }
  const std::size_t n = f.rows;
  const double eps1 = epsilon * opt.epsilon_split;
  const double eps2 = epsilon * (1.0 - opt.epsilon_split);

  Qdft2dRun run;

  // Pass 1: G = W F along the columns.
  if (opt.exhaustive_first_pass) {
    const SpectrumTable table = column_transform_table(f);
    run.column_pass.n = n;
    run.column_pass.total_energy = table.total_energy();
    run.column_pass.residual_energy = 0.0;
    for (std::size_t k = 0; k < n * n; ++k) {
      run.column_pass.entries.emplace(PairIndex{k / n, k % n}, table.coeff(k));
    }
  } else {
    run.column_pass = pair_search_pass(f, eps1, rng, run.ledger, opt.search,
                                       &run.trace_pass1);
  }

  // Pass 2: C = G W, searched as W G^T; entry (a, b) there is C[b][a].
  const ComplexMatrix g_dense = densify(run.column_pass);
  std::vector<TraceRow> raw_trace2;
  const SparseMatrixSpectrum ct = pair_search_pass(transpose(g_dense), eps2, rng,
                                                   run.ledger, opt.search, &raw_trace2);

  run.spectrum.n = n;
  for (const auto& [p, c] : ct.entries) {
    run.spectrum.entries.emplace(PairIndex{p.col, p.row}, c);
  }
  run.trace_pass2.reserve(raw_trace2.size());
  for (TraceRow row : raw_trace2) {
    const std::size_t a = row.index / n;
    const std::size_t b = row.index % n;
    row.index = b * n + a;
    run.trace_pass2.push_back(row);
  }

  // Energy is accounted against the full input spectrum, so the final
  // residual is what both passes together discarded.
  run.spectrum.total_energy = run.column_pass.total_energy;
  const double residual = run.spectrum.total_energy - run.spectrum.retained_energy();
  run.spectrum.residual_energy = residual > 0.0 ? residual : 0.0;
  return run;
}

}  // namespace qdft
