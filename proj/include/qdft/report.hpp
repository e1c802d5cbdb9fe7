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
#include <string>
#include <vector>

#include "qdft/convolution.hpp"
#include "qdft/qdft1d.hpp"
#include "qdft/qdft2d.hpp"
#include "qdft/query_ledger.hpp"
#include "qdft/types.hpp"

namespace qdft {

enum class ReportFormat { json, csv };

/// Echo of the effective run parameters; every report carries one so a
/// result file alone is enough to reproduce the run.
struct RunConfig {
  std::string subcommand;
  double epsilon = 0.01;
  std::uint64_t seed = 1;
  std::vector<std::string> inputs;
  std::string output;  // empty = stdout
  ReportFormat format = ReportFormat::json;
  bool literal_oracle = false;
  bool exhaustive_2d = false;
  double budget_multiplier = 3.0;
  std::size_t block = 0;  // 0 = transform the whole image at once
};

struct ReportEntry {
  bool is_pair = false;
  std::size_t index = 0;  // 1-D coefficient index
  std::size_t row = 0;    // 2-D coordinates when is_pair
  std::size_t col = 0;
  Complex value;
  double energy = 0.0;
};

struct TraceRecord {
  int pass = 0;  // 0 for 1-D runs, 1 or 2 for the 2-D passes
  double alpha = 0.0;
  double beta = 0.0;
  bool is_pair = false;
  std::size_t index = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Everything a run wants to say. Serialization is deterministic: fixed
/// key order, shortest round-trip number formatting, entries sorted by
/// index. wall_clock_seconds is surfaced on stderr by the CLI and is
/// deliberately never serialized, so identical configs and seeds yield
/// byte-identical report files.
struct RunReport {
  RunConfig config;
  std::size_t n = 0;
  std::vector<ReportEntry> entries;
  std::size_t ns = 0;
  double residual_energy = 0.0;
  double total_energy = 0.0;
  QueryLedger ledger;
  std::vector<TraceRecord> trace;

  // 2-D runs: pass-1 summary.
  std::optional<std::size_t> column_pass_ns;
  std::optional<double> column_pass_residual;
  std::optional<double> column_pass_total;

  // Convolution runs.
  std::optional<ComplexVec> w_hat;
  std::optional<ComplexVec> w_exact;
  std::optional<double> relative_l2_error;
  std::optional<QueryLedger> ledger_u;
  std::optional<QueryLedger> ledger_v;

  double wall_clock_seconds = 0.0;
};

RunReport make_report(const RunConfig& cfg, const QdftRun& run);
RunReport make_report(const RunConfig& cfg, const Qdft2dRun& run);
RunReport make_report(const RunConfig& cfg, const ConvolutionReport& conv, std::size_t n);

/// Render the report. JSON: one object, stable key order. CSV: '#'
/// preamble with config and ledger, then "index,re,im,energy" rows (pair
/// indices render as "row:col").
std::string emit_report(const RunReport& r, ReportFormat format);

}  // namespace qdft
