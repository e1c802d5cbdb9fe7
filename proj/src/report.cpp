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

#include "qdft/report.hpp"

#include <array>
#include <charconv>
#include <string>
#include <system_error>

#include "json.hpp"
#include "qdft/util.hpp"

namespace qdft {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal form; -0 normalizes to 0 so sign noise in
// a zero imaginary part cannot break byte-identical output.
std::string fmt(double v) {
  if (v == 0.0) v = 0.0;
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  detail::internal_check(ec == std::errc(), "fmt: to_chars failed");
  return std::string(buf.data(), ptr);
}

double jnum(double v) { return v == 0.0 ? 0.0 : v; }

const char* format_name(ReportFormat f) {
  return f == ReportFormat::json ? "json" : "csv";
}

ordered_json config_json(const RunConfig& c) {
  return ordered_json{
      {"subcommand", c.subcommand},
      {"epsilon", jnum(c.epsilon)},
      {"seed", c.seed},
      {"inputs", c.inputs},
      {"output", c.output},
      {"format", format_name(c.format)},
      {"literal_oracle", c.literal_oracle},
      {"exhaustive_2d", c.exhaustive_2d},
      {"budget_multiplier", jnum(c.budget_multiplier)},
      {"block", c.block},
  };
}

ordered_json ledger_json(const QueryLedger& l) {
  return ordered_json{
      {"grover_iterations", l.grover_iterations},
      {"measurements", l.measurements},
      {"subroutine_calls", l.subroutine_calls},
      {"classical_verifications", l.classical_verifications},
      {"budget_exhaustions", l.budget_exhaustions},
  };
}

ordered_json entry_json(const ReportEntry& e) {
  ordered_json j;
  if (e.is_pair) {
    j["row"] = e.row;
    j["col"] = e.col;
  } else {
    j["index"] = e.index;
  }
  j["re"] = jnum(e.value.real());
  j["im"] = jnum(e.value.imag());
  j["energy"] = jnum(e.energy);
  return j;
}

ordered_json trace_json(const TraceRecord& t) {
  ordered_json j;
  j["pass"] = t.pass;
  j["alpha"] = jnum(t.alpha);
  j["beta"] = jnum(t.beta);
  if (t.is_pair) {
    j["row"] = t.row;
    j["col"] = t.col;
  } else {
    j["index"] = t.index;
  }
  return j;
}

ordered_json signal_json(const ComplexVec& x) {
  ordered_json arr = ordered_json::array();
  for (const Complex& v : x) {
    arr.push_back(ordered_json::array({jnum(v.real()), jnum(v.imag())}));
  }
  return arr;
}

std::string entry_key(const ReportEntry& e) {
  if (e.is_pair) return std::to_string(e.row) + ":" + std::to_string(e.col);
  return std::to_string(e.index);
}

std::string trace_key(const TraceRecord& t) {
  if (t.is_pair) return std::to_string(t.row) + ":" + std::to_string(t.col);
  return std::to_string(t.index);
}

std::string join_inputs(const std::vector<std::string>& inputs) {
  std::string out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ';';
    out += inputs[i];
  }
  return out;
}

void append_ledger_csv(std::string& out, const std::string& prefix, const QueryLedger& l) {
  out += "# " + prefix + "grover_iterations=" + std::to_string(l.grover_iterations) + "\n";
  out += "# " + prefix + "measurements=" + std::to_string(l.measurements) + "\n";
  out += "# " + prefix + "subroutine_calls=" + std::to_string(l.subroutine_calls) + "\n";
  out += "# " + prefix + "classical_verifications=" +
         std::to_string(l.classical_verifications) + "\n";
  out += "# " + prefix + "budget_exhaustions=" + std::to_string(l.budget_exhaustions) +
         "\n";
}

void append_signal_csv(std::string& out, const char* name, const ComplexVec& x) {
  out += "\n# ";
  out += name;
  out += "\nindex,re,im\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out += std::to_string(i) + "," + fmt(x[i].real()) + "," + fmt(x[i].imag()) + "\n";
  }
}

}  // namespace

RunReport make_report(const RunConfig& cfg, const QdftRun& run) {
  RunReport r;
  r.config = cfg;
  r.n = run.spectrum.n;
  for (const auto& [index, value] : run.spectrum.entries) {
    ReportEntry e;
    e.index = index;
    e.value = value;
    e.energy = std::norm(value);
    r.entries.push_back(e);
  }
  r.ns = r.entries.size();
  r.residual_energy = run.spectrum.residual_energy;
  r.total_energy = run.spectrum.total_energy;
  r.ledger = run.ledger;
  for (const TraceRow& row : run.trace) {
    TraceRecord t;
    t.pass = 0;
    t.alpha = row.alpha;
    t.beta = row.beta;
    t.index = row.index;
    r.trace.push_back(t);
  }
  return r;
}

RunReport make_report(const RunConfig& cfg, const Qdft2dRun& run) {
  RunReport r;
  r.config = cfg;
  r.n = run.spectrum.n;
  for (const auto& [key, value] : run.spectrum.entries) {
    ReportEntry e;
    e.is_pair = true;
    e.row = key.row;
    e.col = key.col;
    e.value = value;
    e.energy = std::norm(value);
    r.entries.push_back(e);
  }
  r.ns = r.entries.size();
  r.residual_energy = run.spectrum.residual_energy;
  r.total_energy = run.spectrum.total_energy;
  r.ledger = run.ledger;

  const std::size_t n = run.spectrum.n;
  const auto append_pass = [&](const std::vector<TraceRow>& rows, int pass) {
    for (const TraceRow& row : rows) {
      TraceRecord t;
      t.pass = pass;
      t.alpha = row.alpha;
      t.beta = row.beta;
      t.is_pair = true;
      t.row = row.index / n;
      t.col = row.index % n;
      r.trace.push_back(t);
    }
  };
  append_pass(run.trace_pass1, 1);
  append_pass(run.trace_pass2, 2);

  r.column_pass_ns = run.column_pass.entries.size();
  r.column_pass_residual = run.column_pass.residual_energy;
  r.column_pass_total = run.column_pass.total_energy;
  return r;
}

RunReport make_report(const RunConfig& cfg, const ConvolutionReport& conv, std::size_t n) {
  RunReport r;
  r.config = cfg;
  r.n = n;
  for (const auto& [index, value] : conv.product.entries) {
    ReportEntry e;
    e.index = index;
    e.value = value;
    e.energy = std::norm(value);
    r.entries.push_back(e);
  }
  r.ns = r.entries.size();
  r.residual_energy = conv.product.residual_energy;
  r.total_energy = conv.product.total_energy;
  r.ledger = conv.ledger_u;
  r.ledger.merge(conv.ledger_v);
  r.w_hat = conv.w_hat;
  r.w_exact = conv.w_exact;
  r.relative_l2_error = conv.relative_l2_error;
  r.ledger_u = conv.ledger_u;
  r.ledger_v = conv.ledger_v;
  return r;
}

std::string emit_report(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["config"] = config_json(r.config);
    j["n"] = r.n;
    ordered_json entries = ordered_json::array();
    for (const ReportEntry& e : r.entries) entries.push_back(entry_json(e));
    j["entries"] = entries;
    j["ns"] = r.ns;
    j["residual_energy"] = jnum(r.residual_energy);
    j["total_energy"] = jnum(r.total_energy);
    j["ledger"] = ledger_json(r.ledger);
    ordered_json trace = ordered_json::array();
    for (const TraceRecord& t : r.trace) trace.push_back(trace_json(t));
    j["trace"] = trace;

    if (r.column_pass_ns) {
      ordered_json cp;
      cp["ns"] = *r.column_pass_ns;
      cp["residual_energy"] = jnum(r.column_pass_residual.value_or(0.0));
      cp["total_energy"] = jnum(r.column_pass_total.value_or(0.0));
      j["column_pass"] = cp;
    }

    if (r.w_hat) {
      j["w_hat"] = signal_json(*r.w_hat);
      if (r.w_exact) j["w_exact"] = signal_json(*r.w_exact);
      if (r.relative_l2_error) j["relative_l2_error"] = jnum(*r.relative_l2_error);
      if (r.ledger_u) j["ledger_u"] = ledger_json(*r.ledger_u);
      if (r.ledger_v) j["ledger_v"] = ledger_json(*r.ledger_v);
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  out += "# qdft report\n";
  out += "# subcommand=" + r.config.subcommand + "\n";
  out += "# epsilon=" + fmt(r.config.epsilon) + "\n";
  out += "# seed=" + std::to_string(r.config.seed) + "\n";
  out += "# inputs=" + join_inputs(r.config.inputs) + "\n";
  out += "# output=" + r.config.output + "\n";
  out += std::string("# format=") + format_name(r.config.format) + "\n";
  out += std::string("# literal_oracle=") + (r.config.literal_oracle ? "1" : "0") + "\n";
  out += std::string("# exhaustive_2d=") + (r.config.exhaustive_2d ? "1" : "0") + "\n";
  out += "# budget_multiplier=" + fmt(r.config.budget_multiplier) + "\n";
  out += "# block=" + std::to_string(r.config.block) + "\n";
  out += "# n=" + std::to_string(r.n) + "\n";
  out += "# ns=" + std::to_string(r.ns) + "\n";
  out += "# residual_energy=" + fmt(r.residual_energy) + "\n";
  out += "# total_energy=" + fmt(r.total_energy) + "\n";
  append_ledger_csv(out, "", r.ledger);
  if (r.column_pass_ns) {
    out += "# column_pass_ns=" + std::to_string(*r.column_pass_ns) + "\n";
    out += "# column_pass_residual_energy=" + fmt(r.column_pass_residual.value_or(0.0)) +
           "\n";
    out +=
        "# column_pass_total_energy=" + fmt(r.column_pass_total.value_or(0.0)) + "\n";
  }
  if (r.relative_l2_error) {
    out += "# relative_l2_error=" + fmt(*r.relative_l2_error) + "\n";
  }
  if (r.ledger_u) append_ledger_csv(out, "u_", *r.ledger_u);
  if (r.ledger_v) append_ledger_csv(out, "v_", *r.ledger_v);

  out += "index,re,im,energy\n";
  for (const ReportEntry& e : r.entries) {
    out += entry_key(e) + "," + fmt(e.value.real()) + "," + fmt(e.value.imag()) + "," +
           fmt(e.energy) + "\n";
  }
  if (!r.trace.empty()) {
    out += "\n# trace\npass,alpha,beta,index\n";
    for (const TraceRecord& t : r.trace) {
      out += std::to_string(t.pass) + "," + fmt(t.alpha) + "," + fmt(t.beta) + "," +
             trace_key(t) + "\n";
    }
  }
  if (r.w_hat) {
    append_signal_csv(out, "w_hat", *r.w_hat);
    if (r.w_exact) append_signal_csv(out, "w_exact", *r.w_exact);
  }
  return out;
}

}  // namespace qdft
