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

// Command line front end. Subcommands:
//   dft1d        sparse 1-D transform of a CSV signal
//   dft2d        sparse 2-D transform of a PGM image (optionally tiled)
//   conv         circular convolution through the sparse pipeline
//   bench        query-count statistics over planted instances
//   grover-check closed-form self test of the search iteration
//
// Exit codes: 0 success, 1 I/O or parse error, 2 invalid configuration,
// 3 internal invariant violation.

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "qdft/amplitude.hpp"
#include "qdft/convolution.hpp"
#include "qdft/qdft1d.hpp"
#include "qdft/qdft2d.hpp"
#include "qdft/report.hpp"
#include "qdft/rng.hpp"
#include "qdft/signal_io.hpp"
#include "qdft/signals.hpp"

namespace {

using namespace qdft;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

struct CliOptions {
  RunConfig cfg;
  std::string format_name = "json";
  std::size_t trials = 100;
  std::vector<std::size_t> sizes;
  std::size_t planted = 4;
  double planted_fraction = 0.999;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input '" + path + "'");
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output '" + path + "'");
  out << text;
  if (!out) throw ParseError("write to '" + path + "' failed");
}

void finish_report(RunReport rep, const CliOptions& o, double seconds) {
  rep.wall_clock_seconds = seconds;
  write_output(o.cfg.output, emit_report(rep, o.cfg.format));
  std::fprintf(stderr, "wall_clock_seconds=%.3f\n", seconds);
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions opt;
  opt.literal_oracle = cfg.literal_oracle;
  opt.budget_multiplier = cfg.budget_multiplier;
  return opt;
}

int run_dft1d(const CliOptions& o) {
  auto in = open_input(o.cfg.inputs.at(0));
  const ComplexVec x = parse_signal_csv(in);
  Timer timer;
  RngStream rng(o.cfg.seed);
  const QdftRun run = qdft_1d(x, o.cfg.epsilon, rng, search_options(o.cfg));
  finish_report(make_report(o.cfg, run), o, timer.seconds());
  return kExitOk;
}

// Tiled 2-D run: each block is transformed independently with its own
// child stream, and its entries land at the block's position in the
// image, the usual in-place layout of blocked transform coefficients.
Qdft2dRun run_blocked_2d(const ComplexMatrix& img, const CliOptions& o) {
  const std::size_t side = img.rows;
  const std::size_t b = o.cfg.block;
  if (b == 0 || b > side || side % b != 0) {
    throw std::domain_error("block must divide the image side");
  }
  Search2dOptions opt;
  opt.search = search_options(o.cfg);
  opt.exhaustive_first_pass = o.cfg.exhaustive_2d;

  RngStream rng(o.cfg.seed);
  Qdft2dRun all;
  all.spectrum.n = side;
  all.column_pass.n = side;
  const auto relabel = [&](const std::vector<TraceRow>& rows, std::size_t r0,
                           std::size_t c0, std::vector<TraceRow>& out) {
    for (TraceRow row : rows) {
      const std::size_t r = row.index / b;
      const std::size_t c = row.index % b;
      row.index = (r0 + r) * side + (c0 + c);
      out.push_back(row);
    }
  };
  for (std::size_t bi = 0; bi < side / b; ++bi) {
    for (std::size_t bj = 0; bj < side / b; ++bj) {
      ComplexMatrix tile(b, b);
      for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < b; ++c) tile(r, c) = img(bi * b + r, bj * b + c);
      }
      RngStream child = rng.spawn();
      const Qdft2dRun run = qdft_2d(tile, o.cfg.epsilon, child, opt);
      for (const auto& [key, value] : run.spectrum.entries) {
        all.spectrum.entries.emplace(PairIndex{bi * b + key.row, bj * b + key.col},
                                     value);
      }
      for (const auto& [key, value] : run.column_pass.entries) {
        all.column_pass.entries.emplace(PairIndex{bi * b + key.row, bj * b + key.col},
                                        value);
      }
      all.spectrum.residual_energy += run.spectrum.residual_energy;
      all.spectrum.total_energy += run.spectrum.total_energy;
      all.column_pass.residual_energy += run.column_pass.residual_energy;
      all.column_pass.total_energy += run.column_pass.total_energy;
      all.ledger.merge(run.ledger);
      relabel(run.trace_pass1, bi * b, bj * b, all.trace_pass1);
      relabel(run.trace_pass2, bi * b, bj * b, all.trace_pass2);
    }
  }
  return all;
}

int run_dft2d(const CliOptions& o) {
  auto in = open_input(o.cfg.inputs.at(0));
  const ComplexMatrix img = load_pgm(in);
  Timer timer;
  Qdft2dRun run;
  if (o.cfg.block != 0) {
    run = run_blocked_2d(img, o);
  } else {
    Search2dOptions opt;
    opt.search = search_options(o.cfg);
    opt.exhaustive_first_pass = o.cfg.exhaustive_2d;
    RngStream rng(o.cfg.seed);
    run = qdft_2d(img, o.cfg.epsilon, rng, opt);
  }
  finish_report(make_report(o.cfg, run), o, timer.seconds());
  return kExitOk;
}

int run_conv(const CliOptions& o) {
  auto in_u = open_input(o.cfg.inputs.at(0));
  const ComplexVec u = parse_signal_csv(in_u);
  auto in_v = open_input(o.cfg.inputs.at(1));
  const ComplexVec v = parse_signal_csv(in_v);
  Timer timer;
  RngStream rng(o.cfg.seed);
  ConvolutionOptions opt;
  opt.search = search_options(o.cfg);
  const ConvolutionReport conv = conv_via_qdft(u, v, o.cfg.epsilon, rng, opt);
  finish_report(make_report(o.cfg, conv, conv.w_hat.size()), o, timer.seconds());
  return kExitOk;
}

// Shortest round-trip decimal form, -0 normalized.
std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

// Query statistics over planted sparse instances. One row per size:
// every trial builds a fresh signal with `planted` dominant coefficients
// from its own stream (base seed + trial index) and runs the sparse
// transform; the classical column n*log2(n) is the usual unit count of a
// full fast transform, for side-by-side scaling plots.
int run_bench(const CliOptions& o) {
  if (o.sizes.empty()) throw std::domain_error("bench: --sizes must not be empty");
  if (o.trials == 0) throw std::domain_error("bench: --trials must be positive");

  std::vector<std::size_t> sizes = o.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::string out;
  out += "n,trials,mean_grover_iterations,stddev_grover_iterations,mean_measurements,"
         "mean_subroutine_calls,n_log2_n\n";
  for (const std::size_t n : sizes) {
    std::vector<double> iters;
    double sum_meas = 0.0;
    double sum_calls = 0.0;
    iters.reserve(o.trials);
    for (std::size_t t = 0; t < o.trials; ++t) {
      RngStream rng(o.cfg.seed + t);
      const ComplexVec x = planted_spectrum_signal(n, o.planted, o.planted_fraction, rng);
      const QdftRun run = qdft_1d(x, o.cfg.epsilon, rng, search_options(o.cfg));
      iters.push_back(static_cast<double>(run.ledger.grover_iterations));
      sum_meas += static_cast<double>(run.ledger.measurements);
      sum_calls += static_cast<double>(run.ledger.subroutine_calls);
    }
    double mean = 0.0;
    for (const double v : iters) mean += v;
    mean /= static_cast<double>(iters.size());
    double var = 0.0;
    for (const double v : iters) var += (v - mean) * (v - mean);
    const double stddev =
        iters.size() > 1 ? std::sqrt(var / static_cast<double>(iters.size() - 1)) : 0.0;
    const double nd = static_cast<double>(n);
    out += std::to_string(n) + "," + std::to_string(o.trials) + "," + fmt_double(mean) +
           "," + fmt_double(stddev) + "," +
           fmt_double(sum_meas / static_cast<double>(o.trials)) + "," +
           fmt_double(sum_calls / static_cast<double>(o.trials)) + "," +
           fmt_double(nd * std::log2(nd)) + "\n";
  }
  write_output(o.cfg.output, out);
  return kExitOk;
}

// Self test: simulated marked probability against the closed form, per
// size, sweeping the marked count and up to 50 iterations.
int run_grover_check(const CliOptions& o) {
  std::vector<std::size_t> sizes = o.sizes;
  if (sizes.empty()) sizes = {2, 4, 8, 16, 32, 64, 128, 256};
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  constexpr std::uint64_t kMaxJ = 50;
  constexpr double kTolerance = 1e-12;
  double worst = 0.0;
  std::string out = "n,max_deviation\n";
  for (const std::size_t n : sizes) {
    const double dev = closed_form_max_deviation(n, kMaxJ);
    worst = std::max(worst, dev);
    out += std::to_string(n) + "," + fmt_double(dev) + "\n";
  }
  out += "# max_deviation=" + fmt_double(worst) + "\n";
  write_output(o.cfg.output, out);
  if (worst > kTolerance) {
    std::fprintf(stderr, "grover-check: deviation %g exceeds %g\n", worst, kTolerance);
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions o;
  CLI::App app{"Sparse discrete Fourier transforms via simulated amplitude search"};
  app.require_subcommand(1);

  const auto add_common = [&o](CLI::App* sub, bool with_epsilon) {
    sub->add_option("--seed", o.cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--output", o.cfg.output, "Output path (default stdout)");
    if (with_epsilon) {
      sub->add_option("--epsilon", o.cfg.epsilon, "Residual energy fraction to leave")
          ->capture_default_str();
      sub->add_option("--budget-multiplier", o.cfg.budget_multiplier,
                      "Per-search iteration cap = ceil(multiplier * sqrt(n))")
          ->capture_default_str();
    }
  };
  const auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format_name, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* dft1d = app.add_subcommand("dft1d", "Sparse 1-D transform of a CSV signal");
  dft1d->add_option("--input", o.cfg.inputs, "Signal CSV path")
      ->required()
      ->expected(1);
  add_common(dft1d, true);
  add_format(dft1d);
  dft1d->add_flag("--literal-oracle", o.cfg.literal_oracle,
                  "Window-only marking; repeats are discarded classically");

  CLI::App* dft2d = app.add_subcommand("dft2d", "Sparse 2-D transform of a PGM image");
  dft2d->add_option("--input", o.cfg.inputs, "Image PGM path")->required()->expected(1);
  add_common(dft2d, true);
  add_format(dft2d);
  dft2d->add_flag("--literal-oracle", o.cfg.literal_oracle,
                  "Window-only marking; repeats are discarded classically");
  dft2d->add_flag("--exhaustive-2d", o.cfg.exhaustive_2d,
                  "Compute the first pass exactly instead of searching");
  dft2d->add_option("--block", o.cfg.block,
                    "Tile the image into block x block pieces (0 = whole image)")
      ->capture_default_str();

  CLI::App* conv = app.add_subcommand("conv", "Circular convolution of two CSV signals");
  conv->add_option("--input", o.cfg.inputs, "Two signal CSV paths")
      ->required()
      ->expected(2);
  add_common(conv, true);
  add_format(conv);
  conv->add_flag("--literal-oracle", o.cfg.literal_oracle,
                 "Window-only marking; repeats are discarded classically");

  CLI::App* bench =
      app.add_subcommand("bench", "Query statistics over planted sparse instances");
  bench->add_option("--sizes", o.sizes, "Signal lengths to benchmark")
      ->required()
      ->delimiter(',');
  bench->add_option("--trials", o.trials, "Seeds per size")->capture_default_str();
  bench->add_option("--planted", o.planted, "Dominant coefficients per instance")
      ->capture_default_str();
  bench->add_option("--fraction", o.planted_fraction,
                    "Energy fraction carried by the dominant coefficients")
      ->capture_default_str();
  add_common(bench, true);

  CLI::App* check =
      app.add_subcommand("grover-check", "Closed-form self test of the search iteration");
  check->add_option("--sizes", o.sizes, "Index-space sizes (default 2,4,...,256)")
      ->delimiter(',');
  check->add_option("--output", o.cfg.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (dft1d->parsed()) {
      o.cfg.subcommand = "dft1d";
      o.cfg.format = o.format_name == "csv" ? ReportFormat::csv : ReportFormat::json;
      return run_dft1d(o);
    }
    if (dft2d->parsed()) {
      o.cfg.subcommand = "dft2d";
      o.cfg.format = o.format_name == "csv" ? ReportFormat::csv : ReportFormat::json;
      return run_dft2d(o);
    }
    if (conv->parsed()) {
      o.cfg.subcommand = "conv";
      o.cfg.format = o.format_name == "csv" ? ReportFormat::csv : ReportFormat::json;
      return run_conv(o);
    }
    if (bench->parsed()) {
      o.cfg.subcommand = "bench";
      return run_bench(o);
    }
    o.cfg.subcommand = "grover-check";
    return run_grover_check(o);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
}
