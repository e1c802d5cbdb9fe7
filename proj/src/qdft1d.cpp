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

#include "qdft/qdft1d.hpp"

#include <cmath>
#include <stdexcept>

#include "qdft/amplitude.hpp"
#include "qdft/dft.hpp"
#include "qdft/util.hpp"

namespace qdft {

namespace {

// Residual below this fraction of the total is numerical noise: stop
// extracting regardless of epsilon.
constexpr double kResidualFloor = 1e-12;

// The iteration budget alone cannot bound a search whose drawn iteration
// counts are all zero (n = 1 caps the schedule at m = 1). A generous
// trial cap turns that corner into a clean exhaustion.
std::uint64_t trial_cap(std::uint64_t budget) {
  return budget > 16 ? 4 * budget : 64;
}

void validate_epsilon(double epsilon, const char* who) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::domain_error(std::string(who) + ": epsilon must lie strictly in (0, 1)");
  }
}

std::uint64_t iteration_budget(std::size_t n, double multiplier) {
  const double b = std::ceil(multiplier * std::sqrt(static_cast<double>(n)));
  return b < 1.0 ? 1 : static_cast<std::uint64_t>(b);
}

}  // namespace

SpectrumTable SpectrumTable::from_signal(const ComplexVec& x) {
  return from_coefficients(dft_1d(x));
}

SpectrumTable SpectrumTable::from_coefficients(ComplexVec coeffs) {
  if (coeffs.empty()) throw std::domain_error("SpectrumTable: empty coefficient set");
  SpectrumTable t;
  t.coeffs_ = std::move(coeffs);
  t.energies_.resize(t.coeffs_.size());
  detail::KahanSum total;
  for (std::size_t i = 0; i < t.coeffs_.size(); ++i) {
    t.energies_[i] = std::norm(t.coeffs_[i]);
    total.add(t.energies_[i]);
  }
  t.total_ = total.value();
  return t;
}

std::optional<std::size_t> find_in_window(const SpectrumTable& table,
                                          const ThresholdWindow& w, RngStream& rng,
                                          QueryLedger& ledger, std::uint64_t budget) {
  const std::size_t n = table.size();
  if (budget == 0) throw std::domain_error("find_in_window: budget must be positive");
  if (!(w.alpha <= w.beta * (1.0 + kWindowSlack)) || w.alpha < 0.0) {
    throw std::domain_error("find_in_window: malformed window");
  }
  for (std::size_t i : w.excluded) {
    if (i >= n) throw std::domain_error("find_in_window: excluded index out of range");
  }
  ++ledger.subroutine_calls;

  const auto marked = [&table, &w](std::size_t i) {
    return !w.excluded.contains(i) && w.contains(table.energy_at(i));
  };
  const MarkPredicate oracle(marked);

  const double m_cap = std::sqrt(static_cast<double>(n));
  double m = 1.0;
  std::uint64_t spent = 0;
  const std::uint64_t max_trials = trial_cap(budget);

  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    if (spent >= budget) break;
    // j uniform over the nonnegative integers below m.
    const std::uint64_t j_bound = static_cast<std::uint64_t>(std::ceil(m));
    const std::uint64_t j = rng.uniform_below(j_bound == 0 ? 1 : j_bound);
    if (spent + j > budget) break;  // not enough budget left for this trial

    AmplitudeState state = uniform_state(n);
    for (std::uint64_t k = 0; k < j; ++k) {
      grover_iterate(state, oracle);
    }
    spent += j;
    ledger.grover_iterations += j;

    const std::size_t i0 = measure_index(state, rng, &ledger);

    // Classical verification against the stored table; the candidate is
    // only accepted if it genuinely satisfies the predicate.
    ++ledger.classical_verifications;
    if (marked(i0)) return i0;

    m = std::min(m * (6.0 / 5.0), m_cap);
  }
  ++ledger.budget_exhaustions;
  return std::nullopt;
}

std::optional<std::size_t> find_in_window(const ComplexVec& x, const ThresholdWindow& w,
                                          RngStream& rng, QueryLedger& ledger,
                                          std::uint64_t budget) {
  return find_in_window(SpectrumTable::from_signal(x), w, rng, ledger, budget);
}

QdftRun extract_sparse_spectrum(const SpectrumTable& table, double epsilon,
                                RngStream& rng, const SearchOptions& opt) {
  validate_epsilon(epsilon, "extract_sparse_spectrum");
  if (opt.budget_multiplier < 1.0) {
    throw std::domain_error("extract_sparse_spectrum: budget multiplier must be >= 1");
  }

  const std::size_t n = table.size();
  QdftRun run;
  run.spectrum.n = n;
  const double total = table.total_energy();
  run.spectrum.total_energy = total;
  if (total == 0.0) {
    // Zero signal: the stop ratio is ill-defined, resolved as an
    // immediate stop with nothing found.
    run.spectrum.residual_energy = 0.0;
    return run;
  }

  const std::uint64_t budget = iteration_budget(n, opt.budget_multiplier);
  std::unordered_set<std::size_t> found;
  double residual = total;
  std::uint64_t stalled_rounds = 0;

  while (residual / total >= epsilon) {
    if (residual <= kResidualFloor * total) break;
    detail::internal_check(found.size() < n,
                           "extract_sparse_spectrum: residual left with no indices");

    ThresholdWindow w;
    w.alpha = residual / static_cast<double>(n - found.size());
    w.beta = residual;
    if (!opt.literal_oracle) w.excluded = found;

    const std::optional<std::size_t> hit =
        find_in_window(table, w, rng, run.ledger, budget);
    const bool fresh = hit && !found.contains(*hit);
    if (!fresh) {
      // Exhaustions are statistically unreachable while anything markable
      // remains (the window always holds the largest leftover), and
      // literal-mode re-finds lose to fresh hits eventually. A long
      // streak of either means the window logic itself is broken.
      detail::internal_check(++stalled_rounds < 256,
                             "extract_sparse_spectrum: search stalled");
      continue;
    }
    stalled_rounds = 0;

    const Complex c = table.coeff(*hit);
    const double e = table.energy_at(*hit);
    run.spectrum.entries.emplace(*hit, c);
    found.insert(*hit);
    run.trace.push_back(TraceRow{w.alpha, w.beta, *hit, c, e});
    residual -= e;
  }

  run.spectrum.residual_energy = residual > 0.0 ? residual : 0.0;
  return run;
}

QdftRun qdft_1d(const ComplexVec& x, double epsilon, RngStream& rng,
                const SearchOptions& opt) {
  validate_epsilon(epsilon, "qdft_1d");
  return extract_sparse_spectrum(SpectrumTable::from_signal(x), epsilon, rng, opt);
}

ComplexVec reconstruct(const SparseSpectrum& s) {
  if (s.n == 0) throw std::domain_error("reconstruct: empty spectrum domain");
  return idft_1d(densify(s));
}

}  // namespace qdft
