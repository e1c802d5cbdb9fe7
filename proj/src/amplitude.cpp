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

#include "qdft/amplitude.hpp"

#include <cmath>
#include <stdexcept>

#include "qdft/util.hpp"

namespace qdft {

double AmplitudeState::norm_sq() const {
  detail::KahanSum s;
  for (double a : amps) s.add(a * a);
  return s.value();
}

AmplitudeState uniform_state(std::size_t n) {
  if (n == 0) throw std::domain_error("uniform_state: n must be positive");
  if (n > kMaxAmplitudeStates) {
    throw std::domain_error("uniform_state: index space exceeds the dense cutoff");
  }
  AmplitudeState s;
  s.amps.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  return s;
}

void grover_iterate(AmplitudeState& s, const MarkPredicate& f) {
  const std::size_t n = s.size();
  // Phase flip on marked indices: exactly one predicate evaluation each.
  for (std::size_t i = 0; i < n; ++i) {
    if (f(i)) s.amps[i] = -s.amps[i];
  }
  // Inversion about the mean.
  detail::KahanSum sum;
  for (double a : s.amps) sum.add(a);
  const double mean = sum.value() / static_cast<double>(n);
  for (double& a : s.amps) a = 2.0 * mean - a;
}

std::size_t measure_index(const AmplitudeState& s, RngStream& rng, QueryLedger* ledger) {
  const std::size_t n = s.size();
  if (n == 0) throw std::domain_error("measure_index: empty state");
  if (std::abs(s.norm_sq() - 1.0) > 1e-6) {
    throw std::logic_error("measure_index: state norm drifted beyond 1e-6");
  }
  if (ledger != nullptr) ++ledger->measurements;
  const double u = rng.next_unit();
  double cum = 0.0;
  std::size_t last_live = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = s.amps[i] * s.amps[i];
    if (p > 0.0) last_live = i;
    cum += p;
    if (u < cum) return i;
  }
  // Rounding can leave cum a hair under u; land on the last index that
  // had any probability at all.
  return last_live;
}

double success_probability(std::size_t n, std::size_t m_marked, std::uint64_t j) {
  if (n == 0) throw std::domain_error("success_probability: n must be positive");
  if (m_marked > n) throw std::domain_error("success_probability: m_marked > n");
  if (m_marked == 0) return 0.0;
  const double theta =
      std::asin(std::sqrt(static_cast<double>(m_marked) / static_cast<double>(n)));
  const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * theta);
  return s * s;
}

double closed_form_max_deviation(std::size_t n, std::uint64_t j_max) {
  double worst = 0.0;
  for (std::size_t m = 0; m <= n; ++m) {
    // First m indices marked; any subset of size m behaves identically.
    const MarkPredicate f([m](std::size_t i) { return i < m; });
    AmplitudeState s = uniform_state(n);
    for (std::uint64_t j = 0; j <= j_max; ++j) {
      if (j > 0) grover_iterate(s, f);
      detail::KahanSum p;
      for (std::size_t i = 0; i < m; ++i) p.add(s.amps[i] * s.amps[i]);
      const double dev = std::abs(p.value() - success_probability(n, m, j));
      if (dev > worst) worst = dev;
    }
  }
  return worst;
}

}  // namespace qdft
