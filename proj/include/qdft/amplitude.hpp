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
#include <functional>
#include <vector>

#include "qdft/query_ledger.hpp"
#include "qdft/rng.hpp"

namespace qdft {

/// Dense state cutoff. Larger index spaces would need a sparse simulator
/// this library does not provide, so requests beyond this error out.
inline constexpr std::size_t kMaxAmplitudeStates = std::size_t{1} << 22;

/// Real amplitude vector over the search index space. The simulated
/// iteration (phase flip on marked indices, then inversion about the
/// mean) is a real operator and the initial state is real, so imaginary
/// parts are never carried. The squared norm must stay at 1 on its own;
/// nothing renormalizes, and drift beyond tolerance is treated as a bug
/// in the caller, not smoothed over.
struct AmplitudeState {
  std::vector<double> amps;

  std::size_t size() const { return amps.size(); }
  double norm_sq() const;
};

/// Equal-superposition state over n indices. n must be in [1, 2^22].
AmplitudeState uniform_state(std::size_t n);

/// Index predicate with an evaluation tally: the simulator's stand-in
/// for per-index oracle queries.
class MarkPredicate {
 public:
  explicit MarkPredicate(std::function<bool(std::size_t)> fn) : fn_(std::move(fn)) {}

  bool operator()(std::size_t i) const {
    ++evaluations_;
    return fn_(i);
  }

  std::uint64_t evaluations() const { return evaluations_; }

 private:
  std::function<bool(std::size_t)> fn_;
  mutable std::uint64_t evaluations_ = 0;
};

/// One search iteration: flip the sign of every marked amplitude, then
/// reflect all amplitudes about their mean. Evaluates the predicate
/// exactly once per index. Norm is preserved (up to rounding).
void grover_iterate(AmplitudeState& s, const MarkPredicate& f);

/// Projective measurement: returns index i with probability amps[i]^2,
/// consuming one uniform draw from rng. The state is conceptually
/// consumed; a fresh state must be prepared before iterating again.
/// Throws std::logic_error if the squared norm has drifted by more than
/// 1e-6. Increments ledger->measurements when a ledger is supplied.
std::size_t measure_index(const AmplitudeState& s, RngStream& rng,
                          QueryLedger* ledger = nullptr);

/// Closed-form success probability sin^2((2j+1) * asin(sqrt(m/n))) of
/// measuring a marked index after j iterations from the uniform state
/// with m_marked marked out of n. Returns 0 for m_marked = 0; throws
/// std::domain_error for m_marked > n or n = 0.
double success_probability(std::size_t n, std::size_t m_marked, std::uint64_t j);

/// Diagnostic sweep: max |simulated marked probability - closed form|
/// over m in [0, n], j in [0, j_max]. Used by the grover-check command.
double closed_form_max_deviation(std::size_t n, std::uint64_t j_max);

}  // namespace qdft
