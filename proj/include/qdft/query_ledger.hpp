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

#include <cstdint>

namespace qdft {

/// Cost counters for the search side. One Grover iteration is the unit
/// the benchmarks report; the n per-index predicate evaluations inside a
/// simulated iteration are bookkeeping of the simulation, not charged
/// here. Counters only ever increase; ledgers from independent runs are
/// combined with merge().
struct QueryLedger {
  std::uint64_t grover_iterations = 0;
  std::uint64_t measurements = 0;
  std::uint64_t subroutine_calls = 0;
  std::uint64_t classical_verifications = 0;
  std::uint64_t budget_exhaustions = 0;

  void merge(const QueryLedger& o) {
    grover_iterations += o.grover_iterations;
    measurements += o.measurements;
    subroutine_calls += o.subroutine_calls;
    classical_verifications += o.classical_verifications;
    budget_exhaustions += o.budget_exhaustions;
  }
};

}  // namespace qdft
