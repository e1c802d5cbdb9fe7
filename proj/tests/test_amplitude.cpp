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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qdft/amplitude.hpp"
#include "qdft/query_ledger.hpp"
#include "qdft/rng.hpp"

using namespace qdft;

namespace {

MarkPredicate predicate_for(const std::vector<bool>& marked) {
  return MarkPredicate([marked](std::size_t i) { return marked[i]; });
}

double marked_probability(const AmplitudeState& s, const std::vector<bool>& marked) {
  double p = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (marked[i]) p += s.amps[i] * s.amps[i];
  }
  return p;
}

}  // namespace

TEST_SUITE("amplitude") {

TEST_CASE("uniform state") {
  const AmplitudeState s = uniform_state(4);
  REQUIRE(s.size() == 4);
  for (const double a : s.amps) CHECK(a == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(uniform_state(0), std::domain_error);
  CHECK_THROWS_AS(uniform_state(kMaxAmplitudeStates + 1), std::domain_error);
}

TEST_CASE("one iteration on n=4 with one mark is exact") {
  AmplitudeState s = uniform_state(4);
  const MarkPredicate f = predicate_for({false, false, true, false});
  grover_iterate(s, f);
  CHECK(s.amps[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s.amps[0]) < 1e-15);
  CHECK(std::abs(s.amps[1]) < 1e-15);
  CHECK(std::abs(s.amps[3]) < 1e-15);
  CHECK(f.evaluations() == 4);
}

TEST_CASE("iteration agrees with the dense operator") {
  RngStream rng(21);
  for (const std::size_t n : {2, 3, 5, 16, 64}) {
    std::vector<bool> marked(n, false);
    for (std::size_t i = 0; i < n; ++i) marked[i] = rng.next_unit() < 0.3;

    AmplitudeState s = uniform_state(n);
    std::vector<double> ref = s.amps;
    const MarkPredicate f = predicate_for(marked);
    for (int step = 0; step < 7; ++step) {
      grover_iterate(s, f);
      ref = oracle::grover_step(std::move(ref), marked);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(s.amps[i] - ref[i]) < 1e-12);
      }
      CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("iteration count: one evaluation per index per step") {
  AmplitudeState s = uniform_state(16);
  const MarkPredicate f = predicate_for(std::vector<bool>(16, false));
  grover_iterate(s, f);
  grover_iterate(s, f);
  CHECK(f.evaluations() == 32);
}

TEST_CASE("closed form probability") {
  CHECK(success_probability(4, 0, 3) == 0.0);
  CHECK(success_probability(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(success_probability(4, 4, 0) == doctest::Approx(1.0).epsilon(1e-15));
  // j = 0 is the bare uniform state: probability m/n.
  for (std::size_t m = 0; m <= 10; ++m) {
    CHECK(success_probability(10, m, 0) ==
          doctest::Approx(static_cast<double>(m) / 10.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(success_probability(0, 0, 1), std::domain_error);
  CHECK_THROWS_AS(success_probability(4, 5, 1), std::domain_error);
}

TEST_CASE("simulated probability tracks the closed form") {
  for (const std::size_t n : {2, 5, 16, 33, 64}) {
    for (const std::size_t m : {std::size_t{1}, n / 2, n}) {
      if (m == 0 || m > n) continue;
      std::vector<bool> marked(n, false);
      for (std::size_t i = 0; i < m; ++i) marked[i] = true;
      AmplitudeState s = uniform_state(n);
      const MarkPredicate f = predicate_for(marked);
      for (std::uint64_t j = 1; j <= 25; ++j) {
        grover_iterate(s, f);
        CHECK(std::abs(marked_probability(s, marked) - success_probability(n, m, j)) <
              1e-12);
      }
    }
  }
  CHECK(closed_form_max_deviation(64, 50) <= 1e-12);
}

TEST_CASE("measurement follows the amplitudes") {
  RngStream rng(22);
  AmplitudeState point;
  point.amps = {0.0, 1.0, 0.0};
  QueryLedger ledger;
  for (int i = 0; i < 20; ++i) {
    CHECK(measure_index(point, rng, &ledger) == 1);
  }
  CHECK(ledger.measurements == 20);

  // Frequencies over the uniform state stay near 1/n.
  const AmplitudeState u = uniform_state(8);
  std::vector<int> counts(8, 0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) ++counts[measure_index(u, rng)];
  for (const int c : counts) {
    CHECK(c > draws / 8 - 600);
    CHECK(c < draws / 8 + 600);
  }
}

TEST_CASE("measurement rejects broken states") {
  RngStream rng(23);
  AmplitudeState empty;
  CHECK_THROWS_AS(measure_index(empty, rng), std::domain_error);
  AmplitudeState unnormalized;
  unnormalized.amps = {1.0, 1.0};
  CHECK_THROWS_AS(measure_index(unnormalized, rng), std::logic_error);
}

TEST_CASE("rng stream behaves") {
  RngStream a(7);
  RngStream b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RngStream c(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.uniform_below(17) < 17);
    CHECK(c.uniform_below(1) == 0);
  }
  CHECK_THROWS_AS(c.uniform_below(0), std::domain_error);

  // A spawned child does not replay the parent's continuation.
  RngStream parent(31);
  RngStream child = parent.spawn();
  bool all_equal = true;
  for (int i = 0; i < 16; ++i) {
    if (child.next_u64() != parent.next_u64()) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

}  // TEST_SUITE
