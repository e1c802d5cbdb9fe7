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

#include "qdft/signals.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qdft/dft.hpp"

namespace qdft {

ComplexVec planted_spectrum_signal(std::size_t n, std::size_t m_dominant,
                                   double dominant_fraction, RngStream& rng) {
  if (n == 0) throw std::domain_error("planted_spectrum_signal: n must be positive");
  if (m_dominant == 0 || m_dominant > n) {
    throw std::domain_error("planted_spectrum_signal: m_dominant out of range");
  }
  if (!(dominant_fraction > 0.0) || dominant_fraction > 1.0) {
    throw std::domain_error("planted_spectrum_signal: fraction out of (0, 1]");
  }
  if (m_dominant == n && dominant_fraction != 1.0) {
    throw std::domain_error("planted_spectrum_signal: no room for the remainder");
  }

  // Partial Fisher-Yates for m distinct positions.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t k = 0; k < m_dominant; ++k) {
    const std::size_t pick = k + rng.uniform_below(n - k);
    std::swap(idx[k], idx[pick]);
  }

  const double big = std::sqrt(dominant_fraction / static_cast<double>(m_dominant));
  const double small =
      m_dominant == n
          ? 0.0
          : std::sqrt((1.0 - dominant_fraction) / static_cast<double>(n - m_dominant));

  ComplexVec c(n);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < n; ++k) {
    c[idx[k]] = std::polar(k < m_dominant ? big : small, kTwoPi * rng.next_unit());
  }
  return idft_1d(c);
}

}  // namespace qdft
