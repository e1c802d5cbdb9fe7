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

#include "qdft/rng.hpp"
#include "qdft/types.hpp"

namespace qdft {

/// Benchmark signal with a planted sparse spectrum: m_dominant
/// equal-magnitude coefficients at distinct random positions carry
/// dominant_fraction of the (unit) energy; the rest is spread evenly over
/// the remaining positions. All phases are random. The returned signal is
/// the inverse transform of that spectrum.
ComplexVec planted_spectrum_signal(std::size_t n, std::size_t m_dominant,
                                   double dominant_fraction, RngStream& rng);

}  // namespace qdft
