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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qdft/types.hpp"

namespace qdft {

/// Malformed input file. Messages carry a line (or byte-position) hint.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sample per line: "re" or "re,im". Blank lines and lines starting
/// with '#' are skipped. Non-numeric or non-finite tokens raise
/// ParseError with the line number; zero samples is a domain error.
ComplexVec parse_signal_csv(std::istream& in);

/// PGM image reader (binary P5 and ASCII P2, maxval <= 65535). Pixel
/// values become real parts. Non-square images are center-cropped to the
/// largest square (left/top biased), and the side is clamped to the
/// largest size the 2-D search supports.
ComplexMatrix load_pgm(std::istream& in);

}  // namespace qdft
