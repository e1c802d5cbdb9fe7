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

#include "qdft/signal_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <vector>

#include "qdft/qdft2d.hpp"

namespace qdft {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& token, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad numeric token '" +
                     token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-finite sample");
  }
  return value;
}

// Next whitespace-delimited header token, skipping '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

std::size_t pgm_uint(std::istream& in, const char* what) {
  const std::string tok = pgm_token(in);
  if (tok.empty()) throw ParseError(std::string("pgm: missing ") + what);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("pgm: bad ") + what + " '" + tok + "'");
  }
  return value;
}

}  // namespace

ComplexVec parse_signal_csv(std::istream& in) {
  ComplexVec samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;

    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) {
      samples.emplace_back(parse_double(body, line_no), 0.0);
      continue;
    }
    const std::string re = trim(body.substr(0, comma));
    const std::string im = trim(body.substr(comma + 1));
    if (re.empty() || im.empty() || im.find(',') != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 're' or 're,im'");
    }
    samples.emplace_back(parse_double(re, line_no), parse_double(im, line_no));
  }
  if (samples.empty()) throw std::domain_error("signal: zero samples");
  return samples;
}

ComplexMatrix load_pgm(std::istream& in) {
  const std::string magic = pgm_token(in);
  const bool binary = magic == "P5";
  if (!binary && magic != "P2") {
    throw ParseError("pgm: unsupported magic '" + magic + "'");
  }
  const std::size_t width = pgm_uint(in, "width");
  const std::size_t height = pgm_uint(in, "height");
  const std::size_t maxval = pgm_uint(in, "maxval");
  if (width == 0 || height == 0) throw ParseError("pgm: empty image");
  if (maxval == 0 || maxval > 65535) throw ParseError("pgm: maxval out of range");

  std::vector<double> pixels;
  pixels.reserve(width * height);
  if (binary) {
    // The header's closing whitespace byte was consumed by pgm_uint.
    const bool wide = maxval > 255;
    for (std::size_t k = 0; k < width * height; ++k) {
      int hi = in.get();
      if (hi == EOF) throw ParseError("pgm: truncated pixel data");
      std::size_t value = static_cast<std::size_t>(hi);
      if (wide) {
        const int lo = in.get();
        if (lo == EOF) throw ParseError("pgm: truncated pixel data");
        value = value * 256 + static_cast<std::size_t>(lo);
      }
      if (value > maxval) throw ParseError("pgm: sample exceeds maxval");
      pixels.push_back(static_cast<double>(value));
    }
  } else {
    for (std::size_t k = 0; k < width * height; ++k) {
      const std::size_t value = pgm_uint(in, "pixel");
      if (value > maxval) throw ParseError("pgm: sample exceeds maxval");
      pixels.push_back(static_cast<double>(value));
    }
  }

  // Center crop (left/top biased) to the largest supported square.
  std::size_t side = std::min(width, height);
  if (side > kMaxImageSide) side = kMaxImageSide;
  const std::size_t r0 = (height - side) / 2;
  const std::size_t c0 = (width - side) / 2;
  ComplexMatrix img(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      img(r, c) = Complex(pixels[(r0 + r) * width + (c0 + c)], 0.0);
    }
  }
  return img;
}

}  // namespace qdft
