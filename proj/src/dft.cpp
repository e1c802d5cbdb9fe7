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

#include "qdft/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdft/util.hpp"

namespace qdft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-i * 2*pi * a / n) for a already reduced mod n. Direct polar call
// per twiddle; the reduced argument keeps every root accurate to an ulp
// even for large index products.
Complex unit_root(std::size_t a, std::size_t n) {
  return std::polar(1.0, -kTwoPi * static_cast<double>(a) / static_cast<double>(n));
}

void bit_reverse_permute(ComplexVec& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

// Iterative radix-2 transform, unnormalized. sign = -1 forward, +1
// inverse. Twiddles are computed directly per level rather than by
// repeated multiplication, trading a few polar calls for accuracy.
void fft_pow2(ComplexVec& a, int sign) {
  const std::size_t n = a.size();
  bit_reverse_permute(a);
  ComplexVec w(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      w[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) /
                                 static_cast<double>(len));
    }
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex even = a[start + k];
        const Complex odd = a[start + k + half] * w[k];
        a[start + k] = even + odd;
        a[start + k + half] = even - odd;
      }
    }
  }
}

// O(n^2) transform straight from the matrix definition, compensated
// accumulation. sign as above. Used for every non-power-of-two length.
ComplexVec dft_direct(const ComplexVec& x, int sign) {
  const std::size_t n = x.size();
  ComplexVec roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) /
                                   static_cast<double>(n));
  }
  ComplexVec c(n);
  for (std::size_t i = 0; i < n; ++i) {
    detail::KahanSum re, im;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex t = x[k] * roots[(i * k) % n];
      re.add(t.real());
      im.add(t.imag());
    }
    c[i] = Complex(re.value(), im.value());
  }
  return c;
}

ComplexVec transform(const ComplexVec& x, int sign, const char* who) {
  if (x.empty()) throw std::domain_error(std::string(who) + ": empty input");
  const std::size_t n = x.size();
  ComplexVec c;
  if (detail::is_pow2(n)) {
    c = x;
    fft_pow2(c, sign);
  } else {
    c = dft_direct(x, sign);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Complex& z : c) z *= scale;
  return c;
}

enum class Axis { columns, rows };

// Apply a 1-D transform along one axis of a square matrix.
ComplexMatrix transform_axis(const ComplexMatrix& m, Axis axis, bool inverse) {
  const std::size_t n = m.rows;
  ComplexMatrix out(n, n);
  ComplexVec line(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      line[b] = (axis == Axis::columns) ? m(b, a) : m(a, b);
    }
    const ComplexVec t = inverse ? idft_1d(line) : dft_1d(line);
    for (std::size_t b = 0; b < n; ++b) {
      if (axis == Axis::columns) {
        out(b, a) = t[b];
      } else {
        out(a, b) = t[b];
      }
    }
  }
  return out;
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (!m.square() || m.rows == 0) {
    throw std::domain_error(std::string(who) + ": nonempty square matrix required");
  }
}

}  // namespace

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
  }
  return t;
}

ComplexVec matrix_column(const ComplexMatrix& m, std::size_t j) {
  ComplexVec col(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) col[r] = m(r, j);
  return col;
}

ComplexVec matrix_row(const ComplexMatrix& m, std::size_t i) {
  ComplexVec row(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) row[c] = m(i, c);
  return row;
}

ComplexVec fourier_row(std::size_t n, std::size_t i) {
  if (n == 0) throw std::domain_error("fourier_row: n must be positive");
  if (i >= n) throw std::domain_error("fourier_row: row index out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVec row(n);
  for (std::size_t k = 0; k < n; ++k) row[k] = unit_root((i * k) % n, n) * scale;
  return row;
}

ComplexMatrix fourier_matrix(std::size_t n) {
  if (n == 0) throw std::domain_error("fourier_matrix: n must be positive");
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexVec row = fourier_row(n, i);
    for (std::size_t k = 0; k < n; ++k) w(i, k) = row[k];
  }
  return w;
}

ComplexVec dft_1d(const ComplexVec& x) { return transform(x, -1, "dft_1d"); }

ComplexVec idft_1d(const ComplexVec& c) { return transform(c, +1, "idft_1d"); }

ComplexMatrix dft_2d(const ComplexMatrix& f) {
  require_square(f, "dft_2d");
  // C = W F W: columns first, then rows of the intermediate.
  return transform_axis(transform_axis(f, Axis::columns, false), Axis::rows, false);
}

ComplexMatrix idft_2d(const ComplexMatrix& c) {
  require_square(c, "idft_2d");
  return transform_axis(transform_axis(c, Axis::columns, true), Axis::rows, true);
}

double energy(const ComplexVec& x) {
  detail::KahanSum s;
  for (const Complex& z : x) s.add(std::norm(z));
  return s.value();
}

double energy(const ComplexMatrix& m) { return energy(m.data); }

double inner_sq(std::size_t n, std::size_t i, const ComplexVec& x) {
  if (n != x.size()) throw std::domain_error("inner_sq: n must equal len(x)");
  if (i >= n) throw std::domain_error("inner_sq: index out of range");
  detail::KahanSum re, im;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex t = x[k] * unit_root((i * k) % n, n);
    re.add(t.real());
    im.add(t.imag());
  }
  const Complex dot(re.value(), im.value());
  return std::norm(dot) / static_cast<double>(n);
}

}  // namespace qdft
