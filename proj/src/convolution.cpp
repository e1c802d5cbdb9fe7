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

#include "qdft/convolution.hpp"

#include <cmath>
#include <stdexcept>

#include "qdft/dft.hpp"
#include "qdft/util.hpp"

namespace qdft {

ComplexVec conv_direct(const ComplexVec& u, const ComplexVec& v) {
  if (u.size() != v.size()) {
    throw std::domain_error("conv_direct: operand lengths differ (pad first)");
  }
  if (u.empty()) throw std::domain_error("conv_direct: empty operands");
  const std::size_t n = u.size();
  ComplexVec w(n);
  for (std::size_t k = 0; k < n; ++k) {
    detail::KahanSum re, im;
    for (std::size_t j = 0; j < n; ++j) {
      const Complex t = u[j] * v[(k + n - j) % n];
      re.add(t.real());
      im.add(t.imag());
    }
    w[k] = Complex(re.value(), im.value());
  }
  return w;
}

std::pair<ComplexVec, ComplexVec> pad_to_common(ComplexVec u, ComplexVec v) {
  const std::size_t n = std::max(u.size(), v.size());
  u.resize(n, Complex(0.0, 0.0));
  v.resize(n, Complex(0.0, 0.0));
  return {std::move(u), std::move(v)};
}

SparseSpectrum spectrum_product(const SparseSpectrum& cu, const SparseSpectrum& cv) {
  if (cu.n != cv.n) {
    throw std::domain_error("spectrum_product: spectra live on different domains");
  }
  SparseSpectrum out;
  out.n = cu.n;
  const double scale = std::sqrt(static_cast<double>(cu.n));
  for (const auto& [k, a] : cu.entries) {
    const auto it = cv.entries.find(k);
    if (it == cv.entries.end()) continue;
    out.entries.emplace(k, scale * a * it->second);
  }
  // The exact product over all indices is unobserved, so the product
  // spectrum's total is what it holds and nothing is counted missing.
  out.total_energy = out.retained_energy();
  out.residual_energy = 0.0;
  return out;
}

ConvolutionReport conv_via_qdft(const ComplexVec& u, const ComplexVec& v, double epsilon,
                                RngStream& rng, const ConvolutionOptions& opt) {
  if (u.empty() || v.empty()) {
    throw std::domain_error("conv_via_qdft: empty operands");
  }
  auto [up, vp] = pad_to_common(u, v);

  RngStream rng_u = rng.spawn();
  RngStream rng_v = rng.spawn();
  QdftRun run_u = qdft_1d(up, epsilon, rng_u, opt.search);
  QdftRun run_v = qdft_1d(vp, epsilon, rng_v, opt.search);

  ConvolutionReport rep;
  rep.ledger_u = run_u.ledger;
  rep.ledger_v = run_v.ledger;
  rep.product = spectrum_product(run_u.spectrum, run_v.spectrum);
  rep.w_hat = reconstruct(rep.product);

  if (opt.compute_exact) {
    rep.w_exact = conv_direct(up, vp);
    const double ref = energy(*rep.w_exact);
    if (ref == 0.0) {
      rep.relative_l2_error = 0.0;
    } else {
      ComplexVec diff(rep.w_hat.size());
      for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = (*rep.w_exact)[k] - rep.w_hat[k];
      }
      rep.relative_l2_error = std::sqrt(energy(diff) / ref);
    }
  }
  return rep;
}

}  // namespace qdft
