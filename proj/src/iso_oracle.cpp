// Copyright 2026 The limprep developers
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

#include "limprep/iso_oracle.hpp"

#include <bit>
#include <cmath>

namespace limprep {

std::optional<Lim> iso_oracle(std::span<const Complex> u, std::span<const Complex> w, double tol) {
  const std::size_t dim = u.size();
  if (dim == 0 || dim != w.size() || (dim & (dim - 1)) != 0) {
    throw ContractViolation("iso_oracle: dimensions must match and be a power of two");
  }
  const int k = std::countr_zero(dim);
  if (k > 6) {
    throw ContractViolation("iso_oracle: supports at most 6 qubits");
  }

  double umax = 0.0;
  double wmax = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    umax = std::max(umax, std::abs(u[i]));
    wmax = std::max(wmax, std::abs(w[i]));
  }
  if (umax == 0.0 || wmax == 0.0) {
    return std::nullopt;
  }
  const double zero_cut = tol * umax;

  for (std::size_t xmask = 0; xmask < dim; ++xmask) {
    for (std::size_t zmask = 0; zmask < dim; ++zmask) {
      // Candidate image entry: img[i ^ xmask] = (-1)^popcount(i & zmask) u[i].
      auto image_at = [&](std::size_t j) {
        const std::size_t i = j ^ xmask;
        const bool neg = (std::popcount(i & zmask) & 1) != 0;
        return neg ? -u[i] : u[i];
      };
      std::size_t pivot = 0;
      while (pivot < dim && std::abs(image_at(pivot)) <= zero_cut) {
        ++pivot;
      }
      if (pivot == dim) {
        continue;
      }
      const Complex lambda = w[pivot] / image_at(pivot);
      const double scale = std::max({1.0, wmax, std::abs(lambda) * umax});
      bool ok = std::abs(lambda) > 0.0;
      for (std::size_t j = 0; ok && j < dim; ++j) {
        ok = std::abs(w[j] - lambda * image_at(j)) <= tol * scale;
      }
      if (!ok) {
        continue;
      }
      Lim g;
      g.scalar = lambda;
      g.factors.resize(k);
      for (int q = 0; q < k; ++q) {
        const std::size_t bit = std::size_t{1} << (k - 1 - q);
        g.factors[q] = PauliFactor{(xmask & bit) != 0, (zmask & bit) != 0};
      }
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace limprep
