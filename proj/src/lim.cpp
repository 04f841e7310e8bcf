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

#include "limprep/lim.hpp"

#include <bit>
#include <cstdio>

namespace limprep {

std::string complex_to_string(const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", c.real(), c.imag());
  return std::string("(") + buf + ")";
}

char const* pauli_factor_name(const PauliFactor& f) {
  if (f.x) {
    return f.z ? "XZ" : "X";
  }
  return f.z ? "Z" : "I";
}

bool Lim::is_identity_factors() const {
  for (const auto& f : factors) {
    if (f.x || f.z) {
      return false;
    }
  }
  return true;
}

Lim lim_identity(std::size_t k) {
  Lim id;
  id.factors.assign(k, kPauliI);
  return id;
}

Lim lim_mul(const Lim& a, const Lim& b) {
  if (a.factors.size() != b.factors.size()) {
    throw ContractViolation("lim_mul: factor length mismatch");
  }
  Lim out;
  out.factors.resize(a.factors.size());
  int sign = 1;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto& f = a.factors[i];
    const auto& g = b.factors[i];
    // Commuting Z^z1 past X^x2 costs (-1)^(z1*x2).
    if (f.z && g.x) {
      sign = -sign;
    }
    out.factors[i] = PauliFactor{f.x != g.x, f.z != g.z};
  }
  out.scalar = a.scalar * b.scalar * static_cast<double>(sign);
  return out;
}

Lim lim_inverse(const Lim& a) {
  if (a.scalar == Complex{0.0, 0.0}) {
    throw ContractViolation("lim_inverse: zero scalar");
  }
  Lim out;
  out.factors = a.factors;
  int sign = 1;
  for (const auto& f : a.factors) {
    // (X^x Z^z)^-1 = Z^z X^x = (-1)^(x*z) X^x Z^z.
    if (f.x && f.z) {
      sign = -sign;
    }
  }
  out.scalar = static_cast<double>(sign) / a.scalar;
  return out;
}

Lim lim_dagger(const Lim& a) {
  Lim out;
  out.factors = a.factors;
  int sign = 1;
  for (const auto& f : a.factors) {
    if (f.x && f.z) {
      sign = -sign;
    }
  }
  out.scalar = std::conj(a.scalar) * static_cast<double>(sign);
  return out;
}

std::vector<Complex> lim_apply_dense(const Lim& a, std::span<const Complex> v) {
  const std::size_t k = a.factors.size();
  if (v.size() != (std::size_t{1} << k)) {
    throw ContractViolation("lim_apply_dense: dimension mismatch");
  }
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // factors[0] acts on the top qubit, i.e. index bit k-1.
    const std::size_t bit = std::size_t{1} << (k - 1 - i);
    if (a.factors[i].x) {
      xmask |= bit;
    }
    if (a.factors[i].z) {
      zmask |= bit;
    }
  }
  std::vector<Complex> out(v.size());
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const bool flip = (std::popcount(idx & zmask) & 1) != 0;
    const Complex amp = a.scalar * v[idx];
    out[idx ^ xmask] = flip ? -amp : amp;
  }
  return out;
}

std::string lim_to_string(const Lim& a) {
  std::string s = complex_to_string(a.scalar);
  if (a.factors.empty()) {
    return s;
  }
  s += "*";
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (i != 0) {
      s += ".";
    }
    s += pauli_factor_name(a.factors[i]);
  }
  return s;
}

bool lim_approx_equal(const Lim& a, const Lim& b, double tol) {
  return a.factors == b.factors && approx_equal(a.scalar, b.scalar, tol);
}

}  // namespace limprep
