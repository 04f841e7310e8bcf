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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "limprep/numerics.hpp"

namespace limprep {

/// One local tensor factor X^x * Z^z. The four values are I=(0,0), Z=(0,1),
/// X=(1,0) and XZ=(1,1); any phase lives in the enclosing Lim scalar.
struct PauliFactor {
  bool x = false;
  bool z = false;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

inline constexpr PauliFactor kPauliI{false, false};
inline constexpr PauliFactor kPauliX{true, false};
inline constexpr PauliFactor kPauliZ{false, true};
inline constexpr PauliFactor kPauliXZ{true, true};

char const* pauli_factor_name(const PauliFactor& f);

/// Renders a complex number as "(re+imi)" with round-trippable precision.
std::string complex_to_string(const Complex& c);

/// A local invertible map restricted to the Pauli-with-scalar subgroup:
/// scalar * factors[0] (x) ... (x) factors[k-1], with factors[0] acting on
/// the most significant qubit q_{k-1} and factors[k-1] on q_0.
struct Lim {
  Complex scalar{1.0, 0.0};
  std::vector<PauliFactor> factors;

  std::size_t num_qubits() const { return factors.size(); }
  bool is_identity_factors() const;
};

/// Identity LIM (scalar 1, all-I factors) over k qubits.
Lim lim_identity(std::size_t k);

/// Group product: matrix(result) = matrix(a) * matrix(b).
/// Factor-wise (x1,z1)*(x2,z2) = (-1)^(z1*x2) (x1^x2, z1^z2), signs folded
/// into the result scalar. Throws ContractViolation on length mismatch.
Lim lim_mul(const Lim& a, const Lim& b);

/// Group inverse: lim_mul(a, lim_inverse(a)) is the identity LIM.
/// Throws ContractViolation if the scalar is zero.
Lim lim_inverse(const Lim& a);

/// Conjugate transpose: matrix(result) = matrix(a)^dagger.
Lim lim_dagger(const Lim& a);

/// Dense application: result = matrix(a) * v, computed in O(2^k) by index
/// permutation (X part), sign flips (Z part) and one scalar multiply.
/// Throws ContractViolation when v.size() != 2^k.
std::vector<Complex> lim_apply_dense(const Lim& a, std::span<const Complex> v);

/// Textual rendering, e.g. "(0.5-0.5i)*Z.I.X" with factors listed from the
/// most significant qubit down. Scalar-only LIMs render as just "(re+imi)".
std::string lim_to_string(const Lim& a);

bool lim_approx_equal(const Lim& a, const Lim& b, double tol = kTol);

}  // namespace limprep
