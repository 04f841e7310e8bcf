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

#include <span>
#include <vector>

#include "limprep/circuit.hpp"
#include "limprep/numerics.hpp"

namespace limprep {

/// Desk-scale simulator limit: amplitude arrays stay below 2^22 entries.
inline constexpr std::size_t kSimMaxQubits = 22;

/// Dense 2^m amplitude vector; qubit m-1 is the most significant index bit
/// (the ancilla, when present, occupies the top position).
struct DenseState {
  std::size_t num_qubits = 0;
  std::vector<Complex> amplitudes;

  static DenseState zero_state(std::size_t m);
  /// Computational basis state |index> on m qubits.
  static DenseState basis_state(std::size_t m, std::size_t index);
  /// |b>_a (x) |psi| for an n-qubit payload vector psi.
  static DenseState with_ancilla(std::span<const Complex> psi, bool ancilla_one);

  double norm() const;
};

/// Applies one gate in place. Controls act as index filters; only amplitude
/// pairs whose control bits match all polarities are touched. O(2^m).
void apply_gate(DenseState& state, const Gate& gate);

/// Left-to-right application of all gates.
DenseState run(const Circuit& circuit, DenseState initial);

/// |<a|b>| of two equal-dimension states.
double fidelity(const DenseState& a, const DenseState& b);

}  // namespace limprep
