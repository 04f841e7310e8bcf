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

#include "limprep/simulator.hpp"

#include <bit>
#include <cmath>

namespace limprep {

DenseState DenseState::zero_state(std::size_t m) { return basis_state(m, 0); }

DenseState DenseState::basis_state(std::size_t m, std::size_t index) {
  if (m == 0 || m > kSimMaxQubits) {
    throw ContractViolation("DenseState: qubit count out of range");
  }
  DenseState s;
  s.num_qubits = m;
  s.amplitudes.assign(std::size_t{1} << m, Complex{0.0, 0.0});
  s.amplitudes.at(index) = Complex{1.0, 0.0};
  return s;
}

DenseState DenseState::with_ancilla(std::span<const Complex> psi, bool ancilla_one) {
  const std::size_t dim = psi.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw ContractViolation("DenseState: payload must have power-of-two length");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  DenseState s;
  s.num_qubits = n + 1;
  s.amplitudes.assign(dim * 2, Complex{0.0, 0.0});
  const std::size_t base = ancilla_one ? dim : 0;
  for (std::size_t i = 0; i < dim; ++i) {
    s.amplitudes[base + i] = psi[i];
  }
  return s;
}

double DenseState::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

void apply_gate(DenseState& state, const Gate& gate) {
  const std::size_t m = state.num_qubits;
  if (gate.target >= m) {
    throw ContractViolation("apply_gate: target qubit out of range");
  }
  std::size_t cmask = 0;
  std::size_t cval = 0;
  for (const Control& c : gate.controls) {
    if (c.qubit >= m) {
      throw ContractViolation("apply_gate: control qubit out of range");
    }
    const std::size_t bit = std::size_t{1} << c.qubit;
    cmask |= bit;
    if (c.polarity == Polarity::pos) {
      cval |= bit;
    }
  }
  const std::size_t tbit = std::size_t{1} << gate.target;
  if ((cmask & tbit) != 0) {
    throw ContractViolation("apply_gate: target also appears as control");
  }
  const std::size_t dim = state.amplitudes.size();
  auto* amps = state.amplitudes.data();

  switch (gate.kind) {
    case GateKind::PauliX:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) == 0 && (i & cmask) == cval) {
          std::swap(amps[i], amps[i | tbit]);
        }
      }
      return;
    case GateKind::PauliZ:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) != 0 && (i & cmask) == cval) {
          amps[i] = -amps[i];
        }
      }
      return;
    case GateKind::Phase: {
      const Complex ph = std::polar(1.0, gate.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) != 0 && (i & cmask) == cval) {
          amps[i] *= ph;
        }
      }
      return;
    }
    case GateKind::Unitary2: {
      const Mat2& u = gate.matrix;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tbit) == 0 && (i & cmask) == cval) {
          const Complex a0 = amps[i];
          const Complex a1 = amps[i | tbit];
          amps[i] = u.m00 * a0 + u.m01 * a1;
          amps[i | tbit] = u.m10 * a0 + u.m11 * a1;
        }
      }
      return;
    }
  }
}

DenseState run(const Circuit& circuit, DenseState initial) {
  if (initial.num_qubits != circuit.num_qubits) {
    throw ContractViolation("run: qubit count mismatch between circuit and state");
  }
  for (const Gate& g : circuit.gates) {
    apply_gate(initial, g);
  }
  return initial;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) {
    throw ContractViolation("fidelity: dimension mismatch");
  }
  Complex inner{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    inner += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return std::abs(inner);
}

}  // namespace limprep
