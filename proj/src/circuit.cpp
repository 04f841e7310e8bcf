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

#include "limprep/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace limprep {

namespace {

void validate_gate(const Gate& g) {
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if (g.controls[i].qubit == g.target) {
      throw ContractViolation("gate target cannot also be a control");
    }
    for (std::size_t j = i + 1; j < g.controls.size(); ++j) {
      if (g.controls[i].qubit == g.controls[j].qubit) {
        throw ContractViolation("duplicate control qubit");
      }
    }
  }
  if (g.kind == GateKind::Unitary2 && !g.matrix.is_unitary()) {
    throw ContractViolation("Unitary2 matrix is not unitary");
  }
}

}  // namespace

bool Mat2::is_unitary(double tol) const {
  // Rows of U U^dagger against the identity.
  const Complex a = m00 * std::conj(m00) + m01 * std::conj(m01);
  const Complex b = m00 * std::conj(m10) + m01 * std::conj(m11);
  const Complex c = m10 * std::conj(m00) + m11 * std::conj(m01);
  const Complex d = m10 * std::conj(m10) + m11 * std::conj(m11);
  return std::abs(a - 1.0) <= tol && std::abs(d - 1.0) <= tol && std::abs(b) <= tol &&
         std::abs(c) <= tol;
}

Mat2 pauli_x_matrix() { return Mat2{{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
Mat2 pauli_z_matrix() { return Mat2{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }
Mat2 phase_matrix(double angle) {
  return Mat2{{1, 0}, {0, 0}, {0, 0}, std::polar(1.0, angle)};
}

Mat2 Gate::base_matrix() const {
  switch (kind) {
    case GateKind::PauliX:
      return pauli_x_matrix();
    case GateKind::PauliZ:
      return pauli_z_matrix();
    case GateKind::Unitary2:
      return matrix;
    case GateKind::Phase:
      return phase_matrix(angle);
  }
  return Mat2{};
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::PauliX:
    case GateKind::PauliZ:
      break;  // self-adjoint
    case GateKind::Unitary2:
      g.matrix = matrix.dagger();
      break;
    case GateKind::Phase:
      g.angle = -angle;
      break;
  }
  return g;
}

Gate make_x(std::uint32_t target, std::vector<Control> controls) {
  Gate g{GateKind::PauliX, target, std::move(controls)};
  validate_gate(g);
  return g;
}

Gate make_z(std::uint32_t target, std::vector<Control> controls) {
  Gate g{GateKind::PauliZ, target, std::move(controls)};
  validate_gate(g);
  return g;
}

Gate make_unitary(std::uint32_t target, const Mat2& m, std::vector<Control> controls) {
  Gate g{GateKind::Unitary2, target, std::move(controls), m};
  validate_gate(g);
  return g;
}

Gate make_phase(std::uint32_t target, double angle, std::vector<Control> controls) {
  Gate g{GateKind::Phase, target, std::move(controls)};
  g.angle = angle;
  validate_gate(g);
  return g;
}

void Circuit::add(Gate g) {
  if (g.target >= num_qubits) {
    throw ContractViolation("gate target out of range");
  }
  for (const Control& c : g.controls) {
    if (c.qubit >= num_qubits) {
      throw ContractViolation("gate control out of range");
    }
  }
  gates.push_back(std::move(g));
}

Circuit dagger(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  out.ancilla = c.ancilla;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.gates.push_back(it->adjoint());
  }
  return out;
}

std::map<std::size_t, std::size_t> arity_stats(const Circuit& c) {
  std::map<std::size_t, std::size_t> hist;
  for (const Gate& g : c.gates) {
    ++hist[g.arity()];
  }
  return hist;
}

}  // namespace limprep
