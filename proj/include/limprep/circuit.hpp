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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "limprep/numerics.hpp"

namespace limprep {

enum class Polarity : std::uint8_t { pos, neg };

struct Control {
  std::uint32_t qubit = 0;
  Polarity polarity = Polarity::pos;

  friend bool operator==(const Control&, const Control&) = default;
};

enum class GateKind : std::uint8_t { PauliX, PauliZ, Unitary2, Phase };

/// Row-major 2x2 complex matrix.
struct Mat2 {
  Complex m00, m01, m10, m11;

  Mat2 dagger() const {
    return Mat2{std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  bool is_unitary(double tol = kTol) const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 pauli_x_matrix();
Mat2 pauli_z_matrix();
Mat2 phase_matrix(double angle);

/// One gate: a base single-qubit operation plus any number of polarity
/// carrying controls. Arity = controls + 1.
struct Gate {
  GateKind kind = GateKind::PauliX;
  std::uint32_t target = 0;
  std::vector<Control> controls;
  Mat2 matrix{};      // meaningful for Unitary2 only
  double angle = 0.0;  // meaningful for Phase only

  std::size_t arity() const { return controls.size() + 1; }
  Mat2 base_matrix() const;
  Gate adjoint() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

Gate make_x(std::uint32_t target, std::vector<Control> controls = {});
Gate make_z(std::uint32_t target, std::vector<Control> controls = {});
Gate make_unitary(std::uint32_t target, const Mat2& m, std::vector<Control> controls = {});
Gate make_phase(std::uint32_t target, double angle, std::vector<Control> controls = {});

/// Ordered gate list over num_qubits wires. When an ancilla is present it
/// sits at the highest index; tower-optimized circuits drop it entirely.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::optional<std::uint32_t> ancilla;
  std::vector<Gate> gates;

  void add(Gate g);

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Adjoint circuit: gate order reversed, every gate replaced by its adjoint,
/// controls unchanged.
Circuit dagger(const Circuit& c);

/// Histogram mapping total gate arity (controls + 1) to count.
std::map<std::size_t, std::size_t> arity_stats(const Circuit& c);

}  // namespace limprep
