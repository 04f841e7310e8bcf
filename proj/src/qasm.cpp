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

#include "limprep/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace limprep {

namespace {

std::string num(double v) {
  if (v == 0.0) {
    return "0";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_modifiers(std::ostringstream& out, const std::vector<Control>& controls) {
  for (const Control& c : controls) {
    out << (c.polarity == Polarity::pos ? "ctrl @ " : "negctrl @ ");
  }
}

void append_operands(std::ostringstream& out, const std::vector<Control>& controls,
                     std::uint32_t target) {
  for (const Control& c : controls) {
    out << "q[" << c.qubit << "], ";
  }
  out << "q[" << target << "]";
}

}  // namespace

EulerAngles euler_angles(const Mat2& m) {
  EulerAngles e;
  const double c = std::min(1.0, std::abs(m.m00));
  e.theta = 2.0 * std::acos(c);
  const double s = std::sin(e.theta / 2.0);
  constexpr double kDegenerate = 1e-12;
  if (s <= kDegenerate) {
    // Diagonal matrix.
    e.delta = std::arg(m.m00);
    e.phi = 0.0;
    e.lambda = std::arg(m.m11) - e.delta;
  } else if (c <= kDegenerate) {
    // Antidiagonal matrix; m00 carries no phase information.
    e.delta = 0.0;
    e.phi = std::arg(m.m10);
    e.lambda = std::arg(-m.m01);
  } else {
    e.delta = std::arg(m.m00);
    e.phi = std::arg(m.m10) - e.delta;
    e.lambda = std::arg(-m.m01) - e.delta;
  }
  return e;
}

std::string export_qasm3(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  if (c.ancilla) {
    out << "// ancilla qubit: q[" << *c.ancilla << "] (highest index)\n";
  }
  out << "qubit[" << c.num_qubits << "] q;\n";
  for (const Gate& g : c.gates) {
    std::ostringstream line;
    append_modifiers(line, g.controls);
    switch (g.kind) {
      case GateKind::PauliX:
        line << "x ";
        break;
      case GateKind::PauliZ:
        line << "z ";
        break;
      case GateKind::Phase:
        line << "p(" << num(g.angle) << ") ";
        break;
      case GateKind::Unitary2: {
        const EulerAngles e = euler_angles(g.matrix);
        line << "U(" << num(e.theta) << ", " << num(e.phi) << ", " << num(e.lambda) << ") ";
        break;
      }
    }
    append_operands(line, g.controls, g.target);
    line << ";";
    out << line.str() << "\n";

    // A leftover global phase of a raw matrix: phases the matching control
    // subspace (or the whole state when uncontrolled).
    if (g.kind == GateKind::Unitary2) {
      const EulerAngles e = euler_angles(g.matrix);
      if (std::abs(e.delta) > 1e-15) {
        std::ostringstream ph;
        append_modifiers(ph, g.controls);
        ph << "gphase(" << num(e.delta) << ")";
        for (std::size_t i = 0; i < g.controls.size(); ++i) {
          ph << (i == 0 ? " " : ", ") << "q[" << g.controls[i].qubit << "]";
        }
        ph << ";";
        out << ph.str() << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace limprep
