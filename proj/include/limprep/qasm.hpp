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

#include <string>

#include "limprep/circuit.hpp"

namespace limprep {

/// (theta, phi, lambda, delta) with matrix = e^{i delta} U(theta, phi,
/// lambda), U being the OpenQASM 3 builtin
/// [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]].
/// cos(theta/2) = |m00|; the degenerate sin(theta/2) = 0 case uses phi = 0.
struct EulerAngles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double delta = 0.0;
};

EulerAngles euler_angles(const Mat2& m);

/// OpenQASM 3 text. Controls become ctrl/negctrl modifiers (never expanded
/// with X conjugation); Unitary2 gates lower to the builtin U, with a
/// controlled gphase statement when the matrix carries a global phase.
std::string export_qasm3(const Circuit& c);

}  // namespace limprep
