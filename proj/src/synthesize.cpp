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

#include "limprep/synthesize.hpp"

#include <cmath>

namespace limprep {

namespace {

std::vector<Control> to_controls(const BranchCondition& bc) {
  std::vector<Control> out;
  out.reserve(bc.size());
  for (const BranchStep& step : bc) {
    out.push_back(Control{step.qubit, step.bit ? Polarity::pos : Polarity::neg});
  }
  return out;
}

/// Adjoint of one local factor as a gate on `qubit`. (XZ)^dag = ZX, which is
/// not a phase-free Pauli, so it becomes an explicit 2x2 matrix.
Gate factor_adjoint_gate(const PauliFactor& f, std::uint32_t qubit, std::vector<Control> controls) {
  if (f.x && f.z) {
    return make_unitary(qubit, Mat2{{0, 0}, {1, 0}, {-1, 0}, {0, 0}}, std::move(controls));
  }
  if (f.x) {
    return make_x(qubit, std::move(controls));
  }
  return make_z(qubit, std::move(controls));
}

/// Cancellation gates for a weight's non-identity factors, most significant
/// target qubit first. factors[0] of a k-factor weight acts on qubit k-1.
void emit_factor_cancellation(const Lim& w, Circuit& sink,
                              const std::vector<Control>& controls) {
  const std::size_t k = w.num_qubits();
  for (std::size_t i = 0; i < k; ++i) {
    const PauliFactor& f = w.factors[i];
    if (!f.x && !f.z) {
      continue;
    }
    const auto qubit = static_cast<std::uint32_t>(k - 1 - i);
    sink.add(factor_adjoint_gate(f, qubit, controls));
  }
}

}  // namespace

Mat2 weight_rotation(const Complex& c) {
  const double f = 1.0 / std::sqrt(1.0 + std::norm(c));
  return Mat2{{f, 0.0}, f * std::conj(c), -f * c, {f, 0.0}};
}

std::vector<Gate> reduce_root(const RootEdge& root) {
  Circuit scratch;
  scratch.num_qubits = static_cast<std::uint32_t>(root.num_qubits) + 1;
  emit_factor_cancellation(root.weight, scratch, {});
  return std::move(scratch.gates);
}

Complex state_pre(const DiagramStore& store, NodeId node, const BranchCondition& bc,
                  std::uint32_t ancilla, Circuit& sink, SynthesisReport& report) {
  ++report.node_visits;
  if (node == store.terminal()) {
    ++report.paths_traversed;
    return Complex{1.0, 0.0};
  }
  const Node& nd = store.node(node);
  const auto qubit = static_cast<std::uint32_t>(nd.level - 1);
  const Control open_ctrl{ancilla, Polarity::pos};

  if (nd.low.is_zero() && nd.high.is_zero()) {
    throw ContractViolation("state_pre: node with two ZERO edges");
  }

  // Cancel the operators on the high edge while its amplitudes still sit on
  // the q=1 side; the scalar stays in the w1 arithmetic.
  Complex lambda{1.0, 0.0};
  if (!nd.high.is_zero()) {
    lambda = nd.high.weight->scalar;
    emit_factor_cancellation(*nd.high.weight, sink, {open_ctrl, Control{qubit, Polarity::pos}});
  }

  if (nd.high.is_zero()) {
    return state_pre(store, nd.low.target, bc, ancilla, sink, report);
  }
  if (nd.low.is_zero()) {
    // Swap the surviving amplitudes onto the |0> side; c -> infinity limit
    // of the weight rotation, up to phase.
    sink.add(make_x(qubit, {open_ctrl}));
    const Complex s = state_pre(store, nd.high.target, bc, ancilla, sink, report);
    return lambda * s;
  }

  Complex w0, w1;
  if (nd.low.target == nd.high.target) {
    const Complex s = state_pre(store, nd.low.target, bc, ancilla, sink, report);
    w0 = s;
    w1 = s;
  } else {
    // Close the high branch while the low branch is processed.
    {
      auto controls = to_controls(bc);
      controls.push_back(Control{qubit, Polarity::pos});
      sink.add(make_x(ancilla, std::move(controls)));
    }
    BranchCondition bc_low = bc;
    bc_low.push_back(BranchStep{qubit, false});
    w0 = state_pre(store, nd.low.target, bc_low, ancilla, sink, report);

    // Flip open/closed across both branches.
    sink.add(make_x(ancilla, to_controls(bc)));
    BranchCondition bc_high = bc;
    bc_high.push_back(BranchStep{qubit, true});
    w1 = state_pre(store, nd.high.target, bc_high, ancilla, sink, report);

    // Reopen the low branch so the whole subtree is open again.
    {
      auto controls = to_controls(bc);
      controls.push_back(Control{qubit, Polarity::neg});
      sink.add(make_x(ancilla, std::move(controls)));
    }
  }

  w1 = lambda * w1;
  if (w0 == Complex{0.0, 0.0}) {
    throw ContractViolation("state_pre: vanishing low weight");
  }
  const Complex c = w1 / w0;
  const bool identity_rotation = std::abs(c) <= kTightTol && w0.real() > 0.0 &&
                                 std::abs(w0.imag()) <= kTightTol * std::abs(w0);
  if (!identity_rotation) {
    sink.add(make_unitary(qubit, weight_rotation(c), {open_ctrl}));
  }
  return w0 * std::sqrt(1.0 + std::norm(c));
}

std::pair<Circuit, SynthesisReport> synthesize_reduction(const DiagramStore& store,
                                                         const RootEdge& root) {
  Circuit cir;
  cir.num_qubits = static_cast<std::uint32_t>(root.num_qubits) + 1;
  cir.ancilla = static_cast<std::uint32_t>(root.num_qubits);
  for (Gate& g : reduce_root(root)) {
    cir.add(std::move(g));
  }
  SynthesisReport report;
  report.final_scalar = state_pre(store, root.target, {}, *cir.ancilla, cir, report);
  report.gate_histogram = arity_stats(cir);
  return {std::move(cir), std::move(report)};
}

Circuit preparation_from_reduction(const Circuit& reduction, const SynthesisReport& report,
                                   const RootEdge& root, bool fix_global_phase) {
  Circuit prep = dagger(reduction);
  if (fix_global_phase) {
    // The reduction maps |1>_a|psi> to gamma |1>_a|0...0>, so the adjoint
    // leaves a residual conj(gamma); the ancilla is |1> at both ends, which
    // makes diag(1, gamma) on it a global phase.
    const Complex gamma = root.weight.scalar * report.final_scalar;
    const double theta = std::arg(gamma);
    if (std::abs(theta) > kTightTol) {
      if (prep.ancilla) {
        prep.add(make_phase(*prep.ancilla, theta));
      } else {
        // Ancilla-free circuit: a scalar 2x2 unitary is a global phase.
        const Complex ph = std::polar(1.0, theta);
        prep.add(make_unitary(0, Mat2{ph, {0, 0}, {0, 0}, ph}, {}));
      }
    }
  }
  return prep;
}

Circuit synthesize_preparation(const DiagramStore& store, const RootEdge& root,
                               bool fix_global_phase) {
  auto [reduction, report] = synthesize_reduction(store, root);
  return preparation_from_reduction(reduction, report, root, fix_global_phase);
}

TowerOptResult tower_optimization(const Circuit& circuit, const SynthesisReport& report) {
  if (!circuit.ancilla || report.paths_traversed > 1) {
    return TowerOptResult{circuit, false};
  }
  const std::uint32_t anc = *circuit.ancilla;
  if (anc != circuit.num_qubits - 1) {
    return TowerOptResult{circuit, false};  // only the top wire can be dropped
  }
  for (const Gate& g : circuit.gates) {
    if (g.target == anc) {
      return TowerOptResult{circuit, false};
    }
    for (const Control& c : g.controls) {
      if (c.qubit == anc && c.polarity != Polarity::pos) {
        return TowerOptResult{circuit, false};
      }
    }
  }

  TowerOptResult out;
  out.applied = true;
  out.circuit.num_qubits = circuit.num_qubits - 1;
  out.circuit.ancilla = std::nullopt;
  for (const Gate& g : circuit.gates) {
    Gate stripped = g;
    std::erase_if(stripped.controls, [&](const Control& c) { return c.qubit == anc; });
    out.circuit.add(std::move(stripped));
  }
  return out;
}

}  // namespace limprep
