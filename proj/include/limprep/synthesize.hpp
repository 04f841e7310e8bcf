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

#include <cstdint>
#include <map>
#include <vector>

#include "limprep/circuit.hpp"
#include "limprep/limtdd.hpp"

namespace limprep {

/// (qubit, required bit) assignments of all branch nodes strictly above the
/// current node on the active path; qubit indices strictly decreasing.
struct BranchStep {
  std::uint32_t qubit = 0;
  bool bit = false;
};
using BranchCondition = std::vector<BranchStep>;

struct SynthesisReport {
  std::map<std::size_t, std::size_t> gate_histogram;  // arity -> count
  std::size_t node_visits = 0;      // state_pre invocations, terminal included
  std::size_t paths_traversed = 0;  // terminal hits == reduced paths
  Complex final_scalar{1.0, 0.0};
};

/// The unitary (1 / sqrt(1+|c|^2)) [[1, conj(c)], [-c, 1]]; maps the
/// direction (w0, w1) with c = w1/w0 onto (|.|, 0). Determinant 1.
Mat2 weight_rotation(const Complex& c);

/// Uncontrolled single-qubit gates cancelling the root weight's non-identity
/// local factors, most significant qubit first. The scalar is not gated.
std::vector<Gate> reduce_root(const RootEdge& root);

/// Depth-first reduction of the subtree rooted at `node`: cancels high-edge
/// operators with (ancilla, node-qubit)-controlled gates, toggles the
/// ancilla to close/open branches using the branch condition, and rotates
/// the outgoing weight pair onto |0>. Emits into `sink` and returns the
/// accumulated scalar w.
Complex state_pre(const DiagramStore& store, NodeId node, const BranchCondition& bc,
                  std::uint32_t ancilla, Circuit& sink, SynthesisReport& report);

/// Full reduction circuit on n+1 qubits (ancilla at index n): reduce_root
/// gates followed by the state_pre recursion. Applied to |1>_a (x) |psi> it
/// concentrates all amplitude on |1>_a |0...0>.
std::pair<Circuit, SynthesisReport> synthesize_reduction(const DiagramStore& store,
                                                         const RootEdge& root);

/// Adjoint of an already-synthesized reduction; with fix_global_phase a
/// phase gate on the ancilla makes the prepared state match entrywise.
Circuit preparation_from_reduction(const Circuit& reduction, const SynthesisReport& report,
                                   const RootEdge& root, bool fix_global_phase);

/// Preparation circuit mapping |1>_a |0...0> to |1>_a (x) |psi>, up to a
/// global phase unless fix_global_phase is set.
Circuit synthesize_preparation(const DiagramStore& store, const RootEdge& root,
                               bool fix_global_phase = false);

struct TowerOptResult {
  Circuit circuit;
  bool applied = false;
};

/// For ancilla-free diagrams (no branch nodes, so no gate ever targets the
/// ancilla) drops the ancilla wire and strips its controls. If the
/// precondition fails the circuit is returned unchanged with applied=false.
TowerOptResult tower_optimization(const Circuit& circuit, const SynthesisReport& report);

}  // namespace limprep
