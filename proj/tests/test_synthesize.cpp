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

#include <doctest.h>

#include <random>

#include "limprep/bench.hpp"
#include "limprep/limtdd.hpp"
#include "limprep/simulator.hpp"
#include "limprep/synthesize.hpp"
#include "test_util.hpp"

using namespace limprep;
using namespace limprep::testing;

namespace {

double mat2_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01), std::abs(a.m10 - b.m10),
                   std::abs(a.m11 - b.m11)});
}

/// Reduction fidelity: amplitude of |1>_a |0...0> after running the
/// reduction on |1>_a (x) |psi>.
double reduction_amplitude(const Circuit& reduction, const std::vector<Complex>& psi) {
  const std::size_t n = reduction.num_qubits - 1;
  DenseState out = run(reduction, DenseState::with_ancilla(psi, true));
  return std::abs(out.amplitudes[std::size_t{1} << n]);
}

/// Norm of the ancilla-|0> block of the final state.
double closed_block_norm(const Circuit& reduction, const std::vector<Complex>& psi) {
  const std::size_t n = reduction.num_qubits - 1;
  DenseState out = run(reduction, DenseState::with_ancilla(psi, true));
  double s = 0.0;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    s += std::norm(out.amplitudes[i]);
  }
  return std::sqrt(s);
}

struct GateShape {
  GateKind kind;
  std::uint32_t target;
  std::vector<Control> controls;
};

void check_shape(const Gate& g, const GateShape& want) {
  CHECK(g.kind == want.kind);
  CHECK(g.target == want.target);
  CHECK(g.controls == want.controls);
}

}  // namespace

TEST_CASE("weight_rotation") {
  const double s = 1.0 / std::sqrt(2.0);
  // c = 1: the worked example's U.
  CHECK(mat2_diff(weight_rotation({1, 0}), Mat2{{s, 0}, {s, 0}, {-s, 0}, {s, 0}}) < 1e-15);
  // c = 1/sqrt2: the worked example's V.
  const double f = std::sqrt(2.0) / std::sqrt(3.0);
  CHECK(mat2_diff(weight_rotation({s, 0}),
                  Mat2{{f, 0}, {f * s, 0}, {-f * s, 0}, {f, 0}}) < 1e-15);
  // c = 0: identity.
  CHECK(mat2_diff(weight_rotation({0, 0}), Mat2{{1, 0}, {0, 0}, {0, 0}, {1, 0}}) == 0.0);

  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int iter = 0; iter < 50; ++iter) {
    const Complex c{dist(rng), dist(rng)};
    const Mat2 u = weight_rotation(c);
    CHECK(u.is_unitary(1e-12));
    // Maps (w0, c*w0) onto the |0> direction.
    const Complex w0{dist(rng), dist(rng)};
    const Complex r0 = u.m00 * w0 + u.m01 * (c * w0);
    const Complex r1 = u.m10 * w0 + u.m11 * (c * w0);
    CHECK(std::abs(r1) < 1e-12);
    CHECK(std::abs(r0 - w0 * std::sqrt(1.0 + std::norm(c))) < 1e-12);
  }
}

TEST_CASE("reduce_root") {
  DiagramStore store;
  const RootEdge fig = store.from_statevector(example1_vector());
  const auto gates = reduce_root(fig);
  REQUIRE(gates.size() == 1);
  CHECK(gates[0].kind == GateKind::PauliZ);
  CHECK(gates[0].target == 2);
  CHECK(gates[0].controls.empty());

  RootEdge idroot = fig;
  idroot.weight = lim_identity(3);
  CHECK(reduce_root(idroot).empty());

  // X on q0 and Z on q1: gates ordered from the top qubit down; applying
  // them to the twisted state must undo the twist.
  std::mt19937_64 rng(52);
  const auto base = random_state(2, rng);
  const Lim twist{Complex{1, 0}, {kPauliZ, kPauliX}};  // Z on q1, X on q0
  const auto twisted = lim_apply_dense(twist, base);
  RootEdge fake{twist, 0, 2};
  const auto cancel = reduce_root(fake);
  REQUIRE(cancel.size() == 2);
  CHECK(cancel[0].kind == GateKind::PauliZ);
  CHECK(cancel[0].target == 1);
  CHECK(cancel[1].kind == GateKind::PauliX);
  CHECK(cancel[1].target == 0);
  Circuit c;
  c.num_qubits = 2;
  for (const Gate& g : cancel) {
    c.add(g);
  }
  const DenseState res = run(c, DenseState{2, twisted});
  CHECK(max_abs_diff(res.amplitudes, base) < 1e-12);
}

TEST_CASE("worked example reduces with the reference 12-gate sequence") {
  DiagramStore store;
  const auto psi = example1_vector();
  const RootEdge root = store.from_statevector(psi);
  auto [cir, report] = synthesize_reduction(store, root);

  REQUIRE(cir.gates.size() == 12);
  REQUIRE(cir.ancilla.has_value());
  const std::uint32_t a = *cir.ancilla;
  CHECK(a == 3);

  const Control ca{a, Polarity::pos};
  const std::vector<GateShape> shapes{
      {GateKind::PauliZ, 2, {}},                                // cancel root Z
      {GateKind::PauliZ, 1, {ca, {2, Polarity::pos}}},          // CCZ
      {GateKind::PauliX, a, {{2, Polarity::pos}}},              // close high branch
      {GateKind::PauliZ, 0, {ca, {1, Polarity::pos}}},          // CCZ
      {GateKind::Unitary2, 0, {ca}},                            // U
      {GateKind::Unitary2, 1, {ca}},                            // V
      {GateKind::PauliX, a, {}},                                // flip branches
      {GateKind::PauliX, 0, {ca, {1, Polarity::pos}}},          // CCX
      {GateKind::Unitary2, 0, {ca}},                            // V
      {GateKind::Unitary2, 1, {ca}},                            // U
      {GateKind::PauliX, a, {{2, Polarity::neg}}},              // reopen low branch
      {GateKind::Unitary2, 2, {ca}},                            // U
  };
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    CAPTURE(i);
    check_shape(cir.gates[i], shapes[i]);
  }

  // Rotations are exactly U(1) and U(1/sqrt2).
  const Mat2 U = weight_rotation({1, 0});
  const Mat2 V = weight_rotation({1.0 / std::sqrt(2.0), 0});
  CHECK(mat2_diff(cir.gates[4].matrix, U) < 1e-12);
  CHECK(mat2_diff(cir.gates[5].matrix, V) < 1e-12);
  CHECK(mat2_diff(cir.gates[8].matrix, V) < 1e-12);
  CHECK(mat2_diff(cir.gates[9].matrix, U) < 1e-12);
  CHECK(mat2_diff(cir.gates[11].matrix, U) < 1e-12);

  const auto hist = arity_stats(cir);
  CHECK(hist.at(1) == 2);
  CHECK(hist.at(2) == 7);
  CHECK(hist.at(3) == 3);

  CHECK(reduction_amplitude(cir, psi) >= 1.0 - 1e-9);
  // The final amplitude equals root scalar times returned scalar exactly.
  DenseState end = run(cir, DenseState::with_ancilla(psi, true));
  CHECK(std::abs(end.amplitudes[8] - root.weight.scalar * report.final_scalar) < 1e-9);
  CHECK(std::abs(std::abs(report.final_scalar * root.weight.scalar) - 1.0) < 1e-9);
  CHECK(report.paths_traversed == 2);
  // Visit budget n*p + 1.
  CHECK(report.node_visits <= 3 * 2 + 1);
}

TEST_CASE("basis state |10...0> reduces with a single X on the top qubit") {
  DiagramStore store;
  std::vector<Complex> psi(16, Complex{0, 0});
  psi[8] = Complex{1, 0};
  const RootEdge root = store.from_statevector(psi);
  auto [cir, report] = synthesize_reduction(store, root);
  REQUIRE(cir.gates.size() == 1);
  CHECK(cir.gates[0].kind == GateKind::PauliX);
  CHECK(cir.gates[0].target == 3);
  CHECK(reduction_amplitude(cir, psi) >= 1.0 - 1e-12);
  CHECK(report.paths_traversed == 1);
}

TEST_CASE("ZERO-low rule on a hand-built diagram emits the controlled swap") {
  // Canonical construction never stores a ZERO low edge, but state_pre
  // still handles such nodes; build one directly through the unique table.
  DiagramStore store;
  const Edge unit = Edge::to(lim_identity(0), store.terminal());
  const NodeId inner = store.insert_node(1, Edge::zero(), unit);
  const NodeId outer = store.insert_node(
      2, Edge::zero(), Edge::to(Lim{Complex{1, 0}, {kPauliZ}}, inner));
  const RootEdge root{lim_identity(2), outer, 2};

  // Semantics: |1> (x) Z|01-state> = |1>|1> with a sign on the high half.
  const auto vec = store.to_statevector(root);
  CHECK(max_abs_diff(vec, {{0, 0}, {0, 0}, {0, 0}, {-1, 0}}) < 1e-12);

  auto [cir, report] = synthesize_reduction(store, root);
  // Expected: CCZ cancelling the high-edge Z, then two ancilla-controlled
  // swaps from the ZERO-low rule, one per level.
  REQUIRE(cir.gates.size() == 3);
  check_shape(cir.gates[0],
              {GateKind::PauliZ, 0, {{2, Polarity::pos}, {1, Polarity::pos}}});
  check_shape(cir.gates[1], {GateKind::PauliX, 1, {{2, Polarity::pos}}});
  check_shape(cir.gates[2], {GateKind::PauliX, 0, {{2, Polarity::pos}}});
  // The high-edge Z's sign is removed by the CCZ, not by scalar tracking.
  CHECK(reduction_amplitude(cir, {{0, 0}, {0, 0}, {0, 0}, {-1, 0}}) >= 1.0 - 1e-12);
  CHECK(std::abs(report.final_scalar - Complex{1, 0}) < 1e-12);
}

TEST_CASE("product state |+>^n uses n rotations and no ancilla traffic") {
  const std::size_t n = 4;
  std::vector<Complex> psi(std::size_t{1} << n, Complex{0.25, 0});
  DiagramStore store;
  const RootEdge root = store.from_statevector(psi);
  auto [cir, report] = synthesize_reduction(store, root);
  REQUIRE(cir.gates.size() == n);
  const Mat2 U = weight_rotation({1, 0});
  for (std::size_t i = 0; i < cir.gates.size(); ++i) {
    const Gate& g = cir.gates[i];
    CHECK(g.kind == GateKind::Unitary2);
    CHECK(g.controls == std::vector<Control>{{*cir.ancilla, Polarity::pos}});
    CHECK(mat2_diff(g.matrix, U) < 1e-12);
    CHECK(g.target == i);  // rotations run bottom-up, q0 first
  }

  const TowerOptResult towered = tower_optimization(cir, report);
  REQUIRE(towered.applied);
  CHECK(!towered.circuit.ancilla.has_value());
  CHECK(towered.circuit.num_qubits == n);
  for (const Gate& g : towered.circuit.gates) {
    CHECK(g.controls.empty());
  }
  // The ancilla-free preparation still builds |+>^n.
  const Circuit prep = dagger(towered.circuit);
  const DenseState out = run(prep, DenseState::zero_state(n));
  CHECK(max_abs_diff(out.amplitudes, psi) < 1e-9);
}

TEST_CASE("tower optimization on the H+CZ ladder family") {
  const std::size_t n = 6;
  DiagramStore store;
  const auto psi = vn_family_state(n);
  const RootEdge root = store.from_statevector(psi);
  CHECK(store.node_count(root) == n + 1);
  CHECK(store.reduced_path_count(root) == 1);
  // Every high label is a scalar times Z (x) ... (x) Z.
  for (NodeId id = root.target; id != store.terminal();) {
    const Node& nd = store.node(id);
    if (!nd.high.is_zero()) {
      for (const PauliFactor& f : nd.high.weight->factors) {
        CHECK(f == kPauliZ);
      }
    }
    id = nd.low.target;
  }

  auto [cir, report] = synthesize_reduction(store, root);
  const TowerOptResult towered = tower_optimization(cir, report);
  REQUIRE(towered.applied);
  CHECK(towered.circuit.num_qubits == n);
  const auto hist = arity_stats(towered.circuit);
  for (const auto& [arity, count] : hist) {
    CHECK(arity <= 2);  // only 1- and 2-qubit gates remain
  }
  CHECK(hist.at(2) == n * (n - 1) / 2);
  CHECK(hist.at(1) == n);
  CHECK(towered.circuit.gates.size() <= n * (n - 1) / 2 + 2 * n);

  // Verified by simulation.
  const Circuit prep = dagger(towered.circuit);
  const DenseState out = run(prep, DenseState::zero_state(n));
  CHECK(fidelity(out, DenseState{n, psi}) >= 1.0 - 1e-9);

  // A branch-containing diagram refuses the optimization.
  DiagramStore store2;
  const RootEdge branchy = store2.from_statevector(example1_vector());
  auto [cir2, report2] = synthesize_reduction(store2, branchy);
  const TowerOptResult refused = tower_optimization(cir2, report2);
  CHECK(!refused.applied);
  CHECK(refused.circuit == cir2);

  // An ancilla that is not the top wire (possible on imported circuits)
  // also refuses rather than renumbering.
  Circuit odd;
  odd.num_qubits = 3;
  odd.ancilla = 0;
  odd.add(make_z(1, {Control{0, Polarity::pos}}));
  CHECK(!tower_optimization(odd, report).applied);
}

TEST_CASE("|0...0> synthesizes to an empty circuit") {
  DiagramStore store;
  std::vector<Complex> psi(8, Complex{0, 0});
  psi[0] = Complex{1, 0};
  const RootEdge root = store.from_statevector(psi);
  auto [cir, report] = synthesize_reduction(store, root);
  CHECK(cir.gates.empty());
  CHECK(std::abs(report.final_scalar - Complex{1, 0}) < 1e-12);
}

TEST_CASE("reduction and preparation correctness on random states") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 1 + iter % 6;
    DiagramStore store;
    const auto psi = random_state(n, rng);
    const RootEdge root = store.from_statevector(psi);
    auto [cir, report] = synthesize_reduction(store, root);

    CHECK(reduction_amplitude(cir, psi) >= 1.0 - 1e-9);
    CHECK(closed_block_norm(cir, psi) <= 1e-9);
    CHECK(std::abs(std::abs(report.final_scalar * root.weight.scalar) - 1.0) < 1e-9);

    const Circuit prep = preparation_from_reduction(cir, report, root, false);
    const DenseState prepared =
        run(prep, DenseState::basis_state(n + 1, std::size_t{1} << n));
    CHECK(fidelity(prepared, DenseState::with_ancilla(psi, true)) >= 1.0 - 1e-9);

    // Visit budget.
    const auto p = store.reduced_path_count(root).convert_to<std::size_t>();
    CHECK(report.node_visits <= n * p + 1);
    CHECK(report.paths_traversed == p);
  }
}

TEST_CASE("fix_global_phase gives an entrywise match") {
  std::mt19937_64 rng(54);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 1 + iter % 10;
    DiagramStore store;
    const auto psi = random_state(n, rng);
    const RootEdge root = store.from_statevector(psi);
    const Circuit prep = synthesize_preparation(store, root, true);
    const DenseState prepared =
        run(prep, DenseState::basis_state(n + 1, std::size_t{1} << n));
    const DenseState target = DenseState::with_ancilla(psi, true);
    CHECK(max_abs_diff(prepared.amplitudes, target.amplitudes) <= 1e-9);
  }
}

TEST_CASE("gate budgets hold on a random corpus") {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 2 + iter % 5;
    DiagramStore store;
    const auto psi = random_state(n, rng);
    const RootEdge root = store.from_statevector(psi);
    auto [cir, report] = synthesize_reduction(store, root);
    const auto p = store.reduced_path_count(root).convert_to<std::size_t>();

    std::size_t g1 = 0, g2 = 0, g3 = 0, g4 = 0;
    for (const auto& [arity, count] : report.gate_histogram) {
      if (arity == 1) g1 = count;
      else if (arity == 2) g2 = count;
      else if (arity == 3) g3 = count;
      else g4 += count;
    }
    CHECK(g4 <= 3 * p);
    CHECK(g3 <= n * n * p);
    CHECK(g2 <= 3 * n * p);
    CHECK(g1 <= n + 2 * p);
  }
}
