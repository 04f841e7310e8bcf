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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "limprep/lim.hpp"
#include "limprep/numerics.hpp"

namespace limprep {

using NodeId = std::uint32_t;
using PathCount = boost::multiprecision::cpp_int;

/// Diagram edge. A disengaged weight is the distinguished ZERO weight; a
/// ZERO edge always targets the same node as its sibling edge.
struct Edge {
  std::optional<Lim> weight;
  NodeId target = 0;

  bool is_zero() const { return !weight.has_value(); }

  static Edge zero() { return Edge{std::nullopt, 0}; }
  static Edge to(Lim w, NodeId t) { return Edge{std::move(w), t}; }
};

/// Non-terminal node at level k (qubit q_{k-1}); both successors live one
/// level below, the terminal node counting as level 0.
struct Node {
  int level = 0;
  Edge low;
  Edge high;
};

/// Unique incoming edge of a diagram; its weight spans all n qubits.
struct RootEdge {
  Lim weight;
  NodeId target = 0;
  std::size_t num_qubits = 0;
};

/// Hash-consed LimTDD store. Nodes are immutable once created; make_node is
/// the canonicalizing constructor and from_statevector the bulk builder.
/// Construction is single-writer; read-only queries on a settled store may
/// run from any thread.
class DiagramStore {
 public:
  DiagramStore();

  NodeId terminal() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  int level(NodeId id) const { return nodes_.at(id).level; }

  /// Canonicalizing constructor. Returns an edge (w, v) whose semantics are
  /// |0> (x) [e0] + |1> (x) [e1]. The stored node has an identity low weight
  /// (one-sided-zero nodes keep the surviving branch on the low side, ZERO on
  /// the high side); shared-child high labels are reduced to the canonical
  /// representative of their sign/inverse/child-swap symmetry set; branch
  /// nodes are oriented by child id and their high scalar phase normalized
  /// into [0, pi). Throws ContractViolation if both inputs are ZERO or the
  /// child levels do not match level-1.
  Edge make_node(int level, Edge e0, Edge e1);

  /// Unique-table insertion without canonicalization. This is the low-level
  /// primitive behind make_node; it only normalizes ZERO-edge targets and
  /// interns scalars. Intended for tests and hand-built diagrams.
  NodeId insert_node(int level, Edge low, Edge high);

  /// Builds the canonical diagram for a 2^n amplitude vector. Values within
  /// tol of zero become exact zeros and the rest snap to a tol-sized grid
  /// before construction; identical snapped subvectors share nodes via a
  /// content memo. Throws ContractViolation for all-zero or non-power-of-two
  /// input.
  RootEdge from_statevector(std::span<const Complex> v, double tol = kTol);

  /// Evaluates the diagram back to a dense 2^n vector.
  std::vector<Complex> to_statevector(const RootEdge& root) const;

  /// Number of nodes reachable from the root, terminal included.
  std::size_t node_count(const RootEdge& root) const;

  /// Root-to-terminal paths in the reduced diagram (parallel edges between
  /// the same node pair merged), counted exactly.
  PathCount reduced_path_count(const RootEdge& root) const;

  /// Debug dump: root line "root weight target n", then one node per line
  /// "id level low=(weight,target) high=(weight,target)".
  std::string dump(const RootEdge& root) const;

  /// Canonical representative of c in the shared scalar table.
  Complex intern_scalar(const Complex& c);

 private:
  struct NodeKey {
    int level;
    NodeId lo_target;
    NodeId hi_target;
    // Packed factor bits plus scalar bit patterns; zero edges flagged.
    std::uint64_t lo_bits;
    std::uint64_t hi_bits;
    std::uint64_t lo_re, lo_im, hi_re, hi_im;
    std::uint8_t zero_flags;

    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };

  NodeKey key_of(int level, const Edge& low, const Edge& high) const;

  std::vector<Node> nodes_;
  std::unordered_map<NodeKey, NodeId, NodeKeyHash> unique_;
  // Scalar interning: grid cell -> values; lookups scan neighbor cells.
  std::unordered_map<std::uint64_t, std::vector<Complex>> scalar_cells_;
};

}  // namespace limprep
