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

#include "limprep/limtdd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

namespace limprep {

namespace {

constexpr int kMaxLevel = 33;  // factor bits of a level-1 weight fit one u64

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t pack_factors(const Lim& w) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const std::uint64_t code = (w.factors[i].x ? 2u : 0u) | (w.factors[i].z ? 1u : 0u);
    bits |= code << (2 * i);
  }
  return bits;
}

/// Lim over k+1 qubits: `top` on the new qubit, `rest` on the others.
Lim extend_weight(PauliFactor top, const Lim& rest) {
  Lim out;
  out.scalar = rest.scalar;
  out.factors.reserve(rest.factors.size() + 1);
  out.factors.push_back(top);
  out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
  return out;
}

int compare_scalar(const Complex& a, const Complex& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (!approx_equal(ma, mb)) {
    return ma < mb ? -1 : 1;
  }
  const double pa = phase_arg(a);
  const double pb = phase_arg(b);
  if (std::abs(pa - pb) <= kTol) {
    return 0;
  }
  return pa < pb ? -1 : 1;
}

/// Total order on candidate high labels: factor bit-pairs from the top
/// factor down, then scalar by (magnitude, phase argument in [0, 2*pi)).
int compare_label(const Lim& a, const Lim& b) {
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const int ca = (a.factors[i].x ? 2 : 0) | (a.factors[i].z ? 1 : 0);
    const int cb = (b.factors[i].x ? 2 : 0) | (b.factors[i].z ? 1 : 0);
    if (ca != cb) {
      return ca < cb ? -1 : 1;
    }
  }
  return compare_scalar(a.scalar, b.scalar);
}

}  // namespace

std::size_t DiagramStore::NodeKeyHash::operator()(const NodeKey& k) const {
  std::uint64_t h = 0x2545f4914f6cdd1dull;
  h = hash_mix(h, static_cast<std::uint64_t>(k.level));
  h = hash_mix(h, (static_cast<std::uint64_t>(k.lo_target) << 32) | k.hi_target);
  h = hash_mix(h, k.lo_bits);
  h = hash_mix(h, k.hi_bits);
  h = hash_mix(h, k.lo_re);
  h = hash_mix(h, k.lo_im);
  h = hash_mix(h, k.hi_re);
  h = hash_mix(h, k.hi_im);
  h = hash_mix(h, k.zero_flags);
  return static_cast<std::size_t>(h);
}

DiagramStore::DiagramStore() {
  nodes_.push_back(Node{0, Edge::zero(), Edge::zero()});  // terminal
}

Complex DiagramStore::intern_scalar(const Complex& c) {
  if (!(std::abs(c.real()) < 1e8 && std::abs(c.imag()) < 1e8)) {
    return c;  // outside the grid range; merging for such weights is best-effort
  }
  const auto cell_re = static_cast<std::int64_t>(std::llround(c.real() / kTol));
  const auto cell_im = static_cast<std::int64_t>(std::llround(c.imag() / kTol));
  for (std::int64_t dr = -1; dr <= 1; ++dr) {
    for (std::int64_t di = -1; di <= 1; ++di) {
      const std::uint64_t key =
          hash_mix(static_cast<std::uint64_t>(cell_re + dr), static_cast<std::uint64_t>(cell_im + di));
      auto it = scalar_cells_.find(key);
      if (it == scalar_cells_.end()) {
        continue;
      }
      for (const Complex& existing : it->second) {
        if (approx_equal(existing, c)) {
          return existing;
        }
      }
    }
  }
  const std::uint64_t home =
      hash_mix(static_cast<std::uint64_t>(cell_re), static_cast<std::uint64_t>(cell_im));
  scalar_cells_[home].push_back(c);
  return c;
}

DiagramStore::NodeKey DiagramStore::key_of(int level, const Edge& low, const Edge& high) const {
  NodeKey k{};
  k.level = level;
  k.lo_target = low.target;
  k.hi_target = high.target;
  k.zero_flags = static_cast<std::uint8_t>((low.is_zero() ? 1 : 0) | (high.is_zero() ? 2 : 0));
  if (!low.is_zero()) {
    k.lo_bits = pack_factors(*low.weight);
    k.lo_re = std::bit_cast<std::uint64_t>(low.weight->scalar.real());
    k.lo_im = std::bit_cast<std::uint64_t>(low.weight->scalar.imag());
  }
  if (!high.is_zero()) {
    k.hi_bits = pack_factors(*high.weight);
    k.hi_re = std::bit_cast<std::uint64_t>(high.weight->scalar.real());
    k.hi_im = std::bit_cast<std::uint64_t>(high.weight->scalar.imag());
  }
  return k;
}

NodeId DiagramStore::insert_node(int level, Edge low, Edge high) {
  if (level < 1 || level > kMaxLevel) {
    throw ContractViolation("insert_node: level out of range");
  }
  if (low.is_zero() && high.is_zero()) {
    throw ContractViolation("insert_node: both edges ZERO");
  }
  // ZERO edges target the sibling's node by convention.
  if (low.is_zero()) {
    low.target = high.target;
  }
  if (high.is_zero()) {
    high.target = low.target;
  }
  for (const Edge* e : {&low, &high}) {
    if (e->is_zero()) {
      continue;
    }
    if (e->target >= nodes_.size() || nodes_[e->target].level != level - 1) {
      throw ContractViolation("insert_node: successor level mismatch");
    }
    if (e->weight->num_qubits() != static_cast<std::size_t>(level - 1)) {
      throw ContractViolation("insert_node: weight arity mismatch");
    }
  }
  if (!low.is_zero()) {
    low.weight->scalar = intern_scalar(low.weight->scalar);
  }
  if (!high.is_zero()) {
    high.weight->scalar = intern_scalar(high.weight->scalar);
  }
  const NodeKey key = key_of(level, low, high);
  if (auto it = unique_.find(key); it != unique_.end()) {
    return it->second;
  }
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{level, std::move(low), std::move(high)});
  unique_.emplace(key, id);
  return id;
}

Edge DiagramStore::make_node(int level, Edge e0, Edge e1) {
  if (e0.is_zero() && e1.is_zero()) {
    throw ContractViolation("make_node: both edges ZERO");
  }

  // One-sided zero: the surviving branch is stored on the low side; an X on
  // the returned weight restores the original orientation if needed.
  if (e0.is_zero() || e1.is_zero()) {
    const bool zero_was_low = e0.is_zero();
    Edge& alive = zero_was_low ? e1 : e0;
    Lim carried = std::move(*alive.weight);
    const NodeId child = alive.target;
    const NodeId id =
        insert_node(level, Edge::to(lim_identity(level - 1), child), Edge{std::nullopt, child});
    Lim out = extend_weight(zero_was_low ? kPauliX : kPauliI, carried);
    out.scalar = intern_scalar(out.scalar);
    return Edge::to(std::move(out), id);
  }

  // Branch nodes get a fixed child order; the swap is compensated by an X on
  // the returned weight's top position.
  bool swapped = false;
  if (e0.target != e1.target && e0.target > e1.target) {
    std::swap(e0, e1);
    swapped = true;
  }

  const Lim w0 = *e0.weight;
  Lim h = lim_mul(lim_inverse(w0), *e1.weight);
  h.scalar = intern_scalar(h.scalar);

  Lim label;
  std::optional<Lim> comp;  // maps the stored-label node state back to N(h)
  const std::size_t k = static_cast<std::size_t>(level) - 1;
  if (e0.target == e1.target) {
    // Symmetry set {h, -h, h^-1, -h^-1}; the inverses are the child-swap
    // images. Pick the minimum under the label order.
    Lim minus_h = h;
    minus_h.scalar = intern_scalar(-h.scalar);
    Lim h_inv = lim_inverse(h);
    h_inv.scalar = intern_scalar(h_inv.scalar);
    Lim minus_h_inv = h_inv;
    minus_h_inv.scalar = intern_scalar(-h_inv.scalar);

    const Lim comp_sign = extend_weight(kPauliZ, lim_identity(k));
    const Lim comp_swap = extend_weight(kPauliX, h);
    struct Candidate {
      const Lim* label;
      std::optional<Lim> comp;
    };
    Candidate cands[4] = {
        {&h, std::nullopt},
        {&minus_h, comp_sign},
        {&h_inv, comp_swap},
        {&minus_h_inv, lim_mul(comp_swap, comp_sign)},
    };
    const Candidate* best = &cands[0];
    for (int i = 1; i < 4; ++i) {
      if (compare_label(*cands[i].label, *best->label) < 0) {
        best = &cands[i];
      }
    }
    label = *best->label;
    comp = best->comp;
  } else {
    // Normalize the high scalar's phase into [0, pi); a -1 is absorbed as a
    // Z on the returned weight's top position.
    if (phase_arg(h.scalar) >= M_PI) {
      label = h;
      label.scalar = intern_scalar(-h.scalar);
      comp = extend_weight(kPauliZ, lim_identity(k));
    } else {
      label = h;
    }
  }

  const NodeId id = insert_node(level, Edge::to(lim_identity(k), e0.target),
                                Edge::to(std::move(label), e1.target));

  Lim out = extend_weight(kPauliI, w0);
  if (comp) {
    out = lim_mul(out, *comp);
  }
  if (swapped) {
    out = lim_mul(extend_weight(kPauliX, lim_identity(k)), out);
  }
  out.scalar = intern_scalar(out.scalar);
  return Edge::to(std::move(out), id);
}

RootEdge DiagramStore::from_statevector(std::span<const Complex> v, double tol) {
  const std::size_t dim = v.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ContractViolation("from_statevector: length must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxLevel - 1) {
    throw ContractViolation("from_statevector: too many qubits");
  }
  double vmax = 0.0;
  for (const Complex& a : v) {
    vmax = std::max(vmax, std::abs(a));
  }
  if (vmax == 0.0) {
    throw ContractViolation("from_statevector: all-zero vector is not a quantum state");
  }

  // Construction consumes the raw amplitudes with sub-tol values zeroed;
  // the separate grid-snapped copy only keys the subtree memo, so identical
  // subvectors (up to tol) share one canonicalization pass.
  const double delta = tol * std::max(1.0, vmax);
  std::vector<Complex> values(v.begin(), v.end());
  std::vector<Complex> snapped(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::abs(values[i]) <= delta) {
      values[i] = Complex{0.0, 0.0};
      snapped[i] = Complex{0.0, 0.0};
      continue;
    }
    double re = std::round(values[i].real() / delta) * delta;
    double im = std::round(values[i].imag() / delta) * delta;
    if (re == 0.0) re = 0.0;  // normalize -0.0 for byte-wise key comparison
    if (im == 0.0) im = 0.0;
    snapped[i] = Complex{re, im};
  }

  struct MemoEntry {
    std::size_t offset;
    std::size_t len;
    Edge edge;
  };
  std::unordered_map<std::uint64_t, std::vector<MemoEntry>> memo;

  auto build = [&](auto&& self, int k, std::size_t offset) -> Edge {
    const std::size_t len = std::size_t{1} << k;
    if (k == 0) {
      const Complex amp = values[offset];
      if (amp == Complex{0.0, 0.0}) {
        return Edge::zero();
      }
      return Edge::to(Lim{intern_scalar(amp), {}}, terminal());
    }
    const std::uint64_t h = fnv1a(snapped.data() + offset, len * sizeof(Complex));
    if (auto it = memo.find(h); it != memo.end()) {
      for (const MemoEntry& entry : it->second) {
        if (entry.len == len &&
            std::memcmp(snapped.data() + entry.offset, snapped.data() + offset,
                        len * sizeof(Complex)) == 0) {
          return entry.edge;
        }
      }
    }
    Edge lo = self(self, k - 1, offset);
    Edge hi = self(self, k - 1, offset + len / 2);
    Edge out = (lo.is_zero() && hi.is_zero()) ? Edge::zero()
                                              : make_node(k, std::move(lo), std::move(hi));
    memo[h].push_back(MemoEntry{offset, len, out});
    return out;
  };

  Edge top = build(build, n, 0);
  return RootEdge{std::move(*top.weight), top.target, static_cast<std::size_t>(n)};
}

std::vector<Complex> DiagramStore::to_statevector(const RootEdge& root) const {
  if (root.target >= nodes_.size() ||
      nodes_[root.target].level != static_cast<int>(root.num_qubits) ||
      root.weight.num_qubits() != root.num_qubits) {
    throw ContractViolation("to_statevector: malformed root edge");
  }
  std::unordered_map<NodeId, std::vector<Complex>> cache;
  auto eval = [&](auto&& self, NodeId id) -> const std::vector<Complex>& {
    if (auto it = cache.find(id); it != cache.end()) {
      return it->second;
    }
    const Node& nd = nodes_[id];
    std::vector<Complex> vec;
    if (id == terminal()) {
      vec = {Complex{1.0, 0.0}};
    } else {
      const std::size_t half = std::size_t{1} << (nd.level - 1);
      vec.assign(half * 2, Complex{0.0, 0.0});
      if (!nd.low.is_zero()) {
        auto part = lim_apply_dense(*nd.low.weight, self(self, nd.low.target));
        std::copy(part.begin(), part.end(), vec.begin());
      }
      if (!nd.high.is_zero()) {
        auto part = lim_apply_dense(*nd.high.weight, self(self, nd.high.target));
        std::copy(part.begin(), part.end(), vec.begin() + half);
      }
    }
    return cache.emplace(id, std::move(vec)).first->second;
  };
  return lim_apply_dense(root.weight, eval(eval, root.target));
}

std::size_t DiagramStore::node_count(const RootEdge& root) const {
  std::vector<NodeId> stack{root.target};
  std::vector<bool> seen(nodes_.size(), false);
  std::size_t count = 0;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) {
      continue;
    }
    seen[id] = true;
    ++count;
    if (id != terminal()) {
      stack.push_back(nodes_[id].low.target);
      stack.push_back(nodes_[id].high.target);
    }
  }
  return count;
}

PathCount DiagramStore::reduced_path_count(const RootEdge& root) const {
  std::unordered_map<NodeId, PathCount> memo;
  auto paths = [&](auto&& self, NodeId id) -> const PathCount& {
    if (auto it = memo.find(id); it != memo.end()) {
      return it->second;
    }
    PathCount p;
    if (id == terminal()) {
      p = 1;
    } else {
      const Node& nd = nodes_[id];
      if (nd.low.target == nd.high.target) {
        p = self(self, nd.low.target);
      } else {
        p = self(self, nd.low.target) + self(self, nd.high.target);
      }
    }
    return memo.emplace(id, std::move(p)).first->second;
  };
  return paths(paths, root.target);
}

std::string DiagramStore::dump(const RootEdge& root) const {
  std::vector<NodeId> ids;
  {
    std::vector<NodeId> stack{root.target};
    std::vector<bool> seen(nodes_.size(), false);
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      if (seen[id]) {
        continue;
      }
      seen[id] = true;
      ids.push_back(id);
      if (id != terminal()) {
        stack.push_back(nodes_[id].low.target);
        stack.push_back(nodes_[id].high.target);
      }
    }
  }
  std::sort(ids.begin(), ids.end(), std::greater<>());

  auto weight_str = [](const Edge& e) {
    return e.is_zero() ? std::string("ZERO") : lim_to_string(*e.weight);
  };
  std::ostringstream out;
  out << "root " << lim_to_string(root.weight) << " " << root.target << " " << root.num_qubits
      << "\n";
  for (const NodeId id : ids) {
    const Node& nd = nodes_[id];
    out << id << " " << nd.level << " low=(" << weight_str(nd.low) << "," << nd.low.target
        << ") high=(" << weight_str(nd.high) << "," << nd.high.target << ")\n";
  }
  return out.str();
}

}  // namespace limprep
