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
#include <string>
#include <vector>

#include "limprep/limtdd.hpp"
#include "limprep/numerics.hpp"

namespace limprep {

/// Seedable PRNG identifier recorded in CSV output for reproducibility.
inline constexpr const char* kBenchPrngName = "mt19937_64";

/// Normalized state reached from |0...0> by num_gates gates drawn uniformly
/// from {H, S, T on a random qubit; CX on a random distinct pair}.
/// Deterministic for a fixed (n, num_gates, seed).
std::vector<Complex> random_clifford_t_state(std::size_t n, std::size_t num_gates,
                                             std::uint64_t seed);

/// H on every qubit, then CZ between q_k and each of q_0..q_{k-1} for
/// k = 1..n-1, from |0...0>.
std::vector<Complex> vn_family_state(std::size_t n);

enum class BenchFamily { clifford_t, vn };
enum class BenchStatus { ok, failed, skipped_verify };

struct BenchRecord {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  double build_ms = 0.0;
  double synth_ms = 0.0;
  std::size_t nodes = 0;
  PathCount reduced_paths;
  std::size_t g1 = 0, g2 = 0, g3 = 0, g4plus = 0;
  double fidelity = 0.0;  // meaningful unless status == skipped_verify
  BenchStatus status = BenchStatus::ok;
};

struct BenchConfig {
  std::vector<std::size_t> qubit_counts;
  std::size_t instances_per_n = 20;
  /// Clifford+T gate count; 0 selects the default 3*n^2.
  std::size_t num_gates = 0;
  std::uint64_t base_seed = 0;  // instance i uses seed base_seed + i
  /// Preparation-fidelity checks are skipped above this payload size.
  std::size_t verify_max_qubits = 12;
  BenchFamily family = BenchFamily::clifford_t;
};

std::size_t default_clifford_t_gates(std::size_t n);

std::vector<BenchRecord> run_suite(const BenchConfig& config);

/// CSV with the fixed header
/// "n,seed,depth,build_ms,synth_ms,nodes,reduced_paths,g1,g2,g3,g4plus,fidelity,status"
/// preceded by a "# prng=..." comment, one row per record and an averages
/// row per n. Byte-identical across runs apart from the timing columns.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace limprep
