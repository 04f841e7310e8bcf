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

#include "limprep/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "limprep/simulator.hpp"
#include "limprep/synthesize.hpp"

namespace limprep {

namespace {

Mat2 hadamard_matrix() {
  const double f = 1.0 / std::sqrt(2.0);
  return Mat2{{f, 0}, {f, 0}, {f, 0}, {-f, 0}};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

std::string format_fidelity(double f) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12f", f);
  return buf;
}

const char* status_name(BenchStatus s) {
  switch (s) {
    case BenchStatus::ok:
      return "OK";
    case BenchStatus::failed:
      return "FAILED";
    case BenchStatus::skipped_verify:
      return "SKIPPED_VERIFY";
  }
  return "";
}

}  // namespace

std::size_t default_clifford_t_gates(std::size_t n) { return 3 * n * n; }

std::vector<Complex> random_clifford_t_state(std::size_t n, std::size_t num_gates,
                                             std::uint64_t seed) {
  if (n < 1) {
    throw ContractViolation("random_clifford_t_state: n >= 1 required");
  }
  std::mt19937_64 rng(seed);
  DenseState state = DenseState::zero_state(n);
  Circuit scratch;
  scratch.num_qubits = static_cast<std::uint32_t>(n);

  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<std::uint32_t> qubit_dist(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < num_gates; ++i) {
    int kind = kind_dist(rng);
    if (n == 1 && kind == 3) {
      kind = kind_dist(rng) % 3;  // no two-qubit gates on one qubit
    }
    const std::uint32_t q = qubit_dist(rng);
    switch (kind) {
      case 0:
        apply_gate(state, make_unitary(q, hadamard_matrix()));
        break;
      case 1:
        apply_gate(state, make_phase(q, M_PI / 2.0));
        break;
      case 2:
        apply_gate(state, make_phase(q, M_PI / 4.0));
        break;
      default: {
        std::uint32_t t = qubit_dist(rng);
        if (t == q) {
          t = (t + 1) % static_cast<std::uint32_t>(n);
        }
        apply_gate(state, make_x(t, {Control{q, Polarity::pos}}));
        break;
      }
    }
  }
  const double norm = state.norm();
  for (Complex& a : state.amplitudes) {
    a /= norm;
  }
  return std::move(state.amplitudes);
}

std::vector<Complex> vn_family_state(std::size_t n) {
  if (n < 1) {
    throw ContractViolation("vn_family_state: n >= 1 required");
  }
  DenseState state = DenseState::zero_state(n);
  for (std::uint32_t q = 0; q < n; ++q) {
    apply_gate(state, make_unitary(q, hadamard_matrix()));
  }
  for (std::uint32_t k = 1; k < n; ++k) {
    for (std::uint32_t j = 0; j < k; ++j) {
      apply_gate(state, make_z(j, {Control{k, Polarity::pos}}));
    }
  }
  return std::move(state.amplitudes);
}

std::vector<BenchRecord> run_suite(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (const std::size_t n : config.qubit_counts) {
    const std::size_t depth =
        config.family == BenchFamily::vn
            ? 0
            : (config.num_gates != 0 ? config.num_gates : default_clifford_t_gates(n));
    for (std::size_t inst = 0; inst < config.instances_per_n; ++inst) {
      const std::uint64_t seed = config.base_seed + inst;
      std::vector<Complex> psi = config.family == BenchFamily::vn
                                     ? vn_family_state(n)
                                     : random_clifford_t_state(n, depth, seed);

      BenchRecord rec;
      rec.n = n;
      rec.seed = seed;
      rec.depth = depth;

      DiagramStore store;
      auto t0 = std::chrono::steady_clock::now();
      const RootEdge root = store.from_statevector(psi);
      rec.build_ms = elapsed_ms(t0);
      rec.nodes = store.node_count(root);
      rec.reduced_paths = store.reduced_path_count(root);

      t0 = std::chrono::steady_clock::now();
      auto [reduction, report] = synthesize_reduction(store, root);
      rec.synth_ms = elapsed_ms(t0);

      for (const auto& [arity, count] : report.gate_histogram) {
        if (arity == 1) {
          rec.g1 = count;
        } else if (arity == 2) {
          rec.g2 = count;
        } else if (arity == 3) {
          rec.g3 = count;
        } else {
          rec.g4plus += count;
        }
      }

      if (n <= config.verify_max_qubits && n + 1 <= kSimMaxQubits) {
        const Circuit prep = preparation_from_reduction(reduction, report, root, false);
        DenseState out =
            run(prep, DenseState::basis_state(n + 1, std::size_t{1} << n));
        rec.fidelity = fidelity(DenseState::with_ancilla(psi, true), out);
        rec.status = rec.fidelity >= 1.0 - 1e-9 ? BenchStatus::ok : BenchStatus::failed;
      } else {
        rec.status = BenchStatus::skipped_verify;
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "# prng=" << kBenchPrngName << "\n";
  out << "n,seed,depth,build_ms,synth_ms,nodes,reduced_paths,g1,g2,g3,g4plus,fidelity,status\n";

  auto write_row = [&](const BenchRecord& r) {
    out << r.n << "," << r.seed << "," << r.depth << "," << format_ms(r.build_ms) << ","
        << format_ms(r.synth_ms) << "," << r.nodes << "," << r.reduced_paths.str() << "," << r.g1
        << "," << r.g2 << "," << r.g3 << "," << r.g4plus << ",";
    if (r.status != BenchStatus::skipped_verify) {
      out << format_fidelity(r.fidelity);
    }
    out << "," << status_name(r.status) << "\n";
  };

  std::size_t i = 0;
  while (i < records.size()) {
    const std::size_t n = records[i].n;
    std::size_t count = 0;
    double build = 0.0, synth = 0.0, nodes = 0.0, paths = 0.0;
    double g1 = 0.0, g2 = 0.0, g3 = 0.0, g4 = 0.0;
    double fid = 0.0;
    std::size_t fid_count = 0;
    std::size_t depth = records[i].depth;
    for (; i < records.size() && records[i].n == n; ++i, ++count) {
      const BenchRecord& r = records[i];
      write_row(r);
      build += r.build_ms;
      synth += r.synth_ms;
      nodes += static_cast<double>(r.nodes);
      paths += r.reduced_paths.convert_to<double>();
      g1 += static_cast<double>(r.g1);
      g2 += static_cast<double>(r.g2);
      g3 += static_cast<double>(r.g3);
      g4 += static_cast<double>(r.g4plus);
      if (r.status != BenchStatus::skipped_verify) {
        fid += r.fidelity;
        ++fid_count;
      }
    }
    const auto k = static_cast<double>(count);
    char buf[64];
    auto avg = [&](double total) {
      std::snprintf(buf, sizeof(buf), "%.3f", total / k);
      return std::string(buf);
    };
    out << n << ",avg," << depth << "," << avg(build) << "," << avg(synth) << "," << avg(nodes)
        << "," << avg(paths) << "," << avg(g1) << "," << avg(g2) << "," << avg(g3) << ","
        << avg(g4) << ",";
    if (fid_count > 0) {
      out << format_fidelity(fid / static_cast<double>(fid_count));
    }
    out << ",AVG\n";
  }
  return out.str();
}

}  // namespace limprep
