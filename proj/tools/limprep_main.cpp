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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "limprep/bench.hpp"
#include "limprep/circuit_json.hpp"
#include "limprep/limtdd.hpp"
#include "limprep/qasm.hpp"
#include "limprep/simulator.hpp"
#include "limprep/statevector_io.hpp"
#include "limprep/synthesize.hpp"

namespace {

using namespace limprep;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailure = 3;
constexpr double kVerifyThreshold = 1.0 - 1e-9;

std::vector<Complex> normalized(std::vector<Complex> v) {
  double norm = 0.0;
  for (const Complex& a : v) {
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    throw ParseError("statevector is all-zero");
  }
  for (Complex& a : v) {
    a /= norm;
  }
  return v;
}

/// "A..B", "A-B" or "A" into an inclusive list.
std::vector<std::size_t> parse_qubit_range(const std::string& text) {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-');
    skip = 1;
  }
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoul(text);
    } else {
      lo = std::stoul(text.substr(0, sep));
      hi = std::stoul(text.substr(sep + skip));
    }
  } catch (const std::exception&) {
    throw ParseError("cannot parse qubit range: " + text);
  }
  if (lo < 1 || hi < lo) {
    throw ParseError("invalid qubit range: " + text);
  }
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    out.push_back(n);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open output file: " + path);
  }
  out << content;
}

void print_stats_line(std::size_t nodes, const PathCount& paths, const Circuit& circuit) {
  std::size_t g1 = 0, g2 = 0, g3 = 0, g4 = 0;
  for (const auto& [arity, count] : arity_stats(circuit)) {
    if (arity == 1) {
      g1 = count;
    } else if (arity == 2) {
      g2 = count;
    } else if (arity == 3) {
      g3 = count;
    } else {
      g4 += count;
    }
  }
  std::cout << "nodes=" << nodes << " paths=" << paths.str() << " gates=" << circuit.gates.size()
            << " g1=" << g1 << " g2=" << g2 << " g3=" << g3 << " g4plus=" << g4 << "\n";
}

struct PipelineOptions {
  std::string in_path;
  std::string out_prefix;
  std::string format = "both";
  double tol = kTol;
  bool verify = false;
  bool tower_opt = false;
  bool fix_global_phase = false;
};

void write_circuit_files(const PipelineOptions& opt, const Circuit& circuit) {
  if (opt.format == "qasm" || opt.format == "both") {
    write_text_file(opt.out_prefix + ".qasm", export_qasm3(circuit));
  }
  if (opt.format == "json" || opt.format == "both") {
    write_text_file(opt.out_prefix + ".json", export_json(circuit));
  }
}

int run_pipeline(const PipelineOptions& opt, bool prepare_direction) {
  const std::vector<Complex> psi = read_statevector_file(opt.in_path);
  const std::size_t n_qubits = [&] {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < psi.size()) ++n;
    return n;
  }();

  DiagramStore store;
  const RootEdge root = store.from_statevector(psi, opt.tol);
  auto [reduction, report] = synthesize_reduction(store, root);

  Circuit working = reduction;
  bool towered = false;
  if (opt.tower_opt) {
    TowerOptResult t = tower_optimization(reduction, report);
    towered = t.applied;
    if (t.applied) {
      working = std::move(t.circuit);
    } else {
      std::cerr << "tower optimization refused: diagram has branch nodes\n";
    }
  }

  Circuit output;
  if (prepare_direction) {
    Circuit prep = preparation_from_reduction(working, report, root, opt.fix_global_phase);
    if (prep.ancilla) {
      // Hardware starts from all-|0>; bring the ancilla to |1> first.
      output.num_qubits = prep.num_qubits;
      output.ancilla = prep.ancilla;
      output.add(make_x(*prep.ancilla));
      for (Gate& g : prep.gates) {
        output.add(std::move(g));
      }
    } else {
      output = std::move(prep);
    }
  } else {
    output = std::move(working);
  }

  print_stats_line(store.node_count(root), store.reduced_path_count(root), output);
  if (towered) {
    std::cout << "tower optimization applied: ancilla removed\n";
  }
  write_circuit_files(opt, output);

  if (opt.verify) {
    if (output.num_qubits > kSimMaxQubits) {
      std::cerr << "verification refused: " << output.num_qubits << " qubits exceed the "
                << kSimMaxQubits << "-qubit simulator cap\n";
      return kExitInputError;
    }
    const std::vector<Complex> target_psi = normalized(psi);
    double fid = 0.0;
    if (prepare_direction) {
      DenseState out = run(output, DenseState::zero_state(output.num_qubits));
      const DenseState target = output.ancilla
                                    ? DenseState::with_ancilla(target_psi, true)
                                    : DenseState{n_qubits, target_psi};
      fid = fidelity(target, out);
    } else {
      DenseState init = output.ancilla ? DenseState::with_ancilla(target_psi, true)
                                       : DenseState{n_qubits, target_psi};
      DenseState out = run(output, std::move(init));
      fid = std::abs(out.amplitudes[output.ancilla ? (std::size_t{1} << n_qubits) : 0]);
    }
    std::cout << "verify fidelity=" << fid << "\n";
    if (fid < kVerifyThreshold) {
      std::cerr << "verification failed\n";
      return kExitVerifyFailure;
    }
  }
  return kExitOk;
}

int run_stats(const std::string& in_path, double tol) {
  const std::vector<Complex> psi = read_statevector_file(in_path);
  DiagramStore store;
  const RootEdge root = store.from_statevector(psi, tol);
  std::cout << "nodes=" << store.node_count(root)
            << " paths=" << store.reduced_path_count(root).str() << "\n";
  std::cout << store.dump(root);
  return kExitOk;
}

int run_verify(const std::string& circuit_path, const std::string& in_path,
               const std::string& direction) {
  std::ifstream in(circuit_path);
  if (!in) {
    throw ParseError("cannot open circuit file: " + circuit_path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Circuit circuit = import_json(buffer.str());

  const std::vector<Complex> psi = normalized(read_statevector_file(in_path));
  const std::size_t n_qubits = [&] {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < psi.size()) ++n;
    return n;
  }();
  const std::size_t data_qubits = circuit.num_qubits - (circuit.ancilla ? 1 : 0);
  if (data_qubits != n_qubits) {
    throw ParseError("circuit acts on " + std::to_string(data_qubits) +
                     " data qubits but the statevector has " + std::to_string(n_qubits));
  }
  if (circuit.num_qubits > kSimMaxQubits) {
    throw ParseError("circuit exceeds the simulator cap");
  }

  auto prepare_fidelity = [&]() {
    DenseState out = run(circuit, DenseState::zero_state(circuit.num_qubits));
    const DenseState target = circuit.ancilla ? DenseState::with_ancilla(psi, true)
                                              : DenseState{n_qubits, psi};
    return fidelity(target, out);
  };
  auto reduce_fidelity = [&]() {
    DenseState init = circuit.ancilla ? DenseState::with_ancilla(psi, true)
                                      : DenseState{n_qubits, psi};
    DenseState out = run(circuit, std::move(init));
    return std::abs(out.amplitudes[circuit.ancilla ? (std::size_t{1} << n_qubits) : 0]);
  };

  double fid = 0.0;
  std::string matched = direction;
  if (direction == "prepare") {
    fid = prepare_fidelity();
  } else if (direction == "reduce") {
    fid = reduce_fidelity();
  } else {
    const double fp = prepare_fidelity();
    const double fr = reduce_fidelity();
    fid = std::max(fp, fr);
    matched = fp >= fr ? "prepare" : "reduce";
  }
  std::cout << "fidelity=" << fid << " direction=" << matched << "\n";
  return fid >= kVerifyThreshold ? kExitOk : kExitVerifyFailure;
}

struct FamilyOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t gates = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_family(const FamilyOptions& opt) {
  if (opt.n < 1 || opt.n > kSimMaxQubits) {
    throw ParseError("family: --n must be in [1, " + std::to_string(kSimMaxQubits) + "]");
  }
  std::vector<Complex> psi;
  if (opt.kind == "clifford-t") {
    const std::size_t gates = opt.gates != 0 ? opt.gates : default_clifford_t_gates(opt.n);
    psi = random_clifford_t_state(opt.n, gates, opt.seed);
  } else if (opt.kind == "vn") {
    psi = vn_family_state(opt.n);
  } else if (opt.kind == "basis") {
    psi.assign(std::size_t{1} << opt.n, Complex{0.0, 0.0});
    psi[0] = Complex{1.0, 0.0};
  } else if (opt.kind == "uniform") {
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << opt.n));
    psi.assign(std::size_t{1} << opt.n, Complex{amp, 0.0});
  } else {
    throw ParseError("unknown family kind: " + opt.kind);
  }
  write_statevector_file(opt.out_path, psi);
  std::cout << "wrote " << psi.size() << " amplitudes to " << opt.out_path << "\n";
  return kExitOk;
}

struct BenchOptions {
  std::string family = "clifford-t";
  std::string n_range;
  std::size_t instances = 20;
  std::size_t gates = 0;
  std::uint64_t seed = 0;
  std::size_t verify_max_n = 12;
  std::string out_path;
};

int run_bench(const BenchOptions& opt) {
  BenchConfig config;
  config.qubit_counts = parse_qubit_range(opt.n_range);
  config.instances_per_n = opt.instances;
  config.num_gates = opt.gates;
  config.base_seed = opt.seed;
  config.verify_max_qubits = opt.verify_max_n;
  if (opt.family == "vn") {
    config.family = BenchFamily::vn;
  } else if (opt.family != "clifford-t") {
    throw ParseError("unknown bench family: " + opt.family);
  }
  for (const std::size_t n : config.qubit_counts) {
    if (n > kSimMaxQubits) {
      throw ParseError("bench: state generation is capped at " +
                       std::to_string(kSimMaxQubits) + " qubits");
    }
  }

  const std::vector<BenchRecord> records = run_suite(config);
  const std::string csv = to_csv(records);
  if (opt.out_path == "-") {
    std::cout << csv;
  } else {
    write_text_file(opt.out_path, csv);
    std::cout << "wrote " << records.size() << " records to " << opt.out_path << "\n";
  }
  for (const BenchRecord& r : records) {
    if (r.status == BenchStatus::failed) {
      std::cerr << "bench: fidelity check failed for n=" << r.n << " seed=" << r.seed << "\n";
      return kExitVerifyFailure;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limprep: quantum state preparation via LimTDD circuit synthesis"};
  app.require_subcommand(1);

  PipelineOptions prep_opt;
  PipelineOptions reduce_opt;
  auto add_pipeline_flags = [](CLI::App* cmd, PipelineOptions& opt) {
    cmd->add_option("--in", opt.in_path, "statevector file")->required();
    cmd->add_option("--out", opt.out_prefix, "output path prefix (.qasm/.json appended)")
        ->required();
    cmd->add_option("--format", opt.format, "qasm, json or both")
        ->check(CLI::IsMember({"qasm", "json", "both"}))
        ->capture_default_str();
    cmd->add_option("--tol", opt.tol, "amplitude tolerance")
        ->check(CLI::Range(1e-300, 1e-3))
        ->capture_default_str();
    cmd->add_flag("--verify", opt.verify, "simulate the emitted circuit and check fidelity");
    cmd->add_flag("--tower-opt", opt.tower_opt, "drop the ancilla for branch-free diagrams");
  };

  CLI::App* prepare = app.add_subcommand("prepare", "synthesize a preparation circuit");
  add_pipeline_flags(prepare, prep_opt);
  prepare->add_flag("--fix-global-phase", prep_opt.fix_global_phase,
                    "append a phase gate so the prepared state matches entrywise");

  CLI::App* reduce = app.add_subcommand("reduce", "synthesize the |psi> -> |0...0> reduction");
  add_pipeline_flags(reduce, reduce_opt);

  std::string stats_in;
  double stats_tol = kTol;
  CLI::App* stats = app.add_subcommand("stats", "diagram metrics and dump");
  stats->add_option("--in", stats_in, "statevector file")->required();
  stats->add_option("--tol", stats_tol, "amplitude tolerance")
      ->check(CLI::Range(1e-300, 1e-3))
      ->capture_default_str();

  std::string verify_circuit, verify_in, verify_direction = "auto";
  CLI::App* verify = app.add_subcommand("verify", "check a circuit JSON against a statevector");
  verify->add_option("--circuit", verify_circuit, "circuit JSON file")->required();
  verify->add_option("--in", verify_in, "statevector file")->required();
  verify->add_option("--direction", verify_direction, "prepare, reduce or auto")
      ->check(CLI::IsMember({"auto", "prepare", "reduce"}))
      ->capture_default_str();

  FamilyOptions family_opt;
  CLI::App* family = app.add_subcommand("family", "write a reference statevector file");
  family->add_option("kind", family_opt.kind, "clifford-t, vn, basis or uniform")->required();
  family->add_option("--n", family_opt.n, "qubit count")->required();
  family->add_option("--gates", family_opt.gates, "clifford-t gate count (0 = 3n^2)");
  family->add_option("--seed", family_opt.seed, "PRNG seed");
  family->add_option("--out", family_opt.out_path, "output statevector file")->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "run the measurement harness, write CSV");
  bench->add_option("--family", bench_opt.family, "clifford-t or vn")->capture_default_str();
  bench->add_option("--n", bench_opt.n_range, "qubit range, e.g. 4..10")->required();
  bench->add_option("--instances", bench_opt.instances, "instances per n")
      ->capture_default_str();
  bench->add_option("--gates", bench_opt.gates, "clifford-t gate count (0 = 3n^2)");
  bench->add_option("--seed", bench_opt.seed, "base seed");
  bench->add_option("--verify-max-n", bench_opt.verify_max_n,
                    "skip fidelity checks above this qubit count")
      ->capture_default_str();
  bench->add_option("--out", bench_opt.out_path, "CSV path, - for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (app.got_subcommand(prepare)) {
      return run_pipeline(prep_opt, true);
    }
    if (app.got_subcommand(reduce)) {
      return run_pipeline(reduce_opt, false);
    }
    if (app.got_subcommand(stats)) {
      return run_stats(stats_in, stats_tol);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_circuit, verify_in, verify_direction);
    }
    if (app.got_subcommand(family)) {
      return run_family(family_opt);
    }
    if (app.got_subcommand(bench)) {
      return run_bench(bench_opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
