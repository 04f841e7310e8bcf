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

#include "limprep/statevector_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace limprep {

std::vector<Complex> read_statevector(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        return true;
      }
    }
    return false;
  };

  if (!next_line()) {
    throw ParseError("statevector file: missing qubit count line", 1);
  }
  long n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra) || n < 1 || n > 30) {
      throw ParseError("statevector file: line " + std::to_string(lineno) +
                           ": expected a qubit count between 1 and 30",
                       lineno);
    }
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!next_line()) {
      throw ParseError("statevector file: line " + std::to_string(lineno + 1) +
                           ": expected " + std::to_string(dim) + " amplitude lines, got " +
                           std::to_string(i),
                       lineno + 1);
    }
    std::istringstream ls(line);
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(ls >> re >> im) || (ls >> extra)) {
      throw ParseError("statevector file: line " + std::to_string(lineno) +
                           ": expected \"re im\"",
                       lineno);
    }
    v.emplace_back(re, im);
  }
  return v;
}

std::vector<Complex> read_statevector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open statevector file: " + path);
  }
  return read_statevector(in);
}

void write_statevector(std::ostream& out, std::span<const Complex> v) {
  const std::size_t dim = v.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw ContractViolation("write_statevector: length must be a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) {
    ++n;
  }
  out << n << "\n";
  char buf[80];
  for (const Complex& a : v) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", a.real(), a.imag());
    out << buf;
  }
}

void write_statevector_file(const std::string& path, std::span<const Complex> v) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open output file: " + path);
  }
  write_statevector(out, v);
}

}  // namespace limprep
