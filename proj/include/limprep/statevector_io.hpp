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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "limprep/numerics.hpp"

namespace limprep {

/// Statevector file format: line 1 holds n, then 2^n lines "re im" in index
/// order. The reader accepts scientific notation; ParseError carries the
/// offending line number.
std::vector<Complex> read_statevector(std::istream& in);
std::vector<Complex> read_statevector_file(const std::string& path);

/// Writes with 17 significant digits.
void write_statevector(std::ostream& out, std::span<const Complex> v);
void write_statevector_file(const std::string& path, std::span<const Complex> v);

}  // namespace limprep
