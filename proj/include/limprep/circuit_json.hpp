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

#include <string>
#include <string_view>

#include "limprep/circuit.hpp"

namespace limprep {

/// Schema: {num_qubits, ancilla, gates:[{kind, controls:[[q, "pos"|"neg"]],
/// target, params}]}. Unitary2 params are the 8 row-major re/im entries,
/// phase params the single angle. Round-trips bit-exactly.
std::string export_json(const Circuit& c);

/// Inverse of export_json. Throws ParseError with a byte offset for
/// malformed JSON and ContractViolation for schema or invariant violations.
Circuit import_json(std::string_view text);

}  // namespace limprep
