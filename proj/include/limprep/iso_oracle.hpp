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

#include <optional>
#include <span>

#include "limprep/lim.hpp"

namespace limprep {

/// Brute-force isomorphism search used as a verification oracle: returns a
/// LIM g with w = g * u if one exists in the Pauli-with-scalar subgroup,
/// enumerating all 4^k factor strings (k <= 6; cost 4^k * 2^k). The scalar
/// is fixed from the first nonzero entry of each candidate image.
std::optional<Lim> iso_oracle(std::span<const Complex> u, std::span<const Complex> w,
                              double tol = kTol);

}  // namespace limprep
