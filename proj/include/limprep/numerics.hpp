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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace limprep {

using Complex = std::complex<double>;

/// Shared relative tolerance for amplitude and weight comparisons.
inline constexpr double kTol = 1e-10;

/// Tight tolerance for checks that hold to machine precision (unitarity,
/// identity-rotation elision).
inline constexpr double kTightTol = 1e-12;

inline bool approx_equal(double a, double b, double tol = kTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool approx_equal(const Complex& a, const Complex& b, double tol = kTol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool approx_zero(const Complex& a, double tol = kTol) {
  return std::abs(a) <= tol;
}

/// Phase argument normalized into [0, 2*pi).
inline double phase_arg(const Complex& c) {
  double t = std::arg(c);
  if (t < 0.0) {
    t += 2.0 * M_PI;
  }
  // arg(c) == -0.0 or rounding right below 2*pi both mean "phase zero".
  if (t >= 2.0 * M_PI) {
    t = 0.0;
  }
  return t;
}

/// Thrown when an operation precondition is violated.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when external input (statevector file, circuit JSON) is malformed.
/// `location` is a 1-based line number or byte offset, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t location = 0)
      : std::runtime_error(what), location_(location) {}
  std::size_t location() const { return location_; }

 private:
  std::size_t location_;
};

}  // namespace limprep
