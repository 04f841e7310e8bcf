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

#include <doctest.h>

#include "limprep/lim.hpp"
#include "test_util.hpp"

using namespace limprep;
using namespace limprep::testing;

namespace {

Lim lim_of(Complex scalar, std::vector<PauliFactor> factors) {
  return Lim{scalar, std::move(factors)};
}

double max_entry_diff(const CMat& a, const CMat& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      m = std::max(m, std::abs(a[i][j] - b[i][j]));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("lim_mul normal form") {
  // X * Z = XZ with no sign.
  auto r = lim_mul(lim_of({1, 0}, {kPauliX}), lim_of({1, 0}, {kPauliZ}));
  CHECK(r.factors == std::vector<PauliFactor>{kPauliXZ});
  CHECK(r.scalar == Complex{1, 0});

  // Z * X = -XZ, checked against the 2x2 matrices.
  r = lim_mul(lim_of({1, 0}, {kPauliZ}), lim_of({1, 0}, {kPauliX}));
  CHECK(r.factors == std::vector<PauliFactor>{kPauliXZ});
  CHECK(r.scalar == Complex{-1, 0});
  CHECK(max_entry_diff(lim_matrix(r),
                       matmul(factor_matrix(kPauliZ), factor_matrix(kPauliX))) == 0.0);

  // Scalar subgroup.
  r = lim_mul(lim_of({2, 1}, {kPauliI, kPauliI}), lim_of({0, 3}, {kPauliI, kPauliI}));
  CHECK(r.scalar == Complex{2, 1} * Complex{0, 3});
  CHECK(r.is_identity_factors());

  CHECK_THROWS_AS(lim_mul(lim_identity(2), lim_identity(3)), ContractViolation);
}

TEST_CASE("lim_inverse") {
  auto r = lim_inverse(lim_of({2, 0}, {kPauliZ}));
  CHECK(r.scalar == Complex{0.5, 0});
  CHECK(r.factors == std::vector<PauliFactor>{kPauliZ});

  // (XZ)^2 = -I, so the inverse of XZ is -XZ.
  r = lim_inverse(lim_of({1, 0}, {kPauliXZ}));
  CHECK(r.scalar == Complex{-1, 0});
  CHECK(r.factors == std::vector<PauliFactor>{kPauliXZ});

  r = lim_inverse(lim_identity(3));
  CHECK(r.scalar == Complex{1, 0});
  CHECK(r.is_identity_factors());

  CHECK_THROWS_AS(lim_inverse(lim_of({0, 0}, {kPauliX})), ContractViolation);
}

TEST_CASE("lim_dagger") {
  auto r = lim_dagger(lim_of({0, 1}, {kPauliZ}));
  CHECK(r.scalar == Complex{0, -1});
  CHECK(r.factors == std::vector<PauliFactor>{kPauliZ});

  r = lim_dagger(lim_of({1, 0}, {kPauliXZ}));
  CHECK(r.scalar == Complex{-1, 0});

  r = lim_dagger(lim_of({1, 0}, {kPauliX}));
  CHECK(r.scalar == Complex{1, 0});
}

TEST_CASE("(XZ)*(XZ) = -identity") {
  const auto r = lim_mul(lim_of({1, 0}, {kPauliXZ}), lim_of({1, 0}, {kPauliXZ}));
  CHECK(r.scalar == Complex{-1, 0});
  CHECK(r.is_identity_factors());
}

TEST_CASE("lim_apply_dense basics") {
  std::vector<Complex> v{{1, 0}, {1, 0}};
  auto r = lim_apply_dense(lim_of({1, 0}, {kPauliZ}), v);
  CHECK(r == std::vector<Complex>{{1, 0}, {-1, 0}});

  r = lim_apply_dense(lim_of({1, 0}, {kPauliX}), std::vector<Complex>{{1, 0}, {0, 0}});
  CHECK(r == std::vector<Complex>{{0, 0}, {1, 0}});

  // High edge of the y1 node in the worked three-qubit example.
  const double s = 1.0 / std::sqrt(2.0);
  r = lim_apply_dense(lim_of({s, 0}, {kPauliZ}), v);
  CHECK(std::abs(r[0] - Complex{s, 0}) < 1e-15);
  CHECK(std::abs(r[1] - Complex{-s, 0}) < 1e-15);

  CHECK_THROWS_AS(lim_apply_dense(lim_identity(2), v), ContractViolation);
}

TEST_CASE("homomorphism against Kronecker matrices") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t k = 1 + iter % 4;
    const Lim a = random_pauli_lim(k, rng);
    const Lim b = random_pauli_lim(k, rng);
    const CMat expected = matmul(lim_matrix(a), lim_matrix(b));
    CHECK(max_entry_diff(lim_matrix(lim_mul(a, b)), expected) < 1e-12);
  }
}

TEST_CASE("homomorphism is exact for Gaussian-integer scalars") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = 1 + iter % 3;
    Lim a = random_pauli_lim(k, rng);
    Lim b = random_pauli_lim(k, rng);
    a.scalar = Complex(coeff(rng), coeff(rng));
    b.scalar = Complex(coeff(rng), coeff(rng));
    if (a.scalar == Complex{0, 0} || b.scalar == Complex{0, 0}) {
      continue;
    }
    CHECK(max_entry_diff(lim_matrix(lim_mul(a, b)), matmul(lim_matrix(a), lim_matrix(b))) == 0.0);
  }
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = 1 + iter % 4;
    const Lim a = random_pauli_lim(k, rng);
    const Lim id = lim_mul(a, lim_inverse(a));
    CHECK(id.is_identity_factors());
    CHECK(std::abs(id.scalar - Complex{1, 0}) < 1e-12);

    const Lim back = lim_dagger(lim_dagger(a));
    CHECK(back.factors == a.factors);
    CHECK(std::abs(back.scalar - a.scalar) < 1e-12);

    // dagger agrees with the conjugate-transposed matrix.
    const CMat m = lim_matrix(a);
    CMat mt(m.size(), std::vector<Complex>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        mt[i][j] = std::conj(m[j][i]);
      }
    }
    CHECK(max_entry_diff(lim_matrix(lim_dagger(a)), mt) < 1e-12);
  }
}

TEST_CASE("lim_apply_dense agrees with explicit matrix application") {
  std::mt19937_64 rng(10);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t k = 1 + iter % 4;
    const Lim a = random_pauli_lim(k, rng);
    const auto v = random_state(k, rng);
    CHECK(max_abs_diff(lim_apply_dense(a, v), matvec(lim_matrix(a), v)) < 1e-12);
  }
}

TEST_CASE("lim rendering") {
  CHECK(lim_to_string(lim_of({0.5, -0.5}, {kPauliZ, kPauliI, kPauliX})) == "(0.5-0.5i)*Z.I.X");
  CHECK(lim_to_string(lim_of({1, 0}, {})) == "(1+0i)");
  CHECK(lim_to_string(lim_of({-1, 0}, {kPauliXZ})) == "(-1+0i)*XZ");
}
