// Copyright 2026 The sicdet developers
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

#include <cstddef>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sicdet/state.hpp"
#include "support.hpp"

using namespace sicdet;
using testsupport::random_density;
using testsupport::random_matrix;

namespace {

// Embed a single-subsystem operator into the full space by padding with
// identities on every other factor.
Matrix embed(const Matrix& op, const std::vector<std::size_t>& dims,
             std::size_t sub) {
  Matrix full = Matrix::identity(1);
  for (std::size_t s = 0; s < dims.size(); ++s)
    full = kron(full, s == sub ? op : Matrix::identity(dims[s]));
  return full;
}

}  // namespace

TEST_CASE("density state validation") {
  const std::vector<std::size_t> dims{2, 2};

  Matrix ok(4, 4);
  for (std::size_t i = 0; i < 4; ++i) ok(i, i) = 0.25;
  REQUIRE_NOTHROW(DensityState(dims, ok));

  SECTION("dimension mismatch") {
    REQUIRE_THROWS_AS(DensityState({2, 3}, ok), std::invalid_argument);
  }
  SECTION("not hermitian") {
    Matrix bad = ok;
    bad(0, 1) = cplx{0.0, 1e-6};
    REQUIRE_THROWS_AS(DensityState(dims, bad), std::invalid_argument);
  }
  SECTION("trace off") {
    Matrix bad = ok;
    bad(0, 0) = 0.3;
    REQUIRE_THROWS_AS(DensityState(dims, bad), std::invalid_argument);
  }
  SECTION("negative eigenvalue") {
    Matrix bad = ok;  // keep trace 1 but push one eigenvalue negative
    bad(0, 0) = 0.5;
    bad(1, 1) = -0.25;
    bad(2, 2) = 0.5;
    REQUIRE_THROWS_AS(DensityState(dims, bad), std::invalid_argument);
  }
  SECTION("validation can be skipped for intermediate data") {
    Matrix bad = ok;
    bad(0, 0) = 0.9;
    REQUIRE_NOTHROW(DensityState(dims, bad, StateTolerances{}, false));
  }
}

TEST_CASE("partial trace on product states recovers the factors") {
  const Matrix a = random_density(2);
  const Matrix b = random_density(3);
  const Matrix c = random_density(2);
  const Matrix rho = kron(kron(a, b), c);
  const std::vector<std::size_t> dims{2, 3, 2};

  REQUIRE(max_abs_diff(partial_trace(rho, dims, {0}), a) < 1e-13);
  REQUIRE(max_abs_diff(partial_trace(rho, dims, {1}), b) < 1e-13);
  REQUIRE(max_abs_diff(partial_trace(rho, dims, {2}), c) < 1e-13);
  REQUIRE(max_abs_diff(partial_trace(rho, dims, {0, 2}), kron(a, c)) < 1e-13);
  REQUIRE(max_abs_diff(partial_trace(rho, dims, {0, 1, 2}), rho) < 1e-15);
}

TEST_CASE("partial trace preserves trace and hermiticity") {
  const Matrix rho = random_density(12);
  const std::vector<std::size_t> dims{2, 3, 2};
  for (std::size_t s = 0; s < 3; ++s) {
    const Matrix red = partial_trace(rho, dims, {s});
    REQUIRE(red.trace().real() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(hermiticity_deviation(red) < 1e-13);
  }
  const DensityState st(dims, rho);
  const DensityState red = partial_trace(st, {1, 2});
  REQUIRE(red.dims() == std::vector<std::size_t>{3, 2});
  REQUIRE(max_abs_diff(red.matrix(), partial_trace(rho, dims, {1, 2})) == 0.0);
}

TEST_CASE("partial transpose properties") {
  const std::vector<std::size_t> dims{2, 3};
  const Matrix rho = random_density(6);

  const Matrix pt0 = partial_transpose(rho, dims, 0);
  REQUIRE(max_abs_diff(partial_transpose(pt0, dims, 0), rho) == 0.0);
  REQUIRE(pt0.trace().real() == Catch::Approx(1.0).margin(1e-13));
  REQUIRE(hermiticity_deviation(pt0) < 1e-13);

  // transposing both subsystems equals the full transpose
  const Matrix both = partial_transpose(pt0, dims, 1);
  REQUIRE(max_abs_diff(both, rho.transpose()) < 1e-15);

  // on product states the partial transpose acts on one factor only
  const Matrix a = random_density(2), b = random_density(3);
  REQUIRE(max_abs_diff(partial_transpose(kron(a, b), dims, 0),
                       kron(a.transpose(), b)) < 1e-15);
  REQUIRE(max_abs_diff(partial_transpose(kron(a, b), dims, 1),
                       kron(a, b.transpose())) < 1e-15);
}

TEST_CASE("contract_subsystem matches operator embedding") {
  const std::vector<std::size_t> dims{2, 3, 2};
  const Matrix rho = random_density(12);
  for (std::size_t s = 0; s < dims.size(); ++s) {
    const Matrix op = random_matrix(dims[s], dims[s]);  // need not be Hermitian
    const Matrix got = contract_subsystem(rho, dims, s, op);

    std::vector<std::size_t> keep;
    for (std::size_t u = 0; u < dims.size(); ++u)
      if (u != s) keep.push_back(u);
    const Matrix want = partial_trace(embed(op, dims, s) * rho, dims, keep);
    REQUIRE(max_abs_diff(got, want) < 1e-12);
  }
}

TEST_CASE("chained contractions reproduce product expectations") {
  const std::vector<std::size_t> dims{2, 2, 3};
  const Matrix rho = random_density(12);
  const Matrix o0 = random_matrix(2, 2);
  const Matrix o1 = random_matrix(2, 2);
  const Matrix o2 = random_matrix(3, 3);

  Matrix step = contract_subsystem(rho, dims, 0, o0);
  step = contract_subsystem(step, {2, 3}, 0, o1);
  step = contract_subsystem(step, {3}, 0, o2);
  REQUIRE(step.rows() == 1);

  const cplx want = (kron(kron(o0, o1), o2) * rho).trace();
  REQUIRE(std::abs(step(0, 0) - want) < 1e-12);
}

TEST_CASE("white noise mixing") {
  const std::vector<std::size_t> dims{2, 2};
  const DensityState st(dims, random_density(4));

  const DensityState full = mix_white_noise(st, 1.0);
  REQUIRE(max_abs_diff(full.matrix(), st.matrix()) == 0.0);

  const DensityState none = mix_white_noise(st, 0.0);
  Matrix mixed(4, 4);
  for (std::size_t i = 0; i < 4; ++i) mixed(i, i) = 0.25;
  REQUIRE(max_abs_diff(none.matrix(), mixed) < 1e-15);

  const DensityState half = mix_white_noise(st, 0.5);
  REQUIRE(half.matrix()(0, 1) == 0.5 * st.matrix()(0, 1));
  REQUIRE(half.matrix().trace().real() == Catch::Approx(1.0).margin(1e-13));
}
