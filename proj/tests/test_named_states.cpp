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

#include <cmath>
#include <cstddef>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sicdet/linalg.hpp"
#include "sicdet/named_states.hpp"

using namespace sicdet;

TEST_CASE("bell mixture of three qubits") {
  REQUIRE_THROWS_AS(bell_mixture_3q(0.7, 0.7), std::domain_error);
  REQUIRE_THROWS_AS(bell_mixture_3q(-0.1, 0.2), std::domain_error);

  const DensityState st = bell_mixture_3q(1.0 / 3.0, 1.0 / 3.0);
  REQUIRE(st.dims() == std::vector<std::size_t>{2, 2, 2});

  // reduced state of the first qubit: diag((1+c)/2, (1-c)/2)
  const Matrix ra = partial_trace(st.matrix(), st.dims(), {0});
  REQUIRE(ra(0, 0).real() == Catch::Approx(2.0 / 3.0).margin(1e-14));
  REQUIRE(ra(1, 1).real() == Catch::Approx(1.0 / 3.0).margin(1e-14));
  REQUIRE(std::abs(ra(0, 1)) < 1e-15);

  // pure corner: all weight on the AB pair
  const DensityState corner = bell_mixture_3q(0.0, 0.0);
  const Matrix sq = corner.matrix() * corner.matrix();
  REQUIRE(sq.trace().real() == Catch::Approx(1.0).margin(1e-13));
}

TEST_CASE("bell mixture of four qubits") {
  REQUIRE_THROWS_AS(bell_mixture_4q(0.5, 0.2, 0.2), std::domain_error);
  REQUIRE_THROWS_AS(bell_mixture_4q(-0.2, 0.6, 0.6), std::domain_error);

  const double th = 1.0 / 3.0;
  const DensityState st = bell_mixture_4q(th, th, th);
  REQUIRE(st.dims().size() == 4);
  REQUIRE(st.matrix().trace().real() == Catch::Approx(1.0).margin(1e-13));

  // x = 1: Bell pair on AB times |00> on CD, separable across AB|CD
  const DensityState x1 = bell_mixture_4q(1.0, 0.0, 0.0);
  const Matrix red_cd = partial_trace(x1.matrix(), x1.dims(), {2, 3});
  REQUIRE(red_cd(0, 0).real() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("unextendible product basis complement state") {
  const DensityState st = upb_shift_state();
  const auto evs = hermitian_eigenvalues(st.matrix());
  for (std::size_t k = 0; k < 4; ++k) {
    REQUIRE(evs[k] == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(evs[4 + k] == Catch::Approx(0.25).margin(1e-12));
  }

  // the four product vectors lie in the kernel
  const double s = 1.0 / std::sqrt(2.0);
  const Matrix zero(2, 1, {1.0, 0.0});
  const Matrix one(2, 1, {0.0, 1.0});
  const Matrix plus(2, 1, {s, s});
  const Matrix minus(2, 1, {s, -s});
  for (const Matrix& v : {kron(kron(zero, one), plus),
                          kron(kron(one, plus), zero),
                          kron(kron(plus, zero), one),
                          kron(kron(minus, minus), minus)}) {
    const Matrix image = st.matrix() * v;
    REQUIRE(image.max_abs() < 1e-14);
  }

  // positive under every single-qubit partial transpose
  for (std::size_t q = 0; q < 3; ++q)
    REQUIRE(min_eigenvalue(partial_transpose(st.matrix(), st.dims(), q)) >
            -1e-12);
}

TEST_CASE("ppt sigma family") {
  for (double bad : {0.0, 1.0, -0.1, 1.2})
    REQUIRE_THROWS_AS(ppt_sigma(bad), std::domain_error);

  for (double b : {0.05, 0.3, 0.5, 0.95}) {
    const DensityState st = ppt_sigma(b);
    REQUIRE(st.matrix().trace().real() == Catch::Approx(1.0).margin(1e-13));
    // positive under the middle-qubit partial transpose for every b
    REQUIRE(min_eigenvalue(partial_transpose(st.matrix(), st.dims(), 1)) >
            -1e-12);
  }

  // the outer-qubit transposes go negative by a known amount
  auto min_pt_a = [](double b) {
    const DensityState st = ppt_sigma(b);
    return min_eigenvalue(partial_transpose(st.matrix(), st.dims(), 0));
  };
  REQUIRE(min_pt_a(0.05) == Catch::Approx(-1.011198e-02).margin(1e-8));
  REQUIRE(min_pt_a(0.3) == Catch::Approx(-2.262208e-02).margin(1e-8));
  REQUIRE(min_pt_a(0.95) == Catch::Approx(-8.865637e-03).margin(1e-8));
}

TEST_CASE("noisy qutrit-qutrit-qubit family") {
  REQUIRE_THROWS_AS(noisy_332(-0.01), std::domain_error);
  REQUIRE_THROWS_AS(noisy_332(1.01), std::domain_error);

  const DensityState flat = noisy_332(0.0);
  REQUIRE(flat.dims() == std::vector<std::size_t>{3, 3, 2});
  Matrix mixed = Matrix::identity(18);
  mixed *= cplx{1.0 / 18.0};
  REQUIRE(max_abs_diff(flat.matrix(), mixed) < 1e-15);

  const DensityState pure = noisy_332(1.0);
  const Matrix sq = pure.matrix() * pure.matrix();
  REQUIRE(sq.trace().real() == Catch::Approx(1.0).margin(1e-13));
  // the ket has support on five basis states with weight 1/5 each;
  // |111> sits at flat index (1*3 + 1)*2 + 1 = 9
  REQUIRE(pure.matrix()(9, 9).real() == Catch::Approx(0.2).margin(1e-14));
  REQUIRE(std::abs(pure.matrix()(3, 3)) < 1e-15);
}

TEST_CASE("named state dispatch") {
  REQUIRE(build_named_state("upb_shifts", {}).total_dim() == 8);
  REQUIRE(build_named_state("noisy_332", {{"p", 0.5}}).total_dim() == 18);
  REQUIRE(build_named_state("bell_mixture_3q", {{"b", 0.2}, {"c", 0.3}})
              .total_dim() == 8);
  REQUIRE_THROWS_AS(build_named_state("bell_mixture_3q", {{"b", 0.2}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(build_named_state("no_such_family", {}),
                    std::invalid_argument);
}
