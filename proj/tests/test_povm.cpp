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
#include "sicdet/povm.hpp"

using namespace sicdet;

TEST_CASE("qubit sic povm algebra") {
  const Povm p = build_sic_qubit();
  REQUIRE(p.dim == 2);
  REQUIRE(p.elements.size() == 4);

  const auto rep = validate(p, 1e-10);
  REQUIRE(rep.valid);
  REQUIRE(rep.complete);
  REQUIRE(rep.all_psd);
  REQUIRE(rep.purity_mean == Catch::Approx(0.25).margin(1e-12));
  REQUIRE(rep.purity_spread < 1e-12);
  REQUIRE(rep.overlap_mean == Catch::Approx(1.0 / 12.0).margin(1e-12));
  REQUIRE(rep.overlap_spread < 1e-12);

  // every element is half a rank-one projector: eigenvalues {0, 1/2}
  for (const auto& m : p.elements) {
    const auto evs = hermitian_eigenvalues(m);
    REQUIRE(evs[0] == Catch::Approx(0.0).margin(1e-13));
    REQUIRE(evs[1] == Catch::Approx(0.5).margin(1e-13));
  }
  REQUIRE(p.descriptor() == "sic2");
}

TEST_CASE("gsic families satisfy the two-point trace conditions") {
  for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
    const double hi = d == 2 ? 0.067 : 0.0119;
    for (int k = -4; k <= 4; ++k) {
      const double t = hi * k / 4.0;
      const Povm p = build_gsic(d, t);
      const auto rep = validate(p, 1e-10);
      INFO("d=" << d << " t=" << t);
      REQUIRE(rep.valid);

      const double a = gsic_parameter(p);
      const double want =
          d == 2 ? 0.125 + 27.0 * t * t : 1.0 / 27.0 + 128.0 * t * t;
      REQUIRE(a == Catch::Approx(want).margin(1e-12));

      // off-diagonal overlaps must equal (1 - d a) / (d (d^2 - 1))
      const double dd = static_cast<double>(d);
      REQUIRE(rep.overlap_mean ==
              Catch::Approx((1.0 - dd * a) / (dd * (dd * dd - 1.0)))
                  .margin(1e-12));
      REQUIRE(rep.overlap_spread < 1e-10);
    }
  }
  REQUIRE(build_gsic(2, 0.0).descriptor() == "gsic2:t=0.000000");
  REQUIRE_THROWS_AS(build_gsic(4, 0.0), std::invalid_argument);
}

TEST_CASE("gsic range policies") {
  SECTION("standard window") {
    REQUIRE_NOTHROW(build_gsic(2, kGsic2StandardRange));
    REQUIRE_NOTHROW(build_gsic(2, -kGsic2StandardRange));
    REQUIRE_THROWS_AS(build_gsic(2, 0.069), std::domain_error);
    REQUIRE_NOTHROW(build_gsic(3, kGsic3StandardRange));
    REQUIRE_THROWS_AS(build_gsic(3, 0.013), std::domain_error);
    REQUIRE_THROWS_AS(build_gsic(3, -0.013), std::domain_error);
  }
  SECTION("psd-only window is wider and asymmetric for d=3") {
    REQUIRE_NOTHROW(build_gsic(2, 0.068, GsicRangePolicy::PsdOnly));
    // exact qubit boundary: all elements stay positive semidefinite
    const double t_edge = 1.0 / (6.0 * std::sqrt(6.0));
    REQUIRE_NOTHROW(build_gsic(2, t_edge, GsicRangePolicy::PsdOnly));
    REQUIRE_THROWS_AS(build_gsic(2, 0.069, GsicRangePolicy::PsdOnly),
                      std::domain_error);
    REQUIRE_NOTHROW(build_gsic(3, 0.0129, GsicRangePolicy::PsdOnly));
    REQUIRE_THROWS_AS(build_gsic(3, -0.0125, GsicRangePolicy::PsdOnly),
                      std::domain_error);
  }
  SECTION("unchecked accepts anything") {
    REQUIRE_NOTHROW(build_gsic(2, 0.3, GsicRangePolicy::Unchecked));
    const Povm p = build_gsic(2, 0.3, GsicRangePolicy::Unchecked);
    REQUIRE_FALSE(validate(p).all_psd);
  }
}

TEST_CASE("typo closing element breaks completeness at one entry") {
  for (double t : {0.01, 0.05, -0.03}) {
    const Povm p = build_gsic2_typo_closing(t);
    Matrix sum(2, 2);
    for (const auto& m : p.elements) sum += m;
    sum -= Matrix::identity(2);
    std::size_t off = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (std::abs(sum(i, j)) > 1e-13) ++off;
    REQUIRE(off == 1);
    REQUIRE(std::abs(sum(1, 1)) ==
            Catch::Approx(6.0 * std::sqrt(2.0) * std::abs(t)).margin(1e-12));
    REQUIRE_FALSE(validate(p).complete);
  }
}

TEST_CASE("renormalization scales elements by sqrt(d(d+1)/2)") {
  const Povm base = build_sic_qubit();
  const Povm r = renormalize(base);
  REQUIRE(r.renormalized);
  REQUIRE(r.completeness_scale() == Catch::Approx(std::sqrt(3.0)).margin(1e-15));
  REQUIRE(max_abs_diff(r.elements[2], std::sqrt(3.0) * base.elements[2]) <
          1e-15);
  REQUIRE(r.descriptor() == "sic2:renorm");
  REQUIRE_THROWS_AS(renormalize(r), std::logic_error);

  // gsic_parameter is defined relative to the completeness scale, so it is
  // unchanged by renormalization
  const Povm g = build_gsic(2, 0.04);
  REQUIRE(gsic_parameter(renormalize(g)) ==
          Catch::Approx(gsic_parameter(g)).margin(1e-13));
}

TEST_CASE("conjugation is an involution preserving the algebra") {
  const Povm g = build_gsic(3, 0.01);
  const Povm c = conjugate(g);
  REQUIRE(validate(c).valid);
  REQUIRE(gsic_parameter(c) == Catch::Approx(gsic_parameter(g)).margin(1e-13));
  Povm back = conjugate(c);
  for (std::size_t k = 0; k < g.elements.size(); ++k)
    REQUIRE(max_abs_diff(back.elements[k], g.elements[k]) == 0.0);
}

TEST_CASE("gsic_parameter rejects non-uniform purity") {
  Povm mixed = build_sic_qubit();
  mixed.elements[0] *= cplx{1.1};
  REQUIRE_THROWS_AS(gsic_parameter(mixed), std::invalid_argument);
}

TEST_CASE("validation report flags a broken custom set") {
  Povm p;
  p.dim = 2;
  p.kind = PovmKind::Custom;
  p.elements = {Matrix(2, 2), Matrix(2, 2)};
  p.elements[0](0, 0) = 1.0;
  p.elements[0](1, 1) = 0.9;  // sum misses identity
  p.elements[1](1, 1) = -0.05;
  p.elements[1](0, 1) = cplx{0.0, 0.2};  // not Hermitian
  p.elements[1](1, 0) = cplx{0.0, 0.2};

  const auto rep = validate(p, 1e-10);
  REQUIRE_FALSE(rep.valid);
  REQUIRE_FALSE(rep.complete);
  REQUIRE_FALSE(rep.all_psd);
  REQUIRE(rep.hermiticity_deviation > 0.1);
  REQUIRE(rep.completeness_deviation > 0.1);
  REQUIRE(rep.min_eigenvalue < -0.01);
}
