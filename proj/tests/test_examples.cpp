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
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sicdet/examples.hpp"

using namespace sicdet;
using namespace sicdet::examples;

namespace {

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("grid helpers") {
  const auto g = inclusive_grid(0.0, 1.0, 5);
  REQUIRE(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  const auto f = family_grid(0.068, 25);
  REQUIRE(f.size() == 24);  // the exact-zero point is dropped
  REQUIRE(f.front() == Catch::Approx(-0.068).margin(1e-15));
  REQUIRE(f.back() == Catch::Approx(0.068).margin(1e-15));
  for (double t : f) REQUIRE(std::abs(t) > 1e-15);

  REQUIRE(tripartite_partition_string(0) == "B C|A");
  REQUIRE(tripartite_partition_string(2) == "A B|C");
}

TEST_CASE("case study 1 computes the documented grid but not the quoted norm") {
  const ExampleResult r = run_example1();
  REQUIRE(r.number == 1);
  REQUIRE(r.assertions.size() == 4);

  // computed value at the symmetric point: sqrt(3), not the quoted 2.687
  REQUIRE(r.metrics.at("headline_norm") ==
          Catch::Approx(std::sqrt(3.0)).margin(1e-9));
  REQUIRE_FALSE(r.assertions[0].ok);

  // the closed form stays far from the computed norm across the grid
  REQUIRE(r.metrics.at("max_abs_diff") > 0.5);
  REQUIRE_FALSE(r.assertions[1].ok);

  // both stay above the trivial bound, as documented
  REQUIRE(r.metrics.at("min_norm") > 1.0);
  REQUIRE(r.assertions[2].ok);
  REQUIRE(r.metrics.at("min_closed_form") > 1.0);
  REQUIRE(r.assertions[3].ok);
  REQUIRE_FALSE(r.passed());

  REQUIRE(first_line(r.csv) == "b,c,trace_norm,closed_form,abs_diff");
  REQUIRE(line_count(r.csv) == 1 + 231);  // header + simplex points
}

TEST_CASE("case study 2 detects the shifted-product state at every t") {
  const ExampleResult r = run_example2();
  REQUIRE(r.passed());
  REQUIRE(r.metrics.at("min_margin") ==
          Catch::Approx(0.099253660841153474).margin(1e-9));
  REQUIRE(r.metrics.at("max_margin") ==
          Catch::Approx(0.1248552495334668).margin(1e-9));
  REQUIRE(first_line(r.csv) == "t,a,trace_norm,bound,margin,verdict");
  REQUIRE(line_count(r.csv) == 1 + 24);
}

TEST_CASE("case study 3 finds norms above 1 but NPT outer transposes") {
  const ExampleResult r = run_example3();
  REQUIRE(r.assertions.size() == 2);
  REQUIRE(r.assertions[0].ok);  // norms stay above 1
  REQUIRE(r.metrics.at("min_norm") > 1.0);
  REQUIRE(r.metrics.at("min_norm") < 1.3169633734);  // b = 0.95 upper bound

  // the middle-qubit transpose is PPT as documented, the outer two are not
  REQUIRE(r.metrics.at("min_pt_B") > -1e-12);
  REQUIRE(r.metrics.at("min_pt_A") < -0.02);
  REQUIRE(r.metrics.at("min_pt_C") < -0.02);
  REQUIRE_FALSE(r.assertions[1].ok);
  REQUIRE_FALSE(r.passed());
}

TEST_CASE("case study 4 best-over-grid margins at pinned visibilities") {
  // One pass over the documented parameter grids, keeping the best margin
  // at four visibilities. Mirrors the full sweep without scanning all p.
  const DensityState pure = noisy_332(1.0);
  const DensityState noise = noisy_332(0.0);
  const std::vector<double> ps{0.1, 0.40, 0.41, 1.0};
  std::vector<double> best(ps.size(), -1e300);
  std::vector<double> best_t3(ps.size()), best_t2(ps.size());

  const std::vector<std::vector<int>> rows{{1, 2}, {0, 2}, {0, 1}};
  const std::vector<std::vector<int>> cols{{0}, {1}, {2}};
  for (double t3 : family_grid(kGsic3StandardRange, 49)) {
    const Povm m3 = build_gsic(3, t3);
    const Povm m3c = conjugate(m3);
    const double a3 = gsic_parameter(m3);
    for (double t2 : family_grid(kGsic2StandardRange, 25)) {
      const Povm m2 = build_gsic(2, t2);
      const double a2 = gsic_parameter(m2);
      const double bound =
          (9.0 * a3 + 1.0) / 12.0 * std::sqrt((4.0 * a2 + 1.0) / 6.0);
      const std::vector<Povm> povms{m3, m3c, m2};
      const CorrelationTensor tp = correlation_tensor(pure, povms);
      const CorrelationTensor tn = correlation_tensor(noise, povms);
      for (std::size_t cut = 0; cut < 3; ++cut) {
        const Matrix up = matricize(tp, rows[cut], cols[cut]);
        const Matrix un = matricize(tn, rows[cut], cols[cut]);
        const Matrix delta = up - un;
        for (std::size_t k = 0; k < ps.size(); ++k) {
          const Matrix m = un + cplx{ps[k]} * delta;
          const double margin = trace_norm(m) - bound;
          if (margin > best[k]) {
            best[k] = margin;
            best_t3[k] = t3;
            best_t2[k] = t2;
          }
        }
      }
    }
  }

  REQUIRE(best[0] == Catch::Approx(-6.9593217732970281e-05).margin(1e-9));
  REQUIRE(best[1] == Catch::Approx(-3.377e-5).margin(1e-8));
  REQUIRE(best[2] == Catch::Approx(1.275e-4).margin(1e-7));
  REQUIRE(best[3] == Catch::Approx(0.017526727066719941).margin(1e-9));
  // At full visibility the optimum sits at the family range corners. The
  // opposite-sign corners tie to machine precision, so only the magnitude
  // of the winning parameters is stable.
  REQUIRE(std::abs(best_t3[3]) == Catch::Approx(0.012).margin(1e-12));
  REQUIRE(std::abs(best_t2[3]) == Catch::Approx(0.068).margin(1e-12));
}
