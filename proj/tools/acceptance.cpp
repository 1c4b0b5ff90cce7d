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

// Acceptance checks for the toolkit. Each numbered criterion prints one
// PASS or FAIL line with the computed and expected quantities. Checks are
// implemented as specified even where the computation contradicts a
// documented reference value, so some lines fail by design of the
// reference material; see README for the analysis of each failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sicdet/sicdet.hpp"

namespace {

using namespace sicdet;

int failures = 0;

void report(int number, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", number, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) { return format_double(x); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<Povm> renorm_sic3() {
  const Povm sic = renormalize(build_sic_qubit());
  return {sic, sic, sic};
}

// 1. Symmetric Bell-pair mixture, MarginalKron with A distinguished,
//    renormalized qubit SIC: trace norm within 2.687 +/- 0.005, under 1 s.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const DensityState st = bell_mixture_3q(1.0 / 3.0, 1.0 / 3.0);
  const Matrix m =
      tripartite_correlation(st, renorm_sic3(), 0, TripartiteMode::MarginalKron);
  const double norm = trace_norm(m);
  const double elapsed = seconds_since(start);
  const bool ok = std::abs(norm - 2.687) <= 0.005 && elapsed < 1.0;
  report(1, ok,
         "trace norm " + fmt(norm) + " vs documented 2.687 +/- 0.005, runtime " +
             fmt(elapsed) + " s (limit 1)");
}

// 2. Computed MarginalKron norm vs the documented closed form on the
//    0.05-step (b, c) simplex grid: agreement to 1e-8, grid minimum > 1.
void criterion2(const examples::ExampleResult& ex1) {
  const double diff = ex1.metrics.at("max_abs_diff");
  const double min_norm = ex1.metrics.at("min_norm");
  const double min_cf = ex1.metrics.at("min_closed_form");
  const bool ok = diff <= 1e-8 && min_norm > 1.0 && min_cf > 1.0;
  report(2, ok,
         "max |computed - closed form| " + fmt(diff) +
             " (tolerance 1e-8), grid minima: computed " + fmt(min_norm) +
             ", closed form " + fmt(min_cf) + " (both must exceed 1)");
}

// 3. The computed MarginalKron matrix for the symmetric mixture matches the
//    documented factorization diag(sqrt3/3, 2sqrt3/9, ...) x Q to 1e-12.
void criterion3() {
  const DensityState st = bell_mixture_3q(1.0 / 3.0, 1.0 / 3.0);
  const Matrix computed =
      tripartite_correlation(st, renorm_sic3(), 0, TripartiteMode::MarginalKron);

  const double s3 = std::sqrt(3.0);
  Matrix diag(4, 4);
  diag(0, 0) = s3 / 3.0;
  for (std::size_t k = 1; k < 4; ++k) diag(k, k) = 2.0 * s3 / 9.0;
  Matrix q(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q(i, j) = 1.0 / 8.0;
  q(0, 0) = 3.0 / 8.0;
  for (std::size_t k = 1; k < 4; ++k) {
    q(0, k) = 5.0 / 24.0;
    q(k, 0) = 5.0 / 24.0;
  }
  q(1, 1) = 5.0 / 24.0;
  q(2, 3) = 5.0 / 24.0;
  q(3, 2) = 5.0 / 24.0;

  const double diff = max_abs_diff(computed, kron(diag, q));
  report(3, diff <= 1e-12,
         "max entry deviation from the documented factorization " + fmt(diff) +
             " (tolerance 1e-12)");
}

// 4. PPT bound entangled family: criterion norm above 1 on the whole b
//    grid and all single-subsystem partial transposes PSD to 1e-10.
void criterion4(const examples::ExampleResult& ex3) {
  const double min_norm = ex3.metrics.at("min_norm");
  const double worst_pt = std::min({ex3.metrics.at("min_pt_A"),
                                    ex3.metrics.at("min_pt_B"),
                                    ex3.metrics.at("min_pt_C")});
  const bool ok = min_norm > 1.0 && worst_pt >= -1e-10;
  report(4, ok,
         "grid-min criterion norm " + fmt(min_norm) +
             " (must exceed 1), worst partial-transpose eigenvalue " +
             fmt(worst_pt) + " (must be >= -1e-10); per-subsystem minima A " +
             fmt(ex3.metrics.at("min_pt_A")) + ", B " +
             fmt(ex3.metrics.at("min_pt_B")) + ", C " +
             fmt(ex3.metrics.at("min_pt_C")));
}

// 5. Shifted-product state with the conjugated qubit family: margin over
//    ((4a+1)/6)^{3/2} positive at all 24 valid grid points.
void criterion5(const examples::ExampleResult& ex2) {
  const double min_margin = ex2.metrics.at("min_margin");
  report(5, min_margin > 0.0,
         "minimum margin over the t grid " + fmt(min_margin) +
             " (must be positive); maximum " + fmt(ex2.metrics.at("max_margin")));
}

// 6. Noisy two-qutrit-plus-qubit state: grid-optimized detection threshold
//    within [0.30, 0.40]; detection at p=1, none at p=0.1; under 60 s.
void criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const examples::ExampleResult ex4 = examples::run_example4();
  const double elapsed = seconds_since(start);
  const double p_star = ex4.metrics.at("p_star");
  const double m1 = ex4.metrics.at("margin_p100");
  const double m01 = ex4.metrics.at("margin_p010");
  const bool ok = p_star >= 0.30 && p_star <= 0.40 && m1 > 0.0 && m01 <= 0.0 &&
                  elapsed < 60.0;
  report(6, ok,
         "threshold p* " + fmt(p_star) +
             " (documented range [0.30, 0.40]), margin at p=1 " + fmt(m1) +
             " (>0), at p=0.1 " + fmt(m01) + " (<=0), sweep runtime " +
             fmt(elapsed) + " s (limit 60); margins at p=0.40/0.41: " +
             fmt(ex4.metrics.at("margin_p040")) + " / " +
             fmt(ex4.metrics.at("margin_p041")));
}

// 7. Measurement algebra: SIC overlap relations to 1e-10; both parameter
//    families uniform to 1e-10 over 20 sampled t with purity a(t) matching
//    the quadratic laws to 1e-12; the misprinted closing element breaks
//    completeness by exactly 6 sqrt2 |t| in a single entry.
void criterion7() {
  bool ok = true;
  std::string detail;

  const Povm sic = build_sic_qubit();
  const PovmValidationReport rep = validate(sic, 1e-10);
  const bool sic_ok = rep.valid && std::abs(rep.purity_mean - 0.25) <= 1e-10 &&
                      std::abs(rep.overlap_mean - 1.0 / 12.0) <= 1e-10;
  ok = ok && sic_ok;
  detail += "sic2 valid=" + std::string(rep.valid ? "yes" : "no") +
            " purity " + fmt(rep.purity_mean) + " overlap " +
            fmt(rep.overlap_mean);

  double worst_a2 = 0.0, worst_a3 = 0.0;
  bool family_ok = true;
  for (double t : examples::family_grid(0.067, 20)) {
    const Povm g = build_gsic(2, t);
    family_ok = family_ok && validate(g, 1e-10).valid;
    worst_a2 = std::max(worst_a2,
                        std::abs(gsic_parameter(g) - (0.125 + 27.0 * t * t)));
  }
  for (double t : examples::family_grid(0.0119, 20)) {
    const Povm g = build_gsic(3, t);
    family_ok = family_ok && validate(g, 1e-10).valid;
    worst_a3 = std::max(worst_a3, std::abs(gsic_parameter(g) -
                                           (1.0 / 27.0 + 128.0 * t * t)));
  }
  ok = ok && family_ok && worst_a2 <= 1e-12 && worst_a3 <= 1e-12;
  detail += "; families valid=" + std::string(family_ok ? "yes" : "no") +
            " a(t) deviation d2 " + fmt(worst_a2) + " d3 " + fmt(worst_a3);

  bool typo_ok = true;
  for (double t : {0.01, 0.05, -0.03}) {
    const Povm bad = build_gsic2_typo_closing(t);
    Matrix total(2, 2);
    for (const Matrix& m : bad.elements) total += m;
    total -= Matrix::identity(2);
    std::size_t off_entries = 0;
    double peak = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (std::abs(total(i, j)) > 1e-13) {
          ++off_entries;
          peak = std::abs(total(i, j));
        }
    typo_ok = typo_ok && off_entries == 1 &&
              std::abs(peak - 6.0 * std::sqrt(2.0) * std::abs(t)) <= 1e-12;
  }
  ok = ok && typo_ok;
  detail += "; misprinted closing off by 6 sqrt2 |t| in one entry: " +
            std::string(typo_ok ? "yes" : "no");
  report(7, ok, detail);
}

// 8. Unfolding soundness: no false positives on 200 random three-qubit
//    product states and 200 random product mixtures; and the BlockDiag
//    construction reaches sqrt3 on |000>, above its documented bound of 1.
void criterion8() {
  const std::vector<Povm> povms = renorm_sic3();
  StateSampler sampler(20260814);
  double worst = -1e300;
  for (int i = 0; i < 400; ++i) {
    const DensityState st = i < 200
                                ? sampler.product_state({2, 2, 2})
                                : sampler.product_mixture({2, 2, 2}, 2 + i % 4);
    for (std::size_t dist = 0; dist < 3; ++dist) {
      const Matrix m =
          tripartite_correlation(st, povms, dist, TripartiteMode::Unfolding);
      worst = std::max(worst, trace_norm(m) - 1.0);
    }
  }

  std::vector<cplx> ket(8);
  ket[0] = 1.0;
  const DensityState zeros({2, 2, 2}, projector(ket));
  const Matrix bd =
      tripartite_correlation(zeros, povms, 0, TripartiteMode::BlockDiag);
  const double bd_norm = trace_norm(bd);
  const bool ok = worst <= 1e-9 &&
                  std::abs(bd_norm - std::sqrt(3.0)) <= 1e-10;
  report(8, ok,
         "worst separable unfolding margin " + fmt(worst) +
             " (must be <= 1e-9 over 400 states x 3 cuts); BlockDiag norm on "
             "|000> " +
             fmt(bd_norm) + " vs sqrt3 " + fmt(std::sqrt(3.0)));
}

// 9. Partition-tree evaluation reduces to the tripartite constructions
//    entrywise, and the renormalized rank-one family at a = 1/4 reproduces
//    the SIC margin to 1e-10 on 20 random states.
void criterion9() {
  StateSampler sampler(97);
  const std::vector<Povm> povms = renorm_sic3();
  double tree_diff = 0.0;
  const std::vector<std::string> cut_texts{"B C|A", "A C|B", "A B|C",
                                           "A|(B|C)", "(A|B)|C"};
  const std::vector<std::size_t> dists{0, 1, 2, 0, 2};
  for (int i = 0; i < 5; ++i) {
    const DensityState st = sampler.state({2, 2, 2});
    for (std::size_t k = 0; k < cut_texts.size(); ++k)
      for (TripartiteMode mode :
           {TripartiteMode::BlockDiag, TripartiteMode::MarginalKron,
            TripartiteMode::Unfolding}) {
        const Matrix via_tree = npartite_correlation(
            st, povms, Partition::parse(cut_texts[k]), mode);
        const Matrix direct = tripartite_correlation(st, povms, dists[k], mode);
        tree_diff = std::max(tree_diff, max_abs_diff(via_tree, direct));
      }
  }

  // The d = 2 family touches a = 1/d^2 at the positivity boundary, just
  // outside the documented parameter window, so the boundary element is
  // built under the PSD-only range policy. (The d = 3 family stays below
  // a = 1/9 everywhere on its PSD range and never becomes rank one.)
  const double t_boundary = 1.0 / (6.0 * std::sqrt(6.0));
  const Povm boundary =
      renormalize(build_gsic(2, t_boundary, GsicRangePolicy::PsdOnly));
  const std::vector<Povm> gsic_povms{boundary, boundary, boundary};
  const Partition cut = Partition::parse("B C|A");
  double margin_diff = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DensityState st = sampler.state({2, 2, 2});
    const CriterionReport rep =
        evaluate(st, gsic_povms, cut, TripartiteMode::Unfolding);
    const double sic_margin = rep.trace_norm - 1.0;
    margin_diff = std::max(margin_diff, std::abs(rep.margin - sic_margin));
  }
  const bool ok = tree_diff <= 1e-12 && margin_diff <= 1e-10;
  report(9, ok,
         "max tree-vs-direct entry deviation " + fmt(tree_diff) +
             " (tolerance 1e-12); max margin deviation at a = 1/4 " +
             fmt(margin_diff) + " (tolerance 1e-10)");
}

// 10. Four-qubit Bell-pair mixture across AB|CD: the pair-composed matrix
//     is asserted to exceed 1 on the (x, y) simplex grid; the documented
//     closed form is recorded alongside for comparison, not asserted.
void criterion10() {
  const Povm sic = renormalize(build_sic_qubit());
  const std::vector<Povm> povms{sic, sic, sic, sic};
  const Partition cut = Partition::parse("(A B)|(C D)");
  double min_norm = 1e300, min_x = 0.0, min_y = 0.0;
  double center_norm = 0.0;
  for (double x : examples::inclusive_grid(0.0, 1.0, 21))
    for (double y : examples::inclusive_grid(0.0, 1.0, 21)) {
      if (x + y > 1.0 + 1e-12) continue;
      const DensityState st = bell_mixture_4q(x, y, 1.0 - x - y);
      const Matrix m =
          npartite_correlation(st, povms, cut, TripartiteMode::MarginalKron);
      const double norm = trace_norm(m);
      if (norm < min_norm) {
        min_norm = norm;
        min_x = x;
        min_y = y;
      }
    }
  {
    const DensityState st = bell_mixture_4q(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    const Matrix m =
        npartite_correlation(st, povms, cut, TripartiteMode::MarginalKron);
    center_norm = trace_norm(m);
  }
  const double cf_center = bell_mixture_4q_norm_formula(1.0 / 3.0, 1.0 / 3.0);
  report(10, min_norm > 1.0,
         "grid-min pair-composed norm " + fmt(min_norm) + " at (x, y) = (" +
             fmt(min_x) + ", " + fmt(min_y) +
             ") (asserted > 1); recorded, not asserted: norm at the symmetric "
             "point " +
             fmt(center_norm) + " vs closed form " + fmt(cf_center));
}

}  // namespace

int main() {
  std::printf("acceptance checks (tolerances pinned in code)\n");
  const examples::ExampleResult ex1 = examples::run_example1();
  const examples::ExampleResult ex2 = examples::run_example2();
  const examples::ExampleResult ex3 = examples::run_example3();

  criterion1();
  criterion2(ex1);
  criterion3();
  criterion4(ex3);
  criterion5(ex2);
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  std::printf("%d of 10 criteria pass\n", 10 - failures);
  if (failures)
    std::printf(
        "failing lines reproduce documented reference values that the "
        "computation contradicts; see README for the analysis\n");
  return failures ? 1 : 0;
}
