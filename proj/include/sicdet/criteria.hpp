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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sicdet/correlations.hpp"
#include "sicdet/linalg.hpp"
#include "sicdet/matrix.hpp"
#include "sicdet/partition.hpp"
#include "sicdet/povm.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

enum class Verdict { Inconclusive, Entangled };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::Entangled ? "ENTANGLED" : "INCONCLUSIVE";
}

// Margin above the separable bound required to declare entanglement.
// Trace norms are accurate to about 1e-10; detection margins of interest
// are orders of magnitude larger.
inline constexpr double kDefaultVerdictTolerance = 1e-9;

struct CriterionReport {
  std::string state;
  std::string partition;
  std::string mode;
  std::string povm;
  double trace_norm = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

// Largest singular-value budget one subsystem contributes across a cut:
// sqrt((a d^2 + 1)/(d (d + 1))) in the natural normalization, times the
// completeness scale if the measurement was renormalized. Equals 1 for a
// renormalized rank-one (a = 1/d^2) measurement.
inline double separable_bound_factor(const Povm& p) {
  const double a = gsic_parameter(p);
  const double d = static_cast<double>(p.dim);
  const double f = std::sqrt((a * d * d + 1.0) / (d * (d + 1.0)));
  return p.completeness_scale() * f;
}

namespace detail {

// BlockDiag / MarginalKron composition: a lone subsystem contributes the
// sum of its (nonnegative) outcome expectations, which is the completeness
// scale for every state; a pair branch contributes the bipartite bound;
// larger splits multiply.
inline double composed_bound_branch(const std::vector<Povm>& povms,
                                    const Partition& part, std::size_t node) {
  const std::vector<int> under = part.leaves_under(node);
  if (under.size() == 1)
    return povms[static_cast<std::size_t>(under[0])].completeness_scale();
  if (under.size() == 2)
    return separable_bound_factor(povms[static_cast<std::size_t>(under[0])]) *
           separable_bound_factor(povms[static_cast<std::size_t>(under[1])]);
  const Partition::Node& n = part.node(node);
  if (n.kind != Partition::Kind::Split)
    throw std::invalid_argument(
        "separable_bound: branches of three or more subsystems must be split further");
  return composed_bound_branch(povms, part, n.children[0]) *
         composed_bound_branch(povms, part, n.children[1]);
}

}  // namespace detail

// Upper bound on the correlation trace norm over separable states, for the
// matrix npartite_correlation builds with the same partition and mode.
inline double separable_bound(const std::vector<Povm>& povms,
                              const Partition& part, TripartiteMode mode) {
  if (povms.size() == 2 || mode == TripartiteMode::Unfolding) {
    double b = 1.0;
    for (const Povm& p : povms) b *= separable_bound_factor(p);
    return b;
  }
  const Partition::Node& root = part.node(part.root());
  return detail::composed_bound_branch(povms, part, root.children[0]) *
         detail::composed_bound_branch(povms, part, root.children[1]);
}

inline CriterionReport evaluate(const DensityState& st,
                                const std::vector<Povm>& povms,
                                const Partition& part, TripartiteMode mode,
                                double tolerance = kDefaultVerdictTolerance) {
  part.validate(st.subsystem_count());
  Matrix m = npartite_correlation(st, povms, part, mode);
  CriterionReport r;
  r.partition = part.to_string();
  r.mode = mode_name(mode);
  for (std::size_t s = 0; s < povms.size(); ++s) {
    if (s) r.povm += " x ";
    r.povm += povms[s].descriptor();
  }
  r.trace_norm = trace_norm(m);
  r.bound = separable_bound(povms, part, mode);
  r.margin = r.trace_norm - r.bound;
  r.verdict = r.margin > tolerance ? Verdict::Entangled : Verdict::Inconclusive;
  return r;
}

// Per-subsystem conjugation assignment, e.g. "MCM": M keeps the
// measurement as given, C replaces it by its entrywise conjugate.
inline std::vector<Povm> apply_conjugation_pattern(std::vector<Povm> povms,
                                                   const std::string& pattern) {
  if (pattern.size() != povms.size())
    throw std::invalid_argument("conjugation pattern '" + pattern + "' covers " +
                                std::to_string(pattern.size()) +
                                " subsystems, state has " +
                                std::to_string(povms.size()));
  for (std::size_t s = 0; s < povms.size(); ++s) {
    if (pattern[s] == 'C')
      povms[s] = conjugate(povms[s]);
    else if (pattern[s] != 'M')
      throw std::invalid_argument(
          "conjugation pattern may contain only 'M' and 'C'");
  }
  return povms;
}

// Documented closed form for the three-qubit Bell-mixture trace norm as a
// function of the weights (b, c) on the second and third Bell placements.
// Kept for comparison output; the computed MarginalKron norm does not
// match it (see README).
inline double bell_mixture_norm_formula(double b, double c) {
  if (b < -1e-12 || c < -1e-12 || b + c > 1.0 + 1e-12)
    throw std::domain_error("bell_mixture_norm_formula: weights leave the simplex");
  const double s = b + c;
  return (3.0 * std::sqrt(3.0) / 4.0) * std::sqrt(b * b + c * c + s + 1.0) +
         0.75 * std::sqrt(2.0 + (s - 1.0) * (s - 1.0) - s);
}

// Documented closed form quoted for the four-qubit Bell mixture with
// weights (x, y, 1-x-y). Recorded for comparison only; see README for the
// variable-convention discrepancy.
inline double bell_mixture_4q_norm_formula(double x, double y) {
  const double first = std::sqrt(3.0 * (x * x + x + 1.0)) +
                       std::sqrt(x * x - 3.0 * x + 3.0);
  const double second =
      std::sqrt(x * x + x * y + 2.0 * x + y * y + y + 1.0) +
      std::sqrt(x * x + 3.0 * x * y - 6.0 * x + 3.0 * y * y - 9.0 * y + 9.0);
  return (3.0 / 16.0) * first * second;
}

}  // namespace sicdet
