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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sicdet/linalg.hpp"
#include "sicdet/matrix.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

enum class PovmKind { SicQubit, Gsic, Custom };

// How strictly build_gsic polices the family parameter t.
//  Standard:  the tabulated safe ranges ([-0.068, 0.068] for d=2,
//             [-0.012, 0.012] for d=3).
//  PsdOnly:   any t for which every element stays positive semidefinite
//             (wider than Standard on both families).
//  Unchecked: no parameter validation at all.
enum class GsicRangePolicy { Standard, PsdOnly, Unchecked };

struct Povm {
  std::size_t dim = 0;
  std::vector<Matrix> elements;
  PovmKind kind = PovmKind::Custom;
  // family parameter t for Gsic; unset otherwise
  std::optional<double> parameter;
  bool renormalized = false;

  // Scale of the completeness sum: renormalized POVMs sum to
  // sqrt(d(d+1)/2) * I instead of I.
  double completeness_scale() const {
    return renormalized
               ? std::sqrt(0.5 * static_cast<double>(dim) * (dim + 1.0))
               : 1.0;
  }

  std::string descriptor() const {
    std::string base;
    switch (kind) {
      case PovmKind::SicQubit: base = "sic2"; break;
      case PovmKind::Gsic:
        base = "gsic" + std::to_string(dim);
        if (parameter) base += ":t=" + std::to_string(*parameter);
        break;
      case PovmKind::Custom: base = "custom" + std::to_string(dim); break;
    }
    if (renormalized) base += ":renorm";
    return base;
  }
};

// Qubit SIC-POVM from the standard tetrahedron vectors:
//   phi_1 = (1, 0)
//   phi_2 = (1, sqrt2)/sqrt3
//   phi_3 = i (e^{-i pi/3}, -sqrt2)/sqrt3
//   phi_4 = (1, -sqrt2 e^{-i pi/3})/sqrt3
// Elements are |phi_k><phi_k| / 2, so they sum to the identity and satisfy
// |<phi_k|phi_l>|^2 = (2 delta_kl + 1)/3.
inline Povm build_sic_qubit() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const cplx ph = std::polar(1.0, -M_PI / 3.0);
  const cplx i{0.0, 1.0};
  std::vector<std::vector<cplx>> vs = {
      {1.0, 0.0},
      {1.0 / s3, s2 / s3},
      {i * ph / s3, -i * s2 / s3},
      {1.0 / s3, -s2 * ph / s3},
  };
  Povm p;
  p.dim = 2;
  p.kind = PovmKind::SicQubit;
  for (const auto& v : vs) p.elements.push_back(0.5 * projector(v));
  return p;
}

namespace detail {

inline std::vector<Matrix> gsic2_generators() {
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  std::vector<Matrix> f;
  f.push_back(Matrix(2, 2, {0, s, s, 0}));
  f.push_back(Matrix(2, 2, {0, i * s, -i * s, 0}));
  f.push_back(Matrix(2, 2, {s, 0, 0, -s}));
  return f;
}

inline std::vector<Matrix> gsic3_generators() {
  const double s = 1.0 / std::sqrt(2.0);
  const double u = 1.0 / std::sqrt(6.0);
  const cplx i{0.0, 1.0};
  std::vector<Matrix> g(8, Matrix(3, 3));
  g[0] = Matrix(3, 3, {s, 0, 0, 0, -s, 0, 0, 0, 0});
  g[1] = Matrix(3, 3, {0, s, 0, s, 0, 0, 0, 0, 0});
  g[2] = Matrix(3, 3, {0, 0, s, 0, 0, 0, s, 0, 0});
  g[3] = Matrix(3, 3, {0, -i * s, 0, i * s, 0, 0, 0, 0, 0});
  g[4] = Matrix(3, 3, {u, 0, 0, 0, u, 0, 0, 0, -2.0 * u});
  g[5] = Matrix(3, 3, {0, 0, 0, 0, 0, s, 0, s, 0});
  g[6] = Matrix(3, 3, {0, 0, -i * s, 0, 0, 0, i * s, 0, 0});
  g[7] = Matrix(3, 3, {0, 0, 0, 0, 0, -i * s, 0, i * s, 0});
  return g;
}

inline Povm assemble_gsic(std::size_t d, double t,
                          const std::vector<Matrix>& gen,
                          const Matrix& closing) {
  // d^2 - 1 traceless generators G_a plus the closing sum S:
  //   M_a     = I/d^2 + t (S - d(d+1) G_a),  a < d^2
  //   M_{d^2} = I/d^2 + (d+1) t S
  Povm p;
  p.dim = d;
  p.kind = PovmKind::Gsic;
  p.parameter = t;
  const double coeff = static_cast<double>(d) * (d + 1.0);
  Matrix base = Matrix::identity(d);
  base *= cplx{1.0 / static_cast<double>(d * d)};
  for (const auto& g : gen) {
    Matrix m = base;
    Matrix diff = closing;
    diff -= cplx{coeff} * g;
    diff *= cplx{t};
    m += diff;
    p.elements.push_back(std::move(m));
  }
  Matrix last = base;
  Matrix s = closing;
  s *= cplx{t * (static_cast<double>(d) + 1.0)};
  last += s;
  p.elements.push_back(std::move(last));
  return p;
}

}  // namespace detail

inline constexpr double kGsic2StandardRange = 0.068;
inline constexpr double kGsic3StandardRange = 0.012;

// GSIC family on dimension d (2 or 3), parameterized by t.
//   d = 2: M_a = I/4 + t (S - 6 F_a) for the three generators F_a,
//          M_4 = I/4 + 3 t S, with S = F_1 + F_2 + F_3.
//          Purity a(t) = 1/8 + 27 t^2.
//   d = 3: M_a = I/9 + t (S - 12 G_a) for eight generators G_a,
//          M_9 = I/9 + 4 t S, with S = sum G_a.
//          Purity a(t) = 1/27 + 128 t^2.
inline Povm build_gsic(std::size_t d, double t,
                       GsicRangePolicy policy = GsicRangePolicy::Standard) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("build_gsic: only d = 2 and d = 3 supported");
  const auto gen = d == 2 ? detail::gsic2_generators()
                          : detail::gsic3_generators();
  Matrix closing(d, d);
  for (const auto& g : gen) closing += g;
  Povm p = detail::assemble_gsic(d, t, gen, closing);

  switch (policy) {
    case GsicRangePolicy::Standard: {
      const double lim = d == 2 ? kGsic2StandardRange : kGsic3StandardRange;
      if (std::abs(t) > lim + 1e-15)
        throw std::domain_error("build_gsic: |t| exceeds the standard range " +
                                std::to_string(lim));
      break;
    }
    case GsicRangePolicy::PsdOnly: {
      for (const auto& m : p.elements)
        if (!is_psd(m))
          throw std::domain_error(
              "build_gsic: an element is not positive semidefinite at t = " +
              std::to_string(t));
      break;
    }
    case GsicRangePolicy::Unchecked:
      break;
  }
  return p;
}

// The d = 2 family as it circulates with a typo in the closing generator:
// S_typo = [[1, 1+i], [1-i, 1]]/sqrt2 (the (2,2) entry should be -1). The
// resulting element set fails completeness by exactly 6 sqrt2 |t| in one
// entry; validate() surfaces that. Kept for diagnosing data produced with
// the wrong matrix.
inline Povm build_gsic2_typo_closing(double t) {
  const auto gen = detail::gsic2_generators();
  const double s = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  Matrix closing(2, 2, {s, (1.0 + i) * s, (1.0 - i) * s, s});
  return detail::assemble_gsic(2, t, gen, closing);
}

// Scale every element by sqrt(d(d+1)/2). Applying it twice is rejected.
inline Povm renormalize(const Povm& p) {
  if (p.renormalized)
    throw std::logic_error("renormalize: POVM is already renormalized");
  Povm out = p;
  const cplx f{std::sqrt(0.5 * static_cast<double>(p.dim) * (p.dim + 1.0))};
  for (auto& m : out.elements) m *= f;
  out.renormalized = true;
  return out;
}

// Entrywise complex conjugate of every element (an involution).
inline Povm conjugate(const Povm& p) {
  Povm out = p;
  for (auto& m : out.elements) m = m.conjugate();
  return out;
}

// Common purity a = Tr(M^2), averaged over elements. Throws if the purity
// is not uniform across elements, since then the family parameter is not
// defined. Renormalization is divided back out.
inline double gsic_parameter(const Povm& p, double spread_tol = 1e-10) {
  if (p.elements.empty()) throw std::invalid_argument("gsic_parameter: empty");
  double lo = 0.0, hi = 0.0, sum = 0.0;
  bool first = true;
  for (const auto& m : p.elements) {
    const double a = expectation(m, m);
    if (first) { lo = hi = a; first = false; }
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    sum += a;
  }
  if (hi - lo > spread_tol)
    throw std::invalid_argument("gsic_parameter: purity spread " +
                                std::to_string(hi - lo) +
                                " exceeds tolerance");
  const double f = p.completeness_scale();
  return sum / static_cast<double>(p.elements.size()) / (f * f);
}

// Diagnostic summary of how close an element set is to a genuine GSIC POVM.
struct PovmValidationReport {
  std::size_t dim = 0;
  std::size_t element_count = 0;
  // max |sum(M) - scale * I| over entries, and where it is attained
  double completeness_deviation = 0.0;
  std::size_t completeness_worst_row = 0;
  std::size_t completeness_worst_col = 0;
  double min_eigenvalue = 0.0;      // over all elements
  double hermiticity_deviation = 0.0;
  double purity_mean = 0.0;         // mean Tr(M^2), un-renormalized units
  double purity_spread = 0.0;
  double overlap_mean = 0.0;        // mean Tr(M_i M_j), i != j
  double overlap_spread = 0.0;
  double overlap_expected = 0.0;    // (1 - d a)/(d (d^2 - 1)) from mean purity
  bool complete = false;
  bool all_psd = false;
  bool uniform_purity = false;
  bool uniform_overlap = false;
  bool valid = false;               // all four above
};

inline PovmValidationReport validate(const Povm& p, double tol = 1e-10) {
  if (p.elements.empty()) throw std::invalid_argument("validate: empty POVM");
  PovmValidationReport r;
  r.dim = p.dim;
  r.element_count = p.elements.size();

  Matrix sum(p.dim, p.dim);
  for (const auto& m : p.elements) {
    if (m.rows() != p.dim || m.cols() != p.dim)
      throw std::invalid_argument("validate: element dimension mismatch");
    sum += m;
    r.hermiticity_deviation =
        std::max(r.hermiticity_deviation, hermiticity_deviation(m));
  }
  const double scale = p.completeness_scale();
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j) {
      const cplx expect = i == j ? cplx{scale} : cplx{};
      const double dev = std::abs(sum(i, j) - expect);
      if (dev > r.completeness_deviation) {
        r.completeness_deviation = dev;
        r.completeness_worst_row = i;
        r.completeness_worst_col = j;
      }
    }

  bool first = true;
  double pur_lo = 0.0, pur_hi = 0.0, pur_sum = 0.0;
  r.min_eigenvalue = 0.0;
  for (const auto& m : p.elements) {
    const double me = min_eigenvalue(m);
    r.min_eigenvalue = first ? me : std::min(r.min_eigenvalue, me);
    const double a = expectation(m, m) / (scale * scale);
    if (first) { pur_lo = pur_hi = a; first = false; }
    pur_lo = std::min(pur_lo, a);
    pur_hi = std::max(pur_hi, a);
    pur_sum += a;
  }
  r.purity_mean = pur_sum / static_cast<double>(p.elements.size());
  r.purity_spread = pur_hi - pur_lo;

  double ov_lo = 0.0, ov_hi = 0.0, ov_sum = 0.0;
  std::size_t ov_n = 0;
  for (std::size_t i = 0; i < p.elements.size(); ++i)
    for (std::size_t j = i + 1; j < p.elements.size(); ++j) {
      const double ov =
          expectation(p.elements[i], p.elements[j]) / (scale * scale);
      if (ov_n == 0) { ov_lo = ov_hi = ov; }
      ov_lo = std::min(ov_lo, ov);
      ov_hi = std::max(ov_hi, ov);
      ov_sum += ov;
      ++ov_n;
    }
  r.overlap_mean = ov_n ? ov_sum / static_cast<double>(ov_n) : 0.0;
  r.overlap_spread = ov_hi - ov_lo;
  const double d = static_cast<double>(p.dim);
  r.overlap_expected = (1.0 - d * r.purity_mean) / (d * (d * d - 1.0));

  r.complete = r.completeness_deviation <= tol;
  r.all_psd = r.min_eigenvalue >= -tol;
  r.uniform_purity = r.purity_spread <= tol;
  r.uniform_overlap =
      r.overlap_spread <= tol &&
      std::abs(r.overlap_mean - r.overlap_expected) <= tol;
  r.valid = r.complete && r.all_psd && r.uniform_purity && r.uniform_overlap;
  return r;
}

}  // namespace sicdet
