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

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sicdet/matrix.hpp"

namespace sicdet {

struct JacobiOptions {
  double tol = 1e-13;    // relative off-diagonal target
  int max_sweeps = 60;   // hard stop; exceeding it throws
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// tan of the Jacobi angle from tau, picking the smaller rotation.
inline double jacobi_tan(double tau) {
  const double s = tau >= 0.0 ? 1.0 : -1.0;
  return s / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix by cyclic two-sided Jacobi rotations,
// returned in ascending order. The input is symmetrized internally; callers
// are expected to hand in matrices that are Hermitian up to roundoff.
inline std::vector<double> hermitian_eigenvalues(Matrix a,
                                                 JacobiOptions opt = {}) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigenvalues: not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  // fold in the adjoint so tiny asymmetries cannot bias the iteration
  Matrix ad = a.dagger();
  a += ad;
  a *= 0.5;

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= opt.tol * scale) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double phi = std::arg(apq);
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = detail::jacobi_tan(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx eip = std::polar(1.0, phi);
        // columns: B = A J with J = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(eip) * akq;
          a(k, q) = s * eip * akp + c * akq;
        }
        // rows: A' = J^H B
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * eip * aqk;
          a(q, k) = s * std::conj(eip) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");
}

inline double min_eigenvalue(const Matrix& a, JacobiOptions opt = {}) {
  auto ev = hermitian_eigenvalues(a, opt);
  if (ev.empty()) throw std::invalid_argument("min_eigenvalue: empty matrix");
  return ev.front();
}

// Hermitian within `herm_tol` and no eigenvalue below -psd_tol.
inline bool is_psd(const Matrix& a, double psd_tol = 1e-10,
                   double herm_tol = 1e-12) {
  if (a.rows() != a.cols()) return false;
  if (hermiticity_deviation(a) > herm_tol) return false;
  return min_eigenvalue(a) >= -psd_tol;
}

// Singular values by one-sided (Hestenes) Jacobi: rotate column pairs until
// mutually orthogonal, then read off the column norms. Chosen over forming
// M^dagger M, whose squared condition number costs half the digits on the
// small singular values that matter for tight separability margins.
inline std::vector<double> singular_values(const Matrix& m,
                                           JacobiOptions opt = {}) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Matrix a = m.rows() >= m.cols() ? m : m.dagger();
  const std::size_t rows = a.rows(), n = a.cols();

  const double fro = a.frobenius_norm();
  if (fro <= 1e-300) return std::vector<double>(n, 0.0);
  // Columns this far below the matrix scale carry no representable
  // singular value; rotating them against each other never converges.
  const double floor_sq = (fro * 1e-15) * (fro * 1e-15);

  std::vector<double> colsq(n, 0.0);  // squared column norms, kept updated
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    // refresh exactly once per sweep so incremental updates cannot drift
    for (std::size_t j = 0; j < n; ++j) {
      colsq[j] = 0.0;
      for (std::size_t k = 0; k < rows; ++k) colsq[j] += std::norm(a(k, j));
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = colsq[p];
        const double beta = colsq[q];
        if (alpha <= floor_sq || beta <= floor_sq) continue;
        cplx gamma{};
        for (std::size_t k = 0; k < rows; ++k)
          gamma += std::conj(a(k, p)) * a(k, q);
        const double mag = std::abs(gamma);
        if (mag <= opt.tol * std::sqrt(alpha * beta) || mag <= 1e-300)
          continue;
        rotated = true;
        const cplx emip = std::polar(1.0, -std::arg(gamma));
        const double tau = (beta - alpha) / (2.0 * mag);
        const double t = detail::jacobi_tan(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < rows; ++k) {
          const cplx akp = a(k, p), akq = emip * a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        const double cross = 2.0 * c * s * mag;
        colsq[p] = c * c * alpha + s * s * beta - cross;
        colsq[q] = s * s * alpha + c * c * beta + cross;
      }
    }
    if (!rotated) {
      std::vector<double> sv(n);
      for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;  // recompute exactly once at the end
        for (std::size_t k = 0; k < rows; ++k) sq += std::norm(a(k, j));
        sv[j] = std::sqrt(sq);
      }
      std::sort(sv.begin(), sv.end(), std::greater<double>());
      return sv;
    }
  }
  throw std::runtime_error("singular_values: Jacobi did not converge");
}

// Trace norm (nuclear norm): sum of singular values.
inline double trace_norm(const Matrix& m, JacobiOptions opt = {}) {
  double s = 0.0;
  for (double sv : singular_values(m, opt)) s += sv;
  return s;
}

}  // namespace sicdet
