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
#include <cstdint>
#include <random>
#include <vector>

#include "sicdet/matrix.hpp"

namespace testsupport {

using sicdet::cplx;
using sicdet::Matrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2026u);
  return gen;
}

inline double randn() {
  static std::normal_distribution<double> d(0.0, 1.0);
  return d(rng());
}

inline Matrix random_matrix(std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = cplx{randn(), randn()};
  return m;
}

inline Matrix random_hermitian(std::size_t n) {
  Matrix m = random_matrix(n, n);
  Matrix h = m + m.dagger();
  h *= cplx{0.5};
  return h;
}

inline Matrix random_density(std::size_t n) {
  Matrix g = random_matrix(n, n);
  Matrix rho = g * g.dagger();
  rho *= cplx{1.0 / rho.trace().real()};
  return rho;
}

// Unitary from modified Gram-Schmidt on random columns; Q^dag Q = I to
// machine precision, independent of the library's decompositions.
inline Matrix random_unitary(std::size_t n) {
  Matrix m = random_matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx dot{};
      for (std::size_t r = 0; r < n; ++r)
        dot += std::conj(m(r, prev)) * m(r, c);
      for (std::size_t r = 0; r < n; ++r) m(r, c) -= dot * m(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(m(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) m(r, c) /= norm;
  }
  return m;
}

// Kronecker product by the defining index formula, independent of the
// library implementation.
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Moment test: a claimed eigenvalue list of a Hermitian matrix must
// reproduce Tr(A^k) for k = 1..4. Catches wrong values without needing an
// independent eigensolver.
inline double eigenvalue_moment_deviation(const Matrix& a,
                                          const std::vector<double>& evs) {
  double worst = 0.0;
  Matrix power = Matrix::identity(a.rows());
  for (int k = 1; k <= 4; ++k) {
    power = power * a;
    double moment = 0.0;
    for (double e : evs) moment += std::pow(e, k);
    worst = std::max(worst, std::abs(moment - power.trace().real()));
  }
  return worst;
}

}  // namespace testsupport
