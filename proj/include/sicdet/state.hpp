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
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sicdet/linalg.hpp"
#include "sicdet/matrix.hpp"

namespace sicdet {

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double psd = 1e-10;
};

namespace detail {

inline std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

// Splits a joint index into (before, at, after) strides for subsystem s.
struct SubsystemStrides {
  std::size_t pre;   // product of dims before s
  std::size_t d;     // dims[s]
  std::size_t post;  // product of dims after s
};

inline SubsystemStrides strides_at(const std::vector<std::size_t>& dims,
                                   std::size_t s) {
  if (s >= dims.size())
    throw std::out_of_range("subsystem index out of range");
  SubsystemStrides st{1, dims[s], 1};
  for (std::size_t u = 0; u < s; ++u) st.pre *= dims[u];
  for (std::size_t u = s + 1; u < dims.size(); ++u) st.post *= dims[u];
  return st;
}

}  // namespace detail

// Multipartite density matrix: subsystem dimensions plus the joint matrix in
// the computational product basis, first subsystem slowest (leftmost factor).
class DensityState {
 public:
  DensityState(std::vector<std::size_t> dims, Matrix rho,
               StateTolerances tol = {}, bool validate = true)
      : dims_(std::move(dims)), rho_(std::move(rho)) {
    const std::size_t d = detail::product(dims_);
    if (dims_.empty() || rho_.rows() != d || rho_.cols() != d)
      throw std::invalid_argument("DensityState: dimension mismatch");
    if (validate) validate_or_throw(tol);
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t subsystem_count() const { return dims_.size(); }
  std::size_t total_dim() const { return rho_.rows(); }
  const Matrix& matrix() const { return rho_; }

  void validate_or_throw(StateTolerances tol = {}) const {
    const double h = hermiticity_deviation(rho_);
    if (h > tol.hermiticity)
      throw std::invalid_argument("DensityState: not Hermitian (deviation " +
                                  std::to_string(h) + ")");
    const cplx tr = rho_.trace();
    if (std::abs(tr - cplx{1.0}) > tol.trace)
      throw std::invalid_argument("DensityState: trace differs from 1 by " +
                                  std::to_string(std::abs(tr - cplx{1.0})));
    const double mee = min_eigenvalue(rho_);
    if (mee < -tol.psd)
      throw std::invalid_argument(
          "DensityState: not positive semidefinite (min eigenvalue " +
          std::to_string(mee) + ")");
  }

 private:
  std::vector<std::size_t> dims_;
  Matrix rho_;
};

// Partial trace onto the subsystems listed in `keep` (ascending order is
// required so the result's ordering is unambiguous).
inline Matrix partial_trace(const Matrix& rho,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  if (rho.rows() != detail::product(dims) || rho.rows() != rho.cols())
    throw std::invalid_argument("partial_trace: dimension mismatch");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n) throw std::out_of_range("partial_trace: bad subsystem");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep list must ascend");
  }

  std::vector<std::size_t> traced;
  for (std::size_t s = 0; s < n; ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end())
      traced.push_back(s);

  std::vector<std::size_t> keep_dims, traced_dims;
  for (auto s : keep) keep_dims.push_back(dims[s]);
  for (auto s : traced) traced_dims.push_back(dims[s]);
  const std::size_t dk = detail::product(keep_dims);
  const std::size_t dt = detail::product(traced_dims);

  // joint index from a (keep multi-index, traced multi-index) pair
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n; s-- > 1;) stride[s - 1] = stride[s] * dims[s];
  auto joint = [&](std::size_t ki, std::size_t ti) {
    std::size_t idx = 0;
    for (std::size_t u = keep.size(); u-- > 0;) {
      idx += (ki % keep_dims[u]) * stride[keep[u]];
      ki /= keep_dims[u];
    }
    for (std::size_t u = traced.size(); u-- > 0;) {
      idx += (ti % traced_dims[u]) * stride[traced[u]];
      ti /= traced_dims[u];
    }
    return idx;
  };

  Matrix out(dk, dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      cplx sum{};
      for (std::size_t t = 0; t < dt; ++t)
        sum += rho(joint(r, t), joint(c, t));
      out(r, c) = sum;
    }
  return out;
}

inline DensityState partial_trace(const DensityState& st,
                                  const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> kd;
  for (auto s : keep) kd.push_back(st.dims().at(s));
  return DensityState(kd, partial_trace(st.matrix(), st.dims(), keep),
                      StateTolerances{}, false);
}

// Transpose the row/column indices of one subsystem.
inline Matrix partial_transpose(const Matrix& rho,
                                const std::vector<std::size_t>& dims,
                                std::size_t sub) {
  if (rho.rows() != detail::product(dims) || rho.rows() != rho.cols())
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  const auto st = detail::strides_at(dims, sub);
  Matrix out(rho.rows(), rho.cols());
  const std::size_t block = st.d * st.post;
  for (std::size_t rp = 0; rp < st.pre; ++rp)
    for (std::size_t cp = 0; cp < st.pre; ++cp)
      for (std::size_t ra = 0; ra < st.d; ++ra)
        for (std::size_t ca = 0; ca < st.d; ++ca)
          for (std::size_t rq = 0; rq < st.post; ++rq)
            for (std::size_t cq = 0; cq < st.post; ++cq)
              out(rp * block + ca * st.post + rq,
                  cp * block + ra * st.post + cq) =
                  rho(rp * block + ra * st.post + rq,
                      cp * block + ca * st.post + cq);
  return out;
}

// Tr_sub[(op acting on `sub`) * rho]: contracts one subsystem against an
// operator, leaving a matrix on the remaining subsystems in original order.
// Chaining this across subsystems evaluates Tr[rho (O_1 x O_2 x ...)].
inline Matrix contract_subsystem(const Matrix& rho,
                                 const std::vector<std::size_t>& dims,
                                 std::size_t sub, const Matrix& op) {
  if (rho.rows() != detail::product(dims) || rho.rows() != rho.cols())
    throw std::invalid_argument("contract_subsystem: dimension mismatch");
  const auto st = detail::strides_at(dims, sub);
  if (op.rows() != st.d || op.cols() != st.d)
    throw std::invalid_argument("contract_subsystem: operator shape");
  const std::size_t rem = st.pre * st.post;
  const std::size_t block = st.d * st.post;
  Matrix out(rem, rem);
  for (std::size_t rp = 0; rp < st.pre; ++rp)
    for (std::size_t rq = 0; rq < st.post; ++rq)
      for (std::size_t cp = 0; cp < st.pre; ++cp)
        for (std::size_t cq = 0; cq < st.post; ++cq) {
          cplx sum{};
          for (std::size_t aa = 0; aa < st.d; ++aa)
            for (std::size_t bb = 0; bb < st.d; ++bb)
              sum += op(aa, bb) * rho(rp * block + bb * st.post + rq,
                                      cp * block + aa * st.post + cq);
          out(rp * st.post + rq, cp * st.post + cq) = sum;
        }
  return out;
}

// Expectation Tr[rho O] for a Hermitian observable; the imaginary part is
// discarded (it is roundoff for Hermitian inputs).
inline double expectation(const Matrix& rho, const Matrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols())
    throw std::invalid_argument("expectation: shape mismatch");
  cplx s{};
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) s += rho(i, j) * op(j, i);
  return s.real();
}

// visibility * rho + (1 - visibility) * I/D
inline DensityState mix_white_noise(const DensityState& st, double visibility) {
  if (visibility < 0.0 || visibility > 1.0)
    throw std::domain_error("mix_white_noise: visibility outside [0, 1]");
  const std::size_t d = st.total_dim();
  Matrix m = st.matrix();
  m *= cplx{visibility};
  const cplx w{(1.0 - visibility) / static_cast<double>(d)};
  for (std::size_t i = 0; i < d; ++i) m(i, i) += w;
  return DensityState(st.dims(), std::move(m), StateTolerances{}, false);
}

}  // namespace sicdet
