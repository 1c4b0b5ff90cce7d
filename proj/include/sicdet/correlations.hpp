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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sicdet/matrix.hpp"
#include "sicdet/partition.hpp"
#include "sicdet/povm.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

// Real-valued correlation tensor <M^(1)_{k1} x ... x M^(N)_{kN}>,
// row-major with the first index slowest.
struct CorrelationTensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  std::size_t flat(const std::vector<std::size_t>& idx) const {
    std::size_t f = 0;
    for (std::size_t s = 0; s < shape.size(); ++s) f = f * shape[s] + idx[s];
    return f;
  }
  double at(const std::vector<std::size_t>& idx) const {
    return values.at(flat(idx));
  }
};

inline std::vector<double> expectation_vector(const Matrix& rho,
                                              const Povm& povm) {
  if (rho.rows() != povm.dim)
    throw std::invalid_argument("expectation_vector: dimension mismatch");
  std::vector<double> e;
  e.reserve(povm.elements.size());
  for (const Matrix& m : povm.elements) e.push_back(expectation(rho, m));
  return e;
}

namespace detail {

inline void check_povms(const std::vector<std::size_t>& dims,
                        const std::vector<Povm>& povms) {
  if (povms.size() != dims.size())
    throw std::invalid_argument("correlation: need one measurement per subsystem");
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (povms[s].dim != dims[s])
      throw std::invalid_argument(
          "correlation: measurement on subsystem " + std::to_string(s) +
          " has dimension " + std::to_string(povms[s].dim) + ", state has " +
          std::to_string(dims[s]));
}

// Peels subsystems off the front: contracting the first subsystem with one
// element leaves a correlation problem on the remaining subsystems.
inline void fill_tensor(const Matrix& rho, const std::vector<std::size_t>& dims,
                        const std::vector<Povm>& povms, std::size_t level,
                        std::size_t base, const std::vector<std::size_t>& strides,
                        std::vector<double>& out) {
  const Povm& p = povms[level];
  if (level + 1 == povms.size()) {
    for (std::size_t k = 0; k < p.elements.size(); ++k)
      out[base + k] = expectation(rho, p.elements[k]);
    return;
  }
  const std::vector<std::size_t> rest(dims.begin() + 1, dims.end());
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    Matrix reduced = contract_subsystem(rho, dims, 0, p.elements[k]);
    fill_tensor(reduced, rest, povms, level + 1, base + k * strides[level],
                strides, out);
  }
}

}  // namespace detail

inline CorrelationTensor correlation_tensor(const DensityState& st,
                                            const std::vector<Povm>& povms) {
  detail::check_povms(st.dims(), povms);
  CorrelationTensor t;
  for (const Povm& p : povms) t.shape.push_back(p.elements.size());
  std::vector<std::size_t> strides(t.shape.size(), 1);
  for (std::size_t s = t.shape.size(); s-- > 1;)
    strides[s - 1] = strides[s] * t.shape[s];
  t.values.assign(strides[0] * t.shape[0], 0.0);
  detail::fill_tensor(st.matrix(), st.dims(), povms, 0, 0, strides, t.values);
  return t;
}

// Unfolds the tensor into a matrix: row index runs over `rows` (first
// entry slowest), column index over `cols`.
inline Matrix matricize(const CorrelationTensor& t, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  if (rows.size() + cols.size() != t.shape.size())
    throw std::invalid_argument("matricize: row/column split does not cover the tensor");
  std::size_t nr = 1, nc = 1;
  for (int s : rows) nr *= t.shape.at(static_cast<std::size_t>(s));
  for (int s : cols) nc *= t.shape.at(static_cast<std::size_t>(s));
  Matrix m(nr, nc);
  std::vector<std::size_t> idx(t.shape.size(), 0);
  for (std::size_t r = 0; r < nr; ++r) {
    std::size_t rr = r;
    for (std::size_t k = rows.size(); k-- > 0;) {
      idx[static_cast<std::size_t>(rows[k])] = rr % t.shape[static_cast<std::size_t>(rows[k])];
      rr /= t.shape[static_cast<std::size_t>(rows[k])];
    }
    for (std::size_t c = 0; c < nc; ++c) {
      std::size_t cc = c;
      for (std::size_t k = cols.size(); k-- > 0;) {
        idx[static_cast<std::size_t>(cols[k])] = cc % t.shape[static_cast<std::size_t>(cols[k])];
        cc /= t.shape[static_cast<std::size_t>(cols[k])];
      }
      m(r, c) = t.at(idx);
    }
  }
  return m;
}

inline Matrix bipartite_correlation(const DensityState& st, const Povm& a,
                                    const Povm& b) {
  if (st.subsystem_count() != 2)
    throw std::invalid_argument("bipartite_correlation: state is not bipartite");
  detail::check_povms(st.dims(), {a, b});
  Matrix m(a.elements.size(), b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    Matrix reduced = contract_subsystem(st.matrix(), st.dims(), 0, a.elements[i]);
    for (std::size_t j = 0; j < b.elements.size(); ++j)
      m(i, j) = expectation(reduced, b.elements[j]);
  }
  return m;
}

// Three ways to flatten a tripartite correlation tensor against one
// distinguished subsystem.
//
// BlockDiag: a direct sum of the slices taken at each outcome of the
// distinguished measurement.
//
// MarginalKron: the distinguished subsystem enters only through its
// marginal outcome vector; kron(diag(marginal), pair correlation matrix)
// of the reduced remaining pair.
//
// Unfolding: the tensor matricized with the distinguished subsystem as
// the column index and the other two (in subsystem order) as the row
// index. This is the flattening across the cut {others}|{distinguished},
// and the only one of the three whose separable bound is sound.
enum class TripartiteMode { BlockDiag, MarginalKron, Unfolding };

inline TripartiteMode parse_mode(const std::string& name) {
  if (name == "blockdiag") return TripartiteMode::BlockDiag;
  if (name == "marginal") return TripartiteMode::MarginalKron;
  if (name == "unfolding") return TripartiteMode::Unfolding;
  throw std::invalid_argument("unknown mode '" + name +
                              "' (expected blockdiag, marginal or unfolding)");
}

inline std::string mode_name(TripartiteMode m) {
  switch (m) {
    case TripartiteMode::BlockDiag: return "blockdiag";
    case TripartiteMode::MarginalKron: return "marginal";
    default: return "unfolding";
  }
}

inline Matrix tripartite_correlation(const DensityState& st,
                                     const std::vector<Povm>& povms,
                                     std::size_t distinguished,
                                     TripartiteMode mode) {
  if (st.subsystem_count() != 3)
    throw std::invalid_argument("tripartite_correlation: state is not tripartite");
  if (distinguished > 2)
    throw std::invalid_argument("tripartite_correlation: distinguished subsystem out of range");
  detail::check_povms(st.dims(), povms);
  std::vector<int> others;
  for (int s = 0; s < 3; ++s)
    if (static_cast<std::size_t>(s) != distinguished) others.push_back(s);

  if (mode == TripartiteMode::Unfolding) {
    CorrelationTensor t = correlation_tensor(st, povms);
    return matricize(t, others, {static_cast<int>(distinguished)});
  }
  if (mode == TripartiteMode::BlockDiag) {
    CorrelationTensor t = correlation_tensor(st, povms);
    const std::size_t md = t.shape[distinguished];
    const std::size_t mr = t.shape[static_cast<std::size_t>(others[0])];
    const std::size_t mc = t.shape[static_cast<std::size_t>(others[1])];
    Matrix m(md * mr, md * mc);
    std::vector<std::size_t> idx(3, 0);
    for (std::size_t a = 0; a < md; ++a)
      for (std::size_t i = 0; i < mr; ++i)
        for (std::size_t j = 0; j < mc; ++j) {
          idx[distinguished] = a;
          idx[static_cast<std::size_t>(others[0])] = i;
          idx[static_cast<std::size_t>(others[1])] = j;
          m(a * mr + i, a * mc + j) = t.at(idx);
        }
    return m;
  }
  // MarginalKron
  DensityState dist = partial_trace(st, {distinguished});
  std::vector<double> e = expectation_vector(dist.matrix(), povms[distinguished]);
  DensityState pair = partial_trace(st, {static_cast<std::size_t>(others[0]),
                                         static_cast<std::size_t>(others[1])});
  Matrix p = bipartite_correlation(pair, povms[static_cast<std::size_t>(others[0])],
                                   povms[static_cast<std::size_t>(others[1])]);
  Matrix diag(e.size(), e.size());
  for (std::size_t k = 0; k < e.size(); ++k) diag(k, k) = e[k];
  return kron(diag, p);
}

namespace detail {

// Composition for four or more subsystems in the BlockDiag and
// MarginalKron styles: a lone subsystem contributes diag(marginal), a
// two-subsystem branch contributes the pair correlation matrix of its
// reduced state, and a split of larger branches contributes the Kronecker
// product of its sides.
inline Matrix composed_branch(const DensityState& st,
                              const std::vector<Povm>& povms,
                              const Partition& part, std::size_t node) {
  const std::vector<int> under = part.leaves_under(node);
  if (under.size() == 1) {
    const std::size_t s = static_cast<std::size_t>(under[0]);
    DensityState one = partial_trace(st, {s});
    std::vector<double> e = expectation_vector(one.matrix(), povms[s]);
    Matrix diag(e.size(), e.size());
    for (std::size_t k = 0; k < e.size(); ++k) diag(k, k) = e[k];
    return diag;
  }
  if (under.size() == 2) {
    std::vector<std::size_t> keep{static_cast<std::size_t>(under[0]),
                                  static_cast<std::size_t>(under[1])};
    if (keep[0] > keep[1]) std::swap(keep[0], keep[1]);
    DensityState pair = partial_trace(st, keep);
    return bipartite_correlation(pair, povms[keep[0]], povms[keep[1]]);
  }
  const Partition::Node& n = part.node(node);
  if (n.kind != Partition::Kind::Split)
    throw std::invalid_argument(
        "npartite_correlation: branches of three or more subsystems must be split further");
  Matrix left = composed_branch(st, povms, part, n.children[0]);
  Matrix right = composed_branch(st, povms, part, n.children[1]);
  return kron(left, right);
}

}  // namespace detail

inline Matrix npartite_correlation(const DensityState& st,
                                   const std::vector<Povm>& povms,
                                   const Partition& part, TripartiteMode mode) {
  part.validate(st.subsystem_count());
  detail::check_povms(st.dims(), povms);
  const Partition::Node& root = part.node(part.root());
  const std::vector<int> left = part.leaves_under(root.children[0]);
  const std::vector<int> right = part.leaves_under(root.children[1]);

  if (st.subsystem_count() == 2) {
    // rows follow the left side of the cut, so "B|A" is the transpose
    Matrix m = bipartite_correlation(st, povms[0], povms[1]);
    return left[0] == 0 ? m : m.transpose();
  }

  if (st.subsystem_count() == 3) {
    // One side of any tripartite cut is a single subsystem; that side is
    // the distinguished one.
    const std::size_t dist = left.size() == 1 ? static_cast<std::size_t>(left[0])
                                              : static_cast<std::size_t>(right[0]);
    if (left.size() != 1 && right.size() != 1)
      throw std::invalid_argument("npartite_correlation: malformed tripartite cut");
    return tripartite_correlation(st, povms, dist, mode);
  }

  if (mode == TripartiteMode::Unfolding) {
    CorrelationTensor t = correlation_tensor(st, povms);
    return matricize(t, left, right);
  }
  Matrix l = detail::composed_branch(st, povms, part, root.children[0]);
  Matrix r = detail::composed_branch(st, povms, part, root.children[1]);
  return kron(l, r);
}

}  // namespace sicdet
