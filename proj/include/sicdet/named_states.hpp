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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sicdet/matrix.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

// All states below use the computational product basis with the first
// subsystem as the leftmost (slowest) tensor factor, and
// |+/-> = (|0> +/- |1>)/sqrt2.

namespace detail {

// n-qubit basis ket from bit values, first qubit most significant
inline std::vector<cplx> basis_ket(const std::vector<int>& bits,
                                   const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims.size(); ++s)
    idx = idx * dims[s] + static_cast<std::size_t>(bits[s]);
  std::vector<cplx> v(product(dims));
  v[idx] = 1.0;
  return v;
}

inline void axpy(std::vector<cplx>& y, cplx a, const std::vector<cplx>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Bell pair (|00> + |11>)/sqrt2 on qubits (p, q) of an n-qubit register,
// |0> on every other qubit.
inline std::vector<cplx> bell_with_zeros(std::size_t n, std::size_t p,
                                         std::size_t q) {
  std::vector<std::size_t> dims(n, 2);
  std::vector<cplx> v(std::size_t{1} << n);
  for (int b : {0, 1}) {
    std::vector<int> bits(n, 0);
    bits[p] = b;
    bits[q] = b;
    axpy(v, 1.0 / std::sqrt(2.0), basis_ket(bits, dims));
  }
  return v;
}

}  // namespace detail

// Three qubits: mixture of the three placements of a Bell pair (the third
// qubit in |0>), with weights (1 - b - c, b, c) on pairs (AB, AC, BC).
inline DensityState bell_mixture_3q(double b, double c) {
  const double a = 1.0 - b - c;
  if (b < -1e-12 || c < -1e-12 || a < -1e-12)
    throw std::domain_error("bell_mixture_3q: weights leave the simplex");
  Matrix rho(8, 8);
  rho += cplx{a} * projector(detail::bell_with_zeros(3, 0, 1));
  rho += cplx{b} * projector(detail::bell_with_zeros(3, 0, 2));
  rho += cplx{c} * projector(detail::bell_with_zeros(3, 1, 2));
  return DensityState({2, 2, 2}, std::move(rho));
}

// Four qubits: mixture of a Bell pair on (AB), (AC), (AD), the remaining
// two qubits in |00>, with weights (x, y, z), x + y + z = 1.
inline DensityState bell_mixture_4q(double x, double y, double z) {
  if (x < -1e-12 || y < -1e-12 || z < -1e-12 ||
      std::abs(x + y + z - 1.0) > 1e-9)
    throw std::domain_error("bell_mixture_4q: weights must lie on the simplex");
  Matrix rho(16, 16);
  rho += cplx{x} * projector(detail::bell_with_zeros(4, 0, 1));
  rho += cplx{y} * projector(detail::bell_with_zeros(4, 0, 2));
  rho += cplx{z} * projector(detail::bell_with_zeros(4, 0, 3));
  return DensityState({2, 2, 2, 2}, std::move(rho));
}

// Three qubits: the normalized projector onto the complement of the span of
// the four shifted product vectors |0,1,+>, |1,+,0>, |+,0,1>, |-,-,->.
// Bound entangled: positive under every partial transpose yet not separable.
inline DensityState upb_shift_state() {
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> zero = {1.0, 0.0}, one = {0.0, 1.0};
  const std::vector<cplx> plus = {s, s}, minus = {s, -s};
  auto triple = [](const std::vector<cplx>& a, const std::vector<cplx>& b,
                   const std::vector<cplx>& g) {
    std::vector<cplx> v;
    v.reserve(8);
    for (const auto& x : a)
      for (const auto& y : b)
        for (const auto& z : g) v.push_back(x * y * z);
    return v;
  };
  Matrix rho = Matrix::identity(8);
  rho -= projector(triple(zero, one, plus));
  rho -= projector(triple(one, plus, zero));
  rho -= projector(triple(plus, zero, one));
  rho -= projector(triple(minus, minus, minus));
  rho *= cplx{0.25};
  return DensityState({2, 2, 2}, std::move(rho));
}

// Three qubits, parameter 0 < b < 1: the bound entangled family built from
// a qubit x 4-level construction. Positive under the middle-qubit partial
// transpose for every b; entangled for 0 < b < 1.
inline DensityState ppt_sigma(double b) {
  if (b <= 0.0 || b >= 1.0)
    throw std::domain_error("ppt_sigma: parameter must satisfy 0 < b < 1");
  const std::vector<std::size_t> dims{2, 2, 2};
  auto ket = [&](int b0, int b1, int b2) {
    return detail::basis_ket({b0, b1, b2}, dims);
  };
  auto plus2 = [&](std::vector<cplx> u, const std::vector<cplx>& v) {
    detail::axpy(u, 1.0, v);
    for (auto& x : u) x /= std::sqrt(2.0);
    return u;
  };
  Matrix insep(8, 8);
  insep += cplx{2.0 / 7.0} * projector(plus2(ket(0, 0, 0), ket(1, 0, 1)));
  insep += cplx{2.0 / 7.0} * projector(plus2(ket(0, 0, 1), ket(1, 1, 0)));
  insep += cplx{2.0 / 7.0} * projector(plus2(ket(0, 1, 0), ket(1, 1, 1)));
  insep += cplx{1.0 / 7.0} * projector(ket(0, 1, 1));

  std::vector<cplx> phib(8);
  detail::axpy(phib, std::sqrt((1.0 + b) / 2.0), ket(1, 0, 0));
  detail::axpy(phib, std::sqrt((1.0 - b) / 2.0), ket(1, 1, 0));

  const double w = 7.0 * b / (7.0 * b + 1.0);
  Matrix rho = cplx{w} * insep;
  rho += cplx{1.0 - w} * projector(phib);
  return DensityState(dims, std::move(rho));
}

// Qutrit x qutrit x qubit: white noise mixed into the pure state
// (|100> + |210> + |001> + |111> + |221>)/sqrt5 with visibility p.
inline DensityState noisy_332(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::domain_error("noisy_332: visibility outside [0, 1]");
  const std::vector<std::size_t> dims{3, 3, 2};
  std::vector<cplx> phi(18);
  const double amp = 1.0 / std::sqrt(5.0);
  for (const auto& bits : std::vector<std::vector<int>>{
           {1, 0, 0}, {2, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 2, 1}})
    detail::axpy(phi, amp, detail::basis_ket(bits, dims));
  return mix_white_noise(DensityState(dims, projector(phi)), p);
}

// Lookup by family name; parameter names match the constructors.
inline DensityState build_named_state(const std::string& name,
                                      const std::map<std::string, double>& ps) {
  auto need = [&](const char* key) {
    auto it = ps.find(key);
    if (it == ps.end())
      throw std::invalid_argument("build_named_state: missing parameter '" +
                                  std::string(key) + "' for " + name);
    return it->second;
  };
  if (name == "bell_mixture_3q") return bell_mixture_3q(need("b"), need("c"));
  if (name == "bell_mixture_4q")
    return bell_mixture_4q(need("x"), need("y"), need("z"));
  if (name == "upb_shifts") return upb_shift_state();
  if (name == "ppt_sigma") return ppt_sigma(need("b"));
  if (name == "noisy_332") return noisy_332(need("p"));
  throw std::invalid_argument("build_named_state: unknown family '" + name +
                              "'");
}

}  // namespace sicdet
