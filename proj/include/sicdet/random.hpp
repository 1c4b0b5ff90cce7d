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

#include <cstdint>
#include <random>
#include <vector>

#include "sicdet/matrix.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

// Seeded sampler so property tests and the acceptance suite are repeatable.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::vector<cplx> pure(std::size_t d) {
    std::vector<cplx> v(d);
    for (auto& x : v) x = cplx{normal_(rng_), normal_(rng_)};
    double n = 0.0;
    for (const auto& x : v) n += std::norm(x);
    n = std::sqrt(n);
    for (auto& x : v) x /= n;
    return v;
  }

  // Full-rank density matrix G G^dag normalized to unit trace.
  Matrix density(std::size_t d) {
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        g(i, j) = cplx{normal_(rng_), normal_(rng_)};
    Matrix rho = g * g.dagger();
    rho *= cplx{1.0 / rho.trace().real()};
    return rho;
  }

  DensityState state(const std::vector<std::size_t>& dims) {
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    return DensityState(dims, density(total));
  }

  DensityState product_state(const std::vector<std::size_t>& dims) {
    Matrix rho(1, 1);
    rho(0, 0) = 1.0;
    for (auto d : dims) rho = kron(rho, projector(pure(d)));
    return DensityState(dims, std::move(rho));
  }

  DensityState product_mixture(const std::vector<std::size_t>& dims,
                               std::size_t terms) {
    std::vector<double> w(terms);
    double total = 0.0;
    for (auto& x : w) {
      x = uniform(0.05, 1.0);
      total += x;
    }
    std::size_t dim = 1;
    for (auto d : dims) dim *= d;
    Matrix rho(dim, dim);
    for (auto x : w) rho += cplx{x / total} * product_state(dims).matrix();
    return DensityState(dims, std::move(rho));
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sicdet
