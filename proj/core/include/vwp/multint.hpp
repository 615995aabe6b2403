// Copyright 2026 The vwp Authors
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
#include <span>
#include <vector>

#include "vwp/numctx.hpp"

namespace vwp::multint {

/// Integral parameters (a_0; a_1..a_k; b_1..b_k), exact.
struct ABParams {
  ExactRational a0;
  std::vector<ExactRational> a, b;

  int k() const { return static_cast<int>(a.size()); }
  /// Endpoint integrability: a_j > 0 and b_j - a_j > 0 for all j.
  bool integrable() const;
};

ABParams make_abparams(const ExactRational& a0,
                       const std::vector<ExactRational>& a,
                       const std::vector<ExactRational>& b);

/// Parameters of the S(z) family: denominator factors
/// (1 - z x_1...x_{r_i})^{c_i} with 1 <= r_1 < ... < r_m = k.
struct SParams {
  std::vector<ExactRational> a, b;
  std::vector<ExactRational> c;
  std::vector<int> r;
  double z = 0;

  int k() const { return static_cast<int>(a.size()); }
};

/// Monte Carlo configuration.  Results are a deterministic function of
/// (samples, seed, chunks) regardless of thread count.
struct McConfig {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  int chunks = 16;
};

enum class QVariant { nested, recursive_front, recursive_back };

/// The nested polynomial Q_k; all variants agree to rounding error.
double eval_Q(std::span<const double> x, QVariant variant = QVariant::nested);

/// Integrand of the multiple integral at an interior point.
double integrand(const ABParams& ab, std::span<const double> x);

struct QuadResult {
  HPReal value;
  double rel_err_est = 0;
};

/// Tensor-product Gauss-Jacobi evaluation (k <= 4).  The endpoint weights
/// x^{a_j-1}(1-x)^{b_j-a_j-1} are absorbed into the rule; the error estimate
/// compares n and 2n nodes per dimension.
QuadResult eval_J_quad(const ABParams& ab, int nodes_per_dim,
                       const PrecisionContext& ctx);

struct McResult {
  double estimate = 0;
  double stderr_est = 0;
  std::int64_t samples = 0;
};

/// Importance-sampled Monte Carlo: each coordinate is drawn from the
/// Beta-type density matching its endpoint weights, so only Q^{-a0} is
/// averaged.
McResult eval_J_mc(const ABParams& ab, const McConfig& mc);

/// Monte Carlo for the S(z) family, z <= 1.
McResult eval_S_mc(const SParams& sp, const McConfig& mc);

}  // namespace vwp::multint
