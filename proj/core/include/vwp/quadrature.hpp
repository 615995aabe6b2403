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

#include <memory>
#include <vector>

#include "vwp/numctx.hpp"

namespace vwp::quadrature {

/// Gauss-Legendre rule on [-1,1].
struct GaussLegendre {
  std::vector<double> x, w;
};
const GaussLegendre& gauss_legendre(int n);

/// Rule for int_0^1 x^beta (1-x)^alpha f(x) dx with f smooth.
/// Weights are carried as logarithms: for large exponents the raw weights
/// under/overflow doubles.
struct JacobiRule {
  std::vector<double> x;
  std::vector<double> logw;
};
JacobiRule gauss_jacobi01(int n, double alpha, double beta);

/// Same rule at context precision (nodes Newton-polished, weights from the
/// closed-form normalization).  Cached per (n, alpha, beta, bits).
struct JacobiRuleHP {
  std::vector<HPReal> x, w;
};
std::shared_ptr<const JacobiRuleHP> gauss_jacobi01_hp(int n,
                                                      const ExactRational& alpha,
                                                      const ExactRational& beta,
                                                      const PrecisionContext& ctx);

/// tanh-sinh (double-exponential) rule on (0,1); ln x and ln(1-x) are
/// provided because the extreme nodes round to 0 and 1 in doubles.
struct TanhSinhRule {
  std::vector<double> x, w, lnx, ln1mx;
};
TanhSinhRule tanh_sinh01(double step = 0.05, double cutoff = 3.6);

}  // namespace vwp::quadrature
