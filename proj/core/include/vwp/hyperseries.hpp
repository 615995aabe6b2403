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

#include <vector>

#include "vwp/numctx.hpp"

namespace vwp::hyperseries {

/// Parameter vector (h_0; h_1, ..., h_k) of the very-well-poised series.
/// Parameters are exact rationals so that condition checks, parameter
/// correspondences and group actions stay exact.
struct HParams {
  ExactRational h0;
  std::vector<ExactRational> h;

  int k() const { return static_cast<int>(h.size()); }
};

HParams make_hparams(const std::vector<ExactRational>& all);  // (h0; h1..hk)

/// Outcome of the convergence/pole screens.  margin5 is the slack
/// 1+h_0 - (2/(k+1)) sum h_j for the supplied rank.
struct ConditionReport {
  bool cond5_ok = false;
  bool cond6_ok = false;
  bool cond7_ok = false;
  double margin5 = 0;

  bool all_ok() const { return cond5_ok && cond6_ok && cond7_ok; }
};

/// Checks conditions (5)-(7) for hp read as (h_0; h_1..h_{k+2}) at rank k.
/// Pure predicate; hp must carry exactly k+2 lower parameters.
ConditionReport check_conditions(const HParams& hp, int rank_k);

/// mu-th summand of the series, sign included.
HPReal series_term(const HParams& hp, long mu, const PrecisionContext& ctx);

struct SeriesValue {
  HPReal value;
  bool converged = false;
  bool slow = false;       // set when margin5 < 0.05 for the derived rank
  long terms_used = 0;
};

/// Sum of the series by the term-ratio recurrence.  Terms with power-law
/// tails are completed by Richardson extrapolation over doubling partial
/// sums (the decay exponent is known exactly from the parameters).
SeriesValue eval_F(const HParams& hp, const PrecisionContext& ctx);

/// Closed form of F_3 (Dougall limiting case).
HPReal dougall_F3(const ExactRational& h0, const ExactRational& h1,
                  const ExactRational& h2, const ExactRational& h3,
                  const PrecisionContext& ctx);

/// Gamma(1+h0-h1-h2)/(Gamma(h1)Gamma(h2)) * F_2(h0; h1,h2); equal to 1.
HPReal check_F2_normalization(const ExactRational& h0, const ExactRational& h1,
                              const ExactRational& h2, const PrecisionContext& ctx);

/// Exact tail exponent p with |term(mu)| ~ mu^p.
ExactRational tail_exponent(const HParams& hp);

/// Closed-form term ratio term(mu+1)/term(mu) without the sign factor.
HPReal term_ratio(const HParams& hp, long mu, const PrecisionContext& ctx);

}  // namespace vwp::hyperseries
