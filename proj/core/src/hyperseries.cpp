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

#include "vwp/hyperseries.hpp"

#include <algorithm>
#include <cmath>

namespace vwp::hyperseries {

namespace {

bool is_nonpositive_integer(const ExactRational& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

// Gamma argument validity for the direct-evaluation path.
void require_positive(const ExactRational& q, const char* what) {
  if (q <= 0) {
    throw std::domain_error(std::string("gamma argument not positive: ") + what);
  }
}

}  // namespace

HParams make_hparams(const std::vector<ExactRational>& all) {
  if (all.size() < 3) {
    throw std::invalid_argument("need h0 and at least two lower parameters");
  }
  HParams hp;
  hp.h0 = all[0];
  hp.h.assign(all.begin() + 1, all.end());
  return hp;
}

ConditionReport check_conditions(const HParams& hp, int rank_k) {
  if (hp.k() != rank_k + 2) {
    throw std::invalid_argument("check_conditions: expected k+2 lower parameters");
  }
  ConditionReport r;
  ExactRational sum = 0;
  for (const auto& hj : hp.h) sum += hj;
  ExactRational margin = 1 + hp.h0 - ExactRational(2, rank_k + 1) * sum;
  r.margin5 = margin.get_d();
  r.cond5_ok = margin > 0;
  r.cond6_ok = true;
  for (int j = 2; j <= rank_k + 1; ++j) {
    const ExactRational& hj = hp.h[j - 1];
    const ExactRational& hj1 = hp.h[j];  // h_{j+1}
    if (!(hj > 0 && 1 + hp.h0 - hj1 > hj)) r.cond6_ok = false;
  }
  r.cond7_ok = !is_nonpositive_integer(hp.h.front()) &&
               !is_nonpositive_integer(hp.h.back());
  return r;
}

HPReal series_term(const HParams& hp, long mu, const PrecisionContext& ctx) {
  const unsigned wp = ctx.precision_bits() + 32;
  ExactRational front = hp.h0 + 2 * mu;
  // log-scale product of gamma ratios
  ExactRational a0 = hp.h0 + mu;
  ExactRational b0 = 1 + mu;
  require_positive(a0, "h0+mu");
  HPReal lg = log_gamma(HPReal(a0, wp), ctx) - log_gamma(HPReal(b0, wp), ctx);
  for (const auto& hj : hp.h) {
    ExactRational an = hj + mu;
    ExactRational bn = 1 + hp.h0 - hj + mu;
    require_positive(an, "h_j+mu");
    require_positive(bn, "1+h0-h_j+mu");
    lg += log_gamma(HPReal(an, wp), ctx) - log_gamma(HPReal(bn, wp), ctx);
  }
  HPReal t = HPReal(front, wp) * exp(lg);
  bool alternating = (hp.k() + 1) % 2 == 1;
  if (alternating && (mu % 2 == 1)) t = -t;
  HPReal out(ctx.precision_bits());
  mpfr_set(out.raw(), t.raw(), MPFR_RNDN);
  return out;
}

ExactRational tail_exponent(const HParams& hp) {
  ExactRational sum = 0;
  for (const auto& hj : hp.h) sum += hj;
  return 2 * sum - hp.k() * (1 + hp.h0) + hp.h0;
}

HPReal term_ratio(const HParams& hp, long mu, const PrecisionContext& ctx) {
  const unsigned wp = ctx.precision_bits() + 32;
  ExactRational num = (hp.h0 + 2 * mu + 2) * (hp.h0 + mu);
  ExactRational den = (hp.h0 + 2 * mu) * (1 + mu);
  HPReal r = HPReal(num, wp) / HPReal(den, wp);
  for (const auto& hj : hp.h) {
    r *= HPReal(hj + mu, wp) / HPReal(1 + hp.h0 - hj + mu, wp);
  }
  return r;
}

namespace {

// Richardson extrapolation of partial sums S_{M}, M = M0*2^j, with remainder
// S - S_M ~ M^{q0} (c0 + c1/M + c2/M^2 + ...): eliminate one power per level.
HPReal richardson(const std::vector<HPReal>& s, double q0, unsigned wp) {
  std::vector<HPReal> r = s;
  const int J = static_cast<int>(r.size());
  for (int lvl = 0; lvl < J - 1; ++lvl) {
    double q = q0 - lvl;
    HPReal f(std::exp2(q), wp);  // 2^q
    HPReal one(1.0, wp);
    std::vector<HPReal> nxt;
    for (int j = 0; j + 1 < static_cast<int>(r.size()); ++j) {
      nxt.push_back((r[j + 1] - f * r[j]) / (one - f));
    }
    r = std::move(nxt);
  }
  return r[0];
}

}  // namespace

SeriesValue eval_F(const HParams& hp, const PrecisionContext& ctx) {
  const unsigned wp = ctx.precision_bits() + 32;
  const int K = hp.k();
  const bool alternating = (K + 1) % 2 == 1;
  for (const auto& hj : hp.h) {
    if (is_nonpositive_integer(hj)) {
      throw std::domain_error("lower parameter is a non-positive integer");
    }
    if (1 + hp.h0 - hj <= 0) {
      throw std::domain_error("denominator parameter 1+h0-h_j not positive");
    }
  }
  const ExactRational pq = tail_exponent(hp);
  const double p = pq.get_d();
  if ((!alternating && pq >= -1) || (alternating && pq >= 0)) {
    throw std::domain_error("series does not converge for these parameters");
  }

  SeriesValue out;
  if (K >= 2) {
    ConditionReport cr = check_conditions(hp, K - 2);
    out.slow = cr.margin5 < 0.05;
  }

  HPReal term(wp);
  {
    HPReal t0 = series_term(hp, 0, ctx);
    mpfr_set(term.raw(), t0.raw(), MPFR_RNDN);
  }
  HPReal sum(0.0, wp);
  const HPReal tol(ctx.rel_tol(), wp);
  const long m0 = 128;
  std::vector<HPReal> checkpoints;
  long mu = 0;
  int quiet = 0;
  long next_cp = m0;
  const long hard_cap = ctx.max_terms();

  auto advance = [&](long steps) {
    for (long i = 0; i < steps; ++i) {
      sum += term;
      HPReal r = term_ratio(hp, mu, ctx);
      term *= r;
      if (alternating) term = -term;
      ++mu;
    }
  };

  // fast path: geometric-looking decay with the three-quiet-terms rule
  while (mu < hard_cap) {
    sum += term;
    HPReal r = term_ratio(hp, mu, ctx);
    double rd = r.to_double();
    term *= r;
    if (alternating) term = -term;
    ++mu;
    if (abs(term) < tol * abs(sum) && std::abs(rd) < 0.999) {
      if (++quiet >= 3) {
        out.value = HPReal(0.0, ctx.precision_bits());
        mpfr_set(out.value.raw(), sum.raw(), MPFR_RNDN);
        out.converged = true;
        out.terms_used = mu;
        return out;
      }
    } else {
      quiet = 0;
    }
    if (mu >= next_cp) break;  // slow decay: switch to extrapolation
  }

  // extrapolation path over doubling checkpoints
  checkpoints.push_back(sum);
  const int max_levels = 10;
  double q0 = alternating ? p : p + 1;  // remainder order (pairs gain one power)
  HPReal best(wp);
  for (int lvl = 1; lvl <= max_levels; ++lvl) {
    long target = next_cp * 2;
    if (target > hard_cap) break;
    advance(target - mu);
    next_cp = target;
    checkpoints.push_back(sum);
    if (checkpoints.size() >= 4) {
      std::vector<HPReal> prev(checkpoints.begin(), checkpoints.end() - 1);
      best = richardson(checkpoints, q0, wp);
      HPReal b2 = richardson(prev, q0, wp);
      if (abs(best - b2) < tol * abs(best)) {
        out.value = HPReal(0.0, ctx.precision_bits());
        mpfr_set(out.value.raw(), best.raw(), MPFR_RNDN);
        out.converged = true;
        out.terms_used = mu;
        return out;
      }
    }
  }
  // did not meet the tolerance before the cap
  out.value = HPReal(0.0, ctx.precision_bits());
  if (checkpoints.size() >= 4) {
    mpfr_set(out.value.raw(), best.raw(), MPFR_RNDN);
  } else {
    mpfr_set(out.value.raw(), sum.raw(), MPFR_RNDN);
  }
  out.converged = false;
  out.terms_used = mu;
  return out;
}

HPReal dougall_F3(const ExactRational& h0, const ExactRational& h1,
                  const ExactRational& h2, const ExactRational& h3,
                  const PrecisionContext& ctx) {
  if (!(1 + h0 - h1 - h2 - h3 > 0)) {
    throw std::domain_error("dougall_F3 requires 1+h0 > h1+h2+h3");
  }
  const unsigned wp = ctx.precision_bits() + 32;
  auto lg = [&](const ExactRational& q) {
    require_positive(q, "dougall_F3 gamma argument");
    return log_gamma(HPReal(q, wp), ctx);
  };
  HPReal num = lg(h1) + lg(h2) + lg(h3) + lg(1 + h0 - h1 - h2 - h3);
  HPReal den = lg(1 + h0 - h1 - h2) + lg(1 + h0 - h1 - h3) + lg(1 + h0 - h2 - h3);
  HPReal r = exp(num - den);
  HPReal out(ctx.precision_bits());
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

HPReal check_F2_normalization(const ExactRational& h0, const ExactRational& h1,
                              const ExactRational& h2, const PrecisionContext& ctx) {
  HParams hp;
  hp.h0 = h0;
  hp.h = {h1, h2};
  SeriesValue f = eval_F(hp, ctx);
  if (!f.converged) {
    throw std::runtime_error("F_2 series did not converge");
  }
  const unsigned wp = ctx.precision_bits() + 32;
  HPReal pref = exp(log_gamma(HPReal(1 + h0 - h1 - h2, wp), ctx) -
                    log_gamma(HPReal(h1, wp), ctx) - log_gamma(HPReal(h2, wp), ctx));
  return pref * f.value;
}

}  // namespace vwp::hyperseries
