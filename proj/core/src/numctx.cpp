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

#include "vwp/numctx.hpp"

#include <cmath>
#include <cstdio>

namespace vwp {

std::string to_fraction_string(const ExactRational& q) {
  return q.get_str();
}

ExactRational rational_from_string(const std::string& s) {
  ExactRational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

PrecisionContext::PrecisionContext(unsigned precision_bits, double rel_tol,
                                   std::int64_t max_terms)
    : bits_(precision_bits), rel_tol_(rel_tol), max_terms_(max_terms) {
  if (precision_bits < 64) {
    throw std::invalid_argument("precision_bits must be >= 64");
  }
  if (!(rel_tol > 0)) {
    throw std::invalid_argument("rel_tol must be positive");
  }
  if (max_terms <= 0) {
    throw std::invalid_argument("max_terms must be positive");
  }
  // 2^-bits must undercut the requested tolerance.
  if (std::ldexp(1.0, -static_cast<int>(std::min(precision_bits, 1060u))) >= rel_tol) {
    throw std::invalid_argument("rel_tol is below the resolution of precision_bits");
  }
}

PrecisionContext make_context(unsigned precision_bits, double rel_tol) {
  return PrecisionContext(precision_bits, rel_tol);
}

int PrecisionContext::decimal_digits() const {
  return static_cast<int>(bits_ * 0.3010299956639812);
}

HPReal HPReal::from_string(const std::string& s, unsigned bits) {
  HPReal r(bits);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return r;
}

HPReal HPReal::pi(unsigned bits) {
  HPReal r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

std::string HPReal::to_string(int digits) const {
  if (digits < 2) digits = 2;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

// ---------------------------------------------------------------------------
// Spouge's approximation:
//   Gamma(z+1) = (z+a)^(z+1/2) e^{-(z+a)} [ c_0 + sum_{k=1}^{a-1} c_k/(z+k) ]
// with c_0 = sqrt(2 pi), c_k = (-1)^{k-1} (a-k)^{k-1/2} e^{a-k} / (k-1)!.
// Relative error is below (2 pi)^{-(a+1/2)}, so a grows linearly in the
// requested bit count.
// ---------------------------------------------------------------------------

const std::vector<HPReal>& PrecisionContext::spouge() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!spouge_.empty()) return spouge_;
  const double a = std::ceil(bits_ * 0.6931471805599453 / std::log(2 * M_PI)) + 3;
  spouge_a_ = a;
  const unsigned wp = bits_ + 64;
  const int n = static_cast<int>(a);
  std::vector<HPReal> c;
  c.reserve(n);
  HPReal c0(wp);
  mpfr_const_pi(c0.raw(), MPFR_RNDN);
  c0 = sqrt(c0 * 2.0);
  c.push_back(c0);
  HPReal fact(1.0, wp);
  for (int k = 1; k < n; ++k) {
    if (k > 1) fact *= static_cast<double>(k - 1);
    HPReal ak(a - k, wp);
    HPReal term = exp(log(ak) * (k - 0.5) + ak) / fact;
    if (k % 2 == 0) term = -term;
    c.push_back(term);
  }
  spouge_ = std::move(c);
  return spouge_;
}

double PrecisionContext::spouge_a() const {
  spouge();
  return spouge_a_;
}

HPReal log_gamma(const HPReal& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) {
    throw std::domain_error("log_gamma requires x > 0");
  }
  const unsigned wp = ctx.precision_bits() + 64;
  const auto& c = ctx.spouge();
  const double a = ctx.spouge_a();
  // z = x - 1; sum = c_0 + sum c_k/(z+k)
  HPReal z(wp);
  mpfr_set(z.raw(), x.raw(), MPFR_RNDN);
  z -= 1.0;
  HPReal sum = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    sum += c[k] / (z + static_cast<double>(k));
  }
  HPReal za = z + a;
  HPReal r = (z + 0.5) * log(za) - za + log(sum);
  HPReal out(ctx.precision_bits());
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

HPReal log_gamma(double x, const PrecisionContext& ctx) {
  return log_gamma(HPReal(x, ctx.precision_bits() + 64), ctx);
}

HPReal gamma_fn(const HPReal& x, const PrecisionContext& ctx) {
  return exp(log_gamma(x, ctx));
}

// ---------------------------------------------------------------------------
// zeta(s) by Borwein's algorithm: with d_k the Chebyshev-derived integers,
//   zeta(s) = -1/(d_n (1-2^{1-s})) sum_{k=0}^{n-1} (-1)^k (d_k - d_n)/(k+1)^s
// converging like (3+sqrt(8))^{-n}.
// ---------------------------------------------------------------------------

static HPReal zeta_borwein(unsigned s, unsigned bits) {
  const unsigned wp = bits + 64;
  const int n = static_cast<int>(bits * 0.6931471805599453 / 1.7627471740390861) + 8;
  // d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<mpz_class> d(n + 1);
  mpz_class term = 1, acc = 0;
  // i = 0 term: (n-1)!/(n)! * ... handled incrementally below.
  // term_i = (n+i-1)! 4^i / ((n-i)! (2i)!)
  // term_0 = (n-1)!/n! = 1/n; fold the leading n in directly: n*term_0 = 1.
  mpz_class t = 1;
  acc = 1;
  d[0] = 1;
  for (int i = 1; i <= n; ++i) {
    // t *= 4 (n+i-1)(n-i+1) / ((2i-1)(2i))
    t *= 4 * (n + i - 1);
    t *= (n - i + 1);
    mpz_class den = (2 * i - 1);
    den *= 2 * i;
    t /= den;
    acc += t;
    d[i] = acc;
  }
  HPReal sum(0.0, wp);
  for (int k = 0; k < n; ++k) {
    mpz_class num = d[k] - d[n];
    HPReal c(wp);
    mpfr_set_z(c.raw(), num.get_mpz_t(), MPFR_RNDN);
    HPReal kp(k + 1.0, wp);
    HPReal p = exp(log(kp) * static_cast<double>(s));
    HPReal term_k = c / p;
    if (k % 2 == 1) term_k = -term_k;
    sum += term_k;
  }
  HPReal dn(wp);
  mpfr_set_z(dn.raw(), d[n].get_mpz_t(), MPFR_RNDN);
  HPReal two_pow(wp);
  mpfr_set_d(two_pow.raw(), 2.0, MPFR_RNDN);
  two_pow = pow_si(two_pow, 1 - static_cast<long>(s));
  HPReal denom = dn * (HPReal(1.0, wp) - two_pow);
  HPReal r = -(sum / denom);
  HPReal out(bits);
  mpfr_set(out.raw(), r.raw(), MPFR_RNDN);
  return out;
}

const HPReal& PrecisionContext::zeta(unsigned s) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = zeta_cache_.find(s);
  if (it == zeta_cache_.end()) {
    it = zeta_cache_.emplace(s, std::make_unique<HPReal>(zeta_borwein(s, bits_))).first;
  }
  return *it->second;
}

HPReal zeta_const(unsigned s, const PrecisionContext& ctx) {
  if (s < 2) {
    throw std::domain_error("zeta_const requires s >= 2");
  }
  return ctx.zeta(s);
}

ExactRational eta_to_zeta_factor(unsigned s) {
  if (s < 2) {
    throw std::domain_error("eta_to_zeta_factor requires s >= 2");
  }
  mpz_class p = 1;
  p <<= (s - 1);  // 2^{s-1}
  ExactRational q(p - 1, p);
  q.canonicalize();
  return q;
}

}  // namespace vwp
