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

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vwp {

/// Exact rational, always canonicalized (lowest terms, positive denominator).
using ExactRational = mpq_class;

std::string to_fraction_string(const ExactRational& q);
ExactRational rational_from_string(const std::string& s);

class HPReal;

/// Immutable bundle of working precision, target relative tolerance and a
/// series-truncation cap.  Special-function evaluations cache per-context
/// state (Spouge coefficients, zeta constants), so reuse one context across
/// a computation instead of remaking it.
class PrecisionContext {
 public:
  PrecisionContext(unsigned precision_bits, double rel_tol,
                   std::int64_t max_terms = 50'000'000);

  unsigned precision_bits() const { return bits_; }
  double rel_tol() const { return rel_tol_; }
  std::int64_t max_terms() const { return max_terms_; }

  /// Significant decimal digits carried by this precision.
  int decimal_digits() const;

  const HPReal& zeta(unsigned s) const;           // cached zeta constants
  const std::vector<HPReal>& spouge() const;      // cached Spouge coefficients
  double spouge_a() const;

 private:
  unsigned bits_;
  double rel_tol_;
  std::int64_t max_terms_;

  mutable std::mutex mu_;
  mutable std::map<unsigned, std::unique_ptr<HPReal>> zeta_cache_;
  mutable std::vector<HPReal> spouge_;
  mutable double spouge_a_ = 0;
};

PrecisionContext make_context(unsigned precision_bits, double rel_tol);

/// Real number at a fixed mantissa precision (MPFR-backed value type).
/// Binary operations promote to the wider operand precision, so arithmetic
/// within one context stays at that context's precision.
class HPReal {
 public:
  HPReal() : HPReal(64u) {}
  explicit HPReal(unsigned bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  HPReal(double x, unsigned bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  HPReal(const ExactRational& q, unsigned bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  HPReal(const HPReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HPReal(HPReal&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~HPReal() { mpfr_clear(v_); }

  static HPReal from_string(const std::string& s, unsigned bits);
  static HPReal pi(unsigned bits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal string with the given number of significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend HPReal operator+(const HPReal& a, const HPReal& b) { return bin(mpfr_add, a, b); }
  friend HPReal operator-(const HPReal& a, const HPReal& b) { return bin(mpfr_sub, a, b); }
  friend HPReal operator*(const HPReal& a, const HPReal& b) { return bin(mpfr_mul, a, b); }
  friend HPReal operator/(const HPReal& a, const HPReal& b) { return bin(mpfr_div, a, b); }
  HPReal operator-() const { HPReal r(precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  HPReal& operator+=(const HPReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HPReal& operator-=(const HPReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HPReal& operator*=(const HPReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  HPReal& operator/=(const HPReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend HPReal operator*(const HPReal& a, double b) {
    HPReal r(a.precision()); mpfr_mul_d(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator+(const HPReal& a, double b) {
    HPReal r(a.precision()); mpfr_add_d(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator-(const HPReal& a, double b) {
    HPReal r(a.precision()); mpfr_sub_d(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator/(const HPReal& a, double b) {
    HPReal r(a.precision()); mpfr_div_d(r.v_, a.v_, b, MPFR_RNDN); return r;
  }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  friend HPReal abs(const HPReal& a) { HPReal r(a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend HPReal sqrt(const HPReal& a) { return un(mpfr_sqrt, a); }
  friend HPReal exp(const HPReal& a) { return un(mpfr_exp, a); }
  friend HPReal log(const HPReal& a) { return un(mpfr_log, a); }
  friend HPReal sin(const HPReal& a) { return un(mpfr_sin, a); }
  friend HPReal cos(const HPReal& a) { return un(mpfr_cos, a); }
  friend HPReal floor(const HPReal& a) {
    HPReal r(a.precision()); mpfr_floor(r.v_, a.v_); return r;
  }
  friend HPReal pow(const HPReal& a, const HPReal& b) { return bin(mpfr_pow, a, b); }
  friend HPReal pow_si(const HPReal& a, long e) {
    HPReal r(a.precision()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r;
  }

 private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static HPReal bin(BinOp f, const HPReal& a, const HPReal& b) {
    HPReal r(std::max(a.precision(), b.precision()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static HPReal un(UnOp f, const HPReal& a) {
    HPReal r(a.precision());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

/// ln Gamma(x) for x > 0 at context precision (Spouge approximation;
/// coefficient count derived from precision_bits).
HPReal log_gamma(const HPReal& x, const PrecisionContext& ctx);
HPReal log_gamma(double x, const PrecisionContext& ctx);
HPReal gamma_fn(const HPReal& x, const PrecisionContext& ctx);

/// zeta(s) for integer s >= 2 (Borwein's alternating-series acceleration,
/// cached in the context).
HPReal zeta_const(unsigned s, const PrecisionContext& ctx);

/// Exact factor (1 - 2^{1-s}) with eta(s) = factor * zeta(s), s >= 2.
ExactRational eta_to_zeta_factor(unsigned s);

}  // namespace vwp
