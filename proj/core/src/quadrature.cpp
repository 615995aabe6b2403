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

#include "vwp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace vwp::quadrature {

// ---------------------------------------------------------------------------
// Gauss-Legendre via Newton on P_n, seeded by the Chebyshev approximation.
// ---------------------------------------------------------------------------

static GaussLegendre make_gauss_legendre(int n) {
  GaussLegendre r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = 2.0 / ((1 - x * x) * dp * dp);
  }
  return r;
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Symmetric tridiagonal eigensolver (implicit QL with Wilkinson shifts),
// returning eigenvalues and the first component of each eigenvector.
// Classic tql2, trimmed to the first row of the eigenvector matrix.
// ---------------------------------------------------------------------------

static void tql2_first_row(std::vector<double>& d, std::vector<double>& e,
                           std::vector<double>& z0) {
  const int n = static_cast<int>(d.size());
  z0.assign(n, 0.0);
  if (n == 0) return;
  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) z[i][i] = 1.0;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) break;
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i], b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  // sort ascending, carry first components
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[idx[i]];
    z0[i] = z[0][idx[i]];
  }
  d = ds;
}

JacobiRule gauss_jacobi01(int n, double alpha, double beta) {
  const double a = alpha, b = beta, apb = a + b;
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
  diag[0] = (b - a) / (apb + 2);
  for (int k = 1; k < n; ++k) {
    double t = 2.0 * k + apb;
    diag[k] = (b * b - a * a) / (t * (t + 2));
  }
  if (n > 1) {
    sub[0] = std::sqrt(4 * (a + 1) * (b + 1) / ((apb + 2) * (apb + 2) * (apb + 3)));
    for (int k = 2; k < n; ++k) {
      double t = 2.0 * k + apb;
      sub[k - 1] = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + apb) /
                             (t * t * (t + 1) * (t - 1)));
    }
  }
  std::vector<double> z0;
  tql2_first_row(diag, sub, z0);
  JacobiRule r;
  r.x.resize(n);
  r.logw.resize(n);
  // total mass of x^b (1-x)^a on [0,1] is B(b+1, a+1)
  double logmass = std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(apb + 2);
  for (int i = 0; i < n; ++i) {
    double u = std::min(1.0 - 1e-16, std::max(-1.0 + 1e-16, diag[i]));
    r.x[i] = 0.5 * (1.0 + u);
    double c = std::max(z0[i] * z0[i], 1e-300);
    r.logw[i] = std::log(c) + logmass;
  }
  return r;
}

// ---------------------------------------------------------------------------
// High-precision Jacobi rule: double nodes polished by Newton iteration on
// P_n^{(alpha,beta)}; weights from
//   w_i = C / ((1-u^2) P_n'(u)^2),
//   C = Gamma(n+alpha+1) Gamma(n+beta+1) / (n! Gamma(n+alpha+beta+1))
// (already includes the [0,1] rescaling of the measure x^beta (1-x)^alpha).
// ---------------------------------------------------------------------------

namespace {

struct JacobiHPKey {
  int n;
  ExactRational alpha, beta;
  unsigned bits;
  bool operator<(const JacobiHPKey& o) const {
    if (n != o.n) return n < o.n;
    if (bits != o.bits) return bits < o.bits;
    int c = cmp(alpha, o.alpha);
    if (c != 0) return c < 0;
    return cmp(beta, o.beta) < 0;
  }
};

// P_n and P_n' at u, by the three-term recurrence.
void jacobi_pair(int n, const HPReal& al, const HPReal& be, const HPReal& u,
                 HPReal* pn, HPReal* dpn) {
  const unsigned wp = u.precision();
  HPReal p0(1.0, wp);
  HPReal p1 = (al - be) * 0.5 + (al + be + 2.0) * 0.5 * u;
  if (n == 0) { *pn = p0; *dpn = HPReal(0.0, wp); return; }
  for (int k = 2; k <= n; ++k) {
    HPReal kk(static_cast<double>(k), wp);
    HPReal t = kk * 2.0 + al + be;           // 2k+a+b
    HPReal c1 = (kk * 2.0) * (kk + al + be) * (t - 2.0);
    HPReal c2 = (t - 1.0) * (al * al - be * be);
    HPReal c3 = (t - 1.0) * t * (t - 2.0);
    HPReal c4 = (kk + al - 1.0) * (kk + be - 1.0) * t * 2.0;
    HPReal p2 = ((c3 * u + c2) * p1 - c4 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  HPReal nn(static_cast<double>(n), wp);
  HPReal t = nn * 2.0 + al + be;
  // (2n+a+b)(1-u^2) P_n' = n [a-b-(2n+a+b)u] P_n + 2(n+a)(n+b) P_{n-1}
  HPReal one(1.0, wp);
  *pn = p1;
  *dpn = (nn * (al - be - t * u) * p1 + (nn + al) * (nn + be) * p0 * 2.0) /
         (t * (one - u * u));
}

}  // namespace

std::shared_ptr<const JacobiRuleHP> gauss_jacobi01_hp(int n,
                                                      const ExactRational& alpha,
                                                      const ExactRational& beta,
                                                      const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<JacobiHPKey, std::shared_ptr<const JacobiRuleHP>> cache;
  JacobiHPKey key{n, alpha, beta, ctx.precision_bits()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const unsigned wp = ctx.precision_bits() + 32;
  const double ad = alpha.get_d(), bd = beta.get_d();
  JacobiRule seed = gauss_jacobi01(n, ad, bd);
  HPReal al(alpha, wp), be(beta, wp);
  auto rule = std::make_shared<JacobiRuleHP>();
  rule->x.reserve(n);
  rule->w.reserve(n);
  // C = Gamma(n+a+1)Gamma(n+b+1)/(n! Gamma(n+a+b+1))
  HPReal logC = log_gamma(al + (n + 1.0), ctx) + log_gamma(be + (n + 1.0), ctx) -
                log_gamma(HPReal(n + 1.0, wp), ctx) -
                log_gamma(al + be + (n + 1.0), ctx);
  HPReal one(1.0, wp);
  for (int i = 0; i < n; ++i) {
    HPReal u(2.0 * seed.x[i] - 1.0, wp);
    HPReal pn(wp), dpn(wp);
    for (int it = 0; it < 4; ++it) {
      jacobi_pair(n, al, be, u, &pn, &dpn);
      u -= pn / dpn;
    }
    jacobi_pair(n, al, be, u, &pn, &dpn);
    HPReal w = exp(logC) / ((one - u * u) * dpn * dpn);
    rule->x.push_back((u + 1.0) * 0.5);
    rule->w.push_back(w);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = rule;
  return rule;
}

TanhSinhRule tanh_sinh01(double step, double cutoff) {
  TanhSinhRule r;
  for (double u = -cutoff; u <= cutoff + step / 2; u += step) {
    double s = std::sinh(u);
    double lnx = -std::log1p(std::exp(-M_PI * s));
    double ln1mx = -std::log1p(std::exp(M_PI * s));
    r.x.push_back(std::exp(lnx));
    r.w.push_back(step * 0.25 * M_PI * std::cosh(u) /
                  std::pow(std::cosh(0.5 * M_PI * s), 2));
    r.lnx.push_back(lnx);
    r.ln1mx.push_back(ln1mx);
  }
  return r;
}

}  // namespace vwp::quadrature
