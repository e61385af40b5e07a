#pragma once

#include <limits>
#include <map>
#include <string>
#include <type_traits>

#include "qaffine/errors.hpp"
#include "qaffine/matrix.hpp"
#include "qaffine/ratexpr.hpp"

namespace qaffine {

// Infinity sentinels for window/support bookkeeping, small enough that
// sums of a few of them never overflow a long.
inline constexpr long kNegInf = std::numeric_limits<int>::min() / 8;
inline constexpr long kPosInf = std::numeric_limits<int>::max() / 8;

inline long badd(long a, long b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  if (a >= kPosInf || b >= kPosInf) return kPosInf;
  return a + b;
}
inline bool is_inf(long a) { return a <= kNegInf || a >= kPosInf; }

inline bool val_is_zero(const RatExpr& v) { return v.is_zero(); }
inline bool val_is_zero(const Mat& v) { return v.is_zero(); }
inline RatExpr val_inverse(const RatExpr& v) { return v.inverse(); }
inline Mat val_inverse(const Mat& v) { return v.inverse(); }

/// One-variable truncated Laurent series with coefficients T (RatExpr or
/// Mat). The spectral variable is contextual; index n always means the
/// n-th power of the variable the caller attaches the series to.
///
/// Truncation bookkeeping: coefficients are exact for n in [klo, khi], the
/// series vanishes outside [slo, shi] (so it is also exactly known there),
/// and everything else is unknown. Binary operations derive the result's
/// exact window from the operands', so no comparison ever reads truncated
/// garbage. klo/khi are kept finite; an empty interval is klo > khi.
template <class T>
struct Series {
  std::map<int, T> coef;  // known nonzero coefficients, klo <= n <= khi
  long klo = 1, khi = 0;
  long slo = 1, shi = 0;  // defaults describe the exact zero series

  bool window_empty() const { return klo > khi; }
  bool known_at(long n) const {
    if (n < slo || n > shi) return true;  // known zero
    return n >= klo && n <= khi;
  }
  bool known_zero_at(long n) const {
    if (n < slo || n > shi) return true;
    if (n < klo || n > khi) return false;
    return coef.find(static_cast<int>(n)) == coef.end();
  }
  const T* get(long n) const {
    auto it = coef.find(static_cast<int>(n));
    return it == coef.end() ? nullptr : &it->second;
  }
  void set(int n, T v) {
    if (!val_is_zero(v)) coef[n] = std::move(v);
  }
  /// Knowledge interval extended by the support complement on each side.
  long eff_klo() const { return (slo >= klo) ? kNegInf : klo; }
  long eff_khi() const { return (shi <= khi) ? kPosInf : khi; }

  bool is_known_zero_everywhere() const {
    return coef.empty() && slo >= klo && shi <= khi;
  }
};

template <class T>
Series<T> series_zero() {
  return Series<T>{};
}

template <class T>
Series<T> series_term(int n, T v) {
  Series<T> r;
  r.klo = r.khi = r.slo = r.shi = n;
  r.set(n, std::move(v));
  return r;
}

template <class T>
Series<T> series_neg(const Series<T>& a) {
  Series<T> r = a;
  for (auto& [n, v] : r.coef) v = -v;
  return r;
}

template <class T>
Series<T> series_add(const Series<T>& a, const Series<T>& b) {
  Series<T> r;
  r.slo = std::min(a.slo, b.slo);
  r.shi = std::max(a.shi, b.shi);
  if (r.slo > r.shi) {  // both zero
    return r;
  }
  long lo = std::max(a.eff_klo(), b.eff_klo());
  long hi = std::min(a.eff_khi(), b.eff_khi());
  if (lo <= kNegInf) lo = r.slo;
  if (hi >= kPosInf) hi = r.shi;
  if (is_inf(lo) || is_inf(hi) || lo > hi) {
    r.klo = 1;
    r.khi = 0;
    return r;
  }
  r.klo = lo;
  r.khi = hi;
  for (const auto& [n, v] : a.coef) {
    if (n < lo || n > hi || !b.known_at(n)) continue;
    r.coef[n] = v;
  }
  for (const auto& [n, v] : b.coef) {
    if (n < lo || n > hi || !a.known_at(n)) continue;
    auto it = r.coef.find(n);
    if (it == r.coef.end()) {
      r.coef[n] = v;
    } else {
      it->second += v;
      if (val_is_zero(it->second)) r.coef.erase(it);
    }
  }
  return r;
}

template <class T>
Series<T> series_sub(const Series<T>& a, const Series<T>& b) {
  return series_add(a, series_neg(b));
}

/// Product of two series in the same variable; operator order preserved
/// (a's coefficients multiply from the left).
template <class T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
  Series<T> r;
  r.slo = badd(a.slo, b.slo);
  r.shi = badd(a.shi, b.shi);
  if (r.slo > r.shi) return r;  // zero
  if (a.window_empty() && a.slo <= a.shi) {
    // a has support but nothing known: only the zero region is known.
    r.klo = 1;
    r.khi = 0;
    return r;
  }
  if (b.window_empty() && b.slo <= b.shi) {
    r.klo = 1;
    r.khi = 0;
    return r;
  }
  long L = kNegInf, H = kPosInf;
  if (a.slo < a.klo) L = std::max(L, badd(a.klo, b.shi));
  if (b.slo < b.klo) L = std::max(L, badd(b.klo, a.shi));
  if (a.shi > a.khi) H = std::min(H, badd(a.khi, b.slo));
  if (b.shi > b.khi) H = std::min(H, badd(b.khi, a.slo));
  L = std::max(L, r.slo);
  H = std::min(H, r.shi);
  if (is_inf(L) || is_inf(H) || L > H) {
    r.klo = 1;
    r.khi = 0;
    return r;
  }
  r.klo = L;
  r.khi = H;
  for (long n = L; n <= H; ++n) {
    long ilo = std::max(a.slo, badd(n, -b.shi));
    long ihi = std::min(a.shi, badd(n, -b.slo));
    if (ihi < ilo) continue;
    T acc{};
    bool have = false;
    for (long i = ilo; i <= ihi; ++i) {
      const T* av = a.get(i);
      if (!av) continue;
      const T* bv = b.get(n - i);
      if (!bv) continue;
      T prod = (*av) * (*bv);
      if (val_is_zero(prod)) continue;
      if (!have) {
        acc = std::move(prod);
        have = true;
      } else {
        acc += prod;
      }
    }
    if (have && !val_is_zero(acc)) r.coef[static_cast<int>(n)] = std::move(acc);
  }
  return r;
}

/// Argument rescaling C(x) -> C(x*q^j): the n-th coefficient picks up q^{jn}.
template <class T>
Series<T> series_arg_qshift(const Series<T>& a, int j) {
  if (j == 0) return a;
  Series<T> r = a;
  for (auto& [n, v] : r.coef) {
    RatExpr f(MPoly::s_power(2 * j * n));
    if constexpr (std::is_same_v<T, RatExpr>)
      v = v * f;
    else
      v = v.scaled(f);
  }
  return r;
}

template <class T>
Series<T> series_scale(const Series<T>& a, const RatExpr& c) {
  Series<T> r = a;
  for (auto it = r.coef.begin(); it != r.coef.end();) {
    if constexpr (std::is_same_v<T, RatExpr>)
      it->second = it->second * c;
    else
      it->second = it->second.scaled(c);
    it = val_is_zero(it->second) ? r.coef.erase(it) : std::next(it);
  }
  return r;
}

enum class SeriesSide { FromTop, FromBottom };

/// Inverse of a one-sided series. FromTop inverts a series supported on
/// (-inf, shi] starting at its top coefficient (the plus family);
/// FromBottom is the mirror image (the minus family).
template <class T>
Series<T> series_inverse(const Series<T>& a, SeriesSide side) {
  Series<T> r;
  const bool top = side == SeriesSide::FromTop;
  long lead_idx = top ? a.shi : a.slo;
  if (is_inf(lead_idx) || lead_idx < a.klo || lead_idx > a.khi)
    throw SeriesNotInvertible("series_inverse: leading coefficient not known");
  const T* lead = a.get(lead_idx);
  if (!lead)
    throw SeriesNotInvertible("series_inverse: zero leading coefficient");
  T inv = val_inverse(*lead);
  long depth = top ? lead_idx - a.klo : a.khi - lead_idx;
  if (top) {
    r.slo = kNegInf;
    r.shi = -lead_idx;
    r.klo = -lead_idx - depth;
    r.khi = -lead_idx;
  } else {
    r.slo = -lead_idx;
    r.shi = kPosInf;
    r.klo = -lead_idx;
    r.khi = -lead_idx + depth;
  }
  r.set(static_cast<int>(-lead_idx), inv);
  const int dir = top ? -1 : 1;
  for (long j = 1; j <= depth; ++j) {
    T acc{};
    bool have = false;
    for (long i = 1; i <= j; ++i) {
      const T* av = a.get(lead_idx + dir * i);
      const T* rv = r.get(-lead_idx + dir * (j - i));
      if (!av || !rv) continue;
      T prod = (*av) * (*rv);
      if (val_is_zero(prod)) continue;
      if (!have) {
        acc = std::move(prod);
        have = true;
      } else {
        acc += prod;
      }
    }
    if (have) {
      T v = inv * acc;
      if (!val_is_zero(v))
        r.coef[static_cast<int>(-lead_idx + dir * j)] = -v;
    }
  }
  return r;
}

using OpSeries = Series<Mat>;

/// Spec type: a directional scalar Laurent expansion. The pair (x, y)
/// declares the expansion variable t = x/y; coefficients may carry y-powers
/// when the input is not homogeneous of degree zero.
struct LaurentSeries {
  Var x, y;
  Series<RatExpr> data;  // index n: coefficient of (x/y)^n
};

/// Directional expansion of a rational expression in powers of x/y by
/// geometric-series inversion of the denominator. Exact on [.., hi].
LaurentSeries expand(const RatExpr& f, Var x, Var y, int lo, int hi);

/// Truncation-safe check that the series times the original denominator
/// reproduces the numerator up to the order the window supports.
bool expansion_consistent(const LaurentSeries& s, const RatExpr& f);

}  // namespace qaffine
