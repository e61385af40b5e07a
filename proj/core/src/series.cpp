#include "qaffine/series.hpp"

namespace qaffine {

LaurentSeries expand(const RatExpr& f, Var x, Var y, int lo, int hi) {
  LaurentSeries out{x, y, {}};
  if (f.den().is_zero()) throw NonExpandable("expand: zero denominator");
  if (f.is_zero()) return out;  // exact zero everywhere

  auto N = f.num().collect_ratio(x, y);
  auto D = f.den().collect_ratio(x, y);
  const int jD = D.begin()->first;
  const MPoly& d0 = D.begin()->second;
  if (d0.is_zero())
    throw NonExpandable("expand: vanishing lowest-order denominator term");
  const RatExpr inv_d0 = RatExpr(MPoly::constant(1), d0);

  const int n0 = N.begin()->first - jD;
  auto& s = out.data;
  s.slo = n0;
  s.shi = kPosInf;
  s.klo = n0;
  s.khi = hi;
  if (hi < n0) {
    // Nothing but the zero region was requested.
    s.khi = hi;
    return out;
  }
  std::map<int, RatExpr> vals;
  for (int n = n0; n <= hi; ++n) {
    RatExpr acc;
    auto itN = N.find(n + jD);
    if (itN != N.end()) acc = RatExpr(itN->second);
    for (int i = 1; i <= n - n0; ++i) {
      auto itD = D.find(jD + i);
      if (itD == D.end()) continue;
      auto itS = vals.find(n - i);
      if (itS == vals.end()) continue;
      acc -= RatExpr(itD->second) * itS->second;
    }
    RatExpr c = acc * inv_d0;
    if (!c.is_zero()) vals[n] = c;
  }
  for (auto& [n, v] : vals) s.coef[n] = std::move(v);
  (void)lo;
  return out;
}

bool expansion_consistent(const LaurentSeries& s, const RatExpr& f) {
  if (f.is_zero()) return s.data.coef.empty();
  auto N = f.num().collect_ratio(s.x, s.y);
  auto D = f.den().collect_ratio(s.x, s.y);
  const int jD = D.begin()->first;
  const long lo_prod = s.data.slo + jD;
  const long hi_prod = s.data.khi + jD;  // orders fully determined by window
  for (long m = std::min<long>(lo_prod, N.begin()->first); m <= hi_prod; ++m) {
    RatExpr acc;
    for (const auto& [j, dj] : D) {
      long n = m - j;
      if (!s.data.known_at(n)) return false;
      const RatExpr* v = s.data.get(n);
      if (!v) continue;
      acc += RatExpr(dj) * (*v);
    }
    RatExpr expected;
    auto itN = N.find(static_cast<int>(m));
    if (itN != N.end()) expected = RatExpr(itN->second);
    if (!acc.equals(expected)) return false;
  }
  return true;
}

}  // namespace qaffine
