#include "qaffine/grid.hpp"

#include <algorithm>

namespace qaffine {

CellState Grid::state(long m, long n) const {
  if (!supp_.contains(m, n)) return CellState::KnownZero;
  if (!in_storage(m, n)) return CellState::Unknown;
  if (!known_[idx(m, n)]) return CellState::Unknown;
  auto it = cells_.find({static_cast<int>(m), static_cast<int>(n)});
  return it == cells_.end() ? CellState::KnownZero : CellState::KnownValue;
}

const Mat* Grid::value(long m, long n) const {
  auto it = cells_.find({static_cast<int>(m), static_cast<int>(n)});
  return it == cells_.end() ? nullptr : &it->second;
}

void Grid::mark_unknown(long m, long n) {
  if (in_storage(m, n)) known_[idx(m, n)] = 0;
}

void Grid::mark_known(long m, long n) {
  if (in_storage(m, n)) known_[idx(m, n)] = 1;
}

void Grid::set_cell(long m, long n, Mat v) {
  if (!in_storage(m, n)) return;
  known_[idx(m, n)] = 1;
  if (v.is_zero())
    cells_.erase({static_cast<int>(m), static_cast<int>(n)});
  else
    cells_[{static_cast<int>(m), static_cast<int>(n)}] = std::move(v);
}

std::size_t Grid::known_count() const {
  std::size_t c = 0;
  for (long m = -B_; m <= B_; ++m)
    for (long n = -B_; n <= B_; ++n)
      if (state(m, n) != CellState::Unknown) ++c;
  return c;
}

bool Grid::fully_unknown() const { return known_count() == 0; }

Grid delta_grid(int qshift, int B, int dim) {
  Grid g(dim, B);
  Band b = Band::all();
  b.dlo = b.dhi = 0;
  g.set_supp(b);
  for (long l = -B; l <= B; ++l) {
    RatExpr c(MPoly::s_power(2 * qshift * static_cast<int>(l)));
    g.set_cell(l, -l, Mat::scalar(dim, c));
  }
  return g;
}

Grid poly_grid(const MPoly& p, int B) {
  Grid g(1, B);
  Band b = Band::none();
  std::map<std::pair<int, int>, RatExpr> acc;
  for (const auto& t : p.terms()) {
    long m = t.mon[VZ], n = t.mon[VW];
    if (m < -B || m > B || n < -B || n > B)
      throw EmptySafeWindow("poly_grid: coefficient degree exceeds storage");
    Monomial rest = t.mon;
    rest[VZ] = 0;
    rest[VW] = 0;
    acc[{static_cast<int>(m), static_cast<int>(n)}] += RatExpr(MPoly(rest, t.coef));
    Band one{m, m, n, n, m + n, m + n};
    b = Band::hull(b, one);
  }
  g.set_supp(b);
  for (auto& [key, v] : acc) {
    if (v.is_zero()) continue;
    Mat cell(1);
    cell.set(0, 0, v);
    g.set_cell(key.first, key.second, std::move(cell));
  }
  return g;
}

namespace {

template <class S>
Grid series_on_grid_impl(const S& s, GridVar var, int B, int dim) {
  Grid g(dim, B);
  g.clear_knowledge();
  Band b = Band::all();
  if (var == GridVar::Z) {
    b.nlo = b.nhi = 0;
    b.mlo = s.slo;
    b.mhi = s.shi;
    b.dlo = s.slo;
    b.dhi = s.shi;
  } else {
    b.mlo = b.mhi = 0;
    b.nlo = s.slo;
    b.nhi = s.shi;
    b.dlo = s.slo;
    b.dhi = s.shi;
  }
  g.set_supp(b);
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      if (!b.contains(m, n)) {
        g.mark_known(m, n);
        continue;
      }
      long k = var == GridVar::Z ? m : n;
      if (s.known_at(k)) g.mark_known(m, n);
    }
  }
  for (const auto& [k, v] : s.coef) {
    long m = var == GridVar::Z ? k : 0;
    long n = var == GridVar::Z ? 0 : k;
    if (!g.in_storage(m, n)) continue;
    if constexpr (std::is_same_v<S, Series<RatExpr>>) {
      Mat cell(1);
      cell.set(0, 0, v);
      g.set_cell(m, n, std::move(cell));
    } else {
      g.set_cell(m, n, v);
    }
  }
  return g;
}

/// Scatter a directional series onto the grid plane. The expansion
/// variable x must be a grid variable; the order o of a scattered term is
/// then recovered as the x-axis coordinate, so per-cell exactness follows
/// the series window directly.
Grid scatter_series(const LaurentSeries& s, int B) {
  if (s.x != VZ && s.x != VW)
    throw NonExpandable("series scatter: expansion variable is not z or w");
  const bool x_is_z = s.x == VZ;
  const bool y_on_grid = s.y == VZ || s.y == VW;
  Grid g(1, B);
  g.clear_knowledge();
  Band supp = Band::all();
  if (x_is_z) {
    supp.mlo = s.data.slo;
    supp.mhi = s.data.shi;
  } else {
    supp.nlo = s.data.slo;
    supp.nhi = s.data.shi;
  }
  if (!y_on_grid) {
    // Coefficients carry no z/w at all: the other axis is pinned to 0.
    if (x_is_z) {
      supp.nlo = supp.nhi = 0;
      supp.dlo = supp.mlo;
      supp.dhi = supp.mhi;
    } else {
      supp.mlo = supp.mhi = 0;
      supp.dlo = supp.nlo;
      supp.dhi = supp.nhi;
    }
  }
  g.set_supp(supp);
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      if (!supp.contains(m, n)) {
        g.mark_known(m, n);
        continue;
      }
      long o = x_is_z ? m : n;
      if (s.data.known_at(o)) g.mark_known(m, n);
    }
  }
  std::map<std::pair<int, int>, RatExpr> acc;
  for (const auto& [o, c] : s.data.coef) {
    if (!c.den_is_one())
      throw NonExpandable("series scatter: non-polynomial coefficient");
    for (const auto& t : c.num().terms()) {
      long m = t.mon[VZ];
      long n = t.mon[VW];
      Monomial rest = t.mon;
      rest[VZ] = 0;
      rest[VW] = 0;
      if (x_is_z)
        m += o;
      else
        n += o;
      if (s.y == VZ)
        m -= o;
      else if (s.y == VW)
        n -= o;
      else
        rest[s.y] = static_cast<std::int16_t>(rest[s.y] - o);
      if (m < -B || m > B || n < -B || n > B) continue;
      acc[{static_cast<int>(m), static_cast<int>(n)}] +=
          RatExpr(MPoly(rest, t.coef));
    }
  }
  for (auto& [key, v] : acc) {
    if (v.is_zero()) continue;
    Mat cell(1);
    cell.set(0, 0, v);
    g.set_cell(key.first, key.second, std::move(cell));
  }
  return g;
}

Mat lift_dim(const Mat& v, int dim) {
  return v.dim() == dim ? v : Mat::scalar(dim, v.at(0, 0));
}

Mat cell_mul(const Mat& a, const Mat& b) {
  if (a.dim() == 1 && b.dim() != 1) return b.scaled(a.at(0, 0));
  if (b.dim() == 1 && a.dim() != 1) return a.scaled(b.at(0, 0));
  return a * b;
}

struct Iv {
  long lo, hi;
  bool empty() const { return lo > hi; }
  bool finite() const { return !is_inf(lo) && !is_inf(hi); }
};

Iv isect(Iv a, Iv b) { return Iv{std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

}  // namespace

Grid series_on_grid(const OpSeries& s, GridVar var, int B) {
  int dim = 3;
  if (!s.coef.empty()) dim = s.coef.begin()->second.dim();
  return series_on_grid_impl(s, var, B, dim);
}

Grid series_on_grid(const Series<RatExpr>& s, GridVar var, int B) {
  return series_on_grid_impl(s, var, B, 1);
}

Grid expand_to_grid(const RatExpr& f, GridVar dir, int depth, int B) {
  if (f.is_zero()) {
    Grid g(1, B);
    g.set_supp(Band::none());
    return g;
  }
  Var x = dir == GridVar::W ? VW : VZ;
  Var y = dir == GridVar::W ? VZ : VW;
  LaurentSeries ls = expand(f, x, y, 0, depth);
  Grid g = scatter_series(ls, B);
  // Tighten the anti-diagonal band when the input is homogeneous in (z,w).
  int num_lo, num_hi, den_lo, den_hi;
  f.num().zw_degree_range(num_lo, num_hi);
  f.den().zw_degree_range(den_lo, den_hi);
  if (num_lo == num_hi && den_lo == den_hi) {
    Band b = g.supp();
    b.dlo = b.dhi = num_lo - den_lo;
    g.set_supp(b);
    for (long m = -B; m <= B; ++m)
      for (long n = -B; n <= B; ++n)
        if (!b.contains(m, n)) g.mark_known(m, n);
  }
  return g;
}

Grid conv(const Grid& a, const Grid& b) {
  const int B = std::min(a.B(), b.B());
  const int dim = std::max(a.dim(), b.dim());
  Grid r(dim, B);
  r.clear_knowledge();
  r.set_supp(Band::minkowski(a.supp(), b.supp()));
  const Band& SA = a.supp();
  const Band& SB = b.supp();
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      if (!r.supp().contains(m, n)) {
        r.mark_known(m, n);
        continue;
      }
      // (p, q) runs over SA with (m-p, n-q) in SB.
      Iv P0 = isect(Iv{SA.mlo, SA.mhi}, Iv{badd(m, -SB.mhi), badd(m, -SB.mlo)});
      Iv Q0 = isect(Iv{SA.nlo, SA.nhi}, Iv{badd(n, -SB.nhi), badd(n, -SB.nlo)});
      Iv S = isect(Iv{SA.dlo, SA.dhi},
                   Iv{badd(m + n, -SB.dhi), badd(m + n, -SB.dlo)});
      if (P0.empty() || Q0.empty() || S.empty()) {
        r.mark_known(m, n);  // empty overlap: exact zero
        continue;
      }
      Iv P = isect(P0, Iv{badd(S.lo, -Q0.hi), badd(S.hi, -Q0.lo)});
      if (P.empty()) {
        r.mark_known(m, n);
        continue;
      }
      if (!P.finite()) continue;  // infinite sum: unknown
      Mat acc(dim);
      bool ok = true;
      bool have = false;
      for (long p = P.lo; p <= P.hi && ok; ++p) {
        Iv Q = isect(Q0, Iv{badd(S.lo, -p), badd(S.hi, -p)});
        if (Q.empty()) continue;
        if (!Q.finite()) {
          ok = false;
          break;
        }
        for (long q = Q.lo; q <= Q.hi; ++q) {
          CellState sa = a.state(p, q);
          CellState sb = b.state(m - p, n - q);
          if (sa == CellState::KnownZero || sb == CellState::KnownZero)
            continue;
          if (sa == CellState::Unknown || sb == CellState::Unknown) {
            ok = false;
            break;
          }
          Mat prod = cell_mul(*a.value(p, q), *b.value(m - p, n - q));
          if (prod.is_zero()) continue;
          if (!have) {
            acc = std::move(prod);
            have = true;
          } else {
            acc += prod;
          }
        }
      }
      if (!ok) continue;
      if (have)
        r.set_cell(m, n, std::move(acc));
      else
        r.mark_known(m, n);
    }
  }
  return r;
}

Grid grid_add(const Grid& a, const Grid& b) {
  const int B = std::min(a.B(), b.B());
  const int dim = std::max(a.dim(), b.dim());
  Grid r(dim, B);
  r.clear_knowledge();
  r.set_supp(Band::hull(a.supp(), b.supp()));
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      CellState sa = a.state(m, n);
      CellState sb = b.state(m, n);
      if (sa == CellState::Unknown || sb == CellState::Unknown) continue;
      const Mat* va = a.value(m, n);
      const Mat* vb = b.value(m, n);
      if (!va && !vb) {
        r.mark_known(m, n);
        continue;
      }
      Mat sum(dim);
      if (va && vb)
        sum = lift_dim(*va, dim) + lift_dim(*vb, dim);
      else
        sum = lift_dim(va ? *va : *vb, dim);
      r.set_cell(m, n, std::move(sum));
    }
  }
  return r;
}

Grid grid_neg(const Grid& a) {
  Grid out(a.dim(), a.B());
  out.clear_knowledge();
  out.set_supp(a.supp());
  for (long m = -a.B(); m <= a.B(); ++m)
    for (long n = -a.B(); n <= a.B(); ++n) {
      CellState s = a.state(m, n);
      if (s == CellState::Unknown) continue;
      out.mark_known(m, n);
      if (s == CellState::KnownValue) out.set_cell(m, n, -*a.value(m, n));
    }
  return out;
}

Grid grid_sub(const Grid& a, const Grid& b) { return grid_add(a, grid_neg(b)); }

Grid grid_scale(const Grid& a, const RatExpr& c) {
  Grid out(a.dim(), a.B());
  out.clear_knowledge();
  out.set_supp(c.is_zero() ? Band::none() : a.supp());
  for (long m = -a.B(); m <= a.B(); ++m)
    for (long n = -a.B(); n <= a.B(); ++n) {
      CellState s = a.state(m, n);
      if (s == CellState::Unknown) continue;
      out.mark_known(m, n);
      if (s == CellState::KnownValue && !c.is_zero())
        out.set_cell(m, n, a.value(m, n)->scaled(c));
    }
  return out;
}

Grid grid_mul_series(const Grid& g, const LaurentSeries& s, Side side) {
  Grid sg = scatter_series(s, g.B());
  return side == Side::Left ? conv(sg, g) : conv(g, sg);
}

GridCheck check_zero(const Grid& g, int N, std::size_t max_failures) {
  GridCheck r;
  bool first = true;
  for (int m = -N; m <= N; ++m) {
    for (int n = -N; n <= N; ++n) {
      CellState s = g.state(m, n);
      if (s == CellState::Unknown) continue;
      ++r.known_cells;
      if (first) {
        r.mlo = r.mhi = m;
        r.nlo = r.nhi = n;
        first = false;
      } else {
        r.mlo = std::min(r.mlo, m);
        r.mhi = std::max(r.mhi, m);
        r.nlo = std::min(r.nlo, n);
        r.nhi = std::max(r.nhi, n);
      }
      if (s == CellState::KnownValue) {
        const Mat* v = g.value(m, n);
        for (const auto& [i, e] : v->entries()) {
          if (!e.is_zero() && r.failures.size() < max_failures)
            r.failures.push_back({m, n, i});
        }
      }
    }
  }
  r.pass = r.known_cells > 0 && r.failures.empty();
  return r;
}

GridCheck check_equal_transposed(const Grid& g1, const Grid& g2, int N,
                                 std::size_t max_failures) {
  GridCheck r;
  bool first = true;
  for (int m = -N; m <= N; ++m) {
    for (int n = -N; n <= N; ++n) {
      CellState s1 = g1.state(m, n);
      CellState s2 = g2.state(n, m);
      if (s1 == CellState::Unknown || s2 == CellState::Unknown) continue;
      ++r.known_cells;
      if (first) {
        r.mlo = r.mhi = m;
        r.nlo = r.nhi = n;
        first = false;
      } else {
        r.mlo = std::min(r.mlo, m);
        r.mhi = std::max(r.mhi, m);
        r.nlo = std::min(r.nlo, n);
        r.nhi = std::max(r.nhi, n);
      }
      const Mat* v1 = g1.value(m, n);
      const Mat* v2 = g2.value(n, m);
      bool equal;
      if (!v1 && !v2)
        equal = true;
      else if (v1 && v2)
        equal = (*v1 == *v2);
      else
        equal = false;
      if (!equal && r.failures.size() < max_failures)
        r.failures.push_back({m, n, -1});
    }
  }
  r.pass = r.known_cells > 0 && r.failures.empty();
  return r;
}

}  // namespace qaffine
