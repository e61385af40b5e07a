#include "qaffine/gauss.hpp"

namespace qaffine {

GaussData gauss_decompose(const LOperator& l) {
  GaussData g;
  g.sign = l.sign;
  const SeriesSide side = l.side();
  const OpSeries& l11 = l.at(0, 0);
  g.k1 = l11;
  OpSeries k1i = series_inverse(g.k1, side);
  g.f1 = series_mul(k1i, l.at(0, 1));
  g.f13 = series_mul(k1i, l.at(0, 2));
  g.e1 = series_mul(l.at(1, 0), k1i);
  g.e31 = series_mul(l.at(2, 0), k1i);
  g.k2 = series_sub(l.at(1, 1), series_mul(g.e1, series_mul(g.k1, g.f1)));
  OpSeries k2i = series_inverse(g.k2, side);
  g.f2 = series_mul(
      k2i, series_sub(l.at(1, 2), series_mul(g.e1, series_mul(g.k1, g.f13))));
  g.e2 = series_mul(
      series_sub(l.at(2, 1), series_mul(g.e31, series_mul(g.k1, g.f1))), k2i);
  g.k3 = series_sub(
      l.at(2, 2),
      series_add(series_mul(g.e2, series_mul(g.k2, g.f2)),
                 series_mul(g.e31, series_mul(g.k1, g.f13))));
  return g;
}

std::array<OpSeries, 9> recompose(const GaussData& g) {
  std::array<OpSeries, 9> out;
  out[0] = g.k1;
  out[1] = series_mul(g.k1, g.f1);
  out[2] = series_mul(g.k1, g.f13);
  out[3] = series_mul(g.e1, g.k1);
  out[4] = series_add(g.k2, series_mul(g.e1, series_mul(g.k1, g.f1)));
  out[5] = series_add(series_mul(g.k2, g.f2),
                      series_mul(g.e1, series_mul(g.k1, g.f13)));
  out[6] = series_mul(g.e31, g.k1);
  out[7] = series_add(series_mul(g.e2, g.k2),
                      series_mul(g.e31, series_mul(g.k1, g.f1)));
  out[8] = series_add(
      g.k3, series_add(series_mul(g.e2, series_mul(g.k2, g.f2)),
                       series_mul(g.e31, series_mul(g.k1, g.f13))));
  return out;
}

std::array<OpSeries, 9> explicit_inverse(const GaussData& g) {
  const SeriesSide side = g.side();
  OpSeries k1i = series_inverse(g.k1, side);
  OpSeries k2i = series_inverse(g.k2, side);
  OpSeries k3i = series_inverse(g.k3, side);
  OpSeries ff = series_sub(series_mul(g.f1, g.f2), g.f13);  // f1 f2 - f13
  OpSeries ee = series_sub(series_mul(g.e2, g.e1), g.e31);  // e2 e1 - e31
  std::array<OpSeries, 9> out;
  // y = k1^{-1} + f1 k2^{-1} e1 + (f1 f2 - f13) k3^{-1} (e2 e1 - e31)
  out[0] = series_add(
      k1i, series_add(series_mul(g.f1, series_mul(k2i, g.e1)),
                      series_mul(ff, series_mul(k3i, ee))));
  // x~ = -f1 k2^{-1} + (f13 - f1 f2) k3^{-1} e2
  out[1] = series_sub(series_mul(series_neg(ff), series_mul(k3i, g.e2)),
                      series_mul(g.f1, k2i));
  // u~ = (f1 f2 - f13) k3^{-1}
  out[2] = series_mul(ff, k3i);
  // y~ = -k2^{-1} e1 + f2 k3^{-1} (e31 - e2 e1)
  out[3] = series_sub(series_mul(g.f2, series_mul(k3i, series_neg(ee))),
                      series_mul(k2i, g.e1));
  // k2^{-1} + f2 k3^{-1} e2
  out[4] = series_add(k2i, series_mul(g.f2, series_mul(k3i, g.e2)));
  out[5] = series_neg(series_mul(g.f2, k3i));
  // v~ = k3^{-1} (e2 e1 - e31)
  out[6] = series_mul(k3i, ee);
  out[7] = series_neg(series_mul(k3i, g.e2));
  out[8] = k3i;
  return out;
}

namespace {

// phi/psi mixing coefficient 1 + q^{-1/2} - q^{1/2}.
RatExpr phi_mix() {
  MPoly p = MPoly::constant(1) + MPoly::s_power(-1) - MPoly::s_power(1);
  return RatExpr(p);
}

RatExpr q_minus_qinv() {
  return RatExpr(MPoly::s_power(2) - MPoly::s_power(-2));
}

}  // namespace

CurrentSet build_currents(const GaussData& gp, const GaussData& gm) {
  CurrentSet c;
  c.k1p = gp.k1;
  c.k2p = gp.k2;
  c.k3p = gp.k3;
  c.k1m = gm.k1;
  c.k2m = gm.k2;
  c.k3m = gm.k3;
  c.x1p = series_sub(gp.f1, gm.f1);
  c.x2p = series_sub(gp.f2, gm.f2);
  c.x1m = series_sub(gm.e1, gp.e1);
  c.x2m = series_sub(gm.e2, gp.e2);
  RatExpr qq = q_minus_qinv();
  c.xp = series_scale(series_add(c.x1p, series_arg_qshift(c.x2p, 1)), qq);
  c.xm = series_scale(series_add(c.x1m, series_arg_qshift(c.x2m, 1)), qq);
  c.phi1 = series_mul(gp.k2, series_inverse(gp.k1, gp.side()));
  c.phi2 = series_mul(gp.k3, series_inverse(gp.k2, gp.side()));
  c.psi1 = series_mul(gm.k2, series_inverse(gm.k1, gm.side()));
  c.psi2 = series_mul(gm.k3, series_inverse(gm.k2, gm.side()));
  c.phi = series_sub(series_scale(c.phi1, phi_mix()),
                     series_arg_qshift(c.phi2, 1));
  c.psi = series_sub(c.psi1,
                     series_scale(series_arg_qshift(c.psi2, 1), phi_mix()));
  return c;
}

std::map<std::string, const OpSeries*> CurrentSet::table() const {
  return {
      {"X1p", &x1p}, {"X1m", &x1m}, {"X2p", &x2p}, {"X2m", &x2m},
      {"Xp", &xp},   {"Xm", &xm},   {"phi1", &phi1}, {"phi2", &phi2},
      {"psi1", &psi1}, {"psi2", &psi2}, {"phi", &phi}, {"psi", &psi},
      {"k1p", &k1p}, {"k2p", &k2p}, {"k3p", &k3p}, {"k1m", &k1m},
      {"k2m", &k2m}, {"k3m", &k3m},
  };
}

bool is_delta_supported(const OpSeries& s, int* diag_out) {
  int diag = 0;
  bool first = true;
  for (const auto& [n, cell] : s.coef) {
    for (const auto& [idx, v] : cell.entries()) {
      if (v.is_zero()) continue;
      // Every monomial of the entry must sit at a fixed z-power + a-power.
      if (!v.den_is_one()) return false;
      for (const auto& t : v.num().terms()) {
        int d = n + t.mon[VA];
        if (first) {
          diag = d;
          first = false;
        } else if (d != diag) {
          return false;
        }
      }
    }
  }
  if (diag_out) *diag_out = diag;
  return true;
}

}  // namespace qaffine
