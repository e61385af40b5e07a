#include "qaffine/loperator.hpp"

#include <sstream>

namespace qaffine {

LOperator build_L(int sign, const RMatrixSpec& r, int depth) {
  LOperator l;
  l.sign = sign;
  l.depth = depth;
  Mat rza = r.entry_with(VA);  // R(z/a): entries rational in (s, z, a)
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      OpSeries& e = l.at(i, j);
      if (sign > 0) {
        e.slo = kNegInf;
        e.shi = 0;
        e.klo = -depth;
        e.khi = 0;
      } else {
        e.slo = 0;
        e.shi = kPosInf;
        e.klo = 0;
        e.khi = depth;
      }
      std::map<int, Mat> coef;
      for (int k = 0; k < 3; ++k) {
        for (int m = 0; m < 3; ++m) {
          RatExpr v = rza.at(i * 3 + k, j * 3 + m);
          if (v.is_zero()) continue;
          // Expand in a/z (sign +) or z/a (sign -).
          LaurentSeries ls = sign > 0 ? expand(v, VA, VZ, 0, depth)
                                      : expand(v, VZ, VA, 0, depth);
          for (const auto& [n, c] : ls.data.coef) {
            if (n > depth) continue;
            // Ratio power n becomes z^{-n} a^{n} (sign +) or z^{n} a^{-n}.
            int zpow = sign > 0 ? -n : n;
            RatExpr cc = c * RatExpr(MPoly::variable(VA, sign > 0 ? n : -n));
            if (cc.is_zero()) continue;
            Mat& cell = coef.try_emplace(zpow, Mat(3)).first->second;
            cell.add_to(k, m, cc);
          }
        }
      }
      for (auto& [n, m] : coef)
        if (!m.is_zero()) e.coef[n] = std::move(m);
    }
  }
  return l;
}

Series<Mat> flatten(const LOperator& l) {
  Series<Mat> out;
  const OpSeries& probe = l.at(0, 0);
  out.slo = probe.slo;
  out.shi = probe.shi;
  out.klo = probe.klo;
  out.khi = probe.khi;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const OpSeries& e = l.at(i, j);
      for (const auto& [n, cell] : e.coef) {
        Mat& big = out.coef.try_emplace(n, Mat(9)).first->second;
        for (const auto& [idx, v] : cell.entries())
          big.set(i * 3 + idx / 3, j * 3 + idx % 3, v);
      }
    }
  }
  return out;
}

Series<Mat> loperator_inverse(const LOperator& l) {
  return series_inverse(flatten(l), l.side());
}

namespace {

// (i,j,k) flat triple index, i = aux1, j = aux2, k = quantum.
inline int tri(int i, int j, int k) { return (i * 3 + j) * 3 + k; }

}  // namespace

Grid l_leg1_grid(const Series<Mat>& flat, GridVar var, int B) {
  Series<Mat> lifted;
  lifted.slo = flat.slo;
  lifted.shi = flat.shi;
  lifted.klo = flat.klo;
  lifted.khi = flat.khi;
  for (const auto& [n, m9] : flat.coef) {
    Mat big(27);
    for (const auto& [idx, v] : m9.entries()) {
      int row = idx / 9, col = idx % 9;
      int i = row / 3, k = row % 3;
      int ip = col / 3, kp = col % 3;
      for (int j = 0; j < 3; ++j) big.set(tri(i, j, k), tri(ip, j, kp), v);
    }
    lifted.coef[n] = std::move(big);
  }
  return series_on_grid(lifted, var, B);
}

Grid l_leg2_theta_grid(const Series<Mat>& flat, const Grading& g, GridVar var,
                       int B) {
  Series<Mat> lifted;
  lifted.slo = flat.slo;
  lifted.shi = flat.shi;
  lifted.klo = flat.klo;
  lifted.khi = flat.khi;
  for (const auto& [n, m9] : flat.coef) {
    Mat big(27);
    for (const auto& [idx, v] : m9.entries()) {
      int row = idx / 9, col = idx % 9;
      int j = row / 3, k = row % 3;
      int jp = col / 3, kp = col % 3;
      for (int i = 0; i < 3; ++i) {
        // theta (1 (x) L) theta on the two auxiliary legs.
        int sign = (g.p(i) * ((g.p(j) + g.p(jp)) & 1)) & 1;
        big.set(tri(i, j, k), tri(i, jp, kp), sign ? -v : v);
      }
    }
    lifted.coef[n] = std::move(big);
  }
  return series_on_grid(lifted, var, B);
}

Grid r_factor_grid(const Mat& rmat, const Grading& g, int depth, int B) {
  // Expand every entry in nonnegative powers of w/z; coefficient k sits on
  // the grid cell (-k, k) as a 27-dim scalar-on-quantum matrix.
  Grid grid(27, B);
  grid.clear_knowledge();
  Band supp = Band::all();
  supp.dlo = supp.dhi = 0;
  supp.mhi = 0;
  grid.set_supp(supp);
  std::map<int, Mat> coef;
  const int d = g.dim();
  for (const auto& [idx, v] : rmat.entries()) {
    LaurentSeries ls = expand(v, VW, VZ, 0, depth);
    int row = idx / (d * d), col = idx % (d * d);
    for (const auto& [k, c] : ls.data.coef) {
      if (k < 0 || k > depth) continue;
      Mat& big = coef.try_emplace(k, Mat(27)).first->second;
      int i = row / d, j = row % d;
      int ip = col / d, jp = col % d;
      for (int q = 0; q < 3; ++q) big.add_to(tri(i, j, q), tri(ip, jp, q), c);
    }
  }
  for (long m = -B; m <= B; ++m) {
    for (long n = -B; n <= B; ++n) {
      if (!supp.contains(m, n)) {
        grid.mark_known(m, n);
        continue;
      }
      if (n >= 0 && n <= depth) grid.mark_known(m, n);
    }
  }
  for (auto& [k, big] : coef) {
    if (k > B) continue;
    grid.set_cell(-k, k, std::move(big));
  }
  return grid;
}

namespace {

CheckResult residual_result(std::string suite, std::string name,
                            const Grid& residual, int cutoff) {
  GridCheck chk = check_zero(residual, cutoff);
  CheckResult c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  if (chk.known_cells == 0) {
    c.status = "skipped";
    c.details.push_back("empty safe window at this cutoff");
    return c;
  }
  c.window = SafeWindow{chk.known_cells, chk.mlo, chk.mhi, chk.nlo, chk.nhi};
  if (chk.pass) {
    c.status = "pass";
  } else {
    c.status = "fail";
    for (const auto& f : chk.failures) {
      std::ostringstream os;
      os << "cell (" << f.m << "," << f.n << ") entry " << f.entry
         << " nonzero";
      c.details.push_back(os.str());
    }
  }
  return c;
}

struct RllContext {
  Grid r_grid;    // R(z/w) expanded in w/z
  Grid r21_grid;  // R21(z/w) expanded in w/z
  Grid lp1_z, lm1_z;       // L+-_1(z)
  Grid lp1_w, lm1_w;       // L+-_1(w)
  Grid tlp2_z, tlm2_z;     // theta L+-_2(z) theta
  Grid tlp2_w, tlm2_w;
  Grid lp1i_w, lm1i_w;     // L+-_1(w)^{-1}
  Grid tlp2i_z, tlm2i_z;   // theta L+-_2(z)^{-1} theta
};

RllContext make_context(const RMatrixSpec& r, const LOperator& lp,
                        const LOperator& lm, int depth, int B) {
  RllContext c;
  Mat p = graded_permutation(r.grading);
  c.r_grid = r_factor_grid(r.entries, r.grading, depth, B);
  c.r21_grid = r_factor_grid(p * r.entries * p, r.grading, depth, B);
  Series<Mat> fp = flatten(lp);
  Series<Mat> fm = flatten(lm);
  Series<Mat> fpi = loperator_inverse(lp);
  Series<Mat> fmi = loperator_inverse(lm);
  c.lp1_z = l_leg1_grid(fp, GridVar::Z, B);
  c.lm1_z = l_leg1_grid(fm, GridVar::Z, B);
  c.lp1_w = l_leg1_grid(fp, GridVar::W, B);
  c.lm1_w = l_leg1_grid(fm, GridVar::W, B);
  c.tlp2_z = l_leg2_theta_grid(fp, r.grading, GridVar::Z, B);
  c.tlm2_z = l_leg2_theta_grid(fm, r.grading, GridVar::Z, B);
  c.tlp2_w = l_leg2_theta_grid(fp, r.grading, GridVar::W, B);
  c.tlm2_w = l_leg2_theta_grid(fm, r.grading, GridVar::W, B);
  c.lp1i_w = l_leg1_grid(fpi, GridVar::W, B);
  c.lm1i_w = l_leg1_grid(fmi, GridVar::W, B);
  c.tlp2i_z = l_leg2_theta_grid(fpi, r.grading, GridVar::Z, B);
  c.tlm2i_z = l_leg2_theta_grid(fmi, r.grading, GridVar::Z, B);
  return c;
}

}  // namespace

CheckResult verify_rll(const std::string& pair, const RMatrixSpec& r,
                       const LOperator& lp, const LOperator& lm, int cutoff) {
  const int B = cutoff + 6;
  const int depth = cutoff + 6;
  Grid rg = r_factor_grid(r.entries, r.grading, depth, B);
  const LOperator& first = pair[0] == '+' ? lp : lm;
  const LOperator& second = pair[1] == '+' ? lp : lm;
  Grid l1z = l_leg1_grid(flatten(first), GridVar::Z, B);
  Grid tl2w = l_leg2_theta_grid(flatten(second), r.grading, GridVar::W, B);
  // R(z/w) L1(z) theta L2(w) theta = theta L2(w) theta L1(z) R(z/w); at
  // central charge zero the mixed relation carries the same argument on
  // both sides, with R expanded in w/z throughout.
  Grid lhs = conv(rg, conv(l1z, tl2w));
  Grid rhs = conv(conv(tl2w, l1z), rg);
  return residual_result("rll", "rll." + pair, grid_sub(lhs, rhs), cutoff);
}

Report verify_theta_consequences(const RMatrixSpec& r, const LOperator& lp,
                                 const LOperator& lm, int cutoff) {
  const int B = cutoff + 6;
  const int depth = cutoff + 6;
  RllContext c = make_context(r, lp, lm, depth, B);
  Report rep;
  auto add = [&](const std::string& name, const Grid& lhs, const Grid& rhs) {
    rep.add(residual_result("rll", name, grid_sub(lhs, rhs), cutoff));
  };

  // R21(z/w) theta L2(z) theta L1(w) = L1(w) theta L2(z) theta R21(z/w)
  add("llr2.pp", conv(c.r21_grid, conv(c.tlp2_z, c.lp1_w)),
      conv(conv(c.lp1_w, c.tlp2_z), c.r21_grid));
  add("llr2.mm", conv(c.r21_grid, conv(c.tlm2_z, c.lm1_w)),
      conv(conv(c.lm1_w, c.tlm2_z), c.r21_grid));
  // Mixed: R21(z+/w-) theta L+2(z) theta L-1(w) = ... R21(z-/w+); at c=0
  // both arguments coincide.
  add("llr3.pm", conv(c.r21_grid, conv(c.tlp2_z, c.lm1_w)),
      conv(conv(c.lm1_w, c.tlp2_z), c.r21_grid));
  add("llr4.mp", conv(c.r21_grid, conv(c.tlm2_z, c.lp1_w)),
      conv(conv(c.lp1_w, c.tlm2_z), c.r21_grid));
  // theta L2(z)^{-1} theta L1(w)^{-1} R21 = R21 L1(w)^{-1} theta L2(z)^{-1} theta
  add("llr5.pp", conv(conv(c.tlp2i_z, c.lp1i_w), c.r21_grid),
      conv(c.r21_grid, conv(c.lp1i_w, c.tlp2i_z)));
  add("llr5.mm", conv(conv(c.tlm2i_z, c.lm1i_w), c.r21_grid),
      conv(c.r21_grid, conv(c.lm1i_w, c.tlm2i_z)));
  add("llr6.pm", conv(conv(c.tlp2i_z, c.lm1i_w), c.r21_grid),
      conv(c.r21_grid, conv(c.lm1i_w, c.tlp2i_z)));
  add("llr7.mp", conv(conv(c.tlm2i_z, c.lp1i_w), c.r21_grid),
      conv(c.r21_grid, conv(c.lp1i_w, c.tlm2i_z)));
  // L1(w)^{-1} R21 theta L2(z) theta = theta L2(z) theta R21 L1(w)^{-1}
  add("llr8.pp", conv(c.lp1i_w, conv(c.r21_grid, c.tlp2_z)),
      conv(conv(c.tlp2_z, c.r21_grid), c.lp1i_w));
  add("llr8.mm", conv(c.lm1i_w, conv(c.r21_grid, c.tlm2_z)),
      conv(conv(c.tlm2_z, c.r21_grid), c.lm1i_w));
  add("llr9.mp", conv(c.lm1i_w, conv(c.r21_grid, c.tlp2_z)),
      conv(conv(c.tlp2_z, c.r21_grid), c.lm1i_w));
  add("llr10.pm", conv(c.lp1i_w, conv(c.r21_grid, c.tlm2_z)),
      conv(conv(c.tlm2_z, c.r21_grid), c.lp1i_w));
  rep.sort();
  return rep;
}

namespace {

inline int koszul_lhs(const Grading& g, int alp, int bep, int bepp) {
  return (g.p(alp) * ((g.p(bep) + g.p(bepp)) & 1)) & 1;
}

}  // namespace

Mat component_form_lhs(const Mat& r9, const std::array<Mat, 9>& a,
                       const std::array<Mat, 9>& b, const Grading& g) {
  Mat out(27);
  for (int al = 0; al < 3; ++al)
    for (int be = 0; be < 3; ++be)
      for (int alp = 0; alp < 3; ++alp)
        for (int bep = 0; bep < 3; ++bep) {
          Mat block(3);
          for (int alpp = 0; alpp < 3; ++alpp)
            for (int bepp = 0; bepp < 3; ++bepp) {
              RatExpr rr = r9.at(al * 3 + be, alpp * 3 + bepp);
              if (rr.is_zero()) continue;
              Mat prod = a[alpp * 3 + alp] * b[bepp * 3 + bep];
              if (prod.is_zero()) continue;
              int sign = koszul_lhs(g, alp, bep, bepp);
              block += prod.scaled(sign ? -rr : rr);
            }
          for (const auto& [idx, v] : block.entries())
            out.set(tri(al, be, idx / 3), tri(alp, bep, idx % 3), v);
        }
  return out;
}

Mat component_form_rhs(const Mat& r9, const std::array<Mat, 9>& a,
                       const std::array<Mat, 9>& b, const Grading& g) {
  Mat out(27);
  for (int al = 0; al < 3; ++al)
    for (int be = 0; be < 3; ++be)
      for (int alp = 0; alp < 3; ++alp)
        for (int bep = 0; bep < 3; ++bep) {
          Mat block(3);
          for (int alpp = 0; alpp < 3; ++alpp)
            for (int bepp = 0; bepp < 3; ++bepp) {
              RatExpr rr = r9.at(alpp * 3 + bepp, alp * 3 + bep);
              if (rr.is_zero()) continue;
              Mat prod = b[be * 3 + bepp] * a[al * 3 + alpp];
              if (prod.is_zero()) continue;
              int sign = (g.p(al) * ((g.p(be) + g.p(bepp)) & 1)) & 1;
              block += prod.scaled(sign ? -rr : rr);
            }
          for (const auto& [idx, v] : block.entries())
            out.set(tri(al, be, idx / 3), tri(alp, bep, idx % 3), v);
        }
  return out;
}

namespace {

Mat lift_a_leg1(const std::array<Mat, 9>& a) {
  Mat big(27);
  for (int i = 0; i < 3; ++i)
    for (int ip = 0; ip < 3; ++ip)
      for (const auto& [idx, v] : a[i * 3 + ip].entries())
        for (int j = 0; j < 3; ++j)
          big.set(tri(i, j, idx / 3), tri(ip, j, idx % 3), v);
  return big;
}

Mat lift_b_leg2_theta(const std::array<Mat, 9>& b, const Grading& g) {
  Mat big(27);
  for (int j = 0; j < 3; ++j)
    for (int jp = 0; jp < 3; ++jp)
      for (const auto& [idx, v] : b[j * 3 + jp].entries())
        for (int i = 0; i < 3; ++i) {
          int sign = (g.p(i) * ((g.p(j) + g.p(jp)) & 1)) & 1;
          big.set(tri(i, j, idx / 3), tri(i, jp, idx % 3), sign ? -v : v);
        }
  return big;
}

Mat lift_r(const Mat& r9) {
  Mat big(27);
  for (const auto& [idx, v] : r9.entries()) {
    int row = idx / 9, col = idx % 9;
    for (int q = 0; q < 3; ++q)
      big.set(tri(row / 3, row % 3, q), tri(col / 3, col % 3, q), v);
  }
  return big;
}

}  // namespace

Mat theta_form_lhs(const Mat& r9, const std::array<Mat, 9>& a,
                   const std::array<Mat, 9>& b, const Grading& g) {
  return lift_r(r9) * lift_a_leg1(a) * lift_b_leg2_theta(b, g);
}

Mat theta_form_rhs(const Mat& r9, const std::array<Mat, 9>& a,
                   const std::array<Mat, 9>& b, const Grading& g) {
  return lift_b_leg2_theta(b, g) * lift_a_leg1(a) * lift_r(r9);
}

}  // namespace qaffine
