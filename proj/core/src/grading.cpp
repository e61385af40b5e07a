#include "qaffine/grading.hpp"

namespace qaffine {

Mat theta_matrix(const Grading& g) {
  const int d = g.dim();
  Mat m(d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      int i = a * d + b;
      m.set(i, i, RatExpr(Rational(g.p(a) * g.p(b) ? -1 : 1)));
    }
  return m;
}

Mat graded_permutation(const Grading& g) {
  const int d = g.dim();
  Mat m(d * d);
  // P(v_a (x) v_b) = sign v_b (x) v_a: column (a,b) has its entry in row
  // (b,a).
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      m.set(b * d + a, a * d + b,
            RatExpr(Rational(g.p(a) * g.p(b) ? -1 : 1)));
  return m;
}

Mat eta_matrix(const Grading& g) {
  const int d = g.dim();
  Mat m(d);
  for (int a = 0; a < d; ++a)
    m.set(a, a, RatExpr(Rational(g.p(a) ? -1 : 1)));
  return m;
}

Mat supertranspose(const Mat& m, const Grading& g) {
  const int d = m.dim();
  Mat r(d);
  for (const auto& [i, v] : m.entries()) {
    int b = i / d, a = i % d;  // source entry (b, a) lands at (a, b)
    int sign = (g.p(a) * ((g.p(a) + g.p(b)) & 1)) & 1;
    r.set(a, b, sign ? -v : v);
  }
  return r;
}

Mat inverse_supertranspose(const Mat& m, const Grading& g) {
  const int d = m.dim();
  Mat r(d);
  for (const auto& [i, v] : m.entries()) {
    int b = i / d, a = i % d;
    int sign = (g.p(b) * ((g.p(a) + g.p(b)) & 1)) & 1;
    r.set(a, b, sign ? -v : v);
  }
  return r;
}

Mat supertranspose_leg(const Mat& m, const Grading& g, int leg) {
  const int d = g.dim();
  Mat r(d * d);
  for (const auto& [i, v] : m.entries()) {
    int row = i / (d * d), col = i % (d * d);
    int r1 = row / d, r2 = row % d;
    int c1 = col / d, c2 = col % d;
    if (leg == 1) {
      // (A^{st1})_{(a b),(c d)} = (-1)^{[a]([a]+[c])} A_{(c b),(a d)}
      int a = c1, b = r2, c = r1, dd = c2;
      int sign = (g.p(a) * ((g.p(a) + g.p(c)) & 1)) & 1;
      r.add_to(a * d + b, c * d + dd, sign ? -v : v);
    } else {
      int a = r1, b = c2, c = c1, dd = r2;
      int sign = (g.p(b) * ((g.p(b) + g.p(dd)) & 1)) & 1;
      r.add_to(a * d + b, c * d + dd, sign ? -v : v);
    }
  }
  return r;
}

Mat graded_kron(const Mat& a, const Mat& b, const Grading& g) {
  const int da = a.dim(), db = b.dim();
  Mat r(da * db);
  for (const auto& [ia, va] : a.entries()) {
    int ra = ia / da, ca = ia % da;
    for (const auto& [ib, vb] : b.entries()) {
      int rb = ib / db, cb = ib % db;
      int sign = (((g.p(rb) + g.p(cb)) & 1) * g.p(ca)) & 1;
      RatExpr v = va * vb;
      if (v.is_zero()) continue;
      r.set(ra * db + rb, ca * db + cb, sign ? -v : v);
    }
  }
  return r;
}

Mat embed_leg2(const Mat& m, const Grading& g, int leg) {
  const int d = g.dim();
  Mat id = Mat::identity(d);
  if (leg == 1) return kron(m, id);
  if (leg != 2) throw std::invalid_argument("embed_leg2: leg must be 1 or 2");
  Mat th = theta_matrix(g);
  return th * kron(id, m) * th;
}

Mat embed_pair3(const Mat& m, const Grading& g, LegPair legs) {
  const int d = g.dim();
  Mat id = Mat::identity(d);
  switch (legs) {
    case LegPair::L12:
      return kron(m, id);
    case LegPair::L23:
      return kron(id, m);
    case LegPair::L13: {
      Mat p23 = kron(id, graded_permutation(g));
      return p23 * kron(m, id) * p23;
    }
  }
  throw std::invalid_argument("embed_pair3: bad legs");
}

bool is_parity_homogeneous(const Mat& m, const Grading& g, int* parity_out) {
  const int d = m.dim();
  int par = -1;
  for (const auto& [i, v] : m.entries()) {
    if (v.is_zero()) continue;
    int p = (g.p(i / d) + g.p(i % d)) & 1;
    if (par < 0)
      par = p;
    else if (par != p)
      return false;
  }
  if (parity_out) *parity_out = par < 0 ? 0 : par;
  return true;
}

}  // namespace qaffine
