#include "qaffine/rmatrix.hpp"

#include <random>
#include <sstream>

#include "json.hpp"
#include "qaffine/errors.hpp"
#include "qaffine/parser.hpp"

namespace qaffine {

namespace {

MPoly pz() { return MPoly::variable(VZ); }
MPoly pw() { return MPoly::variable(VW); }
MPoly sp(int e) { return MPoly::s_power(e); }

// Common denominators of the entry table.
MPoly den1() { return sp(4) * pz() - pw(); }                 // z q^2 - w
MPoly den2() { return den1() * (sp(6) * pz() - pw()); }      // (z q^2 - w)(z q^3 - w)

struct EntryTable {
  RatExpr a, b, c, d, e, f, g, r, s;
};

EntryTable entry_table() {
  EntryTable t;
  MPoly zmw = pz() - pw();
  t.a = RatExpr(sp(2) * zmw, den1());
  t.b = RatExpr((sp(4) - MPoly::constant(1)) * pw(), den1());
  t.c = RatExpr(sp(1) * pw() * (sp(4) - MPoly::constant(1)) * zmw, den2());
  t.d = RatExpr(sp(4) * zmw * (sp(2) * pz() - pw()), den2());
  t.e = t.a - RatExpr(pz() * pw() * (sp(4) - MPoly::constant(1)) *
                          (sp(6) - MPoly::constant(1)),
                      den2());
  t.f = RatExpr((sp(4) - MPoly::constant(1)) * pz(), den1());
  t.g = RatExpr(-(sp(5) * pz() * (sp(4) - MPoly::constant(1)) * zmw), den2());
  t.r = RatExpr(pw() * (sp(4) - MPoly::constant(1)) *
                    (sp(6) * pz() + sp(2) * zmw - pw()),
                den2());
  t.s = RatExpr(pz() * (sp(4) - MPoly::constant(1)) *
                    (sp(6) * pz() + sp(4) * zmw - pw()),
                den2());
  return t;
}

}  // namespace

Mat RMatrixSpec::entry_with(Var second) const {
  if (second == VW) return entries;
  return entries.transform([&](const RatExpr& v) { return v.rename(VW, second); });
}

RMatrixSpec build_r() {
  RMatrixSpec r;
  EntryTable t = entry_table();
  Mat& m = r.entries;
  RatExpr one = RatExpr::one();
  m.set(0, 0, one);
  m.set(1, 1, t.a);
  m.set(1, 3, t.b);
  m.set(2, 2, t.d);
  m.set(2, 4, t.c);
  m.set(2, 6, t.r);
  m.set(3, 1, t.f);
  m.set(3, 3, t.a);
  m.set(4, 2, t.g);
  m.set(4, 4, t.e);
  m.set(4, 6, t.c);
  m.set(5, 5, t.a);
  m.set(5, 7, t.b);
  m.set(6, 2, t.s);
  m.set(6, 4, t.g);
  m.set(6, 6, t.d);
  m.set(7, 5, t.f);
  m.set(7, 7, t.a);
  m.set(8, 8, one);
  return r;
}

RMatrixSpec build_r21() {
  RMatrixSpec r;
  EntryTable t = entry_table();
  Mat& m = r.entries;
  RatExpr one = RatExpr::one();
  m.set(0, 0, one);
  m.set(1, 1, t.a);
  m.set(1, 3, t.f);
  m.set(2, 2, t.d);
  m.set(2, 4, -t.g);
  m.set(2, 6, t.s);
  m.set(3, 1, t.b);
  m.set(3, 3, t.a);
  m.set(4, 2, -t.c);
  m.set(4, 4, t.e);
  m.set(4, 6, -t.g);
  m.set(5, 5, t.a);
  m.set(5, 7, t.f);
  m.set(6, 2, t.r);
  m.set(6, 4, -t.c);
  m.set(6, 6, t.d);
  m.set(7, 5, t.b);
  m.set(7, 7, t.a);
  m.set(8, 8, one);
  return r;
}

Mat rescale_z(const Mat& m, int spow) {
  return m.transform(
      [&](const RatExpr& v) { return v.subst_scale(VZ, VS, spow); });
}

Mat swap_zw(const Mat& m) {
  return m.transform([&](const RatExpr& v) { return v.swap_vars(VZ, VW); });
}

Mat set_w_equal_z(const Mat& m) {
  return m.transform([&](const RatExpr& v) { return v.merge_vars(VW, VZ); });
}

Mat rho_diagonal(int t2, int dim) {
  if (dim != 3) throw ConfigError("rho_diagonal: built-in only for dim 3");
  Mat d(3);
  d.set(0, 0, RatExpr(MPoly::s_power(t2)));
  d.set(1, 1, RatExpr::one());
  d.set(2, 2, RatExpr(MPoly::s_power(-t2)));
  return d;
}

CheckResult verify_weight_conservation(const RMatrixSpec& r) {
  std::vector<std::string> bad;
  const int d = r.dim;
  for (const auto& [i, v] : r.entries.entries()) {
    if (v.is_zero()) continue;
    int row = i / (d * d), col = i % (d * d);
    int al = row / d, be = row % d, alp = col / d, bep = col % d;
    int par = (r.grading.p(al) + r.grading.p(be) + r.grading.p(alp) +
               r.grading.p(bep)) &
              1;
    bool sum_ok = (al + be) == (alp + bep);
    if (par != 0 || !sum_ok) {
      std::ostringstream os;
      os << "entry (" << al + 1 << be + 1 << "," << alp + 1 << bep + 1
         << ") violates " << (par ? "parity" : "index-sum") << " conservation";
      bad.push_back(os.str());
    }
  }
  if (bad.empty()) return make_pass("rmatrix", "weight-conservation");
  return make_fail("rmatrix", "weight-conservation", std::move(bad));
}

CheckResult verify_scale_invariance(const RMatrixSpec& r) {
  std::vector<std::string> bad;
  for (const auto& [i, v] : r.entries.entries()) {
    RatExpr scaled = v.subst_scale(VZ, VU, 1).subst_scale(VW, VU, 1);
    if (!scaled.equals(v)) {
      bad.push_back("entry " + std::to_string(i) +
                    " is not a function of z/w alone");
    }
  }
  if (bad.empty()) return make_pass("rmatrix", "scale-invariance");
  return make_fail("rmatrix", "scale-invariance", std::move(bad));
}

namespace {

std::vector<std::string> matrix_mismatches(const Mat& lhs, const Mat& rhs,
                                           std::size_t cap = 8) {
  std::vector<std::string> bad;
  const int d = lhs.dim();
  for (int row = 0; row < d && bad.size() < cap; ++row)
    for (int col = 0; col < d && bad.size() < cap; ++col) {
      RatExpr l = lhs.at(row, col);
      RatExpr rr = rhs.at(row, col);
      if (!l.equals(rr))
        bad.push_back("cell (" + std::to_string(row) + "," +
                      std::to_string(col) + ") differs");
    }
  return bad;
}

}  // namespace

CheckResult verify_ybe(const RMatrixSpec& r) {
  const Grading& g = r.grading;
  // Spectral arguments: legs carry z1 = z, z2 = w, z3 = a.
  Mat r12 = embed_pair3(r.entries, g, LegPair::L12);
  Mat m13 = r.entry_with(VA);
  Mat r13 = embed_pair3(m13, g, LegPair::L13);
  Mat m23 = m13.transform([](const RatExpr& v) { return v.rename(VZ, VW); });
  Mat r23 = embed_pair3(m23, g, LegPair::L23);
  Mat lhs = r12 * (r13 * r23);
  Mat rhs = r23 * (r13 * r12);
  auto bad = matrix_mismatches(lhs, rhs);
  if (bad.empty()) return make_pass("rmatrix", "ybe");
  return make_fail("rmatrix", "ybe", std::move(bad));
}

CheckResult verify_unitarity(const RMatrixSpec& r) {
  Mat p = graded_permutation(r.grading);
  Mat r21_wz = p * swap_zw(r.entries) * p;  // R21(w/z)
  Mat prod = r.entries * r21_wz;
  auto bad = matrix_mismatches(prod, Mat::identity(r.dim * r.dim));
  if (bad.empty()) return make_pass("rmatrix", "unitarity");
  return make_fail("rmatrix", "unitarity", std::move(bad));
}

CheckResult verify_r21_consistency(const RMatrixSpec& r,
                                   const RMatrixSpec& r21) {
  Mat p = graded_permutation(r.grading);
  std::vector<std::string> bad;
  auto m1 = matrix_mismatches(r21.entries, p * r.entries * p);
  for (auto& s : m1) bad.push_back("R21 != P R P: " + s);
  Mat prod = r21.entries * swap_zw(r.entries);
  auto m2 = matrix_mismatches(prod, Mat::identity(r.dim * r.dim));
  for (auto& s : m2) bad.push_back("R21(z/w) R(w/z) != 1: " + s);
  if (bad.empty()) return make_pass("rmatrix", "r21");
  return make_fail("rmatrix", "r21", std::move(bad));
}

CheckResult verify_initial_condition(const RMatrixSpec& r) {
  Mat at1 = set_w_equal_z(r.entries);
  auto bad = matrix_mismatches(at1, graded_permutation(r.grading));
  if (bad.empty()) return make_pass("rmatrix", "initial-condition");
  return make_fail("rmatrix", "initial-condition", std::move(bad));
}

CheckResult verify_rho_commutation(const RMatrixSpec& r, int t2) {
  std::vector<std::string> bad;
  for (int sgn : {+1, -1}) {
    Mat d = rho_diagonal(sgn * t2, r.dim);
    Mat dd = kron(d, d);
    auto m = matrix_mismatches(dd * r.entries, r.entries * dd);
    for (auto& s : m)
      bad.push_back("sign " + std::to_string(sgn) + ": " + s);
  }
  if (bad.empty()) return make_pass("rmatrix", "rho-commutation");
  return make_fail("rmatrix", "rho-commutation", std::move(bad));
}

namespace {

struct CrossingSides {
  Mat lhs1, lhs2;  // parameter-independent sides
};

CrossingSides crossing_lhs(const RMatrixSpec& r) {
  const Grading& g = r.grading;
  Mat inv = r.entries.inverse();
  Mat lhs1 = supertranspose_leg(
      supertranspose_leg(inv, g, 1).inverse(), g, 1);
  Mat lhs2 = supertranspose_leg(
      supertranspose_leg(inv, g, 2).inverse(), g, 2);
  return {std::move(lhs1), std::move(lhs2)};
}

bool crossing_matches(const RMatrixSpec& r, const CrossingSides& lhs,
                      const CrossingParams& p) {
  const Grading& g = r.grading;
  Mat id = Mat::identity(r.dim);
  // st1 relation: argument shifted by q^{-2g}.
  Mat sh1 = supertranspose_leg(
      supertranspose_leg(rescale_z(r.entries, -2 * p.g2), g, 1), g, 1);
  Mat rhs1 = kron(rho_diagonal(-p.t2, r.dim), id) * sh1 *
             kron(rho_diagonal(p.t2, r.dim), id);
  if (matrix_mismatches(lhs.lhs1, rhs1, 1).size() > 0) return false;
  Mat sh2 = supertranspose_leg(
      supertranspose_leg(rescale_z(r.entries, 2 * p.g2), g, 2), g, 2);
  Mat rhs2 = kron(id, rho_diagonal(p.t2, r.dim)) * sh2 *
             kron(id, rho_diagonal(-p.t2, r.dim));
  return matrix_mismatches(lhs.lhs2, rhs2, 1).empty();
}

}  // namespace

CheckResult verify_crossing(const RMatrixSpec& r, const CrossingParams& p) {
  CrossingSides lhs = crossing_lhs(r);
  if (crossing_matches(r, lhs, p)) {
    CheckResult c = make_pass("rmatrix", "crossing-unitarity");
    std::ostringstream os;
    os << "g=" << p.g2 << "/2, t=" << p.t2 << "/2";
    c.details.push_back(os.str());
    return c;
  }
  return make_fail("rmatrix", "crossing-unitarity",
                   {"identity fails for g=" + std::to_string(p.g2) +
                    "/2, t=" + std::to_string(p.t2) + "/2"});
}

std::vector<CrossingParams> find_crossing_params(const RMatrixSpec& r,
                                                 int half_range) {
  CrossingSides lhs = crossing_lhs(r);
  std::vector<CrossingParams> found;
  for (int g2 = -half_range; g2 <= half_range; ++g2) {
    for (int t2 = -half_range; t2 <= half_range; ++t2) {
      CrossingParams p{g2, t2};
      if (crossing_matches(r, lhs, p)) found.push_back(p);
    }
  }
  if (found.empty())
    throw NoSolution("find_crossing_params: no (g, t) on the grid");
  return found;
}

RMatrixSpec mutate_entry(const RMatrixSpec& r, std::uint64_t seed,
                         std::string* which) {
  std::mt19937_64 rng(seed);
  const auto& es = r.entries.entries();
  if (es.empty()) throw ConfigError("mutate_entry: empty matrix");
  std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
  std::size_t k = pick(rng);
  RMatrixSpec out = r;
  int flat = es[k].first;
  int d2 = r.dim * r.dim;
  out.entries.set(flat / d2, flat % d2, -es[k].second);
  if (which) {
    std::ostringstream os;
    os << "sign-flipped entry (" << flat / d2 << "," << flat % d2 << ")";
    *which = os.str();
  }
  return out;
}

std::string rmatrix_to_json(const RMatrixSpec& r) {
  nlohmann::json j;
  j["dim"] = r.dim;
  j["grading"] = r.grading.parities;
  nlohmann::json entries = nlohmann::json::array();
  const int d2 = r.dim * r.dim;
  for (int row = 0; row < d2; ++row)
    for (int col = 0; col < d2; ++col) {
      RatExpr v = r.entries.at(row, col);
      entries.push_back({v.num().to_string(), v.den().to_string()});
    }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

RMatrixSpec rmatrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RMatrixSpec r;
  r.dim = j.at("dim").get<int>();
  r.grading.parities = j.at("grading").get<std::vector<int>>();
  if (r.grading.dim() != r.dim)
    throw ConfigError("rmatrix_from_json: grading length != dim");
  const int d2 = r.dim * r.dim;
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != d2 * d2)
    throw ConfigError("rmatrix_from_json: wrong entry count");
  r.entries = Mat(d2);
  for (int k = 0; k < d2 * d2; ++k) {
    MPoly num = parse_poly(entries[k][0].get<std::string>());
    MPoly den = parse_poly(entries[k][1].get<std::string>());
    if (num.is_zero()) continue;
    r.entries.set(k / d2, k % d2, RatExpr(num, den));
  }
  return r;
}

}  // namespace qaffine
