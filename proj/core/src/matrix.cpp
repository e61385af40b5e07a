#include "qaffine/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qaffine/errors.hpp"

namespace qaffine {

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.e_.emplace_back(i * dim + i, RatExpr::one());
  return m;
}

Mat Mat::scalar(int dim, const RatExpr& c) {
  Mat m(dim);
  if (c.is_zero()) return m;
  for (int i = 0; i < dim; ++i) m.e_.emplace_back(i * dim + i, c);
  return m;
}

RatExpr Mat::at(int r, int c) const {
  int k = r * dim_ + c;
  auto it = std::lower_bound(
      e_.begin(), e_.end(), k,
      [](const auto& p, int key) { return p.first < key; });
  if (it != e_.end() && it->first == k) return it->second;
  return RatExpr::zero();
}

bool Mat::has(int r, int c) const {
  int k = r * dim_ + c;
  auto it = std::lower_bound(
      e_.begin(), e_.end(), k,
      [](const auto& p, int key) { return p.first < key; });
  return it != e_.end() && it->first == k;
}

void Mat::set(int r, int c, RatExpr v) {
  int k = r * dim_ + c;
  auto it = std::lower_bound(
      e_.begin(), e_.end(), k,
      [](const auto& p, int key) { return p.first < key; });
  if (it != e_.end() && it->first == k) {
    if (v.is_zero())
      e_.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    e_.insert(it, {k, std::move(v)});
  }
}

void Mat::add_to(int r, int c, const RatExpr& v) {
  if (v.is_zero()) return;
  int k = r * dim_ + c;
  auto it = std::lower_bound(
      e_.begin(), e_.end(), k,
      [](const auto& p, int key) { return p.first < key; });
  if (it != e_.end() && it->first == k) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  } else {
    e_.insert(it, {k, v});
  }
}

Mat Mat::operator-() const {
  Mat r(dim_);
  r.e_.reserve(e_.size());
  for (const auto& [i, v] : e_) r.e_.emplace_back(i, -v);
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r(a.dim_ ? a.dim_ : b.dim_);
  auto i = a.e_.begin();
  auto j = b.e_.begin();
  while (i != a.e_.end() && j != b.e_.end()) {
    if (i->first < j->first) {
      r.e_.push_back(*i++);
    } else if (j->first < i->first) {
      r.e_.push_back(*j++);
    } else {
      RatExpr v = i->second + j->second;
      if (!v.is_zero()) r.e_.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  r.e_.insert(r.e_.end(), i, a.e_.end());
  r.e_.insert(r.e_.end(), j, b.e_.end());
  return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
  const int d = a.dim_ ? a.dim_ : b.dim_;
  Mat r(d);
  if (a.e_.empty() || b.e_.empty()) return r;
  std::map<int, RatExpr> acc;
  // Row ranges of b located by binary search on the flat index.
  for (const auto& [ia, va] : a.e_) {
    int ra = ia / d, ca = ia % d;
    auto lo = std::lower_bound(
        b.e_.begin(), b.e_.end(), ca * d,
        [](const auto& p, int key) { return p.first < key; });
    for (auto it = lo; it != b.e_.end() && it->first < (ca + 1) * d; ++it) {
      int cb = it->first % d;
      RatExpr prod = va * it->second;
      if (prod.is_zero()) continue;
      auto [slot, inserted] = acc.try_emplace(ra * d + cb, std::move(prod));
      if (!inserted) slot->second += prod;
    }
  }
  for (auto& [k, v] : acc)
    if (!v.is_zero()) r.e_.emplace_back(k, std::move(v));
  return r;
}

Mat Mat::scaled(const RatExpr& c) const {
  Mat r(dim_);
  if (c.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& [i, v] : e_) {
    RatExpr p = v * c;
    if (!p.is_zero()) r.e_.emplace_back(i, std::move(p));
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(dim_);
  for (const auto& [i, v] : e_) r.set(i % dim_, i / dim_, v);
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  // Entry lists are normalized (sorted, no zeros) but values compare as
  // rational functions.
  if (a.dim_ != b.dim_ || a.e_.size() != b.e_.size()) return false;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    if (a.e_[k].first != b.e_[k].first) return false;
    if (!a.e_[k].second.equals(b.e_[k].second)) return false;
  }
  return true;
}

Mat Mat::inverse() const {
  const int d = dim_;
  // Dense augmented workspace [A | I].
  std::vector<RatExpr> w(static_cast<std::size_t>(d) * 2 * d);
  auto W = [&](int r, int c) -> RatExpr& { return w[r * 2 * d + c]; };
  for (const auto& [i, v] : e_) W(i / d, i % d) = v;
  for (int i = 0; i < d; ++i) W(i, d + i) = RatExpr::one();

  for (int col = 0; col < d; ++col) {
    // Pick the structurally cheapest nonzero pivot in this column.
    int piv = -1;
    std::size_t best = 0;
    for (int r = col; r < d; ++r) {
      if (W(r, col).is_zero()) continue;
      std::size_t cost = W(r, col).num().size() + W(r, col).den().size();
      if (piv < 0 || cost < best) {
        piv = r;
        best = cost;
      }
    }
    if (piv < 0) throw NotInvertible("Mat::inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < 2 * d; ++c) std::swap(W(piv, c), W(col, c));
    RatExpr inv = W(col, col).inverse();
    for (int c = col; c < 2 * d; ++c)
      if (!W(col, c).is_zero()) W(col, c) = W(col, c) * inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || W(r, col).is_zero()) continue;
      RatExpr f = W(r, col);
      for (int c = col; c < 2 * d; ++c) {
        if (W(col, c).is_zero()) continue;
        W(r, c) = W(r, c) - f * W(col, c);
      }
    }
  }
  Mat r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!W(i, d + j).is_zero()) r.set(i, j, W(i, d + j));
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "Mat" << dim_ << "{";
  bool first = true;
  for (const auto& [i, v] : e_) {
    if (!first) os << ", ";
    os << "(" << i / dim_ << "," << i % dim_ << ")=" << v.to_string();
    first = false;
  }
  os << "}";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  const int da = a.dim(), db = b.dim();
  Mat r(da * db);
  for (const auto& [ia, va] : a.entries()) {
    int ra = ia / da, ca = ia % da;
    for (const auto& [ib, vb] : b.entries()) {
      int rb = ib / db, cb = ib % db;
      RatExpr v = va * vb;
      if (!v.is_zero()) r.set(ra * db + rb, ca * db + cb, std::move(v));
    }
  }
  return r;
}

}  // namespace qaffine
