#pragma once

#include <utility>
#include <vector>

#include "qaffine/ratexpr.hpp"

namespace qaffine {

/// Square matrix over RatExpr, stored sparsely (flat row-major index ->
/// value, sorted, no explicit zeros). Dimensions in play: 1 (scalars on a
/// grid), 3 (quantum space), 9 (V(x)V or aux(x)quantum), 27 (triple space).
class Mat {
 public:
  Mat() : dim_(0) {}
  explicit Mat(int dim) : dim_(dim) {}

  static Mat identity(int dim);
  static Mat scalar(int dim, const RatExpr& c);

  int dim() const { return dim_; }
  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }

  RatExpr at(int r, int c) const;
  bool has(int r, int c) const;
  void set(int r, int c, RatExpr v);
  void add_to(int r, int c, const RatExpr& v);

  const std::vector<std::pair<int, RatExpr>>& entries() const { return e_; }

  Mat operator-() const;
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  Mat scaled(const RatExpr& c) const;
  Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Exact inverse by Gauss-Jordan elimination over the rational-expression
  /// field; cross-multiplication pivoting, no gcd. Throws NotInvertible.
  Mat inverse() const;

  /// Entry-wise variable operations.
  Mat map_entries(RatExpr (*f)(const RatExpr&)) const;
  template <class F>
  Mat transform(F&& f) const {
    Mat r(dim_);
    for (const auto& [i, v] : e_) {
      RatExpr t = f(v);
      if (!t.is_zero()) r.e_.emplace_back(i, std::move(t));
    }
    return r;
  }

  std::string to_string() const;

 private:
  int dim_;
  std::vector<std::pair<int, RatExpr>> e_;
};

/// Ungraded Kronecker product (graded embeddings are built from this plus
/// theta/permutation conjugations).
Mat kron(const Mat& a, const Mat& b);

}  // namespace qaffine
