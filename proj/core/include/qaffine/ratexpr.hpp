#pragma once

#include <string>

#include "qaffine/mpoly.hpp"

namespace qaffine {

/// Rational expression num/den over MPoly. No polynomial gcd is ever
/// computed: equality is decided by cross-multiplication. The only
/// normalisation applied is cheap and exact — the common monomial content
/// of num and den is stripped, a monomial denominator is folded into the
/// numerator (Laurent division is exact), and the denominator's leading
/// rational coefficient is scaled to 1.
class RatExpr {
 public:
  RatExpr() : num_(), den_(MPoly::constant(1)) {}
  explicit RatExpr(const Rational& c) : num_(c), den_(MPoly::constant(1)) {}
  explicit RatExpr(MPoly n) : num_(std::move(n)), den_(MPoly::constant(1)) {}
  RatExpr(MPoly n, MPoly d);

  static RatExpr zero() { return RatExpr(); }
  static RatExpr one() { return RatExpr(Rational(1)); }
  static RatExpr variable(Var v, int e = 1) {
    return RatExpr(MPoly::variable(v, e));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const { return den_ == MPoly::constant(1); }

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
  RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
  RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
  RatExpr inverse() const;

  /// Exact equality as rational functions: num*o.den == o.num*den.
  bool equals(const RatExpr& o) const;
  friend bool operator==(const RatExpr& a, const RatExpr& b) {
    return a.equals(b);
  }

  RatExpr subst_one(Var v) const { return RatExpr(num_.subst_one(v), den_.subst_one(v)); }
  RatExpr subst_scale(Var v, Var s, int e) const {
    return RatExpr(num_.subst_scale(v, s, e), den_.subst_scale(v, s, e));
  }
  RatExpr rename(Var from, Var to) const {
    return RatExpr(num_.rename(from, to), den_.rename(from, to));
  }
  RatExpr merge_vars(Var from, Var to) const {
    return RatExpr(num_.merge_vars(from, to), den_.merge_vars(from, to));
  }
  RatExpr swap_vars(Var x, Var y) const {
    return RatExpr(num_.swap_vars(x, y), den_.swap_vars(x, y));
  }

  std::string to_string() const;

 private:
  MPoly num_, den_;
  void normalize();
};

/// Spec operation: exact equality of rational expressions.
inline bool ratexpr_equal(const RatExpr& p, const RatExpr& q) {
  return p.equals(q);
}

}  // namespace qaffine
