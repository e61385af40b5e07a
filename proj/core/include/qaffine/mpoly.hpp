#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/monomial.hpp"
#include "qaffine/rational.hpp"

namespace qaffine {

/// Sparse multivariate Laurent polynomial over the fixed alphabet.
/// Terms are kept sorted by the lexicographic monomial order and never
/// store a zero coefficient.
class MPoly {
 public:
  struct Term {
    Monomial mon;
    Rational coef;
  };

  MPoly() = default;
  explicit MPoly(const Rational& c);
  MPoly(const Monomial& m, const Rational& c);

  static MPoly variable(Var v, int e = 1);
  static MPoly constant(long c) { return MPoly(Rational(c)); }
  /// q^k as an s-power (k in units of q^{1/2}: pass 2*k for integer q-powers).
  static MPoly s_power(int e) { return MPoly(mono_of(VS, e), Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of an exact monomial (zero if absent).
  Rational coeff(const Monomial& m) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  void scale(const Rational& c);
  MPoly mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
  MPoly pow(int e) const;  // e >= 0

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Set a variable to 1 (drop its exponents, merging terms).
  MPoly subst_one(Var v) const;
  /// Substitute v -> v * s^e for the variable s = scale_var (exponent shear).
  MPoly subst_scale(Var v, Var scale_var, int e) const;
  /// Rename variable `from` to `to`; `to` must not occur.
  MPoly rename(Var from, Var to) const;
  /// Substitute `from` := `to` (exponents merge; terms may combine).
  MPoly merge_vars(Var from, Var to) const;
  /// Swap two variables.
  MPoly swap_vars(Var x, Var y) const;

  /// Collect as a Laurent polynomial in t = x/y: x^k (rest) contributes
  /// t^k (y^k * rest). Keys are the t-orders.
  std::map<int, MPoly> collect_ratio(Var x, Var y) const;
  /// Plain collection by the exponent of x (x removed from the parts).
  std::map<int, MPoly> collect_plain(Var x) const;

  int min_deg(Var v) const;  // 0 for the zero polynomial
  int max_deg(Var v) const;
  bool depends_on(Var v) const;
  /// Total (z,w)-degree extremes over all terms.
  void zw_degree_range(int& lo, int& hi) const;

  /// Componentwise minimum of all exponent vectors (the monomial content).
  Monomial content_monomial() const;
  /// Leading (last in term order) coefficient.
  const Rational& lead_coef() const;

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void prune();
};

}  // namespace qaffine
