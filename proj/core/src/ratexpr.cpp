#include "qaffine/ratexpr.hpp"

#include <stdexcept>

namespace qaffine {

RatExpr::RatExpr(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::invalid_argument("RatExpr: zero denominator");
  normalize();
}

void RatExpr::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(1);
    return;
  }
  // Strip the joint monomial content.
  Monomial mn = num_.content_monomial();
  Monomial md = den_.content_monomial();
  Monomial common{};
  for (int i = 0; i < kNumVars; ++i) common[i] = std::min(mn[i], md[i]);
  if (!mono_is_unit(common)) {
    Monomial inv = mono_div(kUnitMonomial, common);
    num_ = num_.mul_monomial(inv);
    den_ = den_.mul_monomial(inv);
  }
  // A monomial denominator divides exactly in the Laurent ring.
  if (den_.is_monomial()) {
    const auto& t = den_.terms()[0];
    num_ = num_.mul_monomial(mono_div(kUnitMonomial, t.mon),
                             Rational(1) / t.coef);
    den_ = MPoly::constant(1);
    return;
  }
  // Scale the denominator's leading coefficient to 1.
  Rational lc = den_.lead_coef();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_.scale(inv);
    den_.scale(inv);
  }
}

RatExpr RatExpr::operator-() const {
  RatExpr r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    MPoly n = a.num_ + b.num_;
    if (n.is_zero()) return RatExpr();
    return RatExpr(std::move(n), a.den_);
  }
  return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return RatExpr();
  return RatExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  return a * b.inverse();
}

RatExpr RatExpr::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatExpr: inverse of zero");
  return RatExpr(den_, num_);
}

bool RatExpr::equals(const RatExpr& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string RatExpr::to_string() const {
  if (den_is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qaffine
