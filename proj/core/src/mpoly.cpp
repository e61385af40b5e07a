#include "qaffine/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

std::string mono_to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << kVarNames[i];
    if (m[i] != 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back({kUnitMonomial, c});
}

MPoly::MPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

MPoly MPoly::variable(Var v, int e) {
  return MPoly(mono_of(v, e), Rational(1));
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_is_unit(terms_[0].mon));
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& k) { return mono_less(t.mon, k); });
  if (it != terms_.end() && it->mon == m) return it->coef;
  return Rational(0);
}

void MPoly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coef == 0; }),
               terms_.end());
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (mono_less(i->mon, j->mon)) {
      out.push_back(*i++);
    } else if (mono_less(j->mon, i->mon)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (c != 0) out.push_back({i->mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, terms_.end());
  out.insert(out.end(), j, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1)
    return a.mul_monomial(b.terms_[0].mon, b.terms_[0].coef);
  if (a.terms_.size() == 1)
    return b.mul_monomial(a.terms_[0].mon, a.terms_[0].coef);
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(
      mono_less);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = mono_mul(ta.mon, tb.mon);
      auto [it, inserted] = acc.try_emplace(m, ta.coef * tb.coef);
      if (!inserted) it->second += ta.coef * tb.coef;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

void MPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coef *= c;
}

MPoly MPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  MPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mon, m), t.coef * c});
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = MPoly::constant(1);
  MPoly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mon != b.terms_[i].mon ||
        a.terms_[i].coef != b.terms_[i].coef)
      return false;
  }
  return true;
}

MPoly MPoly::subst_one(Var v) const {
  MPoly r;
  for (const auto& t : terms_) {
    Monomial m = t.mon;
    m[v] = 0;
    r += MPoly(m, t.coef);
  }
  return r;
}

MPoly MPoly::subst_scale(Var v, Var scale_var, int e) const {
  MPoly r;
  for (const auto& t : terms_) {
    Monomial m = t.mon;
    m[scale_var] = static_cast<std::int16_t>(m[scale_var] + e * t.mon[v]);
    r += MPoly(m, t.coef);
  }
  return r;
}

MPoly MPoly::rename(Var from, Var to) const {
  MPoly r;
  for (const auto& t : terms_) {
    if (t.mon[to] != 0)
      throw std::invalid_argument("MPoly::rename: target variable occupied");
    Monomial m = t.mon;
    m[to] = m[from];
    m[from] = 0;
    r += MPoly(m, t.coef);
  }
  return r;
}

MPoly MPoly::merge_vars(Var from, Var to) const {
  MPoly r;
  for (const auto& t : terms_) {
    Monomial m = t.mon;
    m[to] = static_cast<std::int16_t>(m[to] + m[from]);
    m[from] = 0;
    r += MPoly(m, t.coef);
  }
  return r;
}

MPoly MPoly::swap_vars(Var x, Var y) const {
  MPoly r;
  for (const auto& t : terms_) {
    Monomial m = t.mon;
    std::swap(m[x], m[y]);
    r += MPoly(m, t.coef);
  }
  return r;
}

std::map<int, MPoly> MPoly::collect_ratio(Var x, Var y) const {
  std::map<int, MPoly> out;
  for (const auto& t : terms_) {
    int k = t.mon[x];
    Monomial m = t.mon;
    m[x] = 0;
    m[y] = static_cast<std::int16_t>(m[y] + k);
    out[k] += MPoly(m, t.coef);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<int, MPoly> MPoly::collect_plain(Var x) const {
  std::map<int, MPoly> out;
  for (const auto& t : terms_) {
    int k = t.mon[x];
    Monomial m = t.mon;
    m[x] = 0;
    out[k] += MPoly(m, t.coef);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

int MPoly::min_deg(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mon[v] < d) d = t.mon[v];
    first = false;
  }
  return d;
}

int MPoly::max_deg(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mon[v] > d) d = t.mon[v];
    first = false;
  }
  return d;
}

bool MPoly::depends_on(Var v) const {
  for (const auto& t : terms_)
    if (t.mon[v] != 0) return true;
  return false;
}

void MPoly::zw_degree_range(int& lo, int& hi) const {
  lo = 0;
  hi = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int d = t.mon[VZ] + t.mon[VW];
    if (first || d < lo) lo = d;
    if (first || d > hi) hi = d;
    first = false;
  }
}

Monomial MPoly::content_monomial() const {
  Monomial m{};
  bool first = true;
  for (const auto& t : terms_) {
    for (int i = 0; i < kNumVars; ++i)
      m[i] = first ? t.mon[i] : std::min(m[i], t.mon[i]);
    first = false;
  }
  return m;
}

const Rational& MPoly::lead_coef() const {
  if (terms_.empty()) throw std::logic_error("lead_coef of zero polynomial");
  return terms_.back().coef;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (d.is_monomial()) {
    MPoly q = mul_monomial(mono_div(kUnitMonomial, d.terms_[0].mon),
                           Rational(1) / d.terms_[0].coef);
    return q;
  }
  // Reduce against the divisor's lexicographically largest term.
  MPoly rem = *this;
  MPoly quot;
  const Term& lead = d.terms_.back();
  std::size_t guard = terms_.size() * d.terms_.size() + terms_.size() + 16;
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const Term& top = rem.terms_.back();
    Monomial m = mono_div(top.mon, lead.mon);
    Rational c = top.coef / lead.coef;
    MPoly piece(m, c);
    quot += piece;
    rem -= d.mul_monomial(m, c);
    if (!rem.is_zero() && !mono_less(rem.terms_.back().mon, top.mon))
      return std::nullopt;  // no progress: not exactly divisible
  }
  return quot;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  // Print largest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coef;
    if (it == terms_.rbegin()) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool unit_mon = mono_is_unit(it->mon);
    if (c != 1 || unit_mon) {
      os << c.str();
      if (!unit_mon) os << "*";
    }
    if (!unit_mon) os << mono_to_string(it->mon);
  }
  return os.str();
}

}  // namespace qaffine
