#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qaffine {

// Exact coefficient field. cpp_rational keeps gcd(|num|,den)=1, den>0,
// and zero as 0/1, which is the canonical form assumed everywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  long n = e > 0 ? e : -e;
  Rational r(1);
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qaffine
