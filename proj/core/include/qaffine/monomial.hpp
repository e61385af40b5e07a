#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qaffine {

// Fixed, ordered variable alphabet.
//   s : q^{1/2}; every q-power is an even s-power, q^{1/2} itself is s.
//   z, w : spectral variables of a relation / R-matrix argument.
//   a : evaluation-representation parameter.
//   u, v, h : rational (degenerated) spectral variables and hbar.
//   g : q^{c/2}, carries the symbolic central charge in suite texts.
//   c : the central-charge symbol itself on the degenerated side.
enum Var : int { VS = 0, VZ, VW, VA, VU, VV, VH, VG, VC };

inline constexpr int kNumVars = 9;
inline constexpr const char* kVarNames[kNumVars] = {"s", "z", "w", "a",
                                                    "u", "v", "h", "c2", "c"};

// Signed exponent vector: Laurent monomials are first-class.
using Monomial = std::array<std::int16_t, kNumVars>;

inline constexpr Monomial kUnitMonomial{};

inline Monomial mono_of(Var v, int e) {
  Monomial m{};
  m[v] = static_cast<std::int16_t>(e);
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kNumVars; ++i)
    r[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kNumVars; ++i)
    r[i] = static_cast<std::int16_t>(a[i] - b[i]);
  return r;
}

inline bool mono_is_unit(const Monomial& m) {
  for (int i = 0; i < kNumVars; ++i)
    if (m[i] != 0) return false;
  return true;
}

// Lexicographic order on the fixed alphabet; used for all term storage so
// iteration order (and therefore every report) is deterministic.
inline bool mono_less(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string mono_to_string(const Monomial& m);

}  // namespace qaffine
