#pragma once

#include <array>
#include <map>
#include <string>

#include "qaffine/loperator.hpp"

namespace qaffine {

/// Gauss factors of an L-operator: lower unipotent (e), diagonal (k),
/// upper unipotent (f). Unique once the leading principal blocks are
/// invertible, which the level-zero L-operators guarantee.
struct GaussData {
  int sign = +1;
  OpSeries k1, k2, k3;
  OpSeries e1, e2, e31;
  OpSeries f1, f2, f13;

  SeriesSide side() const {
    return sign > 0 ? SeriesSide::FromTop : SeriesSide::FromBottom;
  }
};

GaussData gauss_decompose(const LOperator& l);

/// Rebuild the nine operator entries from the factors.
std::array<OpSeries, 9> recompose(const GaussData& g);

/// The closed-form inverse entries (tilde block).
std::array<OpSeries, 9> explicit_inverse(const GaussData& g);

/// Drinfeld currents and the phi/psi fields at central charge zero.
/// Convention: X+_i = f+_i - f-_i and X-_i = e-_i - e+_i; the combined
/// currents are X+-(z) = (q - q^{-1})[X+-_1(z) + X+-_2(zq)].
struct CurrentSet {
  OpSeries x1p, x1m, x2p, x2m, xp, xm;
  OpSeries phi1, phi2, psi1, psi2, phi, psi;
  OpSeries k1p, k2p, k3p, k1m, k2m, k3m;

  /// Named view for the relation evaluator.
  std::map<std::string, const OpSeries*> table() const;
};

CurrentSet build_currents(const GaussData& gp, const GaussData& gm);

/// Support of a current lies on a single (z-power, a-power) diagonal.
bool is_delta_supported(const OpSeries& s, int* diag_out = nullptr);

}  // namespace qaffine
