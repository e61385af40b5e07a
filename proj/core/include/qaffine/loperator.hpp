#pragma once

#include <array>

#include "qaffine/grid.hpp"
#include "qaffine/report.hpp"
#include "qaffine/rmatrix.hpp"

namespace qaffine {

/// Level-zero L-operator in the evaluation representation: a 3x3 matrix
/// (auxiliary space) of operator-valued series. Each entry is a series in
/// the spectral variable whose coefficients are 3x3 quantum-space matrices
/// over (q^{1/2}, a): L+ is R(z/a) expanded in a/z (z-powers <= 0), L- the
/// same rational matrix expanded in z/a (z-powers >= 0).
struct LOperator {
  int sign = +1;  // +1 or -1
  int depth = 0;  // coefficients exact down to |n| = depth
  std::array<OpSeries, 9> entries;

  OpSeries& at(int i, int j) { return entries[i * 3 + j]; }
  const OpSeries& at(int i, int j) const { return entries[i * 3 + j]; }
  SeriesSide side() const {
    return sign > 0 ? SeriesSide::FromTop : SeriesSide::FromBottom;
  }
};

LOperator build_L(int sign, const RMatrixSpec& r, int depth);

/// Flatten to a single series of 9x9 matrices on aux (x) quantum, index
/// (i,k) -> 3i + k.
Series<Mat> flatten(const LOperator& l);
/// Series inverse of the flattened operator (one-sided by the sign).
Series<Mat> loperator_inverse(const LOperator& l);

/// Triple-space (aux1 (x) aux2 (x) quantum, dim 27) grid factors. var
/// selects the spectral variable the series is attached to.
Grid l_leg1_grid(const Series<Mat>& flat, GridVar var, int B);
/// theta L_2 theta with the grading signs baked in.
Grid l_leg2_theta_grid(const Series<Mat>& flat, const Grading& g, GridVar var,
                       int B);

/// R(z/w) (or R21) expanded in nonnegative powers of w/z as a 27-dim grid
/// factor (scalar on the quantum leg).
Grid r_factor_grid(const Mat& rmat, const Grading& g, int depth, int B);

/// RLL exchange relation for one sign pair ("++", "--", "+-"); the theta
/// form, all products ordinary matrix multiplications.
CheckResult verify_rll(const std::string& pair, const RMatrixSpec& r,
                       const LOperator& lp, const LOperator& lm, int cutoff);

/// The nine derived exchange families (R21 forms, inverse and mixed
/// variants) checked as vanishing residual grids.
Report verify_theta_consequences(const RMatrixSpec& r, const LOperator& lp,
                                 const LOperator& lm, int cutoff);

/// Graded component form of the exchange relation (explicit Koszul signs),
/// used as a cross-check oracle against the theta form. A and B are the
/// 3x3 arrays of quantum-space entry matrices of L(z) and L(w).
Mat component_form_lhs(const Mat& r9, const std::array<Mat, 9>& a,
                       const std::array<Mat, 9>& b, const Grading& g);
Mat component_form_rhs(const Mat& r9, const std::array<Mat, 9>& a,
                       const std::array<Mat, 9>& b, const Grading& g);
/// Same sides assembled as theta-conjugated ordinary matrix products.
Mat theta_form_lhs(const Mat& r9, const std::array<Mat, 9>& a,
                   const std::array<Mat, 9>& b, const Grading& g);
Mat theta_form_rhs(const Mat& r9, const std::array<Mat, 9>& a,
                   const std::array<Mat, 9>& b, const Grading& g);

}  // namespace qaffine
