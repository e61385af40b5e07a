#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qaffine/grading.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

/// The trigonometric R-matrix acting on V(x)V, entries rational in
/// (q^{1/2}, z, w) and functions of z/w only. Pair-basis index order is
/// row-major: (alpha,beta) -> dim*(alpha-1) + (beta-1).
struct RMatrixSpec {
  int dim = 3;
  Grading grading = Grading::osp12();
  Mat entries{9};

  Mat entry_with(Var second) const;  // rename w -> second (e.g. a)
};

/// Crossing parameters: q^{2g} shift and the rho-weight exponent t with
/// pi(q^{2 h_rho}) = diag(q^t, 1, q^{-t}). Stored in half-integer units:
/// g2 = 2g, t2 = 2t.
struct CrossingParams {
  int g2 = 0;
  int t2 = 0;
};

/// The U_q[osp(1|2)^(1)] vector-representation R-matrix.
RMatrixSpec build_r();
/// R21(z/w) = R(w/z)^{-1}; also P R(z/w) P.
RMatrixSpec build_r21();

/// z -> z * s^spow on all entries (argument rescaling by q^{spow/2}).
Mat rescale_z(const Mat& m, int spow);
/// Swap z and w in all entries.
Mat swap_zw(const Mat& m);
/// Substitute w := z.
Mat set_w_equal_z(const Mat& m);

Mat rho_diagonal(int t2, int dim);  // diag(s^{t2}, 1, s^{-t2}) for dim 3

CheckResult verify_weight_conservation(const RMatrixSpec& r);
CheckResult verify_scale_invariance(const RMatrixSpec& r);
CheckResult verify_ybe(const RMatrixSpec& r);
CheckResult verify_unitarity(const RMatrixSpec& r);
CheckResult verify_r21_consistency(const RMatrixSpec& r,
                                   const RMatrixSpec& r21);
CheckResult verify_initial_condition(const RMatrixSpec& r);
CheckResult verify_rho_commutation(const RMatrixSpec& r, int t2);
CheckResult verify_crossing(const RMatrixSpec& r, const CrossingParams& p);
/// Exhaustive half-integer grid search in [-3, 3] x [-3, 3]; returns every
/// passing pair. Throws NoSolution when the grid contains none.
std::vector<CrossingParams> find_crossing_params(const RMatrixSpec& r,
                                                 int half_range = 6);

/// Sign-flip a single nonzero entry, chosen by seed; returns the flipped
/// spec and names the entry.
RMatrixSpec mutate_entry(const RMatrixSpec& r, std::uint64_t seed,
                         std::string* which);

std::string rmatrix_to_json(const RMatrixSpec& r);
RMatrixSpec rmatrix_from_json(const std::string& text);

}  // namespace qaffine
