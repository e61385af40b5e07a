#pragma once

#include <vector>

#include "qaffine/matrix.hpp"

namespace qaffine {

/// Z2-grading of a basis: one parity bit per index.
struct Grading {
  std::vector<int> parities;

  int dim() const { return static_cast<int>(parities.size()); }
  int p(int i) const { return parities[i] & 1; }
  /// Parity of a pair-basis index (row-major (alpha,beta)).
  int pair_p(int flat) const { return (p(flat / dim()) + p(flat % dim())) & 1; }

  /// The 3-dimensional vector representation: v1, v3 even, v2 odd.
  static Grading osp12() { return Grading{{0, 1, 0}}; }
  static Grading all_even(int dim) { return Grading{std::vector<int>(dim, 0)}; }
};

/// theta on V(x)V: diagonal, entry (alpha beta) -> (-1)^{[alpha][beta]}.
Mat theta_matrix(const Grading& g);

/// Graded permutation P(v_a (x) v_b) = (-1)^{[a][b]} v_b (x) v_a.
Mat graded_permutation(const Grading& g);

/// eta = diag((-1)^{[a]}) on V.
Mat eta_matrix(const Grading& g);

/// (A^{st})_{ab} = (-1)^{[a]([a]+[b])} A_{ba}.
Mat supertranspose(const Mat& m, const Grading& g);
/// (A^{ist})_{ab} = (-1)^{[b]([a]+[b])} A_{ba}; inverse of st.
Mat inverse_supertranspose(const Mat& m, const Grading& g);

/// Supertransposition on one tensor leg of a dim^2 x dim^2 matrix.
Mat supertranspose_leg(const Mat& m, const Grading& g, int leg);

/// Graded Kronecker product: (A(x)B)_{(ab),(a'b')} =
/// (-1)^{([b]+[b'])[a']} A_{aa'} B_{bb'}  (entry-parity Koszul signs).
Mat graded_kron(const Mat& a, const Mat& b, const Grading& g);

/// Place a dim x dim matrix on one leg of V(x)V using the ungraded
/// Kronecker product plus theta conjugation, so downstream arithmetic is
/// ordinary matrix multiplication. leg is 1 or 2.
Mat embed_leg2(const Mat& m, const Grading& g, int leg);

/// Place a dim^2 x dim^2 matrix on legs (1,2), (2,3) or (1,3) of the
/// triple tensor space. The (1,3) embedding conjugates by the graded
/// permutation on legs (2,3).
enum class LegPair { L12, L23, L13 };
Mat embed_pair3(const Mat& m, const Grading& g, LegPair legs);

/// Entry-parity homogeneity: every nonzero entry (i,j) of m must have the
/// declared parity [i]+[j] = par (mod 2) for some par; returns false for
/// mixed-parity matrices (used by the graded-form oracle, which rejects
/// them).
bool is_parity_homogeneous(const Mat& m, const Grading& g, int* parity_out);

}  // namespace qaffine
