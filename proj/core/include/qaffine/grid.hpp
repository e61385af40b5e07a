#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qaffine/series.hpp"

namespace qaffine {

/// Conservative support region for a two-variable coefficient grid:
/// interval constraints on the z-power m, the w-power n and the
/// anti-diagonal m+n. Closed under intersection, hull and Minkowski sum,
/// which is all convolution needs to decide finiteness of its sums.
struct Band {
  long mlo = kNegInf, mhi = kPosInf;
  long nlo = kNegInf, nhi = kPosInf;
  long dlo = kNegInf, dhi = kPosInf;

  static Band all() { return Band{}; }
  static Band none() { return Band{1, 0, 1, 0, 1, 0}; }
  bool empty() const { return mlo > mhi || nlo > nhi || dlo > dhi; }
  bool contains(long m, long n) const {
    return m >= mlo && m <= mhi && n >= nlo && n <= nhi && m + n >= dlo &&
           m + n <= dhi;
  }
  static Band hull(const Band& a, const Band& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return Band{std::min(a.mlo, b.mlo), std::max(a.mhi, b.mhi),
                std::min(a.nlo, b.nlo), std::max(a.nhi, b.nhi),
                std::min(a.dlo, b.dlo), std::max(a.dhi, b.dhi)};
  }
  static Band minkowski(const Band& a, const Band& b) {
    if (a.empty() || b.empty()) return none();
    return Band{badd(a.mlo, b.mlo), badd(a.mhi, b.mhi),
                badd(a.nlo, b.nlo), badd(a.nhi, b.nhi),
                badd(a.dlo, b.dlo), badd(a.dhi, b.dhi)};
  }
};

enum class CellState { KnownValue, KnownZero, Unknown };

/// Spec type CoeffGrid: cell (m, n) holds the matrix coefficient of
/// z^m w^n. Values are tracked on the storage square [-B, B]^2 with a
/// per-cell exactness flag; outside the support band the grid is zero
/// (hence exact) everywhere, outside the storage square it is otherwise
/// treated as unknown. All verdicts are restricted to exact cells.
class Grid {
 public:
  Grid() = default;
  Grid(int dim, int B)
      : dim_(dim),
        B_(B),
        supp_(Band::none()),
        known_(square(B), 1) {}

  int dim() const { return dim_; }
  int B() const { return B_; }
  const Band& supp() const { return supp_; }
  void set_supp(const Band& b) { supp_ = b; }

  bool in_storage(long m, long n) const {
    return m >= -B_ && m <= B_ && n >= -B_ && n <= B_;
  }
  CellState state(long m, long n) const;
  const Mat* value(long m, long n) const;

  void mark_unknown(long m, long n);
  void mark_known(long m, long n);
  void set_cell(long m, long n, Mat v);
  /// Mark every in-storage cell unknown (constructors refine afterwards).
  void clear_knowledge() { known_.assign(square(B_), 0); }

  const std::map<std::pair<int, int>, Mat>& cells() const { return cells_; }

  std::size_t known_count() const;
  bool fully_unknown() const;

 private:
  static std::size_t square(int B) {
    std::size_t side = 2 * static_cast<std::size_t>(B) + 1;
    return side * side;
  }
  std::size_t idx(long m, long n) const {
    return static_cast<std::size_t>(m + B_) * (2 * B_ + 1) +
           static_cast<std::size_t>(n + B_);
  }
  int dim_ = 1;
  int B_ = 0;
  Band supp_ = Band::none();
  std::vector<std::uint8_t> known_;
  std::map<std::pair<int, int>, Mat> cells_;
};

/// delta(z/w * q^k): cell (l, -l) = q^{k l} times the identity.
Grid delta_grid(int qshift, int B, int dim = 1);

/// A polynomial (or Laurent-polynomial) coefficient as a fully known grid;
/// entries must fit the storage square.
Grid poly_grid(const MPoly& p, int B);

enum class GridVar { Z, W };

/// One-variable operator series placed on a grid axis.
Grid series_on_grid(const OpSeries& s, GridVar var, int B);
Grid series_on_grid(const Series<RatExpr>& s, GridVar var, int B);

/// Directional expansion of a two-variable rational coefficient straight
/// onto a grid. dir is the expansion variable pair: GridVar::W means
/// powers of w/z, GridVar::Z powers of z/w.
Grid expand_to_grid(const RatExpr& f, GridVar dir, int depth, int B);

/// Grid convolution = product of the represented formal distributions,
/// operator order preserved (a's cells multiply from the left). Scalar
/// (dim 1) grids broadcast over matrix grids.
Grid conv(const Grid& a, const Grid& b);

Grid grid_add(const Grid& a, const Grid& b);
Grid grid_sub(const Grid& a, const Grid& b);
Grid grid_neg(const Grid& a);
Grid grid_scale(const Grid& a, const RatExpr& c);

/// Spec operation grid_mul_series: convolve a grid with a directional
/// series in its declared variable, from the given side.
enum class Side { Left, Right };
Grid grid_mul_series(const Grid& g, const LaurentSeries& s, Side side);

struct FailCell {
  int m, n;
  int entry;  // flat index into the cell matrix
};

struct GridCheck {
  bool pass = false;
  long known_cells = 0;
  int mlo = 0, mhi = 0, nlo = 0, nhi = 0;  // bounding box of checked cells
  std::vector<FailCell> failures;          // capped
};

/// All exact cells inside [-N, N]^2 must vanish; throws nothing, an empty
/// safe window is reported via known_cells == 0.
GridCheck check_zero(const Grid& g, int N, std::size_t max_failures = 16);

/// Cell-wise equality of g1(m,n) and g2(n,m) on the common exact window.
GridCheck check_equal_transposed(const Grid& g1, const Grid& g2, int N,
                                 std::size_t max_failures = 16);

}  // namespace qaffine
