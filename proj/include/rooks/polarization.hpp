#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rooks/board.hpp"

namespace rooks {

using CellSet = std::set<Cell>;

/// The M and P cell sets of a placement, per rook (keyed by rook column)
/// and in total.
struct MPData {
  struct RookSets {
    CellSet m;
    CellSet p;
  };
  std::map<int, RookSets> per_rook;
  CellSet m;
  CellSet p;
};

/// Builds M and P column by column. For the rook (i, j), M_j holds the
/// cells (i, q), j < q < i, whose mirror (q, j) was not claimed by an
/// earlier rook; P_j holds the mirrors (q, j) of the cells in M_j.
MPData mp_sets(const RookPlacement& d);

/// All positive roots outside M: the index set of the polarization.
CellSet polarization_complement(const RookPlacement& d);

/// A triple j < k < i with (i,k), (k,j) outside M and (i,j) in M.
struct Triple {
  int i, k, j;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// First non-admissible triple, or nullopt if the complement of M spans a
/// subalgebra.
std::optional<Triple> subalgebra_witness(const RookPlacement& d);

struct Dimensions {
  int m_size = 0;
  int dim_theta = 0;  // 2|M|
  int dim_omega = 0;  // 2|M| + |D|
  int length = 0;     // l(w)
  int d_size = 0;
};

/// Closed-form orbit dimensions. Throws BoundViolation when the length
/// bounds 2|M| <= l(w) - |D| or 2|M| + |D| <= l(w) fail.
Dimensions dimensions(const RookPlacement& d);

/// Every positive root of the n-board, sorted by (col, row).
std::vector<Cell> positive_roots(int n);

}  // namespace rooks
