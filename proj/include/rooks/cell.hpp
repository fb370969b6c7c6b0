#pragma once

#include <compare>
#include <ostream>

namespace rooks {

/// A box (row, col) of the lower-triangular board, 1-based, col < row.
/// The box (i, j) stands for the positive root e_j - e_i.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  /// Column-major: the canonical order of rooks inside a placement.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.col <=> b.col; c != 0) return c;
    return a.row <=> b.row;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

enum class RootOrder { Less, Greater, Equal, Incomparable };

/// The root order on positive roots: (a,b) <= (c,d) iff a <= c and b >= d.
/// Smaller roots sit closer to the diagonal (North-East).
constexpr RootOrder root_compare(Cell a, Cell b) {
  if (a == b) return RootOrder::Equal;
  if (a.row <= b.row && a.col >= b.col) return RootOrder::Less;
  if (b.row <= a.row && b.col >= a.col) return RootOrder::Greater;
  return RootOrder::Incomparable;
}

/// Strict root order a < b.
constexpr bool root_less(Cell a, Cell b) { return root_compare(a, b) == RootOrder::Less; }

}  // namespace rooks
