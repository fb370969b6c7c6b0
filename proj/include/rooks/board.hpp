#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rooks/cell.hpp"
#include "rooks/error.hpp"
#include "rooks/rational.hpp"

namespace rooks {

/// A set of mutually non-attacking rooks strictly below the diagonal of an
/// n x n board. Rooks are kept sorted by ascending column.
class RookPlacement {
 public:
  RookPlacement() = default;

  /// Validating constructor. Throws OutOfBoard or AttackingRooks.
  static RookPlacement validate(int n, std::span<const Cell> cells);
  static RookPlacement validate(int n, std::initializer_list<Cell> cells) {
    return validate(n, std::span<const Cell>(cells.begin(), cells.size()));
  }
  static RookPlacement empty(int n) { return validate(n, {}); }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return rooks_.size(); }
  bool is_empty() const noexcept { return rooks_.empty(); }
  const std::vector<Cell>& rooks() const noexcept { return rooks_; }
  auto begin() const noexcept { return rooks_.begin(); }
  auto end() const noexcept { return rooks_.end(); }

  bool contains(Cell c) const noexcept;
  /// Rook in row k / column k, if any.
  std::optional<Cell> in_row(int k) const noexcept;
  std::optional<Cell> in_col(int k) const noexcept;
  bool row_occupied(int k) const noexcept { return col_of_[k] != 0; }
  bool col_occupied(int k) const noexcept { return row_of_[k] != 0; }

  /// Copy with `removed` taken out and `added` put in, revalidated.
  RookPlacement replace(std::span<const Cell> removed, std::span<const Cell> added) const;

  friend bool operator==(const RookPlacement& a, const RookPlacement& b) {
    return a.n_ == b.n_ && a.rooks_ == b.rooks_;
  }
  /// Lexicographic on the sorted rook lists (board size first).
  friend std::strong_ordering operator<=>(const RookPlacement& a, const RookPlacement& b);

 private:
  int n_ = 1;
  std::vector<Cell> rooks_;
  // row_of_[col] = row of the rook in that column, col_of_[row] likewise; 0 if none.
  std::vector<int> row_of_ = std::vector<int>(2, 0);
  std::vector<int> col_of_ = std::vector<int>(2, 0);
};

std::ostream& operator<<(std::ostream& os, const RookPlacement& d);

/// n x n South-West rook counts, 0-based storage: entry (i-1, j-1) holds
/// #{(p,q) in D : p >= i, q <= j} for i > j and 0 elsewhere.
using RankMatrix = Eigen::MatrixXi;

RankMatrix rank_matrix(const RookPlacement& d);

/// Inverse of rank_matrix by quadrant inclusion-exclusion. Throws
/// OutOfBoard / AttackingRooks if the matrix is not a rank matrix.
RookPlacement placement_from_rank_matrix(const RankMatrix& r);

/// D <= D' iff R_D <= R_D' entrywise.
bool leq(const RookPlacement& d, const RookPlacement& d2);

/// A permutation of {1..m} in 1-based one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `one_line` is a bijection of {1..m}.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int m);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[x - 1]; }
  const std::vector<int>& one_line() const noexcept { return image_; }
  Permutation inverse() const;
  bool is_involution() const;

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

struct ChainDecomposition {
  std::vector<std::vector<int>> chains;  // each of length >= 2, increasing
  std::vector<int> fixed_points;
};

ChainDecomposition chains(const RookPlacement& d);

/// w(j) = i on rooks, chain maxima go to chain minima, the rest is fixed.
Permutation permutation_of(const RookPlacement& d);

/// Product of the rook transpositions in ascending column order, composed
/// right to left. Same permutation as permutation_of, kept as a second route.
Permutation transposition_product(const RookPlacement& d);

/// Number of inversions, i.e. the Coxeter length.
int inversions(const Permutation& w);

/// Involution of S_{2n-2} made of the transpositions (2i-2, 2j-1).
/// Throws BoardTooSmall for n = 1.
Permutation kerov_involution(const RookPlacement& d);

/// One rook (i, j), i > j, per 2-cycle. Throws NotInvolution.
RookPlacement involution_placement(const Permutation& sigma);

/// Bruhat order on S_m via the dominance criterion. Throws SizeMismatch.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// Nonzero rational scalars on the rooks of one placement.
class ScalarAssignment {
 public:
  /// All scalars equal to 1.
  static ScalarAssignment unit(const RookPlacement& d);
  /// Throws InvalidScalars if the domain is not the rook set or a value is 0.
  ScalarAssignment(const RookPlacement& d, std::map<Cell, Rational> values);

  const Rational& operator()(Cell c) const { return values_.at(c); }
  const std::map<Cell, Rational>& values() const noexcept { return values_; }

 private:
  ScalarAssignment() = default;
  std::map<Cell, Rational> values_;
};

/// Diagonal entries t_11..t_nn of the torus element sending f_{D,xi} to f_D.
Vector<Rational> diagonal_normalizer(const RookPlacement& d, const ScalarAssignment& xi);

}  // namespace rooks
