#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rooks/board.hpp"

namespace rooks {

/// Largest board enumerate() accepts (B_10 = 115975 placements).
inline constexpr int kMaxEnumerationBoard = 10;
/// Largest board a PosetIndex is built for; the index is quadratic in the
/// number of placements (B_8 = 4140).
inline constexpr int kMaxIndexBoard = 8;
/// Largest board for the pairwise order-property sweeps.
inline constexpr int kMaxPairwiseBoard = 6;

/// All placements of the n-board, each once, sorted lexicographically by
/// their column-sorted rook lists (the empty placement first).
/// Throws LimitExceeded outside 1..kMaxEnumerationBoard.
std::vector<RookPlacement> enumerate(int n);

enum class MoveKind { Remove, SlideRight, SlideUp, Exchange, Split };

std::string_view to_string(MoveKind kind);

struct CoverMove {
  MoveKind kind;
  std::vector<Cell> removed;
  std::vector<Cell> added;
  RookPlacement result;
};

struct RemovableRooks {
  std::vector<Cell> minimal;    // minimal rooks under the root order
  std::vector<Cell> removable;  // minimal rooks with every row and column strictly between occupied
};

RemovableRooks removable_rooks(const RookPlacement& d);

/// The move calculus for the lower covers of D: removals, slides right and
/// up, exchanges and splits. One move per resulting placement, sorted by
/// result; when several moves give the same result the first found is kept.
std::vector<CoverMove> cover_moves(const RookPlacement& d);

/// The literal set replacement for a move without the cover guards.
/// `aux` is the partner rook for Exchange and the cell (alpha, beta) for
/// Split. Throws UndefinedMove when the move is not structurally possible.
RookPlacement raw_move(const RookPlacement& d, MoveKind kind, Cell rook,
                       std::optional<Cell> aux = std::nullopt);

/// The D_0 placement {(n,1), (n-1,2), ..., (n-n0+1, n0)}, n0 = floor(n/2).
RookPlacement maximal_element(int n);

/// Every placement of one board with its rank matrix, the strict order as
/// bitsets, and the lower covers obtained by transitive reduction.
class PosetIndex {
 public:
  /// Throws LimitExceeded above kMaxIndexBoard.
  explicit PosetIndex(int n, unsigned workers = 0);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return placements_.size(); }
  const std::vector<RookPlacement>& placements() const noexcept { return placements_; }
  const RookPlacement& placement(std::size_t k) const { return placements_[k]; }

  std::optional<std::size_t> index_of(const RookPlacement& d) const;
  /// Strict order placement(a) < placement(b).
  bool less(std::size_t a, std::size_t b) const;
  /// Lower covers of placement(k), in enumeration order.
  const std::vector<std::size_t>& lower_covers(std::size_t k) const { return covers_[k]; }

 private:
  int n_;
  std::vector<RookPlacement> placements_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> below_;  // size() rows of words_ words
  std::vector<std::vector<std::size_t>> covers_;
};

/// L(D) from rank-matrix comparisons alone. Throws NotIndexed.
std::vector<RookPlacement> brute_force_lower_covers(const PosetIndex& index, const RookPlacement& d);

struct Failure {
  std::string message;
  std::vector<RookPlacement> placements;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;
  std::int64_t millis = 0;

  bool passed() const noexcept { return failures.empty(); }
};

/// Compares the move calculus with the brute-force covers for every
/// placement of the n-board.
VerificationReport verify_covers(int n);
VerificationReport verify_covers(const PosetIndex& index);

/// Over all ordered pairs: Bruhat order of the permutations w implies the
/// placement order, and the placement order is equivalent to the Bruhat
/// order of the Kerov involutions. At n = 4 the two named witness pairs are
/// checked as well. Throws LimitExceeded above kMaxPairwiseBoard.
enum class OrderChecks { Proctor = 1, Kerov = 2, Both = 3 };
VerificationReport order_property_suite(int n, OrderChecks checks = OrderChecks::Both);

/// Graphviz DOT of the Hasse diagram: one node per placement, one edge
/// D -> D' per lower cover D' of D.
std::string hasse_dot(int n);
std::string hasse_dot(const PosetIndex& index);

/// "(i1,j1)(i2,j2)..." with "{}" for the empty placement.
std::string rook_label(const RookPlacement& d);

}  // namespace rooks
