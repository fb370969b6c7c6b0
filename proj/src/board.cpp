#include "rooks/board.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rooks {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfBoard: return "OutOfBoard";
    case ErrorKind::AttackingRooks: return "AttackingRooks";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BoardTooSmall: return "BoardTooSmall";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::InvalidScalars: return "InvalidScalars";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorKind::WrongBoardSize: return "WrongBoardSize";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::UndefinedMove: return "UndefinedMove";
    case ErrorKind::NotIndexed: return "NotIndexed";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// RookPlacement

RookPlacement RookPlacement::validate(int n, std::span<const Cell> cells) {
  if (n < 1) throw Error(ErrorKind::OutOfBoard, "board size must be at least 1");
  RookPlacement d;
  d.n_ = n;
  d.row_of_.assign(n + 1, 0);
  d.col_of_.assign(n + 1, 0);
  for (const Cell& c : cells) {
    if (!(1 <= c.col && c.col < c.row && c.row <= n)) {
      std::ostringstream msg;
      msg << "cell " << c << " is not strictly below the diagonal of the " << n << "-board";
      throw Error(ErrorKind::OutOfBoard, msg.str(), {c});
    }
    if (int q = d.col_of_[c.row]; q != 0) {
      std::ostringstream msg;
      msg << "rooks " << Cell{c.row, q} << " and " << c << " share row " << c.row;
      throw Error(ErrorKind::AttackingRooks, msg.str(), {Cell{c.row, q}, c});
    }
    if (int p = d.row_of_[c.col]; p != 0) {
      std::ostringstream msg;
      msg << "rooks " << Cell{p, c.col} << " and " << c << " share column " << c.col;
      throw Error(ErrorKind::AttackingRooks, msg.str(), {Cell{p, c.col}, c});
    }
    d.col_of_[c.row] = c.col;
    d.row_of_[c.col] = c.row;
    d.rooks_.push_back(c);
  }
  std::sort(d.rooks_.begin(), d.rooks_.end());
  return d;
}

bool RookPlacement::contains(Cell c) const noexcept {
  return c.col >= 1 && c.col <= n_ && row_of_[c.col] == c.row && c.row != 0;
}

std::optional<Cell> RookPlacement::in_row(int k) const noexcept {
  if (k < 1 || k > n_ || col_of_[k] == 0) return std::nullopt;
  return Cell{k, col_of_[k]};
}

std::optional<Cell> RookPlacement::in_col(int k) const noexcept {
  if (k < 1 || k > n_ || row_of_[k] == 0) return std::nullopt;
  return Cell{row_of_[k], k};
}

RookPlacement RookPlacement::replace(std::span<const Cell> removed,
                                     std::span<const Cell> added) const {
  std::vector<Cell> cells;
  cells.reserve(rooks_.size() + added.size());
  for (const Cell& c : rooks_) {
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) cells.push_back(c);
  }
  cells.insert(cells.end(), added.begin(), added.end());
  return validate(n_, cells);
}

std::strong_ordering operator<=>(const RookPlacement& a, const RookPlacement& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.rooks_.begin(), a.rooks_.end(),
                                                b.rooks_.begin(), b.rooks_.end());
}

std::ostream& operator<<(std::ostream& os, const RookPlacement& d) {
  os << '{';
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d.rooks()[k];
  return os << '}';
}

// ---------------------------------------------------------------------------
// Rank matrices and the order

RankMatrix rank_matrix(const RookPlacement& d) {
  const int n = d.n();
  // Cumulative count from the South-West corner, then cut to the strict
  // lower triangle.
  RankMatrix r = RankMatrix::Zero(n, n);
  for (const Cell& c : d) {
    r.block(0, c.col - 1, c.row, n - c.col + 1).array() += 1;
  }
  for (int i = 0; i < n; ++i) r.row(i).tail(n - i).setZero();
  return r;
}

RookPlacement placement_from_rank_matrix(const RankMatrix& r) {
  const int n = static_cast<int>(r.rows());
  if (n < 1 || r.cols() != n) throw Error(ErrorKind::SizeMismatch, "rank matrix must be square");
  auto at = [&](int i, int j) { return (i >= 1 && i <= n && j >= 1 && j <= n) ? r(i - 1, j - 1) : 0; };
  std::vector<Cell> cells;
  // Only strictly lower boxes can hold rooks; the final comparison rejects
  // anything nonzero on or above the diagonal.
  for (int i = 2; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const int x = at(i, j) - at(i + 1, j) - at(i, j - 1) + at(i + 1, j - 1);
      if (x == 0) continue;
      if (x != 1) {
        throw Error(ErrorKind::OutOfBoard, "matrix is not the rank matrix of a placement",
                    {Cell{i, j}});
      }
      cells.push_back(Cell{i, j});
    }
  }
  RookPlacement d = RookPlacement::validate(n, cells);
  if (rank_matrix(d) != r) {
    throw Error(ErrorKind::OutOfBoard, "matrix is not the rank matrix of a placement");
  }
  return d;
}

bool leq(const RookPlacement& d, const RookPlacement& d2) {
  if (d.n() != d2.n()) throw Error(ErrorKind::SizeMismatch, "placements on different boards");
  return (rank_matrix(d).array() <= rank_matrix(d2).array()).all();
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int m = size();
  std::vector<bool> seen(m + 1, false);
  for (int v : image_) {
    if (v < 1 || v > m || seen[v]) {
      throw Error(ErrorKind::InvalidPermutation, "one-line notation is not a bijection of {1..m}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 1; x <= size(); ++x) inv[(*this)(x) - 1] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
  for (int x = 1; x <= size(); ++x) {
    if ((*this)((*this)(x)) != x) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "permutations of different sizes");
  std::vector<int> v(a.image_.size());
  for (int x = 1; x <= a.size(); ++x) v[x - 1] = a(b(x));
  return Permutation(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) {
  os << '[';
  for (int x = 1; x <= w.size(); ++x) os << (x > 1 ? "," : "") << w(x);
  return os << ']';
}

ChainDecomposition chains(const RookPlacement& d) {
  ChainDecomposition out;
  for (int start = 1; start <= d.n(); ++start) {
    // A chain starts at a point that is not the row of any rook.
    if (d.row_occupied(start)) continue;
    std::vector<int> chain{start};
    while (auto next = d.in_col(chain.back())) chain.push_back(next->row);
    if (chain.size() == 1) {
      out.fixed_points.push_back(start);
    } else {
      out.chains.push_back(std::move(chain));
    }
  }
  return out;
}

Permutation permutation_of(const RookPlacement& d) {
  Permutation id = Permutation::identity(d.n());
  std::vector<int> w = id.one_line();
  for (const auto& chain : chains(d).chains) {
    for (std::size_t l = 0; l + 1 < chain.size(); ++l) w[chain[l] - 1] = chain[l + 1];
    w[chain.back() - 1] = chain.front();
  }
  return Permutation(std::move(w));
}

Permutation transposition_product(const RookPlacement& d) {
  Permutation w = Permutation::identity(d.n());
  for (const Cell& c : d) {
    std::vector<int> t = Permutation::identity(d.n()).one_line();
    std::swap(t[c.row - 1], t[c.col - 1]);
    w = w * Permutation(std::move(t));
  }
  return w;
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a) {
    for (int b = a + 1; b <= w.size(); ++b) count += w(a) > w(b) ? 1 : 0;
  }
  return count;
}

Permutation kerov_involution(const RookPlacement& d) {
  if (d.n() < 2) throw Error(ErrorKind::BoardTooSmall, "Kerov involution needs n >= 2");
  std::vector<int> v = Permutation::identity(2 * d.n() - 2).one_line();
  for (const Cell& c : d) std::swap(v[2 * c.row - 3], v[2 * c.col - 2]);
  return Permutation(std::move(v));
}

RookPlacement involution_placement(const Permutation& sigma) {
  if (!sigma.is_involution()) throw Error(ErrorKind::NotInvolution, "permutation is not an involution");
  const int m = std::max(sigma.size(), 1);
  std::vector<Cell> cells;
  for (int x = 1; x <= sigma.size(); ++x) {
    if (sigma(x) > x) cells.push_back(Cell{sigma(x), x});
  }
  return RookPlacement::validate(m, cells);
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::SizeMismatch, "permutations of different sizes");
  const int m = v.size();
  // counts[j] = #{a <= i : perm(a) >= j} for the current prefix i.
  std::vector<int> cv(m + 2, 0), cw(m + 2, 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= v(i); ++j) ++cv[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= m; ++j) {
      if (cv[j] > cw[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Scalars

ScalarAssignment ScalarAssignment::unit(const RookPlacement& d) {
  ScalarAssignment xi;
  for (const Cell& c : d) xi.values_.emplace(c, Rational(1));
  return xi;
}

ScalarAssignment::ScalarAssignment(const RookPlacement& d, std::map<Cell, Rational> values)
    : values_(std::move(values)) {
  if (values_.size() != d.size()) {
    throw Error(ErrorKind::InvalidScalars, "scalar domain differs from the rook set");
  }
  for (const auto& [cell, value] : values_) {
    if (!d.contains(cell)) throw Error(ErrorKind::InvalidScalars, "scalar on a non-rook cell", {cell});
    if (value == 0) throw Error(ErrorKind::InvalidScalars, "scalars must be nonzero", {cell});
  }
}

Vector<Rational> diagonal_normalizer(const RookPlacement& d, const ScalarAssignment& xi) {
  Vector<Rational> t = Vector<Rational>::Constant(d.n(), Rational(1));
  for (const auto& chain : chains(d).chains) {
    Rational acc = 1;
    for (std::size_t z = 1; z < chain.size(); ++z) {
      acc /= xi(Cell{chain[z], chain[z - 1]});
      t(chain[z] - 1) = acc;
    }
  }
  return t;
}

}  // namespace rooks
