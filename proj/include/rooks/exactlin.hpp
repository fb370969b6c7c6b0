#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "rooks/board.hpp"
#include "rooks/polarization.hpp"
#include "rooks/rational.hpp"

namespace rooks {

/// Elements of n* are strictly lower-triangular matrices under the trace
/// form tr(lambda x). Entries on and above the diagonal are zero.
template <typename Scalar>
using LinearForm = Matrix<Scalar>;

enum class Scope { Unipotent, Borel };

/// Rank by plain Gauss elimination over a field.
template <typename Scalar>
int rank_gauss(Matrix<Scalar> a) {
  int rank = 0;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, c) == Scalar(0)) continue;
      const Scalar factor = a(r, c) / a(rank, c);
      a.row(r).tail(cols - c) -= factor * a.row(rank).tail(cols - c);
    }
    ++rank;
  }
  return rank;
}

/// Fraction-free (Bareiss) rank over the integers.
int rank_bareiss(Matrix<Integer> a);

/// Exact rank of a rational matrix: rows are cleared of denominators and
/// reduced fraction-free.
int rank(const Matrix<Rational>& a);

template <typename Scalar>
bool is_strictly_lower(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

template <typename Scalar>
Matrix<Scalar> strictly_lower(const Matrix<Scalar>& m) {
  Matrix<Scalar> out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.row(i).tail(m.cols() - i).setZero();
  return out;
}

/// f_{D,xi}: xi(i,j) at each rook (i,j), zero elsewhere.
LinearForm<Rational> f_form(const RookPlacement& d, const ScalarAssignment& xi);
/// f_D, the unit-scalar form.
LinearForm<Rational> f_form(const RookPlacement& d);

/// Inverse of an invertible upper-triangular matrix by back substitution.
/// Throws NotUpperTriangular or NotInvertible.
template <typename Scalar>
Matrix<Scalar> upper_triangular_inverse(const Matrix<Scalar>& b) {
  const Eigen::Index n = b.rows();
  if (b.cols() != n) throw Error(ErrorKind::SizeMismatch, "matrix is not square");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (b(i, j) != Scalar(0)) throw Error(ErrorKind::NotUpperTriangular, "entry below the diagonal");
    }
    if (b(i, i) == Scalar(0)) throw Error(ErrorKind::NotInvertible, "zero on the diagonal");
  }
  Matrix<Scalar> inv = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    inv(j, j) = Scalar(1) / b(j, j);
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      Scalar acc(0);
      for (Eigen::Index k = i + 1; k <= j; ++k) acc += b(i, k) * inv(k, j);
      inv(i, j) = -acc / b(i, i);
    }
  }
  return inv;
}

/// Coadjoint action b.lambda = (b lambda b^{-1})_low.
template <typename Scalar>
LinearForm<Scalar> coadjoint(const Matrix<Scalar>& b, const LinearForm<Scalar>& lambda) {
  if (b.rows() != lambda.rows()) throw Error(ErrorKind::SizeMismatch, "group element and form differ in size");
  const Matrix<Scalar> inv = upper_triangular_inverse(b);
  return strictly_lower<Scalar>(b * lambda * inv);
}

/// Entry (i, j), i > j, is the rank of lambda restricted to rows i..n and
/// columns 1..j (the South-West corner at (i, j)).
template <typename Scalar>
Eigen::MatrixXi rank_profile(const LinearForm<Scalar>& lambda) {
  const int n = static_cast<int>(lambda.rows());
  Eigen::MatrixXi out = Eigen::MatrixXi::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const Matrix<Scalar> corner = lambda.block(i - 1, 0, n - i + 1, j);
      if constexpr (std::is_same_v<Scalar, Rational>) {
        out(i - 1, j - 1) = rank(corner);
      } else {
        out(i - 1, j - 1) = rank_gauss<Scalar>(corner);
      }
    }
  }
  return out;
}

/// Strict lower entries of a matrix as a vector, in positive_roots order.
template <typename Scalar>
Vector<Scalar> root_coordinates(const Matrix<Scalar>& m) {
  const auto roots = positive_roots(static_cast<int>(m.rows()));
  Vector<Scalar> v(static_cast<Eigen::Index>(roots.size()));
  for (std::size_t k = 0; k < roots.size(); ++k) v(k) = m(roots[k].row - 1, roots[k].col - 1);
  return v;
}

/// The image of lambda under the infinitesimal coadjoint action of the
/// elementary matrix e_{a,b} (1-based, a <= b): (e_ab lambda - lambda e_ab)_low.
template <typename Scalar>
LinearForm<Scalar> infinitesimal_action(int a, int b, const LinearForm<Scalar>& lambda) {
  const Eigen::Index n = lambda.rows();
  Matrix<Scalar> x = Matrix<Scalar>::Zero(n, n);
  x.row(a - 1) += lambda.row(b - 1);
  x.col(b - 1) -= lambda.col(a - 1);
  return strictly_lower<Scalar>(x);
}

/// Dimension of the tangent space of the U- or B-orbit at lambda.
template <typename Scalar>
int tangent_dim(const LinearForm<Scalar>& lambda, Scope scope) {
  const int n = static_cast<int>(lambda.rows());
  const int first_offset = scope == Scope::Borel ? 0 : 1;
  std::vector<Vector<Scalar>> images;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + first_offset; b <= n; ++b) {
      images.push_back(root_coordinates<Scalar>(infinitesimal_action<Scalar>(a, b, lambda)));
    }
  }
  const Eigen::Index roots = n * (n - 1) / 2;
  Matrix<Scalar> generators(static_cast<Eigen::Index>(images.size()), roots);
  for (std::size_t r = 0; r < images.size(); ++r) generators.row(r) = images[r].transpose();
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return rank(generators);
  } else {
    return rank_gauss<Scalar>(generators);
  }
}

/// Matrix of (x, y) -> lambda([x, y]) on the root vectors, rows and columns
/// in positive_roots order. For roots (a,b), (c,d):
/// lambda([e_ba, e_dc]) = [a == d] lambda(c,b) - [c == b] lambda(a,d).
template <typename Scalar>
Matrix<Scalar> isotropy_form(const LinearForm<Scalar>& lambda) {
  const auto roots = positive_roots(static_cast<int>(lambda.rows()));
  const auto count = static_cast<Eigen::Index>(roots.size());
  Matrix<Scalar> form = Matrix<Scalar>::Zero(count, count);
  for (Eigen::Index r = 0; r < count; ++r) {
    const Cell x = roots[r];
    for (Eigen::Index s = 0; s < count; ++s) {
      const Cell y = roots[s];
      if (x.row == y.col) form(r, s) += lambda(y.row - 1, x.col - 1);
      if (y.row == x.col) form(r, s) -= lambda(x.row - 1, y.col - 1);
    }
  }
  return form;
}

struct PolarizationReport {
  bool isotropic = true;
  std::optional<std::pair<Cell, Cell>> isotropy_witness;
  int codimension = 0;
  int expected_codimension = 0;
  int form_rank = 0;
  bool maximal = true;
  std::optional<Triple> subalgebra_witness;

  bool codimension_ok() const { return codimension == expected_codimension; }
  bool passed() const { return isotropic && codimension_ok() && maximal && !subalgebra_witness; }
};

/// Checks that the span of the root vectors outside M is a polarization at
/// f_{D,xi}: isotropic, of codimension |M|, maximal, and a subalgebra.
PolarizationReport check_polarization(const RookPlacement& d, const ScalarAssignment& xi);

struct RandomSpec {
  std::uint64_t seed = 0;
  int bound = 3;
};

/// Deterministic source of group elements and scalar assignments.
class Sampler {
 public:
  explicit Sampler(RandomSpec spec) : spec_(spec), engine_(spec.seed) {}

  /// Upper-triangular, entries in [-bound, bound] above the diagonal and
  /// in {1..bound} on it (all 1 for Unipotent).
  Matrix<Rational> borel(int n, Scope scope);
  /// Nonzero p/q with |p|, q in {1..bound}.
  ScalarAssignment scalars(const RookPlacement& d);
  Rational nonzero_rational();
  int uniform(int lo, int hi);

 private:
  RandomSpec spec_;
  std::mt19937_64 engine_;
};

Matrix<Rational> sample_borel(int n, RandomSpec spec, Scope scope);

/// lambda(4,2) lambda(2,1) + lambda(4,3) lambda(3,1). Throws WrongBoardSize
/// unless n = 4.
template <typename Scalar>
Scalar closure_quadratic(const LinearForm<Scalar>& lambda) {
  if (lambda.rows() != 4 || lambda.cols() != 4) {
    throw Error(ErrorKind::WrongBoardSize, "polynomial is defined on the 4-board");
  }
  return lambda(3, 1) * lambda(1, 0) + lambda(3, 2) * lambda(2, 0);
}

}  // namespace rooks
