#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rooks/exactlin.hpp"
#include "rooks/poset.hpp"

using namespace rooks;

namespace {

RookPlacement eight_board() { return RookPlacement::validate(8, {{3, 1}, {6, 2}, {7, 3}, {5, 4}, {8, 6}}); }
RookPlacement long_chain() { return RookPlacement::validate(6, {{3, 1}, {5, 2}, {4, 3}, {6, 4}}); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

RationalMatrix identity(int n) { return RationalMatrix::Identity(n, n); }

}  // namespace

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  for (const char* bad : {"", "1/0", "x", "1/2/3", "3/"}) {
    CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::Parse);
  }
  for (int p = -7; p <= 7; ++p) {
    for (int q = 1; q <= 5; ++q) CHECK(parse_rational(to_string(Rational(p, q))) == Rational(p, q));
  }
}

TEST_CASE("rank routes agree on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 7), entry(-3, 3), sparse(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = size(rng), cols = size(rng);
    Matrix<Rational> q(rows, cols);
    Matrix<Integer> z(rows, cols);
    std::vector<std::vector<long long>> raw(rows, std::vector<long long>(cols));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const int v = sparse(rng) ? entry(rng) : 0;
        raw[r][c] = v;
        z(r, c) = v;
        q(r, c) = Rational(v, 1 + (r + c) % 3);
      }
    }
    // scaling row r by a nonzero constant keeps the rank
    Matrix<Rational> unscaled = q;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) unscaled(r, c) = Rational(raw[r][c]);
    }
    const int expected = oracle::rank_mod_p(raw);
    CHECK(rank_bareiss(z) == expected);
    CHECK(rank_gauss<Rational>(unscaled) == expected);
    CHECK(rank(unscaled) == expected);
    CHECK(rank_gauss<Rational>(q) == rank(q));
  }
}

TEST_CASE("rank of structured matrices") {
  CHECK(rank(Matrix<Rational>::Zero(3, 4)) == 0);
  CHECK(rank(identity(5)) == 5);
  Matrix<Rational> m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(3, 2), 1;
  CHECK(rank(m) == 1);
}

TEST_CASE("f_form") {
  const LinearForm<Rational> f = f_form(eight_board());
  int nonzero = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) nonzero += f(i, j) != 0;
  }
  CHECK(nonzero == 5);
  for (const Cell& c : eight_board()) CHECK(f(c.row - 1, c.col - 1) == 1);
  CHECK(f_form(RookPlacement::empty(4)).isZero());

  const auto d = RookPlacement::validate(4, {{3, 2}});
  const LinearForm<Rational> g = f_form(d, ScalarAssignment(d, {{{3, 2}, Rational(5, 2)}}));
  CHECK(g(2, 1) == Rational(5, 2));
  CHECK(is_strictly_lower(g));
}

TEST_CASE("upper triangular inverse") {
  Sampler sampler({.seed = 5, .bound = 3});
  for (int k = 0; k < 20; ++k) {
    const auto b = sampler.borel(5, Scope::Borel);
    CHECK(b * upper_triangular_inverse(b) == identity(5));
  }
  RationalMatrix singular = identity(3);
  singular(1, 1) = 0;
  CHECK(kind_of([&] { upper_triangular_inverse(singular); }) == ErrorKind::NotInvertible);
  RationalMatrix lower = identity(3);
  lower(2, 0) = 1;
  CHECK(kind_of([&] { upper_triangular_inverse(lower); }) == ErrorKind::NotUpperTriangular);
  CHECK(kind_of([] { coadjoint(identity(3), f_form(RookPlacement::empty(4))); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("coadjoint action") {
  const RookPlacement d = eight_board();
  const LinearForm<Rational> f = f_form(d);
  CHECK(coadjoint(identity(8), f) == f);

  const ScalarAssignment xi(d, {{{3, 1}, 2}, {{6, 2}, 3}, {{7, 3}, 5}, {{5, 4}, 7}, {{8, 6}, 11}});
  const RationalMatrix t = diagonal_normalizer(d, xi).asDiagonal();
  CHECK(coadjoint(t, f_form(d, xi)) == f);
}

TEST_CASE("coadjoint action is a group action") {
  Sampler sampler({.seed = 7, .bound = 3});
  const LinearForm<Rational> lambda = f_form(RookPlacement::validate(5, {{3, 1}, {5, 2}, {4, 3}}));
  for (int k = 0; k < 50; ++k) {
    const auto b1 = sampler.borel(5, Scope::Borel);
    const auto b2 = sampler.borel(5, Scope::Borel);
    REQUIRE(coadjoint<Rational>(b1 * b2, lambda) == coadjoint(b1, coadjoint(b2, lambda)));
  }
}

TEST_CASE("rank profile") {
  CHECK(rank_profile(f_form(eight_board())) == rank_matrix(eight_board()));
  CHECK(rank_profile(f_form(RookPlacement::empty(5))).isZero());
  Sampler sampler({.seed = 1, .bound = 3});
  for (const auto& d : enumerate(4)) {
    for (int k = 0; k < 10; ++k) {
      const auto b = sampler.borel(4, Scope::Borel);
      REQUIRE(rank_profile(coadjoint(b, f_form(d, sampler.scalars(d)))) == rank_matrix(d));
    }
  }
}

TEST_CASE("tangent dimensions") {
  const LinearForm<Rational> f = f_form(long_chain());
  CHECK(tangent_dim(f, Scope::Unipotent) == 4);
  CHECK(tangent_dim(f, Scope::Borel) == 8);
  CHECK(tangent_dim(f_form(RookPlacement::empty(4)), Scope::Unipotent) == 0);
  CHECK(tangent_dim(f_form(RookPlacement::empty(4)), Scope::Borel) == 0);
  CHECK(tangent_dim(f_form(eight_board()), Scope::Borel) == 17);
}

TEST_CASE("isotropy form") {
  CHECK(isotropy_form(f_form(RookPlacement::empty(4))).isZero());
  const Matrix<Rational> form = isotropy_form(f_form(RookPlacement::validate(3, {{3, 1}})));
  CHECK(rank(form) == 2);
  CHECK(form == Matrix<Rational>(-form.transpose()));
  // roots in order (2,1), (3,1), (3,2): only (2,1) and (3,2) pair up
  CHECK(form(0, 2) != 0);
  CHECK(form(0, 1) == 0);
  CHECK(form(1, 2) == 0);
}

TEST_CASE("polarization check") {
  const PolarizationReport x = check_polarization(eight_board(), ScalarAssignment::unit(eight_board()));
  CHECK(x.passed());
  CHECK(x.codimension == 6);

  const auto e = RookPlacement::empty(4);
  const PolarizationReport empty = check_polarization(e, ScalarAssignment::unit(e));
  CHECK(empty.passed());
  CHECK(empty.codimension == 0);

  const RookPlacement d = long_chain();
  const ScalarAssignment xi(d, {{{3, 1}, 2}, {{5, 2}, 3}, {{4, 3}, 5}, {{6, 4}, 7}});
  const PolarizationReport r = check_polarization(d, xi);
  CHECK(r.passed());
  CHECK(r.codimension == 2);
  CHECK(r.form_rank == 4);
}

TEST_CASE("borel samples") {
  const auto u = sample_borel(2, {.seed = 1, .bound = 1}, Scope::Unipotent);
  CHECK(u(0, 0) == 1);
  CHECK(u(1, 1) == 1);
  CHECK(u(1, 0) == 0);
  CHECK(abs(u(0, 1)) <= 1);
  CHECK(sample_borel(5, {.seed = 9}, Scope::Borel) == sample_borel(5, {.seed = 9}, Scope::Borel));

  Sampler sampler({.seed = 2, .bound = 3});
  for (int k = 0; k < 1000; ++k) {
    const auto b = sampler.borel(4, Scope::Borel);
    for (int i = 0; i < 4; ++i) {
      REQUIRE(b(i, i) != 0);
      for (int j = 0; j < i; ++j) REQUIRE(b(i, j) == 0);
    }
  }
}

TEST_CASE("the quadratic on the 4-board") {
  const auto d2 = RookPlacement::validate(4, {{2, 1}, {3, 2}});
  CHECK(closure_quadratic(f_form(d2)) == 0);
  CHECK(closure_quadratic(f_form(RookPlacement::validate(4, {{4, 2}, {2, 1}}))) == 1);
  Sampler sampler({.seed = 11, .bound = 3});
  for (int k = 0; k < 100; ++k) {
    REQUIRE(closure_quadratic(coadjoint(sampler.borel(4, Scope::Borel), f_form(d2))) == 0);
  }
  CHECK(kind_of([] { closure_quadratic(f_form(RookPlacement::empty(5))); }) == ErrorKind::WrongBoardSize);
}
