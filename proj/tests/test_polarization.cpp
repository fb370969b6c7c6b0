#include <doctest.h>

#include "oracles.hpp"
#include "rooks/polarization.hpp"
#include "rooks/poset.hpp"

using namespace rooks;

namespace {

RookPlacement eight_board() { return RookPlacement::validate(8, {{3, 1}, {6, 2}, {7, 3}, {5, 4}, {8, 6}}); }
RookPlacement long_chain() { return RookPlacement::validate(6, {{3, 1}, {5, 2}, {4, 3}, {6, 4}}); }

// M recomputed from its defining recursion with plain loops.
CellSet naive_m(const RookPlacement& d) {
  CellSet m;
  for (const Cell& rook : d) {
    for (int q = rook.col + 1; q < rook.row; ++q) {
      if (!m.contains(Cell{q, rook.col})) m.insert(Cell{rook.row, q});
    }
  }
  return m;
}

}  // namespace

TEST_CASE("M and P of the worked example") {
  const MPData mp = mp_sets(eight_board());
  CHECK(mp.per_rook.at(1).m == CellSet{{3, 2}});
  CHECK(mp.per_rook.at(2).m == CellSet{{6, 4}, {6, 5}});
  CHECK(mp.per_rook.at(3).m == CellSet{{7, 4}, {7, 5}, {7, 6}});
  CHECK(mp.per_rook.at(4).m.empty());
  CHECK(mp.per_rook.at(6).m.empty());
  CHECK(mp.per_rook.at(1).p == CellSet{{2, 1}});
  CHECK(mp.per_rook.at(2).p == CellSet{{4, 2}, {5, 2}});
  CHECK(mp.per_rook.at(3).p == CellSet{{4, 3}, {5, 3}, {6, 3}});
  CHECK(mp.per_rook.at(4).p.empty());
  CHECK(mp.m.size() == 6);
  CHECK(mp.p.size() == 6);
}

TEST_CASE("M and P small cases") {
  const MPData e = mp_sets(RookPlacement::empty(5));
  CHECK(e.m.empty());
  CHECK(e.p.empty());
  CHECK(e.per_rook.empty());

  const MPData r = mp_sets(long_chain());
  CHECK(r.m == CellSet{{3, 2}, {5, 4}});
  CHECK(r.p == CellSet{{2, 1}, {4, 2}});
}

TEST_CASE("M and P invariants") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate(n)) {
      const MPData mp = mp_sets(d);
      REQUIRE(mp.m == naive_m(d));
      CHECK(mp.m.size() == mp.p.size());
      for (const auto& [col, sets] : mp.per_rook) {
        CHECK(sets.m.size() == sets.p.size());
        for (const Cell& c : sets.m) {
          CHECK(d.in_col(col)->row == c.row);
          CHECK(sets.p.contains(Cell{c.col, col}));
        }
      }
      for (const Cell& c : mp.m) {
        CHECK_FALSE(mp.p.contains(c));
        CHECK_FALSE(d.contains(c));
      }
    }
  }
}

TEST_CASE("polarization complement") {
  CHECK(polarization_complement(RookPlacement::empty(4)).size() == 6);
  CHECK(polarization_complement(eight_board()).size() == 22);
  CHECK(polarization_complement(long_chain()).size() == 13);
  for (const Cell& c : mp_sets(eight_board()).m) CHECK_FALSE(polarization_complement(eight_board()).contains(c));
}

TEST_CASE("positive roots") {
  const auto roots = positive_roots(4);
  REQUIRE(roots.size() == 6);
  CHECK(roots.front() == Cell{2, 1});
  CHECK(roots[2] == Cell{4, 1});
  CHECK(roots.back() == Cell{4, 3});
  CHECK(std::is_sorted(roots.begin(), roots.end()));
}

TEST_CASE("subalgebra") {
  CHECK_FALSE(subalgebra_witness(eight_board()).has_value());
  CHECK_FALSE(subalgebra_witness(RookPlacement::empty(3)).has_value());
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate(n)) REQUIRE_FALSE(subalgebra_witness(d).has_value());
  }
}

TEST_CASE("dimensions") {
  const Dimensions r = dimensions(long_chain());
  CHECK(r.m_size == 2);
  CHECK(r.dim_theta == 4);
  CHECK(r.length == 10);
  CHECK(r.length - r.d_size == 6);

  const Dimensions e = dimensions(RookPlacement::empty(4));
  CHECK(e.m_size == 0);
  CHECK(e.dim_theta == 0);
  CHECK(e.dim_omega == 0);
  CHECK(e.length == 0);
  CHECK(e.d_size == 0);

  const Dimensions x = dimensions(eight_board());
  CHECK(x.m_size == 6);
  CHECK(x.dim_theta == 12);
  CHECK(x.dim_omega == 17);
  CHECK(x.length == 17);
}

TEST_CASE("length bounds and orthogonal sharpness") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate(n)) {
      const Dimensions dims = dimensions(d);
      CHECK(dims.dim_omega <= dims.length);
      CHECK(dims.length == oracle::inversions(permutation_of(d).one_line()));
      bool orthogonal = true;
      for (const auto& c : chains(d).chains) orthogonal = orthogonal && c.size() <= 2;
      if (orthogonal) REQUIRE(dims.dim_theta == dims.length - dims.d_size);
    }
  }
}
