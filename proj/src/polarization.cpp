#include "rooks/polarization.hpp"

#include <sstream>

namespace rooks {

std::vector<Cell> positive_roots(int n) {
  std::vector<Cell> roots;
  roots.reserve(n * (n - 1) / 2);
  for (int j = 1; j <= n; ++j) {
    for (int i = j + 1; i <= n; ++i) roots.push_back(Cell{i, j});
  }
  return roots;
}

MPData mp_sets(const RookPlacement& d) {
  MPData out;
  // Rooks arrive in ascending column order, so `out.m` only ever holds
  // the cells claimed by earlier rooks when it is consulted.
  for (const Cell& rook : d) {
    MPData::RookSets sets;
    for (int q = rook.col + 1; q < rook.row; ++q) {
      if (out.m.contains(Cell{q, rook.col})) continue;
      sets.m.insert(Cell{rook.row, q});
      sets.p.insert(Cell{q, rook.col});
    }
    out.m.insert(sets.m.begin(), sets.m.end());
    out.p.insert(sets.p.begin(), sets.p.end());
    out.per_rook.emplace(rook.col, std::move(sets));
  }
  return out;
}

CellSet polarization_complement(const RookPlacement& d) {
  const MPData mp = mp_sets(d);
  CellSet out;
  for (const Cell& c : positive_roots(d.n())) {
    if (!mp.m.contains(c)) out.insert(c);
  }
  return out;
}

std::optional<Triple> subalgebra_witness(const RookPlacement& d) {
  const MPData mp = mp_sets(d);
  const int n = d.n();
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      for (int i = k + 1; i <= n; ++i) {
        if (!mp.m.contains(Cell{i, k}) && !mp.m.contains(Cell{k, j}) && mp.m.contains(Cell{i, j})) {
          return Triple{i, k, j};
        }
      }
    }
  }
  return std::nullopt;
}

Dimensions dimensions(const RookPlacement& d) {
  Dimensions dims;
  dims.m_size = static_cast<int>(mp_sets(d).m.size());
  dims.d_size = static_cast<int>(d.size());
  dims.dim_theta = 2 * dims.m_size;
  dims.dim_omega = dims.dim_theta + dims.d_size;
  dims.length = inversions(permutation_of(d));
  if (dims.dim_theta > dims.length - dims.d_size || dims.dim_omega > dims.length) {
    std::ostringstream msg;
    msg << "2|M| = " << dims.dim_theta << " exceeds l(w) - |D| = " << dims.length - dims.d_size
        << " for " << d;
    throw Error(ErrorKind::BoundViolation, msg.str(), d.rooks());
  }
  return dims;
}

}  // namespace rooks
