#include "rooks/poset.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <thread>

#include "parallel.hpp"

namespace rooks {

namespace {

void enumerate_from(int n, int col, std::vector<Cell>& current, std::vector<bool>& row_used,
                    std::vector<RookPlacement>& out) {
  if (col >= n) {
    out.push_back(RookPlacement::validate(n, current));
    return;
  }
  enumerate_from(n, col + 1, current, row_used, out);
  for (int row = col + 1; row <= n; ++row) {
    if (row_used[row]) continue;
    row_used[row] = true;
    current.push_back(Cell{row, col});
    enumerate_from(n, col + 1, current, row_used, out);
    current.pop_back();
    row_used[row] = false;
  }
}

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string describe(const CoverMove& move) {
  std::ostringstream os;
  os << to_string(move.kind) << " removes";
  for (const Cell& c : move.removed) os << ' ' << c;
  if (!move.added.empty()) {
    os << " adds";
    for (const Cell& c : move.added) os << ' ' << c;
  }
  return os.str();
}

int expected_size_delta(MoveKind kind) {
  switch (kind) {
    case MoveKind::Remove: return -1;
    case MoveKind::Split: return 1;
    default: return 0;
  }
}

// Leftmost empty column strictly between j and i.
std::optional<int> slide_right_target(const RookPlacement& d, Cell rook) {
  for (int k = rook.col + 1; k < rook.row; ++k) {
    if (!d.col_occupied(k)) return k;
  }
  return std::nullopt;
}

// Largest empty row strictly between j and i.
std::optional<int> slide_up_target(const RookPlacement& d, Cell rook) {
  for (int k = rook.row - 1; k > rook.col; --k) {
    if (!d.row_occupied(k)) return k;
  }
  return std::nullopt;
}

// Every rook strictly below `old_cell` in the root order is also strictly
// below `new_cell`.
bool keeps_dominance(const RookPlacement& d, Cell old_cell, Cell new_cell) {
  return std::all_of(d.begin(), d.end(), [&](Cell pq) {
    return !root_less(pq, old_cell) || root_less(pq, new_cell);
  });
}

// Rows j+1..m all hold rooks. An empty one would give a split strictly
// between D and the slide right to column m.
bool rows_filled(const RookPlacement& d, int from, int to) {
  for (int k = from; k <= to; ++k) {
    if (!d.row_occupied(k)) return false;
  }
  return true;
}

bool cols_filled(const RookPlacement& d, int from, int to) {
  for (int k = from; k <= to; ++k) {
    if (!d.col_occupied(k)) return false;
  }
  return true;
}

bool split_structural(const RookPlacement& d, Cell rook, Cell ab) {
  const auto [alpha, beta] = ab;
  return rook.row > beta && beta >= alpha && alpha > rook.col && !d.row_occupied(alpha) &&
         !d.col_occupied(beta);
}

bool split_admissible(const RookPlacement& d, Cell rook, Cell ab) {
  const auto [alpha, beta] = ab;
  if (!split_structural(d, rook, ab)) return false;
  for (int k = alpha + 1; k < beta; ++k) {
    if (!d.row_occupied(k) || !d.col_occupied(k)) return false;
  }
  if (alpha != beta && (!d.row_occupied(beta) || !d.col_occupied(alpha))) return false;
  const Cell lower{alpha, rook.col};
  const Cell right{rook.row, beta};
  return std::all_of(d.begin(), d.end(), [&](Cell pq) {
    return !root_less(pq, rook) || root_less(pq, lower) || root_less(pq, right);
  });
}

// "R_D(i,j) = a > b = R_D'(i,j)" for the first entry where r exceeds r2.
std::string first_excess(const RankMatrix& r, const RankMatrix& r2) {
  for (int j = 0; j < r.cols(); ++j) {
    for (int i = 0; i < r.rows(); ++i) {
      if (r(i, j) > r2(i, j)) {
        std::ostringstream os;
        os << "R_D(" << i + 1 << ',' << j + 1 << ") = " << r(i, j) << " > " << r2(i, j) << " = R_D'(" << i + 1
           << ',' << j + 1 << ')';
        return os.str();
      }
    }
  }
  return "no entry exceeds";
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Remove: return "Remove";
    case MoveKind::SlideRight: return "SlideRight";
    case MoveKind::SlideUp: return "SlideUp";
    case MoveKind::Exchange: return "Exchange";
    case MoveKind::Split: return "Split";
  }
  return "Unknown";
}

std::vector<RookPlacement> enumerate(int n) {
  if (n < 1 || n > kMaxEnumerationBoard) {
    throw Error(ErrorKind::LimitExceeded,
                "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationBoard));
  }
  std::vector<RookPlacement> out;
  std::vector<Cell> current;
  std::vector<bool> row_used(n + 1, false);
  enumerate_from(n, 1, current, row_used, out);
  std::sort(out.begin(), out.end());
  return out;
}

RemovableRooks removable_rooks(const RookPlacement& d) {
  RemovableRooks out;
  for (const Cell& c : d) {
    const bool minimal = std::none_of(d.begin(), d.end(), [&](Cell o) { return root_less(o, c); });
    if (!minimal) continue;
    out.minimal.push_back(c);
    bool filled = true;
    for (int k = c.col + 1; k < c.row && filled; ++k) {
      filled = d.row_occupied(k) && d.col_occupied(k);
    }
    if (filled) out.removable.push_back(c);
  }
  return out;
}

std::vector<CoverMove> cover_moves(const RookPlacement& d) {
  std::vector<CoverMove> moves;
  auto add = [&](MoveKind kind, std::vector<Cell> removed, std::vector<Cell> added) {
    RookPlacement result = d.replace(removed, added);
    moves.push_back(CoverMove{kind, std::move(removed), std::move(added), std::move(result)});
  };

  for (const Cell& c : removable_rooks(d).removable) add(MoveKind::Remove, {c}, {});

  for (const Cell& rook : d) {
    if (auto m = slide_right_target(d, rook)) {
      const Cell target{rook.row, *m};
      if (rows_filled(d, rook.col + 1, *m) && keeps_dominance(d, rook, target))
        add(MoveKind::SlideRight, {rook}, {target});
    }
    if (auto m = slide_up_target(d, rook)) {
      const Cell target{*m, rook.col};
      if (cols_filled(d, *m, rook.row - 1) && keeps_dominance(d, rook, target))
        add(MoveKind::SlideUp, {rook}, {target});
    }
    for (const Cell& other : d) {
      if (!root_less(rook, other)) continue;
      const bool adjacent = std::none_of(d.begin(), d.end(), [&](Cell pq) {
        return root_less(rook, pq) && root_less(pq, other);
      });
      if (adjacent) {
        add(MoveKind::Exchange, {rook, other},
            {Cell{rook.row, other.col}, Cell{other.row, rook.col}});
      }
    }
    for (int alpha = rook.col + 1; alpha < rook.row; ++alpha) {
      for (int beta = alpha; beta < rook.row; ++beta) {
        if (split_admissible(d, rook, Cell{alpha, beta})) {
          add(MoveKind::Split, {rook}, {Cell{rook.row, beta}, Cell{alpha, rook.col}});
        }
      }
    }
  }

  std::stable_sort(moves.begin(), moves.end(),
                   [](const CoverMove& a, const CoverMove& b) { return a.result < b.result; });
  moves.erase(std::unique(moves.begin(), moves.end(),
                          [](const CoverMove& a, const CoverMove& b) { return a.result == b.result; }),
              moves.end());
  return moves;
}

RookPlacement raw_move(const RookPlacement& d, MoveKind kind, Cell rook, std::optional<Cell> aux) {
  auto undefined = [&](const std::string& why) {
    std::ostringstream msg;
    msg << to_string(kind) << " at " << rook << ": " << why;
    return Error(ErrorKind::UndefinedMove, msg.str(), {rook});
  };
  if (!d.contains(rook)) throw undefined("no rook there");
  switch (kind) {
    case MoveKind::Remove: {
      const Cell removed[] = {rook};
      return d.replace(removed, {});
    }
    case MoveKind::SlideRight: {
      auto m = slide_right_target(d, rook);
      if (!m) throw undefined("no empty column strictly between");
      const Cell removed[] = {rook};
      const Cell added[] = {Cell{rook.row, *m}};
      return d.replace(removed, added);
    }
    case MoveKind::SlideUp: {
      auto m = slide_up_target(d, rook);
      if (!m) throw undefined("no empty row strictly between");
      const Cell removed[] = {rook};
      const Cell added[] = {Cell{*m, rook.col}};
      return d.replace(removed, added);
    }
    case MoveKind::Exchange: {
      if (!aux || !d.contains(*aux) || !root_less(rook, *aux)) {
        throw undefined("partner must be a rook above in the root order");
      }
      const Cell removed[] = {rook, *aux};
      const Cell added[] = {Cell{rook.row, aux->col}, Cell{aux->row, rook.col}};
      return d.replace(removed, added);
    }
    case MoveKind::Split: {
      if (!aux || !split_structural(d, rook, *aux)) {
        throw undefined("need i > beta >= alpha > j with row alpha and column beta empty");
      }
      const Cell removed[] = {rook};
      const Cell added[] = {Cell{rook.row, aux->col}, Cell{aux->row, rook.col}};
      return d.replace(removed, added);
    }
  }
  throw undefined("unknown move");
}

RookPlacement maximal_element(int n) {
  std::vector<Cell> cells;
  for (int k = 1; k <= n / 2; ++k) cells.push_back(Cell{n - k + 1, k});
  return RookPlacement::validate(n, cells);
}

// ---------------------------------------------------------------------------
// PosetIndex

PosetIndex::PosetIndex(int n, unsigned workers) : n_(n) {
  if (n < 1 || n > kMaxIndexBoard) {
    throw Error(ErrorKind::LimitExceeded,
                "poset index supports 1 <= n <= " + std::to_string(kMaxIndexBoard));
  }
  placements_ = enumerate(n);
  const std::size_t count = placements_.size();
  words_ = (count + 63) / 64;

  // Strict lower entries of each rank matrix, packed.
  const std::size_t roots = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> ranks(count * roots);
  for (std::size_t k = 0; k < count; ++k) {
    const RankMatrix r = rank_matrix(placements_[k]);
    std::size_t e = 0;
    for (int j = 0; j < n; ++j) {
      for (int i = j + 1; i < n; ++i) ranks[k * roots + e++] = static_cast<std::uint8_t>(r(i, j));
    }
  }

  below_.assign(count * words_, 0);
  detail::parallel_for(count, workers, [&](std::size_t d) {
    const std::uint8_t* rd = &ranks[d * roots];
    std::uint64_t* row = &below_[d * words_];
    for (std::size_t t = 0; t < count; ++t) {
      if (t == d) continue;
      const std::uint8_t* rt = &ranks[t * roots];
      bool le = true;
      for (std::size_t e = 0; e < roots && le; ++e) le = rt[e] <= rd[e];
      if (le) row[t / 64] |= std::uint64_t{1} << (t % 64);
    }
  });

  // T is a cover of D iff T < D and T is below no S < D.
  covers_.assign(count, {});
  detail::parallel_for(count, workers, [&](std::size_t d) {
    const std::uint64_t* row = &below_[d * words_];
    std::vector<std::uint64_t> shadow(words_, 0);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t s = w * 64 + std::countr_zero(bits);
        const std::uint64_t* srow = &below_[s * words_];
        for (std::size_t v = 0; v < words_; ++v) shadow[v] |= srow[v];
      }
    }
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = row[w] & ~shadow[w]; bits; bits &= bits - 1) {
        covers_[d].push_back(w * 64 + std::countr_zero(bits));
      }
    }
  });
}

std::optional<std::size_t> PosetIndex::index_of(const RookPlacement& d) const {
  auto it = std::lower_bound(placements_.begin(), placements_.end(), d);
  if (it == placements_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - placements_.begin());
}

bool PosetIndex::less(std::size_t a, std::size_t b) const {
  return (below_[b * words_ + a / 64] >> (a % 64)) & 1u;
}

std::vector<RookPlacement> brute_force_lower_covers(const PosetIndex& index, const RookPlacement& d) {
  auto k = index.index_of(d);
  if (!k) throw Error(ErrorKind::NotIndexed, "placement is not in the index", d.rooks());
  std::vector<RookPlacement> out;
  for (std::size_t t : index.lower_covers(*k)) out.push_back(index.placement(t));
  return out;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_covers(int n) {
  const auto start = Clock::now();
  VerificationReport report = verify_covers(PosetIndex(n));
  report.millis = millis_since(start);
  return report;
}

VerificationReport verify_covers(const PosetIndex& index) {
  const auto start = Clock::now();
  VerificationReport report;
  report.suite = "thm33";
  report.n = index.n();

  for (std::size_t k = 0; k < index.size(); ++k) {
    const RookPlacement& d = index.placement(k);
    const std::vector<CoverMove> moves = cover_moves(d);
    std::vector<RookPlacement> from_moves;
    for (const CoverMove& move : moves) {
      const RookPlacement& t = move.result;
      from_moves.push_back(t);
      const int delta = static_cast<int>(t.size()) - static_cast<int>(d.size());
      if (t == d || !leq(t, d) || delta != expected_size_delta(move.kind)) {
        report.failures.push_back({"unsound move: " + describe(move), {d, t}});
      }
    }
    const std::vector<RookPlacement> oracle = brute_force_lower_covers(index, d);
    std::vector<RookPlacement> missing, extra;
    std::set_difference(oracle.begin(), oracle.end(), from_moves.begin(), from_moves.end(),
                        std::back_inserter(missing));
    std::set_difference(from_moves.begin(), from_moves.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(extra));
    for (const RookPlacement& t : missing) {
      report.failures.push_back({"cover not produced by any move", {d, t}});
    }
    for (const RookPlacement& t : extra) {
      report.failures.push_back({"move result is not a cover", {d, t}});
    }
    // Removing a minimal rook outside M(D) never gives a cover.
    const RemovableRooks rr = removable_rooks(d);
    for (const Cell& c : rr.minimal) {
      if (std::find(rr.removable.begin(), rr.removable.end(), c) != rr.removable.end()) continue;
      const Cell removed[] = {c};
      const RookPlacement t = d.replace(removed, {});
      if (std::binary_search(oracle.begin(), oracle.end(), t)) {
        report.failures.push_back({"non-removable minimal rook gives a cover", {d, t}});
      }
    }
    ++report.checked;
  }
  report.millis = millis_since(start);
  return report;
}

VerificationReport order_property_suite(int n, OrderChecks checks) {
  if (n < 1 || n > kMaxPairwiseBoard) {
    throw Error(ErrorKind::LimitExceeded,
                "pairwise sweeps support 1 <= n <= " + std::to_string(kMaxPairwiseBoard));
  }
  const auto start = Clock::now();
  const bool proctor = static_cast<int>(checks) & static_cast<int>(OrderChecks::Proctor);
  const bool kerov = (static_cast<int>(checks) & static_cast<int>(OrderChecks::Kerov)) && n >= 2;
  VerificationReport report;
  report.suite = checks == OrderChecks::Both ? "order" : proctor ? "proctor" : "cor18";
  report.n = n;

  const auto all = enumerate(n);
  std::vector<RankMatrix> ranks;
  std::vector<Permutation> ws, sigmas;
  for (const auto& d : all) {
    ranks.push_back(rank_matrix(d));
    ws.push_back(permutation_of(d));
    if (n >= 2) sigmas.push_back(kerov_involution(d));
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      const bool le = (ranks[a].array() <= ranks[b].array()).all();
      if (proctor && bruhat_leq(ws[a], ws[b]) && !le) {
        report.failures.push_back({"w_D <= w_D' in Bruhat order but D is not <= D'", {all[a], all[b]}});
      }
      if (kerov && le != bruhat_leq(sigmas[a], sigmas[b])) {
        report.failures.push_back({le ? "D <= D' but sigma_D is not <= sigma_D'"
                                      : "sigma_D <= sigma_D' but D is not <= D'",
                                   {all[a], all[b]}});
      }
      ++report.checked;
    }
  }

  if (n == 4) {
    const auto d = RookPlacement::validate(4, {{2, 1}, {3, 2}, {4, 3}});
    const auto d2 = RookPlacement::validate(4, {{3, 1}, {4, 2}});
    const auto w = permutation_of(d), w2 = permutation_of(d2);
    if (proctor && (!leq(d, d2) || bruhat_leq(w, w2) || bruhat_leq(w2, w))) {
      report.failures.push_back({"expected D <= D' with w_D, w_D' Bruhat-incomparable", {d, d2}});
    }
    const auto e = RookPlacement::validate(4, {{3, 2}, {4, 3}});
    const auto e2 = RookPlacement::validate(4, {{2, 1}, {3, 2}});
    if (!leq(e, e2)) {
      report.failures.push_back({"expected D <= D', but " + first_excess(rank_matrix(e), rank_matrix(e2)), {e, e2}});
    }
    if (kerov && !bruhat_leq(kerov_involution(e), kerov_involution(e2))) {
      report.failures.push_back({"expected sigma_D <= sigma_D'", {e, e2}});
    }
    report.checked += 2;
  }
  report.millis = millis_since(start);
  return report;
}

std::string rook_label(const RookPlacement& d) {
  if (d.is_empty()) return "{}";
  std::ostringstream os;
  for (const Cell& c : d) os << c;
  return os.str();
}

std::string hasse_dot(int n) { return hasse_dot(PosetIndex(n)); }

std::string hasse_dot(const PosetIndex& index) {
  std::ostringstream os;
  os << "digraph hasse {\n  node [shape=box];\n";
  for (const auto& d : index.placements()) os << "  \"" << rook_label(d) << "\";\n";
  for (std::size_t k = 0; k < index.size(); ++k) {
    for (std::size_t t : index.lower_covers(k)) {
      os << "  \"" << rook_label(index.placement(k)) << "\" -> \"" << rook_label(index.placement(t))
         << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace rooks
