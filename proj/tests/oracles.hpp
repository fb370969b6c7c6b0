#pragma once

// Independent reference routes used only by the tests. Each one computes
// its value from the definition, by a different path than the library.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rooks/board.hpp"

namespace oracle {

using rooks::Cell;

/// Direct count of rooks weakly South-West of each strict lower box.
inline std::vector<std::vector<int>> rank_table(int n, const std::vector<Cell>& rooks) {
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      for (const Cell& c : rooks) r[i][j] += (c.row >= i && c.col <= j) ? 1 : 0;
    }
  }
  return r;
}

inline int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) count += w[a] > w[b];
  }
  return count;
}

/// Every non-attacking subset of the strict lower cells, by bitmask.
inline std::vector<std::vector<Cell>> placements(int n) {
  std::vector<Cell> cells;
  for (int j = 1; j <= n; ++j) {
    for (int i = j + 1; i <= n; ++i) cells.push_back(Cell{i, j});
  }
  std::vector<std::vector<Cell>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    std::vector<Cell> pick;
    std::vector<bool> rows(n + 1, false), cols(n + 1, false);
    bool ok = true;
    for (std::size_t k = 0; k < cells.size() && ok; ++k) {
      if (!(mask >> k & 1)) continue;
      const Cell c = cells[k];
      ok = !rows[c.row] && !cols[c.col];
      rows[c.row] = cols[c.col] = true;
      pick.push_back(c);
    }
    if (ok) out.push_back(pick);
  }
  return out;
}

/// Tableau criterion: v <= w iff for every k the sorted first k values of
/// v are entrywise at most those of w.
inline bool bruhat_leq(const std::vector<int>& v, const std::vector<int>& w) {
  for (std::size_t k = 1; k <= v.size(); ++k) {
    std::vector<int> a(v.begin(), v.begin() + k), b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t x = 0; x < k; ++x) {
      if (a[x] > b[x]) return false;
    }
  }
  return true;
}

/// Rank over Z/p by Gauss elimination, p = 2^31 - 1. Agrees with the
/// rational rank except on the (rare) matrices whose minors p divides.
inline int rank_mod_p(std::vector<std::vector<long long>> a) {
  constexpr long long p = 2147483647;
  auto mod = [](long long x) { return ((x % p) + p) % p; };
  auto power = [&](long long b, long long e) {
    long long r = 1;
    b = mod(b);
    for (; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  for (auto& row : a) {
    for (auto& x : row) x = mod(x);
  }
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const long long inv = power(a[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const long long f = a[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = mod(a[r][k] - f * a[rank][k] % p);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace oracle
