#include "vphi/homology.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace vphi {

std::vector<BigInt> invariant_factors_dense(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> out;
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // smallest nonzero entry of the remaining block
    std::size_t pi = r;
    std::size_t pj = c;
    BigInt best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a[i][j] != 0 && (pi == r || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // move the smallest leftover of row t / column t to the pivot
        std::size_t bi = t;
        std::size_t bj = t;
        BigInt m = abs(a[t][t]);
        for (std::size_t i = t + 1; i < r; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < m) {
            m = abs(a[i][t]);
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < m) {
            m = abs(a[t][j]);
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // divisibility of the rest by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < c; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    out.push_back(abs(a[t][t]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Overflow {};

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow{};
  }
  return static_cast<std::int64_t>(v);
}

using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::vector<BigInt> to_dense(const std::vector<Row>& rows, std::size_t cols) {
  // only the columns still in use
  std::vector<std::int64_t> slot(cols, -1);
  std::size_t width = 0;
  for (const auto& row : rows)
    for (auto [c, v] : row)
      if (slot[c] < 0) slot[c] = static_cast<std::int64_t>(width++);
  std::vector<std::vector<BigInt>> a;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<BigInt> d(width);
    for (auto [c, v] : row) d[static_cast<std::size_t>(slot[c])] = v;
    a.push_back(std::move(d));
  }
  return invariant_factors_dense(std::move(a));
}

std::vector<BigInt> eliminate(const SparseMatrix& m) {
  std::vector<Row> rows = m.entries;
  rows.resize(m.rows);
  for (auto& row : rows) std::sort(row.begin(), row.end());
  std::vector<std::unordered_set<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (auto [c, v] : rows[r]) col_rows[c].insert(r);

  std::vector<BigInt> units;
  while (true) {
    std::size_t best_r = rows.size();
    std::size_t best_k = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r) {
      for (std::size_t k = 0; k < rows[r].size(); ++k) {
        auto [c, v] = rows[r][k];
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_k = k;
          if (cost == 0) break;
        }
      }
    }
    if (best_r == rows.size()) break;
    const Row pivot = rows[best_r];
    const auto [pc, pv] = pivot[best_k];
    units.push_back(1);
    std::vector<std::uint32_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (auto r2 : targets) {
      if (r2 == best_r) continue;
      Row& row = rows[r2];
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(pc, std::int64_t{0}),
                                 [](const auto& x, const auto& y) { return x.first < y.first; });
      const std::int64_t f = checked(static_cast<__int128>(it->second) * pv);
      Row merged;
      merged.reserve(row.size() + pivot.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          merged.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          auto v = checked(-static_cast<__int128>(f) * pivot[j].second);
          merged.emplace_back(pivot[j].first, v);
          col_rows[pivot[j].first].insert(r2);
          ++j;
        } else {
          auto v = checked(static_cast<__int128>(row[i].second) -
                           static_cast<__int128>(f) * pivot[j].second);
          if (v != 0) {
            merged.emplace_back(row[i].first, v);
          } else {
            col_rows[row[i].first].erase(r2);
          }
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
    }
    for (auto [c, v] : pivot) col_rows[c].erase(static_cast<std::uint32_t>(best_r));
    rows[best_r].clear();
  }
  auto rest = to_dense(rows, m.cols);
  units.insert(units.end(), rest.begin(), rest.end());
  std::sort(units.begin(), units.end());
  return units;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SparseMatrix& m) {
  try {
    return eliminate(m);
  } catch (const Overflow&) {
    std::vector<Row> rows = m.entries;
    rows.resize(m.rows);
    return to_dense(rows, m.cols);
  }
}

}  // namespace vphi
