#pragma once

#include "gtmono/scalars.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace gtmono {

/// Sparse vector over Q[i] keyed by coordinate id; zero entries are absent.
using SparseVector = std::map<std::size_t, GaussianRational>;

namespace detail {

struct EliminationRow {
  SparseVector entries; // unknown index -> coefficient
  GaussianRational rhs;
};

/// Gauss-Jordan elimination on sparse rows; pivots are chosen column by
/// column among the shortest candidate rows.
struct GaussJordan {
  std::vector<EliminationRow> rows;
  std::vector<std::optional<std::size_t>> pivot_row_of_col;
  std::size_t rank = 0;

  void run(std::size_t unknowns) {
    pivot_row_of_col.assign(unknowns, std::nullopt);
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < unknowns; ++col) {
      std::optional<std::size_t> best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r] || !rows[r].entries.contains(col))
          continue;
        if (!best || rows[r].entries.size() < rows[*best].entries.size())
          best = r;
      }
      if (!best)
        continue;
      used[*best] = true;
      pivot_row_of_col[col] = *best;
      ++rank;
      EliminationRow &pivot = rows[*best];
      GaussianRational inv = pivot.entries.at(col).inverse();
      for (auto &[k, v] : pivot.entries)
        v *= inv;
      pivot.rhs *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == *best)
          continue;
        auto it = rows[r].entries.find(col);
        if (it == rows[r].entries.end())
          continue;
        GaussianRational factor = it->second;
        for (const auto &[k, v] : pivot.entries) {
          auto [slot, inserted] = rows[r].entries.try_emplace(k);
          slot->second -= factor * v;
          if (slot->second.is_zero())
            rows[r].entries.erase(slot);
        }
        rows[r].rhs -= factor * pivot.rhs;
      }
    }
  }
};

inline detail::GaussJordan build_system(const std::vector<SparseVector> &columns,
                                        const SparseVector *rhs) {
  std::map<std::size_t, std::size_t> row_of_coord;
  GaussJordan gj;
  auto row_for = [&](std::size_t coord) -> EliminationRow & {
    auto [it, inserted] = row_of_coord.try_emplace(coord, gj.rows.size());
    if (inserted)
      gj.rows.emplace_back();
    return gj.rows[it->second];
  };
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto &[coord, v] : columns[c])
      if (!v.is_zero())
        row_for(coord).entries.emplace(c, v);
  if (rhs)
    for (const auto &[coord, v] : *rhs)
      if (!v.is_zero())
        row_for(coord).rhs = v;
  return gj;
}

} // namespace detail

/// Finds x with sum_c x[c] * columns[c] == rhs exactly. Free unknowns are set
/// to zero; returns nullopt when rhs is outside the column span.
inline std::optional<std::vector<GaussianRational>>
solve_exact(const std::vector<SparseVector> &columns, const SparseVector &rhs) {
  auto gj = detail::build_system(columns, &rhs);
  gj.run(columns.size());
  // Rows that never became pivots are empty after elimination.
  for (const auto &row : gj.rows)
    if (row.entries.empty() && !row.rhs.is_zero())
      return std::nullopt;
  std::vector<GaussianRational> x(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (gj.pivot_row_of_col[c])
      x[c] = gj.rows[*gj.pivot_row_of_col[c]].rhs;
  return x;
}

/// Rank of the span of the given vectors.
inline std::size_t rank_exact(const std::vector<SparseVector> &vectors) {
  auto gj = detail::build_system(vectors, nullptr);
  gj.run(vectors.size());
  return gj.rank;
}

} // namespace gtmono
