#pragma once

// Column-set preserving bijections between reverse SSYT, atom fillings and
// quasi-key tableaux with fixed first column.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polybasis/composition.hpp"
#include "polybasis/skyline.hpp"
#include "polybasis/tableau_models.hpp"

namespace polybasis {

// Column c (0-based here) holds the entries of column c + 1, ascending.
using ColumnSets = std::vector<std::vector<int>>;

inline ColumnSets column_sets(const SkylineFilling& f) {
  ColumnSets out(static_cast<std::size_t>(f.width()));
  for (const auto& row : f.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  for (auto& col : out) std::sort(col.begin(), col.end());
  return out;
}

inline ColumnSets column_sets(const ReverseSSYT& t) {
  ColumnSets out(static_cast<std::size_t>(t.width()));
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
  for (auto& col : out) std::sort(col.begin(), col.end());
  return out;
}

// One row of the output filling: its row index and its entries left to right.
struct Run {
  int row;
  std::vector<int> entries;

  friend bool operator==(const Run&, const Run&) = default;
};

using RunDecomposition = std::vector<Run>;

namespace detail {

inline std::size_t resolve_rows(const ReverseSSYT& V, std::size_t n) {
  const std::size_t need = static_cast<std::size_t>(V.max_entry());
  if (n == 0) return need;
  if (n < need) throw std::invalid_argument("row count smaller than the largest entry");
  return n;
}

inline SkylineFilling assemble(const RunDecomposition& runs, std::size_t n) {
  std::vector<std::vector<int>> rows(n);
  for (const auto& run : runs) {
    auto& row = rows.at(static_cast<std::size_t>(run.row - 1));
    if (!row.empty()) throw std::logic_error("two runs claim the same row");
    row = run.entries;
  }
  std::vector<int> shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return SkylineFilling(WeakComposition(std::move(shape)), std::move(rows));
}

// Column sets of V as mutable descending lists.
inline std::vector<std::vector<int>> working_columns(const ReverseSSYT& V) {
  auto cols = column_sets(V);
  for (auto& col : cols) std::sort(col.rbegin(), col.rend());
  return cols;
}

inline void erase_one(std::vector<int>& col, int v) { col.erase(std::find(col.begin(), col.end(), v)); }

}  // namespace detail

// Entry i of the first column goes to row i; each later column places its
// entries largest first, each in the lowest row that keeps rows weakly
// decreasing.
inline SkylineFilling column_fill(const ReverseSSYT& V, std::size_t n = 0) {
  n = detail::resolve_rows(V, n);
  std::vector<std::vector<int>> rows(n);
  const auto cols = detail::working_columns(V);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int v : cols[c]) {
      if (c == 0) {
        rows[static_cast<std::size_t>(v - 1)].push_back(v);
        continue;
      }
      bool placed = false;
      for (auto& row : rows)
        if (row.size() == c && row.back() >= v) {
          row.push_back(v);
          placed = true;
          break;
        }
      if (!placed) throw std::logic_error("column_fill: no admissible row");
    }
  }
  std::vector<int> shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return SkylineFilling(WeakComposition(std::move(shape)), std::move(rows));
}

// Runs of the left row-filling: start at the smallest first-column entry,
// then take the largest entry of each next column weakly below the previous.
inline RunDecomposition left_runs(const ReverseSSYT& V) {
  auto cols = detail::working_columns(V);
  RunDecomposition runs;
  while (!cols.empty() && !cols[0].empty()) {
    Run run{cols[0].back(), {}};
    int prev = run.row;
    run.entries.push_back(prev);
    detail::erase_one(cols[0], prev);
    for (std::size_t c = 1; c < cols.size(); ++c) {
      auto it = std::find_if(cols[c].begin(), cols[c].end(), [prev](int v) { return v <= prev; });
      if (it == cols[c].end()) break;
      prev = *it;
      run.entries.push_back(prev);
      cols[c].erase(it);
    }
    runs.push_back(std::move(run));
  }
  for (const auto& col : cols)
    if (!col.empty()) throw std::logic_error("left row-filling left entries unused");
  return runs;
}

inline SkylineFilling left_row_fill(const ReverseSSYT& V, std::size_t n = 0) {
  return detail::assemble(left_runs(V), detail::resolve_rows(V, n));
}

// Runs of the right row-filling: start at the smallest entry of the
// rightmost nonempty column, then take the smallest entry of each column to
// the left weakly above the previous; the first-column entry is the row.
inline RunDecomposition right_runs(const ReverseSSYT& V) {
  auto cols = detail::working_columns(V);
  RunDecomposition runs;
  while (true) {
    std::size_t k = cols.size();
    while (k > 0 && cols[k - 1].empty()) --k;
    if (k == 0) break;
    std::vector<int> picked;
    int prev = cols[k - 1].back();
    picked.push_back(prev);
    detail::erase_one(cols[k - 1], prev);
    for (std::size_t c = k - 1; c-- > 0;) {
      // Columns are descending, so scan from the small end.
      auto it = std::find_if(cols[c].rbegin(), cols[c].rend(), [prev](int v) { return v >= prev; });
      if (it == cols[c].rend()) throw std::logic_error("right row-filling: run does not reach the first column");
      prev = *it;
      picked.push_back(prev);
      cols[c].erase(std::next(it).base());
    }
    std::reverse(picked.begin(), picked.end());
    runs.push_back({picked.front(), std::move(picked)});
  }
  return runs;
}

// The map psi into quasi-key tableaux with first column equal to row index.
inline SkylineFilling right_row_fill(const ReverseSSYT& V, std::size_t n = 0) {
  return detail::assemble(right_runs(V), detail::resolve_rows(V, n));
}

// Top-justify and sort each column decreasingly.
inline ReverseSSYT phi(const SkylineFilling& T) {
  auto cols = column_sets(T);
  std::vector<std::vector<int>> rows;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::sort(cols[c].rbegin(), cols[c].rend());
    for (std::size_t r = 0; r < cols[c].size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(cols[c][r]);
    }
  }
  return ReverseSSYT(std::move(rows));
}

}  // namespace polybasis
