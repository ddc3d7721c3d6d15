#pragma once

// Semi-skyline fillings and quasi-key tableaux, reverse semistandard Young
// tableaux, and the two destandardization maps.

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polybasis/composition.hpp"
#include "polybasis/skyline.hpp"

namespace polybasis {

enum class Model { ASSF, FSSF, MSSF, LSSF, QSSF, qKT, qKT1, QqKT };

inline constexpr std::array<Model, 8> kAllModels = {Model::ASSF, Model::FSSF, Model::MSSF, Model::LSSF,
                                                    Model::QSSF, Model::qKT,  Model::qKT1, Model::QqKT};

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::ASSF: return "ASSF";
    case Model::FSSF: return "FSSF";
    case Model::MSSF: return "MSSF";
    case Model::LSSF: return "LSSF";
    case Model::QSSF: return "QSSF";
    case Model::qKT: return "qKT";
    case Model::qKT1: return "qKT1";
    case Model::QqKT: return "QqKT";
  }
  return "?";
}

inline Model parse_model(std::string_view name) {
  for (Model m : kAllModels)
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown model id: " + std::string(name));
}

inline bool is_quasi_key_model(Model m) { return m == Model::qKT || m == Model::qKT1 || m == Model::QqKT; }

// Whether the model pins every first-column entry to its row index.
inline bool fixes_first_column(Model m) { return m == Model::ASSF || m == Model::LSSF || m == Model::qKT1; }

namespace detail {

inline bool rows_weakly_decrease(const SkylineFilling& f) {
  for (const auto& row : f.rows())
    if (!std::is_sorted(row.rbegin(), row.rend())) return false;
  return true;
}

inline bool entries_bounded_by_row(const SkylineFilling& f) {
  for (std::size_t r = 0; r < f.nrows(); ++r)
    for (int v : f.rows()[r])
      if (v > static_cast<int>(r + 1)) return false;
  return true;
}

inline bool columns_distinct(const SkylineFilling& f) {
  const int w = f.width();
  std::vector<int> seen;
  for (int c = 1; c <= w; ++c) {
    seen.clear();
    for (std::size_t r = 1; r <= f.nrows(); ++r)
      if (f.shape()[r - 1] >= c) seen.push_back(f.at(static_cast<int>(r), c));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

inline bool first_column_is_row_index(const SkylineFilling& f) {
  for (std::size_t r = 1; r <= f.nrows(); ++r)
    if (f.shape()[r - 1] > 0 && f.at(static_cast<int>(r), 1) != static_cast<int>(r)) return false;
  return true;
}

// Occupied rows R < R' have first entries e(R,1) < e(R',1).
inline bool first_column_increases_upward(const SkylineFilling& f) {
  int prev = 0;
  for (std::size_t r = 1; r <= f.nrows(); ++r) {
    if (f.shape()[r - 1] == 0) continue;
    const int v = f.at(static_cast<int>(r), 1);
    if (v <= prev) return false;
    prev = v;
  }
  return true;
}

// Every box of a higher row holds a strictly larger entry than every box of
// a lower row.
inline bool higher_rows_strictly_larger(const SkylineFilling& f) {
  int prev_max = 0;
  for (const auto& row : f.rows()) {
    if (row.empty()) continue;
    if (*std::min_element(row.begin(), row.end()) <= prev_max) return false;
    prev_max = *std::max_element(row.begin(), row.end());
  }
  return true;
}

inline bool rows_constant(const SkylineFilling& f) {
  for (const auto& row : f.rows())
    if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) != row.end()) return false;
  return true;
}

// Quasi-key condition (3): an entry i above an entry k in the same column with
// i < k forces a box right of k holding an entry larger than i.
inline bool qkt_condition3(const SkylineFilling& f) {
  const int n = static_cast<int>(f.nrows());
  for (int lo = 1; lo <= n; ++lo)
    for (int c = 1; c <= f.shape()[lo - 1]; ++c) {
      const int k = f.at(lo, c);
      for (int hi = lo + 1; hi <= n; ++hi) {
        if (f.shape()[hi - 1] < c) continue;
        const int i = f.at(hi, c);
        if (i < k && !(f.shape()[lo - 1] > c && f.at(lo, c + 1) > i)) return false;
      }
    }
  return true;
}

// Quasi-key condition (4): for rows with the higher one strictly longer, the
// lower entry in column c is smaller than the higher entry in column c + 1.
inline bool qkt_condition4(const SkylineFilling& f) {
  const int n = static_cast<int>(f.nrows());
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      const int len_lo = f.shape()[lo - 1];
      const int len_hi = f.shape()[hi - 1];
      if (len_hi <= len_lo) continue;
      for (int c = 1; c <= len_lo && c + 1 <= len_hi; ++c)
        if (!(f.at(lo, c) < f.at(hi, c + 1))) return false;
    }
  return true;
}

// Leftmost occurrence of each label as (label -> (row, column)).
inline std::vector<std::pair<int, Box>> leftmost_occurrences(const SkylineFilling& f) {
  std::vector<std::pair<int, Box>> out;
  for (std::size_t r = 1; r <= f.nrows(); ++r)
    for (int c = 1; c <= f.shape()[r - 1]; ++c) {
      const int v = f.at(static_cast<int>(r), c);
      auto it = std::find_if(out.begin(), out.end(), [v](const auto& p) { return p.first == v; });
      if (it == out.end())
        out.push_back({v, {static_cast<int>(r), c}});
      else if (c < it->second.col)
        it->second = {static_cast<int>(r), c};
    }
  return out;
}

// Quasi-Yamanouchi in the quasi-key sense: the leftmost i is in row i or
// weakly left of some i + 1.
inline bool qkt_quasi_yamanouchi(const SkylineFilling& f) {
  for (const auto& [i, box] : leftmost_occurrences(f)) {
    if (box.row == i) continue;
    bool found = false;
    for (std::size_t r = 1; r <= f.nrows() && !found; ++r)
      for (int c = box.col; c <= f.shape()[r - 1]; ++c)
        if (f.at(static_cast<int>(r), c) == i + 1) {
          found = true;
          break;
        }
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

// Validity test for one model on a fixed shape. Triples are computed once,
// so a checker is the cheap way to filter many fillings of the same shape.
class ModelChecker {
 public:
  ModelChecker(Model model, WeakComposition shape)
      : model_(model), shape_(std::move(shape)), triples_(triples_of(shape_)) {}

  Model model() const noexcept { return model_; }
  const WeakComposition& shape() const noexcept { return shape_; }

  bool operator()(const SkylineFilling& f) const {
    if (f.shape() != shape_) return false;
    if (!detail::rows_weakly_decrease(f) || !detail::columns_distinct(f) || !detail::entries_bounded_by_row(f))
      return false;
    if (is_quasi_key_model(model_)) {
      if (!detail::first_column_increases_upward(f)) return false;
      if (!detail::qkt_condition3(f) || !detail::qkt_condition4(f)) return false;
      if (model_ == Model::qKT1 && !detail::first_column_is_row_index(f)) return false;
      if (model_ == Model::QqKT && !detail::qkt_quasi_yamanouchi(f)) return false;
      return true;
    }
    switch (model_) {
      case Model::ASSF:
        if (!detail::first_column_is_row_index(f)) return false;
        break;
      case Model::LSSF:
        if (!detail::first_column_is_row_index(f) || !detail::higher_rows_strictly_larger(f)) return false;
        break;
      case Model::FSSF:
        if (!detail::higher_rows_strictly_larger(f)) return false;
        break;
      case Model::MSSF:
        if (!detail::rows_constant(f) || !detail::first_column_increases_upward(f)) return false;
        break;
      case Model::QSSF:
        if (!detail::first_column_increases_upward(f)) return false;
        break;
      default: break;
    }
    return all_triples_inversion(f);
  }

  bool all_triples_inversion(const SkylineFilling& f) const {
    return std::all_of(triples_.begin(), triples_.end(), [&f](const Triple& t) { return is_inversion(t, f); });
  }

 private:
  Model model_;
  WeakComposition shape_;
  std::vector<Triple> triples_;
};

inline bool is_valid(Model model, const WeakComposition& a, const SkylineFilling& f) {
  return ModelChecker(model, a)(f);
}

// All fillings of D(a) whose rows weakly decrease, whose row-r entries lie
// in [1, r] and whose columns are distinct; with `fix_first` the first entry
// of row r is r. `visit` sees each candidate once.
template <class Visit>
void for_each_candidate(const WeakComposition& a, bool fix_first, Visit&& visit) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r].assign(static_cast<std::size_t>(a[r]), 0);
  int width = 0;
  for (int p : a) width = std::max(width, p);
  // used[c][v]: entry v already placed in column c
  std::vector<std::vector<char>> used(static_cast<std::size_t>(width) + 1, std::vector<char>(n + 2, 0));

  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == n) {
      visit(SkylineFilling(a, rows));
      return;
    }
    if (c > a[r]) {
      fill(r + 1, 1);
      return;
    }
    const int row_index = static_cast<int>(r + 1);
    int hi = c == 1 ? row_index : rows[r][static_cast<std::size_t>(c - 2)];
    int lo = (c == 1 && fix_first) ? row_index : 1;
    for (int v = hi; v >= lo; --v) {
      if (used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
      rows[r][static_cast<std::size_t>(c - 1)] = v;
      fill(r, c + 1);
      used[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 0;
    }
  };
  fill(0, 1);
}

// Every filling of D(a) valid in `model`, sorted.
inline std::vector<SkylineFilling> enumerate(Model model, const WeakComposition& a) {
  const ModelChecker check(model, a);
  std::vector<SkylineFilling> out;
  for_each_candidate(a, fixes_first_column(model), [&](SkylineFilling f) {
    if (check(f)) out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Basement variant of the atom model: column 0 holds i in row i and the
// triple conditions extend to it; the first column is otherwise free.
inline bool is_valid_assf_with_basement(const WeakComposition& a, const SkylineFilling& f) {
  if (f.shape() != a) return false;
  if (!detail::rows_weakly_decrease(f) || !detail::columns_distinct(f)) return false;
  for (std::size_t r = 1; r <= f.nrows(); ++r)
    if (a[r - 1] > 0 && f.at(static_cast<int>(r), 1) > static_cast<int>(r)) return false;
  auto entry = [&f](const Box& b) { return b.col == 0 ? b.row : f.at(b.row, b.col); };
  for (const Triple& t : triples_of(a, true))
    if (!is_inversion(entry(t.gamma), entry(t.alpha), entry(t.beta))) return false;
  return true;
}

inline std::vector<SkylineFilling> enumerate_assf_with_basement(const WeakComposition& a) {
  std::vector<SkylineFilling> out;
  for_each_candidate(a, false, [&](SkylineFilling f) {
    if (is_valid_assf_with_basement(a, f)) out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Reverse semistandard Young tableaux (English convention, row 1 on top).

class ReverseSSYT {
 public:
  ReverseSSYT() = default;

  explicit ReverseSSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      if (row.empty()) throw std::invalid_argument("revSSYT: empty row inside the shape");
      if (r > 0 && row.size() > rows_[r - 1].size()) throw std::invalid_argument("revSSYT: shape is not a partition");
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] < 1) throw std::invalid_argument("revSSYT: entries must be positive");
        if (c > 0 && row[c] > row[c - 1]) throw std::invalid_argument("revSSYT: rows must weakly decrease");
        if (r > 0 && row[c] >= rows_[r - 1][c]) throw std::invalid_argument("revSSYT: columns must strictly decrease");
      }
    }
  }

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const {
    std::vector<int> p;
    for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
    return Partition(std::move(p));
  }
  int width() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  int max_entry() const { return rows_.empty() ? 0 : rows_.front().front(); }
  bool empty() const { return rows_.empty(); }

  // Entries of column c (1-based), top to bottom.
  std::vector<int> column(int c) const {
    std::vector<int> out;
    for (const auto& row : rows_)
      if (static_cast<int>(row.size()) >= c) out.push_back(row[static_cast<std::size_t>(c - 1)]);
    return out;
  }

  void relabel(int from, int to) {
    for (auto& row : rows_)
      for (int& v : row)
        if (v == from) v = to;
  }

  friend auto operator<=>(const ReverseSSYT&, const ReverseSSYT&) = default;
  friend bool operator==(const ReverseSSYT&, const ReverseSSYT&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

inline WeakComposition weight(const ReverseSSYT& t, std::size_t n) {
  std::vector<int> w(n, 0);
  for (const auto& row : t.rows())
    for (int v : row) {
      if (v > static_cast<int>(n)) throw std::invalid_argument("weight: entry exceeds target length");
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeakComposition(std::move(w));
}

// All reverse SSYT of shape lambda with entries in [1, n], sorted.
inline std::vector<ReverseSSYT> enumerate_revssyt(const Partition& lambda, int n) {
  std::vector<ReverseSSYT> out;
  if (lambda.size() > static_cast<std::size_t>(std::max(n, 0))) return out;
  std::vector<std::vector<int>> rows;
  for (int p : lambda) rows.emplace_back(static_cast<std::size_t>(p), 0);
  const std::size_t total_rows = rows.size();

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == total_rows) {
      out.emplace_back(rows);
      return;
    }
    if (c == rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int hi = n;
    if (c > 0) hi = std::min(hi, rows[r][c - 1]);
    if (r > 0) hi = std::min(hi, rows[r - 1][c] - 1);
    // Cells below need room for strictly smaller entries.
    const int lo = static_cast<int>(total_rows - r);
    for (int v = hi; v >= 1; --v) {
      if (c == 0 && v < lo) break;
      rows[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Destandardization.

enum class Destandardization {
  particle,  // compare against the next larger label present
  quasi,     // compare against i + 1
};

struct LabelCell {
  int column;  // 1-based in the combined object
  int label;
};

inline std::vector<LabelCell> label_cells(const SkylineFilling& f) {
  std::vector<LabelCell> out;
  for (const auto& row : f.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out.push_back({static_cast<int>(c + 1), row[c]});
  return out;
}

inline std::vector<LabelCell> label_cells(const ReverseSSYT& t) {
  std::vector<LabelCell> out;
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) out.push_back({static_cast<int>(c + 1), row[c]});
  return out;
}

// Smallest label i whose leftmost occurrence is outside column 1 and has no
// comparison label weakly to its right. The largest label present is never
// bumped.
inline std::optional<int> bumpable_label(const std::vector<LabelCell>& cells, Destandardization rule) {
  std::vector<int> labels;
  for (const auto& cell : cells) labels.push_back(cell.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    const int i = labels[k];
    int leftmost = std::numeric_limits<int>::max();
    for (const auto& cell : cells)
      if (cell.label == i) leftmost = std::min(leftmost, cell.column);
    if (leftmost == 1) continue;
    const int target = rule == Destandardization::particle ? labels[k + 1] : i + 1;
    const bool blocked = std::any_of(cells.begin(), cells.end(), [&](const LabelCell& cell) {
      return cell.label == target && cell.column >= leftmost;
    });
    if (!blocked) return i;
  }
  return std::nullopt;
}

template <class X>
X destandardize(X x, Destandardization rule) {
  while (auto i = bumpable_label(label_cells(x), rule)) x.relabel(*i, *i + 1);
  return x;
}

template <class X>
X dst(const X& x) {
  return destandardize(x, Destandardization::particle);
}

template <class X>
X dst_q(const X& x) {
  return destandardize(x, Destandardization::quasi);
}

template <class X>
bool is_particle_highest(const X& x) {
  return !bumpable_label(label_cells(x), Destandardization::particle).has_value();
}

// Leftmost i in the first column or weakly left of some i + 1, for every i.
template <class X>
bool is_quasi_yamanouchi(const X& x) {
  const auto cells = label_cells(x);
  std::set<int> labels;
  for (const auto& cell : cells) labels.insert(cell.label);
  for (int i : labels) {
    int leftmost = std::numeric_limits<int>::max();
    for (const auto& cell : cells)
      if (cell.label == i) leftmost = std::min(leftmost, cell.column);
    if (leftmost == 1) continue;
    const bool ok = std::any_of(cells.begin(), cells.end(),
                                [&](const LabelCell& cell) { return cell.label == i + 1 && cell.column >= leftmost; });
    if (!ok) return false;
  }
  return true;
}

// On skyline fillings the first alternative is "in row i"; for atom fillings
// and qKT^(1) this coincides with the first-column rule above.
inline bool is_quasi_yamanouchi(const SkylineFilling& f) { return detail::qkt_quasi_yamanouchi(f); }

}  // namespace polybasis
