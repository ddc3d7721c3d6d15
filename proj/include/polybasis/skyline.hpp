#pragma once

// Skyline diagrams, fillings and the Type A / Type B triples.
//
// Rows are numbered from 1 at the bottom; columns from 1 at the left. Column 0
// is the basement, a virtual column present in every row.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polybasis/composition.hpp"

namespace polybasis {

struct Box {
  int row = 0;  // 1-based, bottom row is 1
  int col = 0;  // 1-based, 0 is the basement

  friend auto operator<=>(const Box&, const Box&) = default;
  friend bool operator==(const Box&, const Box&) = default;
};

// Positive-integer filling of the skyline diagram D(shape).
class SkylineFilling {
 public:
  SkylineFilling() = default;

  SkylineFilling(WeakComposition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.size()) throw std::invalid_argument("filling: row count differs from shape length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(rows_[r].size()) != shape_[r])
        throw std::invalid_argument("filling: row length differs from shape");
      for (int v : rows_[r])
        if (v < 1) throw std::invalid_argument("filling: entries must be positive");
    }
  }

  // Builds a filling with n rows from (row index, entries) pairs; unlisted
  // rows are empty.
  static SkylineFilling from_rows(std::size_t n, std::initializer_list<std::pair<int, std::vector<int>>> rows) {
    std::vector<std::vector<int>> data(n);
    for (const auto& [r, entries] : rows) {
      if (r < 1 || static_cast<std::size_t>(r) > n) throw std::invalid_argument("filling: row index out of range");
      data[static_cast<std::size_t>(r - 1)] = entries;
    }
    std::vector<int> shape;
    for (const auto& row : data) shape.push_back(static_cast<int>(row.size()));
    return SkylineFilling(WeakComposition(std::move(shape)), std::move(data));
  }

  const WeakComposition& shape() const noexcept { return shape_; }
  std::size_t nrows() const noexcept { return rows_.size(); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const std::vector<int>& row(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }
  int at(int r, int c) const { return rows_.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(c - 1)); }
  int width() const {
    int w = 0;
    for (int p : shape_) w = std::max(w, p);
    return w;
  }
  bool empty() const { return shape_.is_zero(); }

  void relabel(int from, int to) {
    for (auto& row : rows_)
      for (int& v : row)
        if (v == from) v = to;
  }

  friend auto operator<=>(const SkylineFilling&, const SkylineFilling&) = default;
  friend bool operator==(const SkylineFilling&, const SkylineFilling&) = default;

 private:
  WeakComposition shape_;
  std::vector<std::vector<int>> rows_;
};

// wt(f)_i = number of entries equal to i, for i = 1..n.
inline WeakComposition weight(const SkylineFilling& f, std::size_t n) {
  std::vector<int> w(n, 0);
  for (const auto& row : f.rows())
    for (int v : row) {
      if (v > static_cast<int>(n)) throw std::invalid_argument("weight: entry exceeds target length");
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeakComposition(std::move(w));
}

inline WeakComposition weight(const SkylineFilling& f) { return weight(f, f.nrows()); }

// ---------------------------------------------------------------------------
// Triples.

enum class TripleKind { A, B };

// gamma and alpha are adjacent in one row (alpha to the right). Type A:
// beta sits above alpha and the lower row is weakly longer. Type B: beta
// sits below gamma and the higher row is strictly longer.
struct Triple {
  TripleKind kind;
  Box gamma;
  Box alpha;
  Box beta;

  friend bool operator==(const Triple&, const Triple&) = default;
};

// All triples of D(shape) over every pair of rows. With `basement`, triples
// whose gamma (and for Type B also beta) lies in column 0 are included.
inline std::vector<Triple> triples_of(const WeakComposition& shape, bool basement = false) {
  std::vector<Triple> out;
  const int n = static_cast<int>(shape.size());
  const int first = basement ? 0 : 1;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      const int len_lo = shape[lo - 1];
      const int len_hi = shape[hi - 1];
      if (len_lo >= len_hi) {
        // Type A: gamma, alpha in the lower row; beta above alpha.
        for (int c = first; c + 1 <= len_hi; ++c)
          out.push_back({TripleKind::A, {lo, c}, {lo, c + 1}, {hi, c + 1}});
      } else {
        // Type B: gamma, alpha in the higher row; beta below gamma.
        for (int c = first; c + 1 <= len_hi; ++c)
          if (c == 0 || c <= len_lo) out.push_back({TripleKind::B, {hi, c}, {hi, c + 1}, {lo, c}});
      }
    }
  return out;
}

// beta > gamma >= alpha, or gamma >= alpha > beta.
inline bool is_inversion(int gamma, int alpha, int beta) {
  return (beta > gamma && gamma >= alpha) || (gamma >= alpha && alpha > beta);
}

// Inversion test over an arbitrary strict comparison of box contents.
// `less(x, y)` must report whether the entry of box x is smaller than that
// of box y; boxes that compare neither way are treated as equal.
template <class Less>
bool is_inversion(const Triple& t, Less&& less) {
  auto gt = [&](const Box& x, const Box& y) { return less(y, x); };
  auto ge = [&](const Box& x, const Box& y) { return !less(x, y); };
  return (gt(t.beta, t.gamma) && ge(t.gamma, t.alpha)) || (ge(t.gamma, t.alpha) && gt(t.alpha, t.beta));
}

inline bool is_inversion(const Triple& t, const SkylineFilling& f) {
  return is_inversion(t.gamma.col == 0 ? 0 : f.at(t.gamma.row, t.gamma.col), f.at(t.alpha.row, t.alpha.col),
                      t.beta.col == 0 ? 0 : f.at(t.beta.row, t.beta.col));
}

}  // namespace polybasis
