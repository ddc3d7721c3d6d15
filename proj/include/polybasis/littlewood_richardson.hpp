#pragma once

// Skew skyline tableaux with asterisks, contre-lattice words, row swaps, and
// the three rules for multiplying by a Schur polynomial.

#include <algorithm>
#include <compare>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybasis/basis.hpp"
#include "polybasis/composition.hpp"
#include "polybasis/expansion.hpp"
#include "polybasis/polynomial.hpp"
#include "polybasis/skyline.hpp"
#include "polybasis/tableau_models.hpp"

namespace polybasis {

// Entry value used for an asterisk.
inline constexpr int kStar = 0;

// Filling of D(outer) whose boxes in D(inner) hold asterisks and whose other
// boxes hold positive integers. Row r is stored left to right, stars first.
class LRSFilling {
 public:
  LRSFilling() = default;

  LRSFilling(WeakComposition inner, WeakComposition outer, std::vector<std::vector<int>> rows)
      : inner_(std::move(inner)), outer_(std::move(outer)), rows_(std::move(rows)) {
    require_same_length(inner_, outer_, "LRSFilling");
    if (rows_.size() != outer_.size()) throw std::invalid_argument("LRS: row count differs from shape length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (inner_[r] > outer_[r]) throw std::invalid_argument("LRS: inner shape not contained in outer shape");
      if (static_cast<int>(rows_[r].size()) != outer_[r]) throw std::invalid_argument("LRS: row length differs");
      for (int c = 0; c < outer_[r]; ++c) {
        const int v = rows_[r][static_cast<std::size_t>(c)];
        if (c < inner_[r] && v != kStar) throw std::invalid_argument("LRS: inner boxes must hold asterisks");
        if (c >= inner_[r] && v <= 0) throw std::invalid_argument("LRS: skew boxes must hold positive integers");
      }
    }
  }

  const WeakComposition& inner() const noexcept { return inner_; }
  const WeakComposition& outer() const noexcept { return outer_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::size_t nrows() const noexcept { return rows_.size(); }

  // Column 0 is the basement.
  bool is_star(int r, int c) const { return c == 0 || c <= inner_[static_cast<std::size_t>(r - 1)]; }
  int at(int r, int c) const {
    return c == 0 ? kStar : rows_.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(c - 1));
  }

  std::vector<int> content() const {
    std::vector<int> out;
    for (const auto& row : rows_)
      for (int v : row)
        if (v != kStar) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend auto operator<=>(const LRSFilling&, const LRSFilling&) = default;
  friend bool operator==(const LRSFilling&, const LRSFilling&) = default;

 private:
  WeakComposition inner_;
  WeakComposition outer_;
  std::vector<std::vector<int>> rows_;
};

// 1 with multiplicity lambda_l, 2 with lambda_{l-1}, ..., l with lambda_1,
// in increasing order.
inline std::vector<int> lambda_star(const Partition& lambda) {
  std::vector<int> out;
  const std::size_t l = lambda.size();
  for (std::size_t j = 1; j <= l; ++j)
    for (int k = 0; k < lambda[l - j]; ++k) out.push_back(static_cast<int>(j));
  return out;
}

// Columns right to left, each read bottom to top, asterisks skipped.
inline std::vector<int> column_word(const LRSFilling& L) {
  std::vector<int> word;
  int width = 0;
  for (int p : L.outer()) width = std::max(width, p);
  for (int c = width; c >= 1; --c)
    for (int r = 1; r <= static_cast<int>(L.nrows()); ++r)
      if (L.outer()[static_cast<std::size_t>(r - 1)] >= c && !L.is_star(r, c)) word.push_back(L.at(r, c));
  return word;
}

// Every prefix has at least as many k's as (k-1)'s, ..., as many 2's as 1's,
// with k the largest letter of the word.
inline bool is_contre_lattice(const std::vector<int>& word) {
  if (word.empty()) return true;
  const int k = *std::max_element(word.begin(), word.end());
  std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
  for (int letter : word) {
    if (letter < 1) return false;
    ++count[static_cast<std::size_t>(letter)];
    if (letter < k && count[static_cast<std::size_t>(letter)] > count[static_cast<std::size_t>(letter + 1)])
      return false;
  }
  return true;
}

// Order on box contents with the asterisk conventions: an asterisk exceeds
// every number, asterisks in one row are equal, a lower asterisk exceeds a
// higher one in the same column, and all other asterisk pairs are equal.
inline bool lrs_less(const LRSFilling& L, const Box& x, const Box& y) {
  const bool sx = L.is_star(x.row, x.col);
  const bool sy = L.is_star(y.row, y.col);
  if (!sx && !sy) return L.at(x.row, x.col) < L.at(y.row, y.col);
  if (!sx) return true;
  if (!sy) return false;
  if (x.row == y.row) return false;
  if (x.col == y.col) return x.row > y.row;
  return false;
}

inline bool is_valid_lrs(const LRSFilling& L) {
  const int n = static_cast<int>(L.nrows());
  for (int r = 1; r <= n; ++r) {
    const auto& row = L.rows()[static_cast<std::size_t>(r - 1)];
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c] != kStar && row[c - 1] != kStar && row[c] > row[c - 1]) return false;
  }
  int width = 0;
  for (int p : L.outer()) width = std::max(width, p);
  for (int c = 1; c <= width; ++c) {
    std::vector<int> seen;
    for (int r = 1; r <= n; ++r)
      if (L.outer()[static_cast<std::size_t>(r - 1)] >= c && !L.is_star(r, c)) seen.push_back(L.at(r, c));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  auto less = [&L](const Box& x, const Box& y) { return lrs_less(L, x, y); };
  for (const Triple& t : triples_of(L.outer(), true))
    if (!is_inversion(t, less)) return false;
  return true;
}

enum class SwapDirection { up, down };

// Moves every box of row i (asterisks included) to the adjacent empty row.
inline LRSFilling swap_row(const LRSFilling& L, int i, SwapDirection dir) {
  const int n = static_cast<int>(L.nrows());
  const int j = dir == SwapDirection::up ? i + 1 : i - 1;
  if (i < 1 || i > n) throw std::invalid_argument("swap_row: row out of range");
  if (j < 1 || j > n) throw std::invalid_argument("swap_row: destination row out of range");
  if (L.outer()[static_cast<std::size_t>(i - 1)] == 0) throw std::invalid_argument("swap_row: row is empty");
  if (L.outer()[static_cast<std::size_t>(j - 1)] != 0) throw std::invalid_argument("swap_row: destination occupied");
  std::vector<int> inner(L.inner().begin(), L.inner().end());
  std::vector<int> outer(L.outer().begin(), L.outer().end());
  auto rows = L.rows();
  std::swap(inner[static_cast<std::size_t>(i - 1)], inner[static_cast<std::size_t>(j - 1)]);
  std::swap(outer[static_cast<std::size_t>(i - 1)], outer[static_cast<std::size_t>(j - 1)]);
  std::swap(rows[static_cast<std::size_t>(i - 1)], rows[static_cast<std::size_t>(j - 1)]);
  return LRSFilling(WeakComposition(std::move(inner)), WeakComposition(std::move(outer)), std::move(rows));
}

// Valid LRS fillings of D(outer)/D(inner) with the given content (a sorted
// multiset). With `contre_lattice`, only contre-lattice column words.
inline std::vector<LRSFilling> enumerate_lrs_fixed_inner(const WeakComposition& inner, const WeakComposition& outer,
                                                         const std::vector<int>& content, bool contre_lattice = true) {
  require_same_length(inner, outer, "enumerate_lrs");
  std::vector<LRSFilling> out;
  for (std::size_t r = 0; r < inner.size(); ++r)
    if (inner[r] > outer[r]) return out;
  if (static_cast<int>(content.size()) != outer.total() - inner.total()) return out;

  std::map<int, int> remaining;
  for (int v : content) ++remaining[v];
  const std::size_t n = outer.size();
  std::vector<std::vector<int>> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r].assign(static_cast<std::size_t>(outer[r]), kStar);
  int width = 0;
  for (int p : outer) width = std::max(width, p);

  auto column_has = [&](int c, int v) {
    for (std::size_t r = 0; r < n; ++r)
      if (outer[r] >= c && c > inner[r] && rows[r][static_cast<std::size_t>(c - 1)] == v) return true;
    return false;
  };

  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == n) {
      LRSFilling L(inner, outer, rows);
      if (is_valid_lrs(L) && (!contre_lattice || is_contre_lattice(column_word(L)))) out.push_back(std::move(L));
      return;
    }
    if (c > outer[r]) {
      fill(r + 1, inner[r + 1 < n ? r + 1 : r] + 1);
      return;
    }
    const int cap = c > inner[r] + 1 ? rows[r][static_cast<std::size_t>(c - 2)] : std::numeric_limits<int>::max();
    for (auto& [v, left] : remaining) {
      if (v > cap) break;
      if (left == 0 || column_has(c, v)) continue;
      --left;
      rows[r][static_cast<std::size_t>(c - 1)] = v;
      fill(r, c + 1);
      rows[r][static_cast<std::size_t>(c - 1)] = kStar;
      ++left;
    }
  };
  if (n == 0) {
    if (content.empty()) out.emplace_back(inner, outer, rows);
    return out;
  }
  fill(0, inner[0] + 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Inner shapes c with c >= a, flat(c) = flat(a) and c <= outer pointwise.
inline std::vector<WeakComposition> admissible_inner_shapes(const WeakComposition& a, const WeakComposition& outer) {
  std::vector<WeakComposition> out;
  for (auto& c : dominating_same_flat(a)) {
    bool fits = true;
    for (std::size_t i = 0; i < c.size(); ++i) fits = fits && c[i] <= outer[i];
    if (fits) out.push_back(std::move(c));
  }
  return out;
}

// LRS(a, b) restricted to the given content and contre-lattice words.
inline std::vector<LRSFilling> enumerate_lrs(const WeakComposition& a, const WeakComposition& b,
                                             const std::vector<int>& content) {
  require_same_length(a, b, "enumerate_lrs");
  std::vector<LRSFilling> out;
  for (const auto& c : admissible_inner_shapes(a, b)) {
    auto part = enumerate_lrs_fixed_inner(c, b, content);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Membership in the union over d of LRS(a, d).
inline bool in_lrs_union(const LRSFilling& L, const WeakComposition& a) {
  if (L.inner().size() != a.size()) return false;
  return dominates(L.inner(), a) && flat(L.inner()) == flat(a) && is_valid_lrs(L);
}

// No upward swap of an occupied row into an empty row stays in the union.
inline bool is_highest_weight(const LRSFilling& L, const WeakComposition& a) {
  const int n = static_cast<int>(L.nrows());
  for (int i = 1; i < n; ++i) {
    if (L.outer()[static_cast<std::size_t>(i - 1)] == 0 || L.outer()[static_cast<std::size_t>(i)] != 0) continue;
    if (in_lrs_union(swap_row(L, i, SwapDirection::up), a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pairs for the particle rule.

// (S, T) with S a skyline filling and T a reverse SSYT. For destandardization
// the columns of T sit to the right of all columns of S.
struct PairFilling {
  SkylineFilling S;
  ReverseSSYT T;

  void relabel(int from, int to) {
    S.relabel(from, to);
    T.relabel(from, to);
  }

  friend auto operator<=>(const PairFilling&, const PairFilling&) = default;
  friend bool operator==(const PairFilling&, const PairFilling&) = default;
};

inline std::vector<LabelCell> label_cells(const PairFilling& p) {
  auto cells = label_cells(p.S);
  const int offset = p.S.width();
  for (auto cell : label_cells(p.T)) cells.push_back({cell.column + offset, cell.label});
  return cells;
}

inline WeakComposition weight(const PairFilling& p, std::size_t n) {
  const WeakComposition s = weight(p.S, n);
  const WeakComposition t = weight(p.T, n);
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = s[i] + t[i];
  return WeakComposition(std::move(w));
}

// LSSF(a) x revSSYT_n(lambda).
inline std::vector<PairFilling> enumerate_pairs(const WeakComposition& a, const Partition& lambda) {
  std::vector<PairFilling> out;
  const auto tableaux = enumerate_revssyt(lambda, static_cast<int>(a.size()));
  for (const auto& S : enumerate(Model::LSSF, a))
    for (const auto& T : tableaux) out.push_back({S, T});
  return out;
}

inline std::vector<PairFilling> enumerate_hpairs(const WeakComposition& a, const Partition& lambda) {
  std::vector<PairFilling> out;
  for (auto& p : enumerate_pairs(a, lambda))
    if (is_particle_highest(p)) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Products with Schur polynomials.

enum class ProductRule { atom, qkey, particle };

inline ProductRule product_rule_for(BasisId id) {
  switch (id) {
    case BasisId::atom: return ProductRule::atom;
    case BasisId::qkey: return ProductRule::qkey;
    case BasisId::particle: return ProductRule::particle;
    default: throw std::invalid_argument("no combinatorial product rule for basis " + std::string(to_string(id)));
  }
}

struct ProductResult {
  BasisExpansion expansion;
  std::vector<LRSFilling> lrs;     // atom and qkey rules
  std::vector<PairFilling> pairs;  // particle rule
};

inline ProductResult product_rule(BasisId id, const WeakComposition& a, const Partition& lambda, std::size_t n) {
  if (a.size() != n) throw std::invalid_argument("index length must equal the number of variables");
  const ProductRule rule = product_rule_for(id);
  ProductResult result{BasisExpansion(id), {}, {}};
  if (rule == ProductRule::particle) {
    for (auto& p : enumerate_hpairs(a, lambda)) {
      result.expansion.add(weight(p, n), 1);
      result.pairs.push_back(std::move(p));
    }
    return result;
  }
  const std::vector<int> content = lambda_star(lambda);
  for (const auto& b : compositions(a.total() + lambda.total(), n)) {
    if (rule == ProductRule::atom) {
      for (auto& L : enumerate_lrs_fixed_inner(a, b, content)) {
        result.expansion.add(b, 1);
        result.lrs.push_back(std::move(L));
      }
    } else {
      for (auto& L : enumerate_lrs(a, b, content))
        if (is_highest_weight(L, a)) {
          result.expansion.add(b, 1);
          result.lrs.push_back(std::move(L));
        }
    }
  }
  return result;
}

inline BasisExpansion product_expansion(BasisId id, const WeakComposition& a, const Partition& lambda, std::size_t n) {
  return product_rule(id, a, lambda, n).expansion;
}

// f_a * s_lambda(x_1..x_n) expanded by triangular elimination.
inline BasisExpansion product_oracle(BasisId id, const WeakComposition& a, const Partition& lambda, std::size_t n) {
  return expand_polynomial(multiply(cached_basis_element(id, a), schur(lambda, n)), id);
}

struct ProductCheck {
  BasisId id;
  WeakComposition index;
  Partition lambda;
  std::string reason;
};

struct ProductReport {
  std::size_t checked = 0;
  std::vector<ProductCheck> failures;
  bool ok() const { return failures.empty(); }
};

// Rules against the oracle for atom, qkey and particle, and nonnegativity of
// the generic expansion for monomial, monomial_slide and fundamental_slide,
// over |a| <= max_weight, 1 <= length <= max_len, 1 <= |lambda| <= max_lambda.
inline ProductReport verify_products(int max_weight, std::size_t max_len, int max_lambda) {
  ProductReport report;
  std::vector<Partition> lambdas;
  for (int k = 1; k <= max_lambda; ++k)
    for (auto& p : partitions_of(k)) lambdas.push_back(std::move(p));
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& a : compositions_up_to(max_weight, len))
      for (const auto& lambda : lambdas) {
        for (BasisId id : {BasisId::atom, BasisId::qkey, BasisId::particle}) {
          ++report.checked;
          const BasisExpansion rule = product_expansion(id, a, lambda, len);
          const BasisExpansion oracle = product_oracle(id, a, lambda, len);
          if (!(rule == oracle))
            report.failures.push_back({id, a, lambda, "rule differs from oracle"});
          else if (!rule.all_positive())
            report.failures.push_back({id, a, lambda, "non-positive coefficient"});
        }
        for (BasisId id : {BasisId::monomial, BasisId::monomial_slide, BasisId::fundamental_slide}) {
          ++report.checked;
          if (product_oracle(id, a, lambda, len).has_negative())
            report.failures.push_back({id, a, lambda, "negative coefficient"});
        }
      }
  return report;
}

}  // namespace polybasis
