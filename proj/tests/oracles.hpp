#pragma once

// Brute-force reference computations. Nothing here calls the library's
// algorithms; only its value types are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "polybasis/composition.hpp"
#include "polybasis/polynomial.hpp"

namespace oracle {

using polybasis::Polynomial;
using polybasis::WeakComposition;
using Vec = std::vector<int>;

inline Vec vec(const WeakComposition& a) { return Vec(a.begin(), a.end()); }

inline Vec flat(const Vec& a) {
  Vec out;
  for (int v : a)
    if (v) out.push_back(v);
  return out;
}

inline bool dominates(const Vec& b, const Vec& a) {
  int sb = 0, sa = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sb += b[i];
    sa += a[i];
    if (sb < sa) return false;
  }
  return true;
}

inline bool refines(const Vec& beta, const Vec& alpha) {
  std::size_t k = 0;
  for (int target : alpha) {
    int s = 0;
    while (s < target && k < beta.size()) s += beta[k++];
    if (s != target) return false;
  }
  return k == beta.size();
}

// All length-n vectors with entries >= 0 summing to total.
inline std::vector<Vec> all_compositions(int total, std::size_t n) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (n == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

inline int total(const Vec& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline Polynomial monomials(const std::vector<Vec>& exps, std::size_t n) {
  Polynomial p(n);
  for (const auto& e : exps) p.add_term(WeakComposition(e), 1);
  return p;
}

// ---------------------------------------------------------------------------
// Permutations.

inline int inversions(const Vec& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) k += w[i] > w[j];
  return k;
}

// Bruhat down-set of w: closure under transpositions that lower the length.
inline std::set<Vec> bruhat_below(const Vec& w) {
  std::set<Vec> seen{w};
  std::vector<Vec> stack{w};
  while (!stack.empty()) {
    Vec cur = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (cur[i] < cur[j]) continue;
        Vec next = cur;
        std::swap(next[i], next[j]);
        if (inversions(next) < inversions(cur) && seen.insert(next).second) stack.push_back(next);
      }
  }
  return seen;
}

// Left swaps, equal parts included, by plain search.
inline std::set<Vec> lswap(const Vec& a) {
  std::set<Vec> seen{a};
  std::vector<Vec> stack{a};
  while (!stack.empty()) {
    Vec cur = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (cur[i] <= cur[j]) {
          Vec next = cur;
          std::swap(next[i], next[j]);
          if (seen.insert(next).second) stack.push_back(next);
        }
  }
  return seen;
}

// Strong dominance by quantifying over every c of the same length and size.
inline bool strongly_dominates(const Vec& b, const Vec& a) {
  if (!dominates(b, a)) return false;
  for (const auto& c : all_compositions(total(a), a.size()))
    if (dominates(c, a) && flat(c) == flat(b) && !dominates(c, b)) return false;
  return true;
}

// Slide moves ..0k.. -> ..ij.., optionally forbidding j = 0 where a is nonzero.
inline std::set<Vec> slides(const Vec& a, bool fixed) {
  std::set<Vec> seen{a};
  std::vector<Vec> stack{a};
  while (!stack.empty()) {
    Vec cur = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] != 0 || cur[p + 1] == 0) continue;
      const int k = cur[p + 1];
      for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (fixed && a[p + 1] != 0 && j == 0) continue;
        Vec next = cur;
        next[p] = i;
        next[p + 1] = j;
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Demazure operators.

// pi_i on a polynomial (i is 0-based: acts on x_{i+1}, x_{i+2}).
inline Polynomial demazure(const Polynomial& f, std::size_t i) {
  Polynomial out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Vec v = vec(e);
    const int p = v[i], q = v[i + 1];
    if (p >= q) {
      for (int k = 0; k <= p - q; ++k) {
        v[i] = p - k;
        v[i + 1] = q + k;
        out.add_term(WeakComposition(v), c);
      }
    } else {
      for (int k = 1; k <= q - p - 1; ++k) {
        v[i] = p + k;
        v[i + 1] = q - k;
        out.add_term(WeakComposition(v), -c);
      }
    }
  }
  return out;
}

inline Polynomial demazure_bar(const Polynomial& f, std::size_t i) { return demazure(f, i) - f; }

// kappa_a, or the atom when `atom` is set, by sorting a with adjacent
// transpositions and applying pi_i (resp. pi_i - 1) on the way back.
inline Polynomial key_or_atom(const Vec& a, bool atom) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) {
      Vec b = a;
      std::swap(b[i], b[i + 1]);
      const Polynomial g = key_or_atom(b, atom);
      return atom ? demazure_bar(g, i) : demazure(g, i);
    }
  return Polynomial::monomial(WeakComposition(a));
}

inline Polynomial key(const Vec& a) { return key_or_atom(a, false); }
inline Polynomial atom(const Vec& a) { return key_or_atom(a, true); }

// Quasi-key as the sum of atoms over b >= a with the same flattening.
inline Polynomial qkey(const Vec& a) {
  Polynomial p(a.size());
  for (const auto& b : all_compositions(total(a), a.size()))
    if (flat(b) == flat(a) && dominates(b, a)) p += atom(b);
  return p;
}

inline Polynomial fundamental_slide(const Vec& a) {
  std::vector<Vec> exps;
  for (const auto& b : all_compositions(total(a), a.size()))
    if (dominates(b, a) && refines(flat(b), flat(a))) exps.push_back(b);
  return monomials(exps, a.size());
}

inline Polynomial monomial_slide(const Vec& a) {
  std::vector<Vec> exps;
  for (const auto& b : all_compositions(total(a), a.size()))
    if (dominates(b, a) && flat(b) == flat(a)) exps.push_back(b);
  return monomials(exps, a.size());
}

inline Polynomial particle(const Vec& a) {
  const auto s = slides(a, true);
  return monomials(std::vector<Vec>(s.begin(), s.end()), a.size());
}

// ---------------------------------------------------------------------------
// Schur polynomials from ordinary semistandard tableaux.

inline Polynomial schur_ssyt(const Vec& lambda, int n) {
  Polynomial p(static_cast<std::size_t>(n));
  std::vector<Vec> rows;
  for (int part : lambda) rows.emplace_back(static_cast<std::size_t>(part), 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      Vec w(static_cast<std::size_t>(n), 0);
      for (const auto& row : rows)
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
      p.add_term(WeakComposition(w), 1);
      return;
    }
    if (c == rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return p;
}

// ---------------------------------------------------------------------------
// Skyline fillings checked straight from the definitions.

using Rows = std::vector<Vec>;  // rows[r] is row r + 1, left to right

// Every filling of D(a) with entries in [1, n].
inline std::vector<Rows> all_fillings(const Vec& a, int n) {
  std::vector<Rows> out;
  Rows rows(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) rows[r].assign(static_cast<std::size_t>(a[r]), 1);
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) boxes.push_back({r, c});
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      out.push_back(rows);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      rows[boxes[k].first][boxes[k].second] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// Row-weakly-decreasing, column-distinct, all triples inversion; `basement`
// puts entry r in a column left of row r and includes it in the triples.
inline bool is_ssf(const Rows& rows, bool basement) {
  const int n = static_cast<int>(rows.size());
  auto len = [&](int r) { return static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()); };
  auto has = [&](int r, int c) { return (basement && c == 0) || (c >= 1 && c <= len(r)); };
  auto at = [&](int r, int c) { return c == 0 ? r : rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c < len(r); ++c)
      if (at(r, c + 1) > at(r, c)) return false;
  for (int r = 1; r <= n; ++r)
    if (basement && len(r) > 0 && at(r, 1) > r) return false;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int c = 1; c <= std::min(len(r), len(s)); ++c)
        if (at(r, c) == at(s, c)) return false;
  auto inversion = [](int g, int al, int be) { return (be > g && g >= al) || (g >= al && al > be); };
  for (int R = 1; R <= n; ++R)
    for (int S = 1; S <= n; ++S) {
      if (R == S) continue;
      for (int c = basement ? 0 : 1; c <= len(R); ++c) {
        if (!has(R, c) || !has(R, c + 1)) continue;
        // Type A: S above R, R weakly longer, beta at (S, c+1).
        if (S > R && len(R) >= len(S) && has(S, c + 1) && !inversion(at(R, c), at(R, c + 1), at(S, c + 1)))
          return false;
        // Type B: S below R, R strictly longer, beta at (S, c).
        if (S < R && len(R) > len(S) && has(S, c) && !inversion(at(R, c), at(R, c + 1), at(S, c))) return false;
      }
    }
  return true;
}

inline Vec weight(const Rows& rows, std::size_t n) {
  Vec w(n, 0);
  for (const auto& row : rows)
    for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

// Atom fillings: first column equals the row index.
inline std::vector<Rows> assf(const Vec& a) {
  std::vector<Rows> out;
  for (auto& rows : all_fillings(a, static_cast<int>(a.size()))) {
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) ok = rows[r].empty() || rows[r][0] == static_cast<int>(r + 1);
    if (ok && is_ssf(rows, false)) out.push_back(rows);
  }
  return out;
}

}  // namespace oracle
