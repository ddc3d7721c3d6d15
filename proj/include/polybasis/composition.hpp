#pragma once

// Weak compositions, partitions and the order/rewriting structure on them:
// dominance, refinement, left swaps, slides and Bruhat order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polybasis {

// Finite sequence of nonnegative integers. Trailing zeros are significant:
// the length is the number of variables.
class WeakComposition {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("weak composition parts must be nonnegative");
  }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
  }

  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;
  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
};

// Sequence of strictly positive integers.
class StrongComposition {
 public:
  StrongComposition() = default;
  StrongComposition(std::initializer_list<int> parts) : StrongComposition(std::vector<int>(parts)) {}
  explicit StrongComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("strong composition parts must be positive");
  }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend auto operator<=>(const StrongComposition&, const StrongComposition&) = default;
  friend bool operator==(const StrongComposition&, const StrongComposition&) = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const noexcept { return parts_; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}
  explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v] = true;
    }
  }

  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t i) const { return word_[i]; }
  const std::vector<int>& one_line() const noexcept { return word_; }

  // Number of inversions.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
      for (std::size_t j = i + 1; j < word_.size(); ++j)
        if (word_[i] > word_[j]) ++inv;
    return inv;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// ---------------------------------------------------------------------------
// Text form: comma-separated integers, e.g. "0,1,0,3".

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
    if (tok.empty()) throw std::invalid_argument("empty entry in integer list");
    int value = 0;
    bool negative = false;
    std::size_t k = 0;
    if (tok[0] == '-') {
      negative = true;
      k = 1;
      if (tok.size() == 1) throw std::invalid_argument("malformed integer");
    }
    for (; k < tok.size(); ++k) {
      if (tok[k] < '0' || tok[k] > '9') throw std::invalid_argument("malformed integer: " + std::string(tok));
      value = value * 10 + (tok[k] - '0');
      if (value > 1'000'000) throw std::invalid_argument("integer out of range: " + std::string(tok));
    }
    out.push_back(negative ? -value : value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class Seq>
std::string format_int_list(const Seq& seq) {
  std::ostringstream os;
  bool first = true;
  for (int v : seq) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

inline WeakComposition parse_composition(std::string_view text) { return WeakComposition(parse_int_list(text)); }
inline Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }
inline StrongComposition parse_strong_composition(std::string_view text) {
  return StrongComposition(parse_int_list(text));
}
inline std::string to_string(const WeakComposition& a) { return format_int_list(a); }
inline std::string to_string(const StrongComposition& a) { return format_int_list(a); }
inline std::string to_string(const Partition& a) { return format_int_list(a); }
inline std::string to_string(const Permutation& w) { return format_int_list(w.one_line()); }

// ---------------------------------------------------------------------------
// Basic maps.

inline StrongComposition flat(const WeakComposition& a) {
  std::vector<int> out;
  for (int p : a)
    if (p != 0) out.push_back(p);
  return StrongComposition(std::move(out));
}

// sort(a) with zeros dropped.
inline Partition sort_desc(const WeakComposition& a) {
  std::vector<int> out;
  for (int p : a)
    if (p != 0) out.push_back(p);
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

// 0^m x a.
inline WeakComposition prepend_zeros(const WeakComposition& a, int m) {
  if (m < 0) throw std::invalid_argument("prepend_zeros: negative count");
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  out.insert(out.end(), a.begin(), a.end());
  return WeakComposition(std::move(out));
}

inline WeakComposition pad_to(const WeakComposition& a, std::size_t n) {
  if (a.size() > n) throw std::invalid_argument("pad_to: composition longer than target length");
  std::vector<int> out(a.begin(), a.end());
  out.resize(n, 0);
  return WeakComposition(std::move(out));
}

inline std::vector<int> prefix_sums(const WeakComposition& a) {
  std::vector<int> out(a.size());
  std::partial_sum(a.begin(), a.end(), out.begin());
  return out;
}

// Prefix-sum-lexicographic order: a linear extension of dominance on
// compositions of equal length. Ties are impossible between distinct
// compositions since prefix sums determine the composition.
struct PrefixSumLess {
  bool operator()(const WeakComposition& a, const WeakComposition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa += a[i];
      sb += b[i];
      if (sa != sb) return sa < sb;
    }
    return false;
  }
};

inline void require_same_length(const WeakComposition& a, const WeakComposition& b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

// b >= a: every prefix sum of b is at least the corresponding prefix sum of a.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
  require_same_length(a, b, "dominates");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sb < sa) return false;
  }
  return true;
}

// beta can be cut into consecutive blocks whose sums read alpha.
inline bool refines(const StrongComposition& beta, const StrongComposition& alpha) {
  std::size_t j = 0;
  for (int target : alpha) {
    int acc = 0;
    while (acc < target && j < beta.size()) acc += beta[j++];
    if (acc != target) return false;
  }
  return j == beta.size();
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

// All weak compositions of `total` with `length` parts, in lexicographic order.
inline std::vector<WeakComposition> compositions(int total, std::size_t length) {
  std::vector<WeakComposition> out;
  if (total < 0) return out;
  if (length == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(length, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == length) {
      cur[i] = left;
      out.emplace_back(cur);
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

// Weak compositions of length exactly `length` with total at most `max_total`.
inline std::vector<WeakComposition> compositions_up_to(int max_total, std::size_t length) {
  std::vector<WeakComposition> out;
  for (int d = 0; d <= max_total; ++d) {
    auto part = compositions(d, length);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Partitions of k, largest first part first.
inline std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

// Weak compositions of length n whose flattening is alpha.
inline std::vector<WeakComposition> arrangements_with_flat(const StrongComposition& alpha, std::size_t n) {
  std::vector<WeakComposition> out;
  const std::size_t k = alpha.size();
  if (k > n) return out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t idx) {
    if (idx == k) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t p = pos; p + (k - idx) <= n; ++p) {
      cur[p] = alpha[idx];
      rec(p + 1, idx + 1);
      cur[p] = 0;
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Distinct rearrangements of the parts of a.
inline std::vector<WeakComposition> rearrangements(const WeakComposition& a) {
  std::vector<int> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  std::vector<WeakComposition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// {b : b >= a, flat(b) = flat(a)}.
inline std::vector<WeakComposition> dominating_same_flat(const WeakComposition& a) {
  std::vector<WeakComposition> out;
  for (auto& b : arrangements_with_flat(flat(a), a.size()))
    if (dominates(b, a)) out.push_back(b);
  return out;
}

// {b : b >= a, flat(b) refines flat(a)}.
inline std::vector<WeakComposition> dominating_refining(const WeakComposition& a) {
  std::vector<WeakComposition> out;
  const auto alpha = flat(a);
  for (auto& b : compositions(a.total(), a.size()))
    if (dominates(b, a) && refines(flat(b), alpha)) out.push_back(b);
  return out;
}

// b strongly dominates a: b >= a, and every c >= a with flat(c) = flat(b)
// also satisfies c >= b.
inline bool strongly_dominates(const WeakComposition& b, const WeakComposition& a) {
  require_same_length(a, b, "strongly_dominates");
  if (!dominates(b, a)) return false;
  for (auto& c : arrangements_with_flat(flat(b), b.size()))
    if (dominates(c, a) && !dominates(c, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closures under local rewriting moves.

namespace detail {

template <class Moves>
std::set<WeakComposition> bfs_closure(const WeakComposition& start, Moves&& moves) {
  std::set<WeakComposition> seen{start};
  std::deque<WeakComposition> queue{start};
  while (!queue.empty()) {
    WeakComposition cur = std::move(queue.front());
    queue.pop_front();
    moves(cur, [&](WeakComposition next) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    });
  }
  return seen;
}

}  // namespace detail

// Closure of a under left swaps (exchange a_i <= a_j with i < j).
// Equal parts may be swapped; that move is the identity.
inline std::set<WeakComposition> lswap_closure(const WeakComposition& a) {
  return detail::bfs_closure(a, [](const WeakComposition& cur, auto&& emit) {
    std::vector<int> v(cur.begin(), cur.end());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] < v[j]) {
          std::swap(v[i], v[j]);
          emit(WeakComposition(v));
          std::swap(v[i], v[j]);
        }
  });
}

// Dominance-minimal members of lswap(a) within each flat class.
inline std::set<WeakComposition> qlswap(const WeakComposition& a) {
  const auto closure = lswap_closure(a);
  std::set<WeakComposition> out;
  for (const auto& b : closure) {
    const auto fb = flat(b);
    bool minimal = true;
    for (const auto& c : closure)
      if (flat(c) == fb && !dominates(c, b)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(b);
  }
  return out;
}

// Slide(a) (fixed = false) or FixSlide(a) (fixed = true): closure under
// ...0k... -> ...ij... with i + j = k. The fixed variant requires j > 0
// whenever the k sits at a position that is nonzero in a.
inline std::set<WeakComposition> slides(const WeakComposition& a, bool fixed) {
  return detail::bfs_closure(a, [&a, fixed](const WeakComposition& cur, auto&& emit) {
    std::vector<int> v(cur.begin(), cur.end());
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      if (v[p] != 0 || v[p + 1] == 0) continue;
      const int k = v[p + 1];
      const int min_right = (fixed && a[p + 1] != 0) ? 1 : 0;
      for (int j = min_right; j < k; ++j) {
        v[p] = k - j;
        v[p + 1] = j;
        emit(WeakComposition(v));
      }
      v[p] = 0;
      v[p + 1] = k;
    }
  });
}

// ---------------------------------------------------------------------------
// Permutations.

// v(a): the minimal-length permutation sending a to sort(a). Entry i is
// the position part a_i lands at when sorted decreasingly, the leftmost of
// equal parts counting as larger.
inline Permutation sorting_perm(const WeakComposition& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x] > a[y]; });
  std::vector<int> w(a.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) w[order[pos]] = static_cast<int>(pos + 1);
  return Permutation(std::move(w));
}

// Strong Bruhat order via the tableau criterion: u <= w iff for every k the
// increasingly sorted first k entries of u are entrywise at most those of w.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  std::vector<int> su, sw;
  for (std::size_t k = 0; k < u.size(); ++k) {
    su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
    sw.insert(std::upper_bound(sw.begin(), sw.end(), w[k]), w[k]);
    for (std::size_t i = 0; i <= k; ++i)
      if (su[i] > sw[i]) return false;
  }
  return true;
}

}  // namespace polybasis
