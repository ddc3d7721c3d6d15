#pragma once

// Exact sparse polynomials over the integers keyed by exponent weak
// compositions, and the triangular change-of-basis engine.

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "polybasis/basis_id.hpp"
#include "polybasis/composition.hpp"

namespace polybasis {

using Coefficient = std::int64_t;

namespace detail {

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

}  // namespace detail

class Polynomial {
 public:
  using Terms = std::map<WeakComposition, Coefficient, PrefixSumLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(const WeakComposition& exponent, Coefficient c = 1) {
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
  }
  static Polynomial one(std::size_t nvars) { return monomial(WeakComposition(std::vector<int>(nvars, 0))); }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(const WeakComposition& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const WeakComposition& exponent, Coefficient c) {
    if (exponent.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    require_compatible(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    require_compatible(q);
    for (const auto& [e, c] : q.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  Polynomial& operator*=(Coefficient k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = detail::checked_mul(c, k);
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, Coefficient k) { return p *= k; }
  friend Polynomial operator*(Coefficient k, Polynomial p) { return p *= k; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
  }

  bool all_coefficients_positive() const {
    for (const auto& [e, c] : terms_)
      if (c <= 0) return false;
    return true;
  }

 private:
  void require_compatible(const Polynomial& q) const {
    if (q.nvars_ != nvars_) throw std::invalid_argument("polynomial nvars mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("multiply: nvars mismatch");
  Polynomial out(p.nvars());
  std::vector<int> e(p.nvars());
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(WeakComposition(e), detail::checked_mul(cp, cq));
    }
  return out;
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

// Sets x_i = 0 for i > n and drops those variables.
inline Polynomial truncate_tail(const Polynomial& p, std::size_t n) {
  if (n > p.nvars()) throw std::invalid_argument("truncate_tail: n exceeds nvars");
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (std::size_t i = n; i < e.size(); ++i)
      if (e[i] != 0) {
        keep = false;
        break;
      }
    if (keep) out.add_term(WeakComposition(std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n))), c);
  }
  return out;
}

// Coefficients of a polynomial in a composition-indexed basis.
class BasisExpansion {
 public:
  using Coefficients = std::map<WeakComposition, Coefficient, PrefixSumLess>;

  BasisExpansion() = default;
  explicit BasisExpansion(BasisId basis) : basis_(basis) {}

  BasisId basis() const noexcept { return basis_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  Coefficient coefficient(const WeakComposition& index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? 0 : it->second;
  }

  void add(const WeakComposition& index, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  bool all_positive() const {
    for (const auto& [b, c] : coeffs_)
      if (c <= 0) return false;
    return true;
  }
  bool has_negative() const {
    for (const auto& [b, c] : coeffs_)
      if (c < 0) return true;
    return false;
  }

  friend bool operator==(const BasisExpansion& x, const BasisExpansion& y) {
    return x.basis_ == y.basis_ && x.coeffs_ == y.coeffs_;
  }

 private:
  BasisId basis_ = BasisId::monomial;
  Coefficients coeffs_;
};

// Raised when a basis generator does not have x^b as its prefix-sum-lex
// minimal term with coefficient 1.
class BasisContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Triangular elimination. `basis(b)` must return a polynomial whose
// prefix-sum-lex smallest term is x^b with coefficient 1. Each step removes
// the smallest remaining monomial and only adds strictly larger ones, so the
// loop terminates.
template <class Generator>
BasisExpansion expand_in_basis(const Polynomial& p, BasisId target, Generator&& basis) {
  BasisExpansion out(target);
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const auto [pivot, c] = *rest.terms().begin();
    const Polynomial g = basis(pivot);
    if (g.nvars() != p.nvars()) throw BasisContractError("basis element has wrong number of variables");
    if (g.is_zero() || g.terms().begin()->first != pivot)
      throw BasisContractError("basis element for " + to_string(pivot) + " has a term below its index");
    if (g.terms().begin()->second != 1)
      throw BasisContractError("basis element for " + to_string(pivot) + " has leading coefficient != 1");
    rest -= g * c;
    out.add(pivot, c);
  }
  return out;
}

// Sum of c_b * basis(b).
template <class Generator>
Polynomial resum(const BasisExpansion& e, std::size_t nvars, Generator&& basis) {
  Polynomial out(nvars);
  for (const auto& [b, c] : e.coefficients()) out += basis(b) * c;
  return out;
}

}  // namespace polybasis
