#pragma once

#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "polybasis/polybasis.hpp"

namespace testing_helpers {

using namespace polybasis;

inline WeakComposition wc(std::vector<int> v) { return WeakComposition(std::move(v)); }

// Sum of x^e with coefficient 1 each.
inline Polynomial monos(std::size_t n, std::initializer_list<std::vector<int>> exps) {
  Polynomial p(n);
  for (const auto& e : exps) p.add_term(WeakComposition(e), 1);
  return p;
}

inline Polynomial poly(std::size_t n, std::initializer_list<std::pair<std::vector<int>, Coefficient>> terms) {
  Polynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(WeakComposition(e), c);
  return p;
}

inline BasisExpansion expansion(BasisId id, std::initializer_list<std::pair<std::vector<int>, Coefficient>> terms) {
  BasisExpansion e(id);
  for (const auto& [b, c] : terms) e.add(WeakComposition(b), c);
  return e;
}

inline BasisExpansion ones(BasisId id, std::initializer_list<std::vector<int>> indices) {
  BasisExpansion e(id);
  for (const auto& b : indices) e.add(WeakComposition(b), 1);
  return e;
}

inline std::vector<WeakComposition> index_range(int max_weight, std::size_t max_len) {
  std::vector<WeakComposition> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (auto& a : compositions_up_to(max_weight, len)) out.push_back(std::move(a));
  return out;
}

}  // namespace testing_helpers
