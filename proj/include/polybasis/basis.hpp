#pragma once

// Monomial expansions of every basis element, by each available description.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polybasis/basis_id.hpp"
#include "polybasis/composition.hpp"
#include "polybasis/polynomial.hpp"
#include "polybasis/tableau_models.hpp"

namespace polybasis {

// Method names accepted for each basis; the first entry is the default.
inline std::span<const std::string_view> methods(BasisId id) {
  static constexpr std::string_view monomial[] = {"definition"};
  static constexpr std::string_view mslide[] = {"definition", "mssf"};
  static constexpr std::string_view fslide[] = {"definition", "fssf", "slides"};
  static constexpr std::string_view particle[] = {"fixed_slides", "lssf"};
  static constexpr std::string_view atom[] = {"assf", "qkt1", "ssaf"};
  static constexpr std::string_view qkey[] = {"qkt", "qssf", "atoms"};
  static constexpr std::string_view qkey1[] = {"qkt1", "assf"};
  static constexpr std::string_view key[] = {"lswap", "qlswap", "bruhat"};
  static constexpr std::string_view schur[] = {"revssyt"};
  static constexpr std::string_view quasi_schur[] = {"qkey", "atoms"};
  switch (id) {
    case BasisId::monomial: return monomial;
    case BasisId::monomial_slide: return mslide;
    case BasisId::fundamental_slide: return fslide;
    case BasisId::particle: return particle;
    case BasisId::atom: return atom;
    case BasisId::qkey: return qkey;
    case BasisId::qkey1: return qkey1;
    case BasisId::key: return key;
    case BasisId::schur: return schur;
    case BasisId::quasi_schur: return quasi_schur;
  }
  return {};
}

inline std::string_view resolve_method(BasisId id, std::string_view method) {
  const auto names = methods(id);
  if (method.empty() || method == "default") return names.front();
  for (auto name : names)
    if (name == method) return name;
  throw std::invalid_argument("unknown method '" + std::string(method) + "' for basis " + std::string(to_string(id)));
}

template <class Range>
Polynomial generating_function(const Range& objects, std::size_t n) {
  Polynomial p(n);
  for (const auto& x : objects) p.add_term(weight(x, n), 1);
  return p;
}

template <class Set>
Polynomial monomial_sum(const Set& exponents, std::size_t n) {
  Polynomial p(n);
  for (const auto& b : exponents) p.add_term(b, 1);
  return p;
}

inline Polynomial basis_element(BasisId id, const WeakComposition& a, std::string_view method = {});

// Thread-safe memo of default-method basis elements. Readers share the
// lock; a miss computes outside the lock and inserts under an exclusive one.
class BasisCache {
 public:
  Polynomial get(BasisId id, const WeakComposition& a) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find({id, a});
      if (it != cache_.end()) return it->second;
    }
    Polynomial p = basis_element(id, a);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace({id, a}, std::move(p)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    cache_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<BasisId, WeakComposition>, Polynomial> cache_;
};

inline BasisCache& global_basis_cache() {
  static BasisCache cache;
  return cache;
}

inline Polynomial cached_basis_element(BasisId id, const WeakComposition& a) {
  return global_basis_cache().get(id, a);
}

namespace detail {

inline Polynomial sum_of(BasisId id, const std::vector<WeakComposition>& indices, std::size_t n) {
  Polynomial p(n);
  for (const auto& b : indices) p += cached_basis_element(id, b);
  return p;
}

template <class Set>
Polynomial sum_of(BasisId id, const Set& indices, std::size_t n) {
  return sum_of(id, std::vector<WeakComposition>(indices.begin(), indices.end()), n);
}

}  // namespace detail

inline Polynomial basis_element(BasisId id, const WeakComposition& a, std::string_view method) {
  const std::string_view m = resolve_method(id, method);
  const std::size_t n = a.size();
  switch (id) {
    case BasisId::monomial:
      return Polynomial::monomial(a);
    case BasisId::monomial_slide:
      if (m == "mssf") return generating_function(enumerate(Model::MSSF, a), n);
      return monomial_sum(dominating_same_flat(a), n);
    case BasisId::fundamental_slide:
      if (m == "fssf") return generating_function(enumerate(Model::FSSF, a), n);
      if (m == "slides") return monomial_sum(slides(a, false), n);
      return monomial_sum(dominating_refining(a), n);
    case BasisId::particle:
      if (m == "lssf") return generating_function(enumerate(Model::LSSF, a), n);
      return monomial_sum(slides(a, true), n);
    case BasisId::atom:
      if (m == "qkt1") return generating_function(enumerate(Model::qKT1, a), n);
      if (m == "ssaf") return generating_function(enumerate_assf_with_basement(a), n);
      return generating_function(enumerate(Model::ASSF, a), n);
    case BasisId::qkey:
      if (m == "qssf") return generating_function(enumerate(Model::QSSF, a), n);
      if (m == "atoms") return detail::sum_of(BasisId::atom, dominating_same_flat(a), n);
      return generating_function(enumerate(Model::qKT, a), n);
    case BasisId::qkey1:
      if (m == "assf") return generating_function(enumerate(Model::ASSF, a), n);
      return generating_function(enumerate(Model::qKT1, a), n);
    case BasisId::key:
      if (m == "qlswap") return detail::sum_of(BasisId::qkey, qlswap(a), n);
      if (m == "bruhat") {
        const Permutation w = sorting_perm(a);
        std::vector<WeakComposition> below;
        for (const auto& b : rearrangements(a))
          if (bruhat_leq(sorting_perm(b), w)) below.push_back(b);
        return detail::sum_of(BasisId::atom, below, n);
      }
      return detail::sum_of(BasisId::atom, lswap_closure(a), n);
    case BasisId::schur:
    case BasisId::quasi_schur:
      throw std::invalid_argument("schur and quasi_schur take a partition or composition plus a variable count");
  }
  throw std::invalid_argument("unknown basis id");
}

inline Polynomial schur(const Partition& lambda, std::size_t n) {
  return generating_function(enumerate_revssyt(lambda, static_cast<int>(n)), n);
}

// QS_alpha(x_1..x_n) as the quasi-key polynomial indexed by 0^{n - l} x alpha.
inline Polynomial quasi_schur(const StrongComposition& alpha, std::size_t n, std::string_view method = {}) {
  const std::string_view m = resolve_method(BasisId::quasi_schur, method);
  if (alpha.size() > n) return Polynomial(n);
  const WeakComposition a = prepend_zeros(WeakComposition(alpha.parts()), static_cast<int>(n - alpha.size()));
  return basis_element(BasisId::qkey, a, m == "atoms" ? "atoms" : "qkt");
}

// Dispatch over every id. For composition-indexed ids the index length must
// equal n.
inline Polynomial basis_element(BasisId id, const std::vector<int>& index, std::size_t n, std::string_view method = {}) {
  switch (id) {
    case BasisId::schur:
      resolve_method(id, method);
      return schur(Partition(index), n);
    case BasisId::quasi_schur:
      return quasi_schur(StrongComposition(index), n, method);
    default:
      if (index.size() != n) throw std::invalid_argument("index length must equal the number of variables");
      return basis_element(id, WeakComposition(index), method);
  }
}

// ---------------------------------------------------------------------------
// Stable-limit probe.

struct StableProbe {
  BasisId id;
  WeakComposition index;
  std::vector<Polynomial> truncations;  // entry m is the truncation for 0^m x index
  std::optional<int> stable_from;       // smallest m0 with constant truncations on [m0, m_max]
  std::optional<int> vanishes_from;     // smallest m0 with zero truncations on [m0, m_max]

  // The last two truncations agree and are nonzero.
  bool stable() const {
    const int m_max = static_cast<int>(truncations.size()) - 1;
    return stable_from && *stable_from < m_max && !truncations.back().is_zero();
  }
  bool vanishes() const { return vanishes_from.has_value(); }
};

inline StableProbe stable_limit_probe(BasisId id, const WeakComposition& a, int m_max) {
  if (!is_composition_indexed(id)) throw std::invalid_argument("stable probe needs a composition-indexed basis");
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  StableProbe report{id, a, {}, std::nullopt, std::nullopt};
  for (int m = 0; m <= m_max; ++m)
    report.truncations.push_back(truncate_tail(basis_element(id, prepend_zeros(a, m)), a.size()));
  int m0 = m_max;
  while (m0 > 0 && report.truncations[static_cast<std::size_t>(m0 - 1)] == report.truncations.back()) --m0;
  report.stable_from = m0;
  if (report.truncations.back().is_zero()) report.vanishes_from = m0;
  return report;
}

// ---------------------------------------------------------------------------
// Agreement of all descriptions.

struct DescriptionMismatch {
  BasisId id;
  WeakComposition index;
  std::string method;
};

struct DescriptionReport {
  std::size_t checked = 0;
  std::vector<DescriptionMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares every method of every composition-indexed basis against the
// default one, over all a with |a| <= max_weight and length in [1, max_len].
inline DescriptionReport verify_descriptions(int max_weight, std::size_t max_len) {
  DescriptionReport report;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& a : compositions_up_to(max_weight, len))
      for (BasisId id : kAllBasisIds) {
        if (!is_composition_indexed(id)) continue;
        const auto names = methods(id);
        const Polynomial reference = basis_element(id, a, names.front());
        for (std::size_t k = 1; k < names.size(); ++k) {
          ++report.checked;
          if (basis_element(id, a, names[k]) != reference)
            report.mismatches.push_back({id, a, std::string(names[k])});
        }
      }
  return report;
}

}  // namespace polybasis
