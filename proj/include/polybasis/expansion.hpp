#pragma once

// Positive change-of-basis formulas along the positivity poset, the generic
// triangular expansion, and the sweep that checks both against each other.

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybasis/basis.hpp"
#include "polybasis/basis_id.hpp"
#include "polybasis/composition.hpp"
#include "polybasis/polynomial.hpp"
#include "polybasis/tableau_models.hpp"

namespace polybasis {

struct PosetEdge {
  BasisId source;
  BasisId target;

  friend auto operator<=>(const PosetEdge&, const PosetEdge&) = default;
};

namespace detail {

// qkey1 is the atom basis under another name.
inline BasisId poset_node(BasisId id) { return id == BasisId::qkey1 ? BasisId::atom : id; }

// Covering relations of the poset.
inline const std::vector<PosetEdge>& poset_covers() {
  static const std::vector<PosetEdge> covers = {
      {BasisId::key, BasisId::qkey},
      {BasisId::qkey, BasisId::fundamental_slide},
      {BasisId::qkey, BasisId::atom},
      {BasisId::fundamental_slide, BasisId::monomial_slide},
      {BasisId::fundamental_slide, BasisId::particle},
      {BasisId::atom, BasisId::particle},
      {BasisId::monomial_slide, BasisId::monomial},
      {BasisId::particle, BasisId::monomial},
  };
  return covers;
}

}  // namespace detail

// Strict order of the poset on the seven non-Schubert bases.
inline bool poset_greater(BasisId source, BasisId target) {
  source = detail::poset_node(source);
  target = detail::poset_node(target);
  if (source == target) return false;
  std::deque<BasisId> queue{source};
  std::set<BasisId> seen{source};
  while (!queue.empty()) {
    const BasisId cur = queue.front();
    queue.pop_front();
    for (const auto& e : detail::poset_covers())
      if (e.source == cur && seen.insert(e.target).second) {
        if (e.target == target) return true;
        queue.push_back(e.target);
      }
  }
  return false;
}

inline bool poset_comparable(BasisId x, BasisId y) {
  return detail::poset_node(x) == detail::poset_node(y) || poset_greater(x, y) || poset_greater(y, x);
}

// Edges that have their own positive formula.
inline const std::vector<PosetEdge>& direct_edges() {
  static const std::vector<PosetEdge> edges = {
      {BasisId::key, BasisId::atom},
      {BasisId::key, BasisId::qkey},
      {BasisId::qkey, BasisId::atom},
      {BasisId::qkey, BasisId::qkey1},
      {BasisId::qkey, BasisId::fundamental_slide},
      {BasisId::fundamental_slide, BasisId::monomial_slide},
      {BasisId::fundamental_slide, BasisId::particle},
      {BasisId::atom, BasisId::particle},
      {BasisId::monomial_slide, BasisId::monomial},
      {BasisId::particle, BasisId::monomial},
  };
  return edges;
}

inline bool is_direct_edge(BasisId source, BasisId target) {
  const auto& edges = direct_edges();
  return std::find(edges.begin(), edges.end(), PosetEdge{source, target}) != edges.end();
}

// One application of a direct positive formula.
inline BasisExpansion expand_direct(BasisId source, BasisId target, const WeakComposition& a) {
  BasisExpansion out(target);
  auto add_all = [&out](const auto& indices) {
    for (const auto& b : indices) out.add(b, 1);
  };
  auto add_weights = [&out, &a](Model model, bool highest_only) {
    for (const auto& f : enumerate(model, a))
      if (!highest_only || is_particle_highest(f)) out.add(weight(f, a.size()), 1);
  };
  const PosetEdge e{source, target};
  if (e == PosetEdge{BasisId::key, BasisId::atom}) {
    add_all(lswap_closure(a));
  } else if (e == PosetEdge{BasisId::key, BasisId::qkey}) {
    add_all(qlswap(a));
  } else if (e == PosetEdge{BasisId::qkey, BasisId::atom} || e == PosetEdge{BasisId::qkey, BasisId::qkey1}) {
    add_all(dominating_same_flat(a));
  } else if (e == PosetEdge{BasisId::qkey, BasisId::fundamental_slide}) {
    add_weights(Model::QqKT, false);
  } else if (e == PosetEdge{BasisId::fundamental_slide, BasisId::monomial_slide}) {
    for (const auto& b : dominating_refining(a))
      if (strongly_dominates(b, a)) out.add(b, 1);
  } else if (e == PosetEdge{BasisId::fundamental_slide, BasisId::particle}) {
    add_all(dominating_same_flat(a));
  } else if (e == PosetEdge{BasisId::atom, BasisId::particle}) {
    add_weights(Model::ASSF, true);
  } else if (e == PosetEdge{BasisId::monomial_slide, BasisId::monomial}) {
    add_all(dominating_same_flat(a));
  } else if (e == PosetEdge{BasisId::particle, BasisId::monomial}) {
    add_all(slides(a, true));
  } else {
    throw std::invalid_argument("no direct formula for " + std::string(to_string(source)) + " -> " +
                                std::string(to_string(target)));
  }
  return out;
}

// Compose an expansion with a further direct edge.
inline BasisExpansion compose(const BasisExpansion& first, BasisId next) {
  BasisExpansion out(next);
  for (const auto& [b, c] : first.coefficients()) {
    const BasisExpansion step = expand_direct(first.basis(), next, b);
    for (const auto& [d, k] : step.coefficients()) out.add(d, detail::checked_mul(c, k));
  }
  return out;
}

// Expansion along a chain of direct edges path[0] -> path[1] -> ...
inline BasisExpansion expand_along(const std::vector<BasisId>& path, const WeakComposition& a) {
  if (path.empty()) throw std::invalid_argument("empty path");
  BasisExpansion cur(path.front());
  cur.add(a, 1);
  for (std::size_t k = 1; k < path.size(); ++k) cur = compose(cur, path[k]);
  return cur;
}

// Every chain of direct edges from source to target.
inline std::vector<std::vector<BasisId>> all_paths(BasisId source, BasisId target) {
  std::vector<std::vector<BasisId>> out;
  std::vector<BasisId> path{source};
  auto rec = [&](auto&& self, BasisId cur) -> void {
    if (cur == target && path.size() > 1) {
      out.push_back(path);
      return;
    }
    for (const auto& e : direct_edges())
      if (e.source == cur) {
        path.push_back(e.target);
        self(self, e.target);
        path.pop_back();
      }
  };
  rec(rec, source);
  return out;
}

// Shortest chain of direct edges (ties broken by edge-list order).
inline std::optional<std::vector<BasisId>> shortest_path(BasisId source, BasisId target) {
  std::map<BasisId, BasisId> parent;
  std::deque<BasisId> queue{source};
  std::set<BasisId> seen{source};
  while (!queue.empty()) {
    const BasisId cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    for (const auto& e : direct_edges())
      if (e.source == cur && seen.insert(e.target).second) {
        parent[e.target] = cur;
        queue.push_back(e.target);
      }
  }
  if (!seen.count(target)) return std::nullopt;
  std::vector<BasisId> path{target};
  while (path.back() != source) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// Positive expansion of basis_element(source, a) in target, for a strict
// poset relation source > target (or the identity).
inline BasisExpansion expand_positive(BasisId source, BasisId target, const WeakComposition& a) {
  if (source == target || detail::poset_node(source) == detail::poset_node(target)) {
    BasisExpansion out(target);
    out.add(a, 1);
    return out;
  }
  if (!poset_greater(source, target))
    throw std::invalid_argument(std::string(to_string(source)) + " -> " + std::string(to_string(target)) +
                                " is not a poset relation; use expand_generic");
  auto path = shortest_path(detail::poset_node(source), target);
  if (!path) throw std::logic_error("poset relation without a chain of formulas");
  return expand_along(*path, a);
}

// Exact expansion through triangular elimination; coefficients may be
// negative.
inline BasisExpansion expand_generic(BasisId source, BasisId target, const WeakComposition& a) {
  if (!is_composition_indexed(source) || !is_composition_indexed(target))
    throw std::invalid_argument("generic expansion needs composition-indexed bases");
  return expand_in_basis(cached_basis_element(source, a), target,
                         [target](const WeakComposition& b) { return cached_basis_element(target, b); });
}

// Expansion of an arbitrary polynomial in a composition-indexed basis.
inline BasisExpansion expand_polynomial(const Polynomial& p, BasisId target) {
  return expand_in_basis(p, target, [target](const WeakComposition& b) { return cached_basis_element(target, b); });
}

inline Polynomial resum(const BasisExpansion& e, std::size_t nvars) {
  const BasisId id = e.basis();
  return resum(e, nvars, [id](const WeakComposition& b) { return cached_basis_element(id, b); });
}

// ---------------------------------------------------------------------------
// Poset sweep.

enum class PairRelation { positive, incomparable, reverse };

inline std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::positive: return "positive";
    case PairRelation::incomparable: return "incomparable";
    case PairRelation::reverse: return "reverse";
  }
  return "?";
}

struct PairReport {
  BasisId source;
  BasisId target;
  PairRelation relation;
  std::size_t checked = 0;
  // Positive pairs: first index where positivity, re-summation or agreement
  // with the generic expansion failed.
  std::optional<WeakComposition> failure;
  std::string failure_reason;
  // Other pairs: first index whose generic expansion has a negative coefficient.
  std::optional<std::pair<WeakComposition, BasisExpansion>> negative_witness;

  bool ok() const {
    if (relation == PairRelation::positive) return !failure.has_value();
    return negative_witness.has_value();
  }
};

struct PosetReport {
  int max_weight = 0;
  std::size_t max_len = 0;
  std::vector<PairReport> pairs;

  bool ok() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.ok(); });
  }
};

inline PairRelation relation_of(BasisId source, BasisId target) {
  if (poset_greater(source, target)) return PairRelation::positive;
  if (poset_greater(target, source)) return PairRelation::reverse;
  return PairRelation::incomparable;
}

// For all a with |a| <= max_weight, 1 <= length <= max_len, and every ordered
// pair of distinct poset bases: positive formulas are positive, re-sum
// exactly and match the generic expansion; every other pair shows a negative
// coefficient somewhere in range.
inline PosetReport verify_poset(int max_weight, std::size_t max_len) {
  PosetReport report;
  report.max_weight = max_weight;
  report.max_len = max_len;
  std::vector<WeakComposition> indices;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (auto& a : compositions_up_to(max_weight, len)) indices.push_back(std::move(a));

  for (BasisId source : kPosetBases)
    for (BasisId target : kPosetBases) {
      if (source == target) continue;
      PairReport pr{source, target, relation_of(source, target), 0, std::nullopt, {}, std::nullopt};
      for (const auto& a : indices) {
        ++pr.checked;
        const BasisExpansion generic = expand_generic(source, target, a);
        if (pr.relation == PairRelation::positive) {
          if (pr.failure) continue;
          const BasisExpansion positive = expand_positive(source, target, a);
          if (!positive.all_positive()) {
            pr.failure = a;
            pr.failure_reason = "non-positive coefficient";
          } else if (!(positive == generic)) {
            pr.failure = a;
            pr.failure_reason = "formula disagrees with triangular expansion";
          } else if (resum(positive, a.size()) != cached_basis_element(source, a)) {
            pr.failure = a;
            pr.failure_reason = "re-summation differs";
          }
        } else if (!pr.negative_witness && generic.has_negative()) {
          pr.negative_witness = {{a, generic}};
          break;
        }
      }
      report.pairs.push_back(std::move(pr));
    }
  return report;
}

}  // namespace polybasis
