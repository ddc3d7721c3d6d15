#pragma once

// JSON forms of the library's values. Kept apart from the core headers so
// that the algebra does not depend on a JSON library.

#include <string>
#include <vector>

#include <json.hpp>

#include "polybasis/bijection.hpp"
#include "polybasis/composition.hpp"
#include "polybasis/expansion.hpp"
#include "polybasis/littlewood_richardson.hpp"
#include "polybasis/polynomial.hpp"
#include "polybasis/skyline.hpp"
#include "polybasis/tableau_models.hpp"

namespace polybasis::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeakComposition& a) { return Json(a.parts()); }
inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e.parts()}, {"coeff", c}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  Polynomial p(j.at("nvars").get<std::size_t>());
  for (const auto& t : j.at("terms")) p.add_term(WeakComposition(t.at("exp").get<std::vector<int>>()), t.at("coeff").get<Coefficient>());
  return p;
}

// {"0,1,0,3": c, ...} in prefix-sum-lex order.
template <class Map>
Json coefficient_map(const Map& coeffs) {
  Json out = Json::object();
  for (const auto& [e, c] : coeffs) out[to_string(e)] = c;
  return out;
}

inline Json coefficient_map(const Polynomial& p) { return coefficient_map(p.terms()); }
inline Json coefficient_map(const BasisExpansion& e) { return coefficient_map(e.coefficients()); }

inline Json to_json(const BasisExpansion& e) {
  return {{"basis", std::string(to_string(e.basis()))}, {"coefficients", coefficient_map(e)}};
}

inline BasisExpansion expansion_from_json(const Json& j) {
  BasisExpansion e(parse_basis_id(j.at("basis").get<std::string>()));
  for (const auto& [key, value] : j.at("coefficients").items()) e.add(parse_composition(key), value.get<Coefficient>());
  return e;
}

inline Json to_json(const SkylineFilling& f) {
  Json rows = Json::object();
  for (std::size_t r = 0; r < f.nrows(); ++r)
    if (!f.rows()[r].empty()) rows[std::to_string(r + 1)] = f.rows()[r];
  return {{"shape", f.shape().parts()}, {"rows", std::move(rows)}};
}

inline SkylineFilling filling_from_json(const Json& j) {
  const auto shape = j.at("shape").get<std::vector<int>>();
  std::vector<std::vector<int>> rows(shape.size());
  for (const auto& [key, value] : j.at("rows").items()) {
    const std::size_t r = std::stoul(key);
    if (r < 1 || r > rows.size()) throw std::invalid_argument("filling row index out of range: " + key);
    rows[r - 1] = value.get<std::vector<int>>();
  }
  return SkylineFilling(WeakComposition(shape), std::move(rows));
}

inline Json to_json(const ReverseSSYT& t) {
  return {{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

// Accepts {"rows": [[..], ..]} or a bare array of rows.
inline ReverseSSYT revssyt_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : j.at("rows");
  return ReverseSSYT(rows.get<std::vector<std::vector<int>>>());
}

inline Json to_json(const LRSFilling& L) {
  Json rows = Json::object();
  for (std::size_t r = 0; r < L.nrows(); ++r) {
    if (L.rows()[r].empty()) continue;
    Json row = Json::array();
    for (int v : L.rows()[r]) {
      if (v == kStar)
        row.push_back("*");
      else
        row.push_back(v);
    }
    rows[std::to_string(r + 1)] = std::move(row);
  }
  return {{"inner", L.inner().parts()}, {"outer", L.outer().parts()}, {"rows", std::move(rows)}};
}

inline LRSFilling lrs_from_json(const Json& j) {
  const auto inner = j.at("inner").get<std::vector<int>>();
  const auto outer = j.at("outer").get<std::vector<int>>();
  std::vector<std::vector<int>> rows(outer.size());
  for (const auto& [key, value] : j.at("rows").items()) {
    const std::size_t r = std::stoul(key);
    if (r < 1 || r > rows.size()) throw std::invalid_argument("LRS row index out of range: " + key);
    for (const auto& cell : value) rows[r - 1].push_back(cell.is_string() ? kStar : cell.get<int>());
  }
  return LRSFilling(WeakComposition(inner), WeakComposition(outer), std::move(rows));
}

inline Json to_json(const PairFilling& p) { return {{"S", to_json(p.S)}, {"T", to_json(p.T)}}; }

inline Json to_json(const RunDecomposition& runs) {
  Json out = Json::array();
  for (const auto& run : runs) out.push_back({{"row", run.row}, {"entries", run.entries}});
  return out;
}

inline Json to_json(const ColumnSets& sets) { return Json(sets); }

inline Json to_json(const StableProbe& probe) {
  Json truncations = Json::array();
  for (const auto& t : probe.truncations) truncations.push_back(coefficient_map(t));
  Json out = {{"basis", std::string(to_string(probe.id))},
              {"index", probe.index.parts()},
              {"truncations", std::move(truncations)},
              {"stable", probe.stable()},
              {"vanishes", probe.vanishes()}};
  out["stable_from"] = probe.stable_from ? Json(*probe.stable_from) : Json(nullptr);
  out["vanishes_from"] = probe.vanishes_from ? Json(*probe.vanishes_from) : Json(nullptr);
  return out;
}

inline Json to_json(const PairReport& p) {
  Json out = {{"source", std::string(to_string(p.source))},
              {"target", std::string(to_string(p.target))},
              {"relation", std::string(to_string(p.relation))},
              {"checked", p.checked},
              {"ok", p.ok()}};
  if (p.failure) {
    out["failure"] = {{"index", p.failure->parts()}, {"reason", p.failure_reason}};
  }
  if (p.negative_witness) {
    out["negative_witness"] = {{"index", p.negative_witness->first.parts()},
                               {"coefficients", coefficient_map(p.negative_witness->second)}};
  }
  return out;
}

inline Json to_json(const PosetReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back(to_json(p));
  return {{"max_weight", r.max_weight}, {"max_len", r.max_len}, {"ok", r.ok()}, {"pairs", std::move(pairs)}};
}

inline Json to_json(const ProductReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"basis", std::string(to_string(f.id))},
                        {"index", f.index.parts()},
                        {"lambda", f.lambda.parts()},
                        {"reason", f.reason}});
  return {{"checked", r.checked}, {"ok", r.ok()}, {"failures", std::move(failures)}};
}

inline Json to_json(const DescriptionReport& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back(
        {{"basis", std::string(to_string(m.id))}, {"index", m.index.parts()}, {"method", m.method}});
  return {{"checked", r.checked}, {"ok", r.ok()}, {"mismatches", std::move(mismatches)}};
}

}  // namespace polybasis::json
