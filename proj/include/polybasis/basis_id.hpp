#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polybasis {

// Identifiers for the polynomial families. schur and quasi_schur are indexed
// by a partition / strong composition plus a variable count; every other
// family is indexed by a weak composition whose length is the variable count.
enum class BasisId {
  monomial,
  monomial_slide,
  fundamental_slide,
  particle,
  atom,
  qkey,
  qkey1,
  key,
  schur,
  quasi_schur,
};

inline constexpr std::array<BasisId, 10> kAllBasisIds = {
    BasisId::monomial, BasisId::monomial_slide, BasisId::fundamental_slide, BasisId::particle, BasisId::atom,
    BasisId::qkey,     BasisId::qkey1,          BasisId::key,               BasisId::schur,    BasisId::quasi_schur,
};

// The seven families of the positivity poset (Schubert polynomials excluded).
inline constexpr std::array<BasisId, 7> kPosetBases = {
    BasisId::key,  BasisId::qkey,     BasisId::fundamental_slide, BasisId::monomial_slide,
    BasisId::atom, BasisId::particle, BasisId::monomial,
};

inline std::string_view to_string(BasisId id) {
  switch (id) {
    case BasisId::monomial: return "monomial";
    case BasisId::monomial_slide: return "monomial_slide";
    case BasisId::fundamental_slide: return "fundamental_slide";
    case BasisId::particle: return "particle";
    case BasisId::atom: return "atom";
    case BasisId::qkey: return "qkey";
    case BasisId::qkey1: return "qkey1";
    case BasisId::key: return "key";
    case BasisId::schur: return "schur";
    case BasisId::quasi_schur: return "quasi_schur";
  }
  return "?";
}

inline BasisId parse_basis_id(std::string_view name) {
  for (BasisId id : kAllBasisIds)
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown basis id: " + std::string(name));
}

// True for families indexed by a weak composition (all but schur, quasi_schur).
inline bool is_composition_indexed(BasisId id) { return id != BasisId::schur && id != BasisId::quasi_schur; }

}  // namespace polybasis
