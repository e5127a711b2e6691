#pragma once

#include <vector>

#include "greenbiset/biset.hpp"
#include "greenbiset/cyclotomic.hpp"
#include "greenbiset/scalar.hpp"

namespace gb {

/// Irreducible complex characters, one row per character, one column per
/// conjugacy class (in the order of Group::conjugacy_classes). Rows are
/// sorted by degree, then lexicographically by value vector.
struct CharacterTable {
  GroupRef group;
  std::vector<std::vector<Cyclotomic>> irr;
  std::vector<long> degrees;
  std::size_t size() const { return irr.size(); }
};

/// Cached. Products are Kronecker products of their factors' tables; cyclic
/// groups use the closed form; everything else goes through Dixon-Schneider.
const CharacterTable& character_table(const GroupRef& g);

/// Dixon-Schneider over F_p for any group, uncached. Sorted like
/// character_table.
CharacterTable dixon_schneider(const GroupRef& g);
/// Closed form for cyclic groups; throws InvalidArgument otherwise.
CharacterTable cyclic_character_table(const GroupRef& g);

/// A class function, valued per conjugacy class.
struct ClassFunction {
  GroupRef group;
  std::vector<Cyclotomic> values;
};

namespace linrep {

ClassFunction apply(const Elemental& e, const ClassFunction& f);
ClassFunction apply(const BisetWord& w, const ClassFunction& f);
/// (f x g)(a, b) = f(a) g(b)
ClassFunction times(const ClassFunction& f, const ClassFunction& g);
/// (1/|G|) sum f(x) conj(g(x))
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

}  // namespace linrep

/// Galois orbits of irreducible characters (indices into character_table),
/// each sorted, ordered by least member.
const std::vector<std::vector<std::size_t>>& galois_orbits(const GroupRef& g);
/// Orbit sums; all values are rational integers.
std::vector<ClassFunction> rational_character_basis(const GroupRef& g);

ClassFunction from_irreducible_coeffs(const GroupRef& g, const Vec& coeffs);
/// Throws FieldError when a coefficient does not lie in f.
Vec to_irreducible_coeffs(const ClassFunction& cf, const Field& f);
ClassFunction from_rational_coeffs(const GroupRef& g, const Vec& coeffs);
/// Throws DomainError when cf is not in the span of the orbit sums.
Vec to_rational_coeffs(const ClassFunction& cf, const Field& f);

}  // namespace gb
