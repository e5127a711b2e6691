#pragma once

#include <utility>
#include <vector>

#include "greenbiset/biset.hpp"
#include "greenbiset/matrix.hpp"
#include "greenbiset/subgroups.hpp"

namespace gb {

/// A virtual G-set as an unreduced combination of transitive sets [G/A],
/// one term per subgroup (not per conjugacy class). Biset factors act on
/// these term by term; reduction to the class basis happens only when a
/// coefficient vector is needed, so intermediate groups never need a lattice.
struct GSetSum {
  GroupRef group;
  std::vector<std::pair<ElementSet, Scalar>> terms;

  static GSetSum basis(const GroupRef& g, const ElementSet& a, const Scalar& c);
  /// Terms for a coefficient vector over subgroup_lattice(g).
  static GSetSum from_coeffs(const GroupRef& g, const Vec& coeffs);
  /// Merges equal subgroups and drops zero coefficients.
  void normalize();
  /// Coefficients over the classes of subgroup_lattice(group).
  Vec reduce(const Field& f) const;
};

namespace burnside {

GSetSum apply(const Elemental& e, const GSetSum& x);
GSetSum apply(const BisetWord& w, const GSetSum& x);
/// [G/A] x [H/B] = [(G x H)/(A x B)]
GSetSum times(const GSetSum& x, const GSetSum& y);

}  // namespace burnside

/// M[A][B] = number of fixed points of A on G/B, rows and columns in the
/// canonical class order. Cached per group.
struct MarksTable {
  GroupRef group;
  std::vector<std::vector<long>> m;
  Matrix matrix() const;
};

const MarksTable& table_of_marks(const GroupRef& g);

/// Mark vector M x of a coefficient vector.
Vec marks_of(const GroupRef& g, const Vec& x);
/// Solve M x = phi by back substitution (M is upper triangular).
Vec from_marks(const GroupRef& g, const Vec& phi);

/// Product in kB(G) through marks. Characteristic 0 only (FieldError else).
Vec burnside_product(const GroupRef& g, const Vec& x, const Vec& y);

/// e_A for every class A, over a field of characteristic 0 (FieldError else).
std::vector<Vec> primitive_idempotents(const GroupRef& g, const Field& f);

/// (U x X)/G as an H-set, split into orbits; coefficients 1.
GSetSum biset_tensor_orbits(const ConcreteBiset& u, const ConcreteBiset& x);

/// Double cosets of A and B in G, counted directly.
std::size_t double_coset_count(const Group& g, const ElementSet& a, const ElementSet& b);

}  // namespace gb
