#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenbiset/group.hpp"

namespace gb {

enum class ElementalKind { Ind, Res, Inf, Def, Iso };

/// One elemental biset, described by the homomorphism it is taken along:
///   Ind, Res along an inclusion i: H -> G  (Ind: H to G, Res: G to H)
///   Inf, Def along a projection p: G -> Q  (Inf: Q to G, Def: G to Q)
///   Iso along an isomorphism f: G -> H     (G to H)
/// An isomorphism is accepted wherever an inclusion or projection is.
class Elemental {
 public:
  static Elemental ind(GroupHom inclusion);
  static Elemental res(GroupHom inclusion);
  static Elemental inf(GroupHom projection);
  static Elemental def(GroupHom projection);
  static Elemental iso(GroupHom isomorphism);

  ElementalKind kind() const { return kind_; }
  const GroupHom& hom() const { return hom_; }
  const GroupRef& source() const;
  const GroupRef& target() const;
  /// Same factor with "x L" appended to every group involved.
  Elemental extended(const GroupRef& l) const;
  std::string to_string() const;

 private:
  Elemental(ElementalKind k, GroupHom h) : kind_(k), hom_(std::move(h)) {}
  ElementalKind kind_;
  GroupHom hom_;
};

/// A formal composite of elemental bisets. Factors are kept in application
/// order: factors[0] acts first. No rewriting is ever done.
class BisetWord {
 public:
  static BisetWord identity(GroupRef g);
  static BisetWord single(Elemental e);

  const GroupRef& source() const { return source_; }
  const GroupRef& target() const { return target_; }
  const std::vector<Elemental>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Appends a factor applied after the current word.
  BisetWord then(Elemental e) const;
  BisetWord then(const BisetWord& w) const;
  std::string to_string() const;

 private:
  BisetWord(GroupRef s, GroupRef t) : source_(std::move(s)), target_(std::move(t)) {}
  GroupRef source_, target_;
  std::vector<Elemental> factors_;
};

/// w1 o w2: apply w2, then w1. Throws DomainError unless w2.target = w1.source.
BisetWord concatenate(const BisetWord& w1, const BisetWord& w2);

/// Every factor extended by x L.
BisetWord extend(const BisetWord& w, const GroupRef& l);

/// Def^{H x D(G) x K}_{H x K} o Res^{H x G x G x K}_{H x D(G) x K}, with the
/// diagonal realized as H x G x K.
BisetWord composition_word(const GroupRef& h, const GroupRef& g, const GroupRef& k);
/// Ind_{D(G)}^{G x G} o Inf_1^{D(G)}: from the trivial group to G x G.
BisetWord identity_morphism_word(const GroupRef& g);
/// Iso o Res_{D(G)}^{G x G}: from G x G to G.
BisetWord diagonal_restriction_word(const GroupRef& g);
/// Def_1^G.
BisetWord deflation_to_one(const GroupRef& g);
/// Iso along the swap A x B -> B x A.
BisetWord swap_word(const GroupRef& a, const GroupRef& b);

/// CLI syntax: factors separated by ';' in application order, each one of
///   Ind[H<G]  Res[H<G]  Inf[G/N]  Def[G/N]  Iso[G>H]  Iso[swap]  Iso[swap:k]
/// Subgroups are located by the first embedding of the catalog group H (or
/// N, with normal image). Iso[swap] exchanges the two factors of the current
/// group; Iso[swap:k] moves the first k base factors to the end. A leading
/// swap needs `source`.
BisetWord parse_word(std::string_view text, const GroupRef& source = nullptr);

/// A finite (L, R)-biset: left L-action and right R-action on points
/// 0..size-1, stored for the generators of each group.
struct ConcreteBiset {
  GroupRef left, right;
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> left_gen;   // s . u for each generator s of left
  std::vector<std::vector<std::uint32_t>> right_gen;  // u . s for each generator s of right

  /// Full left action, |left| x size, row h.
  std::vector<std::uint32_t> left_action_table() const;
  bool actions_commute() const;
  std::size_t left_orbit_count() const;
};

/// The biset of one elemental factor.
ConcreteBiset realize(const Elemental& e);
/// The identity biset of G: G with left and right multiplication.
ConcreteBiset identity_biset(const GroupRef& g);
/// V x_K U for a (H,K)-biset V and a (K,G)-biset U.
ConcreteBiset balanced_product(const ConcreteBiset& v, const ConcreteBiset& u);
/// Balanced product of all factors.
ConcreteBiset realize(const BisetWord& w);

/// |target \ realize(w)|. Memoized per word.
std::size_t orbit_count_through(const BisetWord& w);

/// A left G-set as a (G, 1)-biset on `size` points.
ConcreteBiset transitive_gset(const GroupRef& g, const ElementSet& stabilizer);

/// Orbits of the left group with one stabilizer per orbit (stabilizer of the
/// least point of the orbit).
std::vector<ElementSet> orbit_stabilizers(const ConcreteBiset& x);

}  // namespace gb
