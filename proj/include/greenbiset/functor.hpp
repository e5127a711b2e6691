#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "greenbiset/biset.hpp"
#include "greenbiset/scalar.hpp"

namespace gb {

enum class FunctorKind { Burnside, LinRepC, LinRepQSpan, ConstantField, Shift, Cut };

/// A Green biset functor with a labeled basis at every group. Elements are
/// coefficient vectors over that basis.
class Functor {
 public:
  virtual ~Functor() = default;

  virtual FunctorKind kind() const = 0;
  /// Canonical spec string, parseable by parse_functor.
  virtual std::string spec() const = 0;
  virtual Field field() const = 0;

  /// Basis labels of A(G). Throws DomainError outside the functor's class
  /// of groups.
  virtual std::vector<std::string> basis(const GroupRef& g) const = 0;
  std::size_t dim(const GroupRef& g) const { return basis(g).size(); }

  /// A(w)(x); x lives at w.source().
  virtual Vec act(const BisetWord& w, const Vec& x) const = 0;
  /// A(w)(x x y) for x at G, y at H and w starting at G x H. The product is
  /// never reduced to a basis at G x H, so that group may be large.
  virtual Vec times_then_act(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y,
                             const BisetWord& w) const = 0;
  /// The unit of the external product, at the trivial group.
  virtual Vec unit() const = 0;

  /// Product of the orders of all shift groups wrapped inside this functor;
  /// evaluations at G live on groups of order |G| times this.
  virtual std::size_t shift_order() const { return 1; }

  Vec times(const GroupRef& g, const Vec& x, const GroupRef& h, const Vec& y) const;
  Vec basis_vector(const GroupRef& g, std::size_t i) const;
  Vec zero(const GroupRef& g) const;
};

using FunctorRef = std::shared_ptr<const Functor>;

FunctorRef burnside_functor(const Field& f);
FunctorRef repC_functor(const Field& f);
FunctorRef repQ_functor(const Field& f);
/// The constant functor with value F_q, defined on groups whose prime
/// divisors are all 1 mod q.
FunctorRef constant_functor(std::uint64_t q);
/// G -> A(G x L).
FunctorRef shift_functor(FunctorRef inner, GroupRef l);
/// G -> image of u -> e x u in A(G), for an idempotent e of A(1).
/// `e_name` is used in the spec string.
FunctorRef cut_functor(FunctorRef inner, Vec e, std::string e_name);

/// Grammar:
///   burnside(F) | repC(F) | repQ(F) | const(q) | shift(<spec>, <group>)
///   | cut(<spec>, eTop | e<i>)
/// with F one of Q, Cyc, F<q>. eTop and e<i> name primitive idempotents of
/// the Burnside ring of the shift group K when the inner spec is
/// shift(burnside(F), K) (eTop is the one for K itself); e0 is the unit when
/// the inner A(1) is one-dimensional.
FunctorRef parse_functor(std::string_view text);

/// Every prime divisor of `order` is 1 mod q.
bool satisfies_constant_constraint(std::uint64_t q, std::size_t order);

}  // namespace gb
