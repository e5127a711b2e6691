#pragma once

#include "greenbiset/functor.hpp"
#include "greenbiset/matrix.hpp"

namespace gb {

/// x . y in A(G): restriction of x x y to the diagonal.
Vec dot(const Functor& a, const GroupRef& g, const Vec& x, const Vec& y);

/// beta o alpha for beta in A(H x G), alpha in A(G x K); lands in A(H x K).
Vec compose(const Functor& a, const GroupRef& h, const GroupRef& g, const GroupRef& k, const Vec& beta, const Vec& alpha);

/// Transport from A(H x G) to A(G x H) along the swap.
Vec opposite(const Functor& a, const GroupRef& h, const GroupRef& g, const Vec& alpha);

/// epsilon_G in A(G x G).
Vec identity_morphism(const Functor& a, const GroupRef& g);

/// t_L = A(Def_1^L): A(L) -> A(1).
Vec deflate_to_one(const Functor& a, const GroupRef& l, const Vec& u);

/// Left multiplication by x on A(1), as a matrix over the basis of A(1).
Matrix multiplication_at_one(const Functor& a, const Vec& x);

/// An element of A(1) read as a scalar: its coefficient relative to the
/// unit when A(1) is one-dimensional, otherwise the trace of multiplication
/// by it (the trace form of A(1) over the coefficient field).
Scalar scalar_at_one(const Functor& a, const Vec& x);

enum class GramRoute {
  Dot,      // t_{H x L}(u . v)
  Compose,  // Def_1^{D(L)} Res^{L x L}_{D(L)} (u^op o v)
};

/// <u, v>_{H,L} as an element of A(1), for u, v in A(H x L).
Vec bilinear_value(const Functor& a, const GroupRef& h, const GroupRef& l, const Vec& u, const Vec& v,
                   GramRoute route = GramRoute::Dot);

/// Gram matrix of <-,->_{H,L} on the basis of A(H x L), entries via
/// scalar_at_one. Labeled by the basis.
Matrix gram_matrix(const Functor& a, const GroupRef& h, const GroupRef& l, GramRoute route = GramRoute::Dot);

}  // namespace gb
