#include "greenbiset/green.hpp"

#include "greenbiset/error.hpp"

namespace gb {

Vec dot(const Functor& a, const GroupRef& g, const Vec& x, const Vec& y) {
  return a.times_then_act(g, x, g, y, diagonal_restriction_word(g));
}

Vec compose(const Functor& a, const GroupRef& h, const GroupRef& g, const GroupRef& k, const Vec& beta, const Vec& alpha) {
  return a.times_then_act(direct_product(h, g), beta, direct_product(g, k), alpha, composition_word(h, g, k));
}

Vec opposite(const Functor& a, const GroupRef& h, const GroupRef& g, const Vec& alpha) {
  return a.act(swap_word(h, g), alpha);
}

Vec identity_morphism(const Functor& a, const GroupRef& g) { return a.act(identity_morphism_word(g), a.unit()); }

Vec deflate_to_one(const Functor& a, const GroupRef& l, const Vec& u) { return a.act(deflation_to_one(l), u); }

Matrix multiplication_at_one(const Functor& a, const Vec& x) {
  const GroupRef one = trivial_group();
  const std::size_t n = a.dim(one);
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(a.times(one, x, one, a.basis_vector(one, j)));
  return Matrix::from_columns(cols, n, a.field());
}

Scalar scalar_at_one(const Functor& a, const Vec& x) {
  if (x.size() == 1) return x[0] / a.unit()[0];
  const Matrix m = multiplication_at_one(a, x);
  Scalar t = Scalar::zero(a.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Vec bilinear_value(const Functor& a, const GroupRef& h, const GroupRef& l, const Vec& u, const Vec& v,
                   GramRoute route) {
  const GroupRef hl = direct_product(h, l);
  if (route == GramRoute::Dot)
    return a.times_then_act(hl, u, hl, v, diagonal_restriction_word(hl).then(deflation_to_one(hl)));
  const BisetWord finish = diagonal_restriction_word(l).then(deflation_to_one(l));
  return a.act(finish, compose(a, l, h, l, opposite(a, h, l, u), v));
}

Matrix gram_matrix(const Functor& a, const GroupRef& h, const GroupRef& l, GramRoute route) {
  const GroupRef hl = direct_product(h, l);
  const auto labels = a.basis(hl);
  const std::size_t n = labels.size();
  Matrix out(n, n, a.field());
  std::vector<Vec> basis, ops;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(a.basis_vector(hl, i));
  if (route == GramRoute::Compose)
    for (const auto& b : basis) ops.push_back(opposite(a, h, l, b));
  const BisetWord finish = diagonal_restriction_word(l).then(deflation_to_one(l));
  const BisetWord dot_then_t = diagonal_restriction_word(hl).then(deflation_to_one(hl));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v;
      if (route == GramRoute::Dot) {
        v = a.times_then_act(hl, basis[i], hl, basis[j], dot_then_t);
      } else {
        // u^op in A(L x H), v in A(H x L): composite at L x L
        v = a.act(finish, compose(a, l, h, l, ops[i], basis[j]));
      }
      out(i, j) = scalar_at_one(a, v);
    }
  out.set_row_labels(labels);
  out.set_col_labels(labels);
  return out;
}

}  // namespace gb
