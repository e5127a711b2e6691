#include "greenbiset/checks.hpp"

#include <random>

#include "greenbiset/error.hpp"
#include "greenbiset/green.hpp"
#include "greenbiset/linalg.hpp"
#include "greenbiset/linrep.hpp"
#include "greenbiset/polynomial.hpp"

namespace gb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::OutOfScopeLimit: return "out-of-scope-limit";
  }
  return "?";
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["spec"] = spec;
  j["scope"] = scope;
  j["verdict"] = to_string(verdict);
  j["witnesses"] = witnesses;
  j["caveats"] = caveats;
  return j;
}

nlohmann::ordered_json to_json(const Vec& v) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

nlohmann::ordered_json to_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  if (!m.row_labels().empty()) j["labels"] = m.row_labels();
  auto e = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) e.push_back(to_json(m.row(r)));
  j["entries"] = e;
  return j;
}

std::vector<std::string> catalog_up_to(std::size_t n) {
  static const std::vector<std::pair<std::size_t, std::string>> kCatalog = {
      {1, "C1"},   {2, "C2"},        {3, "C3"},  {4, "C4"},         {4, "C2xC2"}, {5, "C5"},    {6, "C6"},  {6, "S3"},
      {7, "C7"},   {8, "C8"},        {8, "C2xC4"}, {8, "C2xC2xC2"}, {8, "D8"},    {8, "Q8"},    {9, "C9"},  {9, "C3xC3"},
      {10, "C10"}, {10, "D10"},      {11, "C11"}, {12, "C12"},      {12, "C2xC6"}, {12, "A4"},  {12, "D12"}};
  std::vector<std::string> out;
  for (const auto& [order, spec] : kCatalog)
    if (order <= n) out.push_back(spec);
  return out;
}

namespace {

CheckReport make_report(const std::string& check, const Functor& a, std::vector<std::string> scope) {
  CheckReport r;
  r.check = check;
  r.spec = a.spec();
  r.scope = std::move(scope);
  r.caveats.push_back(kCatalogCaveat);
  return r;
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::size_t nonzeros(const Vec& v) {
  std::size_t n = 0;
  for (const auto& x : v) n += !x.is_zero();
  return n;
}

// p(M) v by Horner.
Vec poly_apply(const QPoly& p, const Matrix& m, const Vec& v) {
  Vec acc = zero_vec(m.field(), v.size());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = m.apply(acc);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += Scalar(p.coeffs()[k]) * v[i];
  }
  return acc;
}

nlohmann::ordered_json poly_json(const QPoly& p) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) j.push_back(gb::to_string(c));
  return j;
}

std::vector<Vec> basis_of(const Functor& a, const GroupRef& g) {
  std::vector<Vec> out;
  for (std::size_t i = 0, n = a.dim(g); i < n; ++i) out.push_back(a.basis_vector(g, i));
  return out;
}

}  // namespace

CheckReport is_field_at_one(const Functor& a) {
  const GroupRef one = trivial_group();
  CheckReport rep = make_report("field-at-one", a, {"C1"});
  const std::size_t n = a.dim(one);
  rep.witnesses["dimension"] = n;
  if (n == 1) return rep;
  if (a.field().characteristic() != 0) {
    rep.verdict = Verdict::OutOfScopeLimit;
    rep.witnesses["reason"] = "A(1) has dimension > 1 over a field of positive characteristic";
    return rep;
  }
  std::vector<Matrix> mult;
  for (const auto& b : basis_of(a, one)) mult.push_back(multiplication_at_one(a, b));
  Matrix t(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = trace(mult[i] * mult[j]);
  const auto radical = radical_of_symmetric_form(t);
  if (!radical.empty()) {
    rep.verdict = Verdict::Fail;
    rep.witnesses["reason"] = "nonzero radical";
    rep.witnesses["nilpotent"] = to_json(radical[0]);
    return rep;
  }
  const Vec u = a.unit();
  std::mt19937 rng(1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec c(n);
    for (std::size_t i = 0; i < n; ++i)
      c[i] = Scalar(attempt == 0 ? static_cast<long>(i + 1) : std::uniform_int_distribution<long>(-5, 5)(rng));
    Matrix lx(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (!c[i].is_zero()) lx(r, s) += c[i] * mult[i](r, s);
    const QPoly f = annihilating_polynomial(lx, u);
    std::vector<Rational> roots;
    try {
      roots = rational_roots(f);
    } catch (const Error&) {
      continue;
    }
    if (!roots.empty() && f.degree() > 1) {
      std::optional<Vec> best;
      for (const auto& lambda : roots) {
        const QPoly g = f.divmod(QPoly({-lambda, Rational(1)})).first;
        Vec e = poly_apply(g, lx, u);
        const Scalar s = Scalar(g.eval(lambda)).inverse();
        for (auto& x : e) x *= s;
        if (!best || nonzeros(e) < nonzeros(*best)) best = e;
      }
      if (a.times(one, *best, one, *best) != *best) throw Error("idempotent witness failed to verify");
      rep.verdict = Verdict::Fail;
      rep.witnesses["reason"] = "nontrivial idempotent";
      rep.witnesses["idempotent"] = to_json(*best);
      rep.witnesses["labels"] = a.basis(one);
      return rep;
    }
    if (f.degree() == static_cast<int>(n)) {
      for (std::uint64_t q = 3; q < 400; q += 2) {
        if (!is_prime(q)) continue;
        if (irreducible_mod_prime(f, q)) {
          rep.witnesses["minimal_polynomial"] = poly_json(f);
          rep.witnesses["irreducible_mod"] = q;
          return rep;
        }
      }
    }
  }
  rep.verdict = Verdict::OutOfScopeLimit;
  rep.witnesses["reason"] = "no generic element settled the question";
  return rep;
}

std::optional<Vec> left_inverse(const Functor& a, const GroupRef& h, const Vec& x) {
  if (is_zero_vec(x)) throw InvalidArgument("left inverse of zero");
  const GroupRef one = trivial_group();
  std::vector<Vec> cols;
  for (const auto& b : basis_of(a, h)) cols.push_back(compose(a, one, h, one, b, x));
  return solve_linear(Matrix::from_columns(cols, a.dim(one), a.field()), a.unit());
}

CheckReport green_field_certificate(const Functor& a, const std::vector<std::string>& catalog) {
  CheckReport rep = make_report("green-field", a, catalog);
  const CheckReport field = is_field_at_one(a);
  rep.witnesses["field_at_one"] = field.to_json()["witnesses"];
  if (field.verdict != Verdict::Pass) {
    rep.verdict = field.verdict;
    return rep;
  }
  const GroupRef one = trivial_group();
  auto ranks = nlohmann::ordered_json::object();
  for (const auto& name : catalog) {
    const GroupRef h = make_group(name);
    const Matrix g = gram_matrix(a, h, one);
    const std::size_t r = rank(g);
    ranks[name] = std::to_string(r) + "/" + std::to_string(g.rows());
    if (r == g.rows()) continue;
    const auto radical = g.is_symmetric() ? radical_of_symmetric_form(g) : kernel_basis(g);
    rep.verdict = Verdict::Fail;
    rep.witnesses["ranks"] = ranks;
    rep.witnesses["group"] = name;
    rep.witnesses["gram"] = to_json(g);
    rep.witnesses["rank"] = r;
    rep.witnesses["radical_vector"] = to_json(radical[0]);
    auto inverses = nlohmann::ordered_json::array();
    for (const auto& v : radical) {
      auto b = left_inverse(a, h, v);
      inverses.push_back(b ? to_json(*b) : nlohmann::ordered_json("none"));
    }
    rep.witnesses["left_inverse_of_radical"] = inverses;
    return rep;
  }
  rep.witnesses["ranks"] = ranks;
  return rep;
}

CheckReport anisotropy_check(const Functor& a, const GroupRef& l) {
  if (a.field() != Field::rationals()) throw FieldError("anisotropy check needs the rational field");
  CheckReport rep = make_report("anisotropic", a, {l->label()});
  const Matrix g = gram_matrix(a, l, l);
  rep.witnesses["gram"] = to_json(g);
  if (gram_matrix(a, l, l, GramRoute::Compose) != g) {
    rep.verdict = Verdict::Fail;
    rep.witnesses["reason"] = "the two Gram routes disagree";
    return rep;
  }
  if (a.kind() == FunctorKind::LinRepC || a.kind() == FunctorKind::LinRepQSpan) {
    const GroupRef ll = direct_product(l, l);
    const auto& cc = ll->conjugacy_classes();
    std::vector<ClassFunction> chars;
    for (const auto& b : basis_of(a, ll))
      chars.push_back(a.kind() == FunctorKind::LinRepC ? from_irreducible_coeffs(ll, b) : from_rational_coeffs(ll, b));
    Matrix dual(chars.size(), chars.size(), a.field());
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < chars.size(); ++j) {
        Cyclotomic s;
        for (std::size_t k = 0; k < cc.size(); ++k)
          s += chars[i].values[k] * chars[j].values[k] * Cyclotomic(static_cast<long>(cc.classes[k].size()));
        s /= Cyclotomic(static_cast<long>(ll->order()));
        dual(i, j) = Scalar(s.rational_value());
      }
    bool agree = true;
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) agree = agree && dual(i, j) == g(i, j);
    rep.witnesses["character_formula_agrees"] = agree;
    if (!agree) {
      rep.verdict = Verdict::Fail;
      rep.witnesses["character_formula"] = to_json(dual);
      return rep;
    }
  }
  const auto pd = is_positive_definite(g);
  auto piv = nlohmann::ordered_json::array();
  for (const auto& p : pd.pivots) piv.push_back(gb::to_string(p));
  rep.witnesses["ldl_pivots"] = piv;
  if (!pd.positive_definite) {
    rep.verdict = Verdict::Fail;
    Vec w;
    for (const auto& q : *pd.witness) w.push_back(Scalar(q));
    rep.witnesses["isotropic_or_negative_vector"] = to_json(w);
    rep.witnesses["value"] = gb::to_string(pd.witness_value);
  }
  return rep;
}

CheckReport endo_semisimplicity(const Functor& a, const GroupRef& l) {
  if (a.field().characteristic() != 0)
    throw FieldError("the trace-form radical criterion needs characteristic 0; use the strictness route instead");
  CheckReport rep = make_report("semisimple", a, {l->label()});
  const GroupRef ll = direct_product(l, l);
  const auto basis = basis_of(a, ll);
  const std::size_t n = basis.size();
  std::vector<Matrix> left;
  for (const auto& b : basis) {
    std::vector<Vec> cols;
    for (const auto& c : basis) cols.push_back(compose(a, l, l, l, b, c));
    left.push_back(Matrix::from_columns(cols, n, a.field()));
  }
  Matrix t(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = trace(left[i] * left[j]);
  t.set_row_labels(a.basis(ll));
  t.set_col_labels(a.basis(ll));
  const auto radical = radical_of_symmetric_form(t);
  rep.witnesses["dimension"] = n;
  rep.witnesses["trace_form"] = to_json(t);
  auto rad = nlohmann::ordered_json::array();
  for (const auto& v : radical) rad.push_back(to_json(v));
  rep.witnesses["radical_basis"] = rad;
  if (!radical.empty()) rep.verdict = Verdict::Fail;
  return rep;
}

CheckReport strict_condition6(const Functor& a, const GroupRef& g, const GroupRef& h) {
  CheckReport rep = make_report("strict", a, {g->label() + "," + h->label()});
  const GroupRef one = trivial_group();
  if (a.dim(one) != 1) {
    rep.verdict = Verdict::OutOfScopeLimit;
    rep.witnesses["reason"] = "A(1) is not one-dimensional";
    return rep;
  }
  const GroupRef gh = direct_product(g, h);
  const auto bg = basis_of(a, g), bh = basis_of(a, h);
  const std::size_t dgh = a.dim(gh);
  std::vector<Vec> cols;
  for (const auto& x : bg)
    for (const auto& y : bh) cols.push_back(a.times(g, x, h, y));
  const std::size_t r = rank(Matrix::from_columns(cols, dgh, a.field()));
  const std::size_t prod = bg.size() * bh.size();
  rep.witnesses["dim_G"] = bg.size();
  rep.witnesses["dim_H"] = bh.size();
  rep.witnesses["dim_GxH"] = dgh;
  rep.witnesses["rank"] = r;
  rep.witnesses["deficit"] = static_cast<long>(dgh) - static_cast<long>(prod);
  if (r != prod || prod != dgh) rep.verdict = Verdict::Fail;
  return rep;
}

EssentialDim essential_dim(const Functor& a, const GroupRef& h) {
  EssentialDim out;
  const GroupRef hh = direct_product(h, h);
  const auto basis = basis_of(a, hh);
  out.dim_hh = basis.size();
  std::vector<Vec> gens;
  for (const auto& name : catalog_up_to(h->order() - 1)) {
    const GroupRef k = make_group(name);
    if (k->order() >= h->order()) continue;
    out.smaller.push_back(name);
    const auto left = basis_of(a, direct_product(h, k)), right = basis_of(a, direct_product(k, h));
    for (const auto& x : left)
      for (const auto& y : right) gens.push_back(compose(a, h, k, h, x, y));
  }
  auto span = [&](const std::vector<Vec>& vs) {
    std::vector<Vec> rows;
    if (vs.empty()) return rows;
    const Echelon e = row_reduce(Matrix::from_rows(vs, out.dim_hh, a.field()));
    for (std::size_t i = 0; i < e.rank(); ++i) rows.push_back(e.rref.row(i));
    return rows;
  };
  std::vector<Vec> ideal = span(gens);
  for (;;) {
    std::vector<Vec> grown = ideal;
    for (const auto& v : ideal)
      for (const auto& c : basis) {
        grown.push_back(compose(a, h, h, h, c, v));
        grown.push_back(compose(a, h, h, h, v, c));
      }
    auto next = span(grown);
    if (next.size() == ideal.size()) break;
    ideal = std::move(next);
  }
  out.ideal_dim = ideal.size();
  out.essential = out.dim_hh - out.ideal_dim;
  return out;
}

CheckReport tensor_injectivity(const Functor& a, const GroupRef& g, const GroupRef& l, const GroupRef& h) {
  CheckReport rep = make_report("tensor-injective", a, {g->label() + "," + l->label() + "," + h->label()});
  if (a.dim(trivial_group()) != 1) {
    rep.verdict = Verdict::OutOfScopeLimit;
    rep.witnesses["reason"] = "A(1) is not one-dimensional";
    return rep;
  }
  const GroupRef hl = direct_product(h, l);
  const auto bg = basis_of(a, g), bm = basis_of(a, hl);
  std::vector<Vec> cols;
  for (const auto& x : bg)
    for (const auto& m : bm) cols.push_back(a.times(g, x, hl, m));
  const std::size_t r = rank(Matrix::from_columns(cols, a.dim(direct_product(g, hl)), a.field()));
  rep.witnesses["dim_A_G"] = bg.size();
  rep.witnesses["dim_M_H"] = bm.size();
  rep.witnesses["rank"] = r;
  if (r != bg.size() * bm.size()) rep.verdict = Verdict::Fail;
  return rep;
}

}  // namespace gb
