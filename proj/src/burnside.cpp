#include "greenbiset/burnside.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "greenbiset/cache.hpp"
#include "greenbiset/error.hpp"

namespace gb {

GSetSum GSetSum::basis(const GroupRef& g, const ElementSet& a, const Scalar& c) {
  GSetSum s{g, {}};
  s.terms.emplace_back(a, c);
  return s;
}

GSetSum GSetSum::from_coeffs(const GroupRef& g, const Vec& coeffs) {
  const auto& lat = subgroup_lattice(g);
  if (coeffs.size() != lat.size()) throw InvalidArgument("coefficient vector does not match B(" + g->label() + ")");
  GSetSum s{g, {}};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) s.terms.emplace_back(lat[i].representative, coeffs[i]);
  return s;
}

void GSetSum::normalize() {
  std::map<ElementSet, Scalar> merged;
  for (auto& [a, c] : terms) {
    auto it = merged.find(a);
    if (it == merged.end())
      merged.emplace(std::move(a), std::move(c));
    else
      it->second += c;
  }
  terms.clear();
  for (auto& [a, c] : merged)
    if (!c.is_zero()) terms.emplace_back(a, std::move(c));
}

Vec GSetSum::reduce(const Field& f) const {
  const auto& lat = subgroup_lattice(group);
  Vec out = zero_vec(f, lat.size());
  for (const auto& [a, c] : terms) out[lat.class_of(a)] += c;
  return out;
}

namespace {

struct Cosets {
  std::vector<std::uint32_t> of;  // element -> coset index
  std::vector<Elt> reps;           // least element of each coset
};

Cosets left_cosets(const Group& g, const ElementSet& a) {
  Cosets c;
  c.of.assign(g.order(), UINT32_MAX);
  for (Elt x = 0; x < g.order(); ++x) {
    if (c.of[x] != UINT32_MAX) continue;
    for (Elt y : a) c.of[g.mul(x, y)] = static_cast<std::uint32_t>(c.reps.size());
    c.reps.push_back(x);
  }
  return c;
}

std::uint32_t find_root(std::vector<std::uint32_t>& p, std::uint32_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// Restriction of [G/A] along i: H -> G: one [H/Stab] per double coset i(H) r A.
void restrict_term(const GroupHom& incl, const ElementSet& a, const Scalar& c, GSetSum& out) {
  const Group& g = *incl.target();
  const Group& h = *incl.source();
  const Cosets cos = left_cosets(g, a);
  const std::size_t n = cos.reps.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (Elt s : h.generators()) {
    const Elt is = incl(s);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::uint32_t x = find_root(parent, k), y = find_root(parent, cos.of[g.mul(is, cos.reps[k])]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    if (find_root(parent, k) != k) continue;
    const Elt r = cos.reps[k];
    ElementSet stab;
    for (Elt x = 0; x < h.order(); ++x)
      if (cos.of[g.mul(incl(x), r)] == k) stab.push_back(x);
    out.terms.emplace_back(std::move(stab), c);
  }
}

}  // namespace

namespace burnside {

GSetSum apply(const Elemental& e, const GSetSum& x) {
  if (x.group != e.source()) throw DomainError("biset factor " + e.to_string() + " applied at " + x.group->label());
  GSetSum out{e.target(), {}};
  const GroupHom& h = e.hom();
  for (const auto& [a, c] : x.terms) {
    switch (e.kind()) {
      case ElementalKind::Res: restrict_term(h, a, c, out); break;
      case ElementalKind::Ind: out.terms.emplace_back(h.image(a), c); break;
      case ElementalKind::Inf: out.terms.emplace_back(h.preimage(a), c); break;
      case ElementalKind::Def: out.terms.emplace_back(h.image(a), c); break;
      case ElementalKind::Iso: out.terms.emplace_back(h.image(a), c); break;
    }
  }
  out.normalize();
  return out;
}

GSetSum apply(const BisetWord& w, const GSetSum& x) {
  if (x.group != w.source()) throw DomainError("biset word from " + w.source()->label() + " applied at " + x.group->label());
  GSetSum cur = x;
  for (const auto& f : w.factors()) cur = apply(f, cur);
  return cur;
}

GSetSum times(const GSetSum& x, const GSetSum& y) {
  GSetSum out{direct_product(x.group, y.group), {}};
  const std::size_t n = y.group->order();
  for (const auto& [a, c] : x.terms)
    for (const auto& [b, d] : y.terms) {
      ElementSet ab;
      ab.reserve(a.size() * b.size());
      for (Elt u : a)
        for (Elt v : b) ab.push_back(static_cast<Elt>(u * n + v));
      out.terms.emplace_back(std::move(ab), c * d);
    }
  out.normalize();
  return out;
}

}  // namespace burnside

Matrix MarksTable::matrix() const {
  const std::size_t n = m.size();
  Matrix out(n, n, Field::rationals());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Scalar(m[i][j]);
  const auto& labels = subgroup_lattice(group).labels();
  out.set_row_labels(labels);
  out.set_col_labels(labels);
  return out;
}

namespace {

std::vector<std::vector<long>> compute_marks(const GroupRef& gp) {
  const Group& g = *gp;
  const auto& lat = subgroup_lattice(gp);
  const std::size_t n = lat.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const ElementSet& b = lat[j].representative;
    std::vector<bool> in_b(g.order(), false);
    for (Elt x : b) in_b[x] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lat[i].order() > b.size() || b.size() % lat[i].order() != 0) continue;
      const auto& gens = lat[i].generators;
      long count = 0;
      for (Elt x = 0; x < g.order(); ++x) {
        bool inside = true;
        for (Elt s : gens)
          if (!in_b[g.conj(s, x)]) {
            inside = false;
            break;
          }
        if (inside) ++count;
      }
      m[i][j] = count / static_cast<long>(b.size());
    }
  }
  return m;
}

}  // namespace

const MarksTable& table_of_marks(const GroupRef& g) {
  static std::mutex mu;
  static std::map<const Group*, std::unique_ptr<MarksTable>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(g.get()); it != memo.end()) return *it->second;
  }
  const std::size_t n = subgroup_lattice(g).size();
  std::vector<std::vector<long>> m;
  try {
    auto j = cache::get_or_build("marks", g->label(), [&] { return nlohmann::json(compute_marks(g)); });
    m = j.get<std::vector<std::vector<long>>>();
    bool ok = m.size() == n;
    for (std::size_t i = 0; ok && i < n; ++i) ok = m[i].size() == n && m[i][i] > 0;
    if (!ok) m = compute_marks(g);
  } catch (const nlohmann::json::exception&) {
    m = compute_marks(g);
  }
  auto t = std::make_unique<MarksTable>(MarksTable{g, std::move(m)});
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.emplace(g.get(), std::move(t));
  return *it->second;
}

Vec marks_of(const GroupRef& g, const Vec& x) {
  const auto& t = table_of_marks(g);
  const std::size_t n = t.m.size();
  if (x.size() != n) throw InvalidArgument("coefficient vector does not match B(" + g->label() + ")");
  const Field f = x.empty() ? Field::rationals() : x[0].field();
  Vec phi = zero_vec(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (t.m[i][j] != 0 && !x[j].is_zero()) phi[i] += Scalar::from_int(f, t.m[i][j]) * x[j];
  return phi;
}

Vec from_marks(const GroupRef& g, const Vec& phi) {
  const auto& t = table_of_marks(g);
  const std::size_t n = t.m.size();
  if (phi.size() != n) throw InvalidArgument("mark vector does not match B(" + g->label() + ")");
  const Field f = phi.empty() ? Field::rationals() : phi[0].field();
  if (f.characteristic() != 0) throw FieldError("solving against the table of marks needs characteristic 0");
  Vec x = zero_vec(f, n);
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = phi[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (t.m[i][j] != 0 && !x[j].is_zero()) acc -= Scalar::from_int(f, t.m[i][j]) * x[j];
    x[i] = acc / Scalar::from_int(f, t.m[i][i]);
  }
  return x;
}

Vec burnside_product(const GroupRef& g, const Vec& x, const Vec& y) {
  Vec a = marks_of(g, x);
  const Vec b = marks_of(g, y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return from_marks(g, a);
}

std::vector<Vec> primitive_idempotents(const GroupRef& g, const Field& f) {
  if (f.characteristic() != 0) throw FieldError("primitive idempotents of the Burnside ring need characteristic 0");
  const std::size_t n = subgroup_lattice(g).size();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec phi = zero_vec(f, n);
    phi[i] = Scalar::one(f);
    out.push_back(from_marks(g, phi));
  }
  return out;
}

GSetSum biset_tensor_orbits(const ConcreteBiset& u, const ConcreteBiset& x) {
  if (!u.actions_commute()) throw DomainError("left and right actions of the biset do not commute");
  if (x.right && !x.right->is_trivial()) throw InvalidArgument("second argument must be a left G-set");
  const ConcreteBiset ux = balanced_product(u, x);
  GSetSum out{u.left, {}};
  for (auto& stab : orbit_stabilizers(ux)) out.terms.emplace_back(std::move(stab), Scalar(1));
  out.normalize();
  return out;
}

std::size_t double_coset_count(const Group& g, const ElementSet& a, const ElementSet& b) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Elt x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Elt u : a)
      for (Elt v : b) seen[g.mul(g.mul(u, x), v)] = true;
  }
  return count;
}

}  // namespace gb
