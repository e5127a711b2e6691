#include "greenbiset/biset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "greenbiset/error.hpp"
#include "greenbiset/limits.hpp"

namespace gb {

namespace {

bool injective(const GroupHom& h) { return h.kind() == HomKind::Inclusion || h.kind() == HomKind::Isomorphism; }
bool surjective(const GroupHom& h) { return h.kind() == HomKind::Projection || h.kind() == HomKind::Isomorphism; }

struct Dsu {
  std::vector<std::uint32_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    p[a] = b;  // keep the least point as root
  }
};

}  // namespace

Elemental Elemental::ind(GroupHom h) {
  if (!injective(h)) throw InvalidArgument("Ind needs an inclusion");
  return {ElementalKind::Ind, std::move(h)};
}
Elemental Elemental::res(GroupHom h) {
  if (!injective(h)) throw InvalidArgument("Res needs an inclusion");
  return {ElementalKind::Res, std::move(h)};
}
Elemental Elemental::inf(GroupHom h) {
  if (!surjective(h)) throw InvalidArgument("Inf needs a projection");
  return {ElementalKind::Inf, std::move(h)};
}
Elemental Elemental::def(GroupHom h) {
  if (!surjective(h)) throw InvalidArgument("Def needs a projection");
  return {ElementalKind::Def, std::move(h)};
}
Elemental Elemental::iso(GroupHom h) {
  if (h.kind() != HomKind::Isomorphism) throw InvalidArgument("Iso needs an isomorphism");
  return {ElementalKind::Iso, std::move(h)};
}

const GroupRef& Elemental::source() const {
  switch (kind_) {
    case ElementalKind::Ind: return hom_.source();
    case ElementalKind::Res: return hom_.target();
    case ElementalKind::Inf: return hom_.target();
    case ElementalKind::Def: return hom_.source();
    case ElementalKind::Iso: return hom_.source();
  }
  return hom_.source();
}

const GroupRef& Elemental::target() const {
  switch (kind_) {
    case ElementalKind::Ind: return hom_.target();
    case ElementalKind::Res: return hom_.source();
    case ElementalKind::Inf: return hom_.source();
    case ElementalKind::Def: return hom_.target();
    case ElementalKind::Iso: return hom_.target();
  }
  return hom_.target();
}

Elemental Elemental::extended(const GroupRef& l) const { return Elemental(kind_, extend(hom_, l)); }

std::string Elemental::to_string() const {
  static const char* names[] = {"Ind", "Res", "Inf", "Def", "Iso"};
  return std::string(names[static_cast<int>(kind_)]) + "[" + source()->label() + "->" + target()->label() + "]";
}

BisetWord BisetWord::identity(GroupRef g) { return BisetWord(g, g); }

BisetWord BisetWord::single(Elemental e) {
  BisetWord w(e.source(), e.target());
  w.factors_.push_back(std::move(e));
  return w;
}

BisetWord BisetWord::then(Elemental e) const {
  if (e.source() != target_)
    throw DomainError("biset factor " + e.to_string() + " does not start at " + target_->label());
  BisetWord w = *this;
  w.target_ = e.target();
  w.factors_.push_back(std::move(e));
  return w;
}

BisetWord BisetWord::then(const BisetWord& next) const {
  if (next.source() != target_) throw DomainError("biset words do not compose: " + target_->label() + " vs " + next.source()->label());
  BisetWord w = *this;
  for (const auto& f : next.factors_) w.factors_.push_back(f);
  w.target_ = next.target_;
  return w;
}

std::string BisetWord::to_string() const {
  if (factors_.empty()) return "id[" + source_->label() + "]";
  std::string out;
  for (const auto& f : factors_) out += (out.empty() ? "" : ";") + f.to_string();
  return out;
}

BisetWord concatenate(const BisetWord& w1, const BisetWord& w2) { return w2.then(w1); }

BisetWord extend(const BisetWord& w, const GroupRef& l) {
  BisetWord out = BisetWord::identity(direct_product(w.source(), l));
  for (const auto& f : w.factors()) out = out.then(f.extended(l));
  return out;
}

BisetWord composition_word(const GroupRef& h, const GroupRef& g, const GroupRef& k) {
  const GroupHom diag = tuple_map({h, g, k}, {h, g, g, k}, {0, 1, 1, 2});
  const GroupHom drop = tuple_map({h, g, k}, {h, k}, {0, 2});
  return BisetWord::single(Elemental::res(diag)).then(Elemental::def(drop));
}

BisetWord identity_morphism_word(const GroupRef& g) {
  const GroupHom to_one = tuple_map({g}, {}, {});
  return BisetWord::single(Elemental::inf(to_one)).then(Elemental::ind(diagonal(g)));
}

BisetWord diagonal_restriction_word(const GroupRef& g) { return BisetWord::single(Elemental::res(diagonal(g))); }

BisetWord deflation_to_one(const GroupRef& g) {
  if (g->is_trivial()) return BisetWord::identity(g);
  return BisetWord::single(Elemental::def(tuple_map({g}, {}, {})));
}

BisetWord swap_word(const GroupRef& a, const GroupRef& b) { return BisetWord::single(Elemental::iso(swap_factors(a, b))); }

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::pair<GroupRef, GroupRef> split_pair(const std::string& arg, char sep, const std::string& token) {
  const auto pos = arg.find(sep);
  if (pos == std::string::npos) throw InvalidArgument("malformed biset factor '" + token + "'");
  return {make_group(arg.substr(0, pos)), make_group(arg.substr(pos + 1))};
}

Elemental parse_factor(const std::string& token, const GroupRef& current) {
  const auto open = token.find('[');
  if (open == std::string::npos || token.back() != ']') throw InvalidArgument("malformed biset factor '" + token + "'");
  const std::string kind = token.substr(0, open);
  const std::string arg = token.substr(open + 1, token.size() - open - 2);
  if (kind == "Ind" || kind == "Res") {
    auto [h, g] = split_pair(arg, '<', token);
    auto emb = find_embedding(h, g);
    if (!emb) throw InvalidArgument(h->label() + " does not embed in " + g->label());
    return kind == "Ind" ? Elemental::ind(*emb) : Elemental::res(*emb);
  }
  if (kind == "Inf" || kind == "Def") {
    auto [g, n] = split_pair(arg, '/', token);
    auto emb = find_embedding(n, g, true);
    if (!emb) throw InvalidArgument(n->label() + " is not a normal subgroup of " + g->label());
    const auto q = quotient_group(g, emb->image(n->elements()));
    return kind == "Inf" ? Elemental::inf(q.projection) : Elemental::def(q.projection);
  }
  if (kind == "Iso") {
    if (arg == "swap" || arg.rfind("swap:", 0) == 0) {
      if (!current) throw InvalidArgument("Iso[swap] needs a known source group");
      const auto f = current->factors();
      std::size_t k = 1;
      if (arg == "swap") {
        if (f.size() != 2) throw InvalidArgument("Iso[swap] needs a group with exactly two factors; use Iso[swap:k]");
      } else {
        try {
          k = std::stoul(arg.substr(5));
        } catch (const std::exception&) {
          throw InvalidArgument("malformed biset factor '" + token + "'");
        }
        if (k == 0 || k >= f.size()) throw InvalidArgument("swap position out of range in '" + token + "'");
      }
      const GroupRef a = direct_product(std::vector<GroupRef>(f.begin(), f.begin() + static_cast<long>(k)));
      const GroupRef b = direct_product(std::vector<GroupRef>(f.begin() + static_cast<long>(k), f.end()));
      return Elemental::iso(swap_factors(a, b));
    }
    auto [g, h] = split_pair(arg, '>', token);
    auto iso = find_isomorphism(g, h);
    if (!iso) throw InvalidArgument(g->label() + " and " + h->label() + " are not isomorphic");
    return Elemental::iso(*iso);
  }
  throw InvalidArgument("unknown biset factor '" + token + "'");
}

}  // namespace

BisetWord parse_word(std::string_view text, const GroupRef& source) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string tok = trim(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (!tok.empty()) tokens.push_back(tok);
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (tokens.empty()) {
    if (!source) throw InvalidArgument("empty biset word");
    return BisetWord::identity(source);
  }
  std::optional<BisetWord> w;
  if (source) w = BisetWord::identity(source);
  for (const auto& tok : tokens) {
    Elemental e = parse_factor(tok, w ? w->target() : nullptr);
    if (w && e.source() != w->target())
      throw DomainError("factor '" + tok + "' starts at " + e.source()->label() + ", not " + w->target()->label());
    w = w ? w->then(std::move(e)) : BisetWord::single(std::move(e));
  }
  return *w;
}

// ---------------------------------------------------------------- concrete

namespace {

// Points are the elements of P; l . u = lh(l) u and u . r = u rh(r).
ConcreteBiset translation_biset(const GroupHom& lh, const GroupHom& rh) {
  const GroupRef& p = lh.target();
  ConcreteBiset b;
  b.left = lh.source();
  b.right = rh.source();
  b.size = p->order();
  for (Elt s : b.left->generators()) {
    std::vector<std::uint32_t> a(b.size);
    for (Elt u = 0; u < b.size; ++u) a[u] = p->mul(lh(s), u);
    b.left_gen.push_back(std::move(a));
  }
  for (Elt s : b.right->generators()) {
    std::vector<std::uint32_t> a(b.size);
    for (Elt u = 0; u < b.size; ++u) a[u] = p->mul(u, rh(s));
    b.right_gen.push_back(std::move(a));
  }
  return b;
}

}  // namespace

ConcreteBiset realize(const Elemental& e) {
  const GroupHom& h = e.hom();
  switch (e.kind()) {
    case ElementalKind::Ind: return translation_biset(identity_hom(h.target()), h);
    case ElementalKind::Res: return translation_biset(h, identity_hom(h.target()));
    case ElementalKind::Inf: return translation_biset(h, identity_hom(h.target()));
    case ElementalKind::Def: return translation_biset(identity_hom(h.target()), h);
    case ElementalKind::Iso: return translation_biset(identity_hom(h.target()), h);
  }
  throw Error("unreachable");
}

ConcreteBiset identity_biset(const GroupRef& g) { return translation_biset(identity_hom(g), identity_hom(g)); }

ConcreteBiset balanced_product(const ConcreteBiset& v, const ConcreteBiset& u) {
  if (v.right != u.left) throw DomainError("balanced product over different groups");
  const std::size_t n = v.size * u.size;
  require_within(n, std::size_t{1} << 24, "balanced product point set", "");
  Dsu dsu(n);
  auto idx = [&](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * u.size + j); };
  for (std::size_t k = 0; k < v.right_gen.size(); ++k)
    for (std::size_t i = 0; i < v.size; ++i)
      for (std::size_t j = 0; j < u.size; ++j) dsu.unite(idx(v.right_gen[k][i], j), idx(i, u.left_gen[k][j]));
  std::vector<std::uint32_t> cls(n, UINT32_MAX);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t r = dsu.find(x);
    if (cls[r] == UINT32_MAX) {
      cls[r] = static_cast<std::uint32_t>(rep.size());
      rep.push_back(x);
    }
    cls[x] = cls[r];
  }
  ConcreteBiset out;
  out.left = v.left;
  out.right = u.right;
  out.size = rep.size();
  for (const auto& g : v.left_gen) {
    std::vector<std::uint32_t> a(out.size);
    for (std::size_t c = 0; c < out.size; ++c) a[c] = cls[idx(g[rep[c] / u.size], rep[c] % u.size)];
    out.left_gen.push_back(std::move(a));
  }
  for (const auto& g : u.right_gen) {
    std::vector<std::uint32_t> a(out.size);
    for (std::size_t c = 0; c < out.size; ++c) a[c] = cls[idx(rep[c] / u.size, g[rep[c] % u.size])];
    out.right_gen.push_back(std::move(a));
  }
  return out;
}

ConcreteBiset realize(const BisetWord& w) {
  ConcreteBiset b = identity_biset(w.source());
  bool first = true;
  for (const auto& f : w.factors()) {
    b = first ? realize(f) : balanced_product(realize(f), b);
    first = false;
  }
  return b;
}

std::vector<std::uint32_t> ConcreteBiset::left_action_table() const {
  const Group& g = *left;
  std::vector<std::uint32_t> t(g.order() * size);
  std::vector<bool> done(g.order(), false);
  for (std::uint32_t u = 0; u < size; ++u) t[u] = u;
  done[0] = true;
  std::vector<Elt> queue{0};
  const auto& gens = g.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elt h = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elt hs = g.mul(h, gens[k]);
      if (done[hs]) continue;
      done[hs] = true;
      for (std::uint32_t u = 0; u < size; ++u) t[hs * size + u] = t[h * size + left_gen[k][u]];
      queue.push_back(hs);
    }
  }
  return t;
}

bool ConcreteBiset::actions_commute() const {
  for (const auto& l : left_gen)
    for (const auto& r : right_gen)
      for (std::uint32_t u = 0; u < size; ++u)
        if (r[l[u]] != l[r[u]]) return false;
  return true;
}

std::size_t ConcreteBiset::left_orbit_count() const {
  Dsu dsu(size);
  for (const auto& l : left_gen)
    for (std::uint32_t u = 0; u < size; ++u) dsu.unite(u, l[u]);
  std::size_t c = 0;
  for (std::uint32_t u = 0; u < size; ++u)
    if (dsu.find(u) == u) ++c;
  return c;
}

ConcreteBiset transitive_gset(const GroupRef& g, const ElementSet& stabilizer) {
  if (!is_subgroup(*g, stabilizer)) throw InvalidArgument("stabilizer is not a subgroup of " + g->label());
  std::vector<std::uint32_t> coset(g->order(), UINT32_MAX);
  std::vector<Elt> reps;
  for (Elt x = 0; x < g->order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    for (Elt a : stabilizer) coset[g->mul(x, a)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  ConcreteBiset b;
  b.left = g;
  b.right = trivial_group();
  b.size = reps.size();
  for (Elt s : g->generators()) {
    std::vector<std::uint32_t> a(b.size);
    for (std::size_t c = 0; c < b.size; ++c) a[c] = coset[g->mul(s, reps[c])];
    b.left_gen.push_back(std::move(a));
  }
  return b;
}

std::vector<ElementSet> orbit_stabilizers(const ConcreteBiset& x) {
  Dsu dsu(x.size);
  for (const auto& l : x.left_gen)
    for (std::uint32_t u = 0; u < x.size; ++u) dsu.unite(u, l[u]);
  const auto table = x.left_action_table();
  std::vector<ElementSet> out;
  for (std::uint32_t u = 0; u < x.size; ++u) {
    if (dsu.find(u) != u) continue;
    ElementSet stab;
    for (Elt h = 0; h < x.left->order(); ++h)
      if (table[h * x.size + u] == u) stab.push_back(h);
    out.push_back(std::move(stab));
  }
  return out;
}

namespace {

std::string word_key(const BisetWord& w) {
  std::string key = w.source()->label();
  for (const auto& f : w.factors()) {
    std::size_t h = 1469598103934665603ull;
    for (Elt y : f.hom().images()) h = (h ^ y) * 1099511628211ull;
    key += "|" + f.to_string() + "#" + std::to_string(h);
  }
  return key;
}

}  // namespace

std::size_t orbit_count_through(const BisetWord& w) {
  static std::mutex mu;
  static std::map<std::string, std::size_t> memo;
  const std::string key = word_key(w);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const std::size_t c = realize(w).left_orbit_count();
  std::lock_guard lock(mu);
  memo.emplace(key, c);
  return c;
}

}  // namespace gb
