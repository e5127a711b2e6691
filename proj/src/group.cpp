#include "greenbiset/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "greenbiset/error.hpp"
#include "greenbiset/limits.hpp"

namespace gb {

namespace {

std::recursive_mutex registry_mu;
std::map<std::string, GroupRef>& registry() {
  static std::map<std::string, GroupRef> r;
  return r;
}

GroupRef intern(const std::string& label, const std::function<std::shared_ptr<Group>()>& build) {
  std::lock_guard lock(registry_mu);
  auto& r = registry();
  if (auto it = r.find(label); it != r.end()) return it->second;
  GroupRef g = build();
  r.emplace(label, g);
  return g;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

Perm compose_perm(const Perm& a, const Perm& b) {  // a o b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Group::Table table_from_perms(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  Group::Table t;
  std::unordered_map<Perm, Elt, PermHash> index;
  t.perms.push_back(id);
  index.emplace(id, 0);
  for (std::size_t i = 0; i < t.perms.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose_perm(g, t.perms[i]);
      if (index.emplace(p, static_cast<Elt>(t.perms.size())).second) t.perms.push_back(std::move(p));
    }
  const std::size_t n = t.perms.size();
  t.mul.resize(n * n);
  t.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elt c = index.at(compose_perm(t.perms[a], t.perms[b]));
      t.mul[a * n + b] = c;
      if (c == 0) t.inv[a] = static_cast<Elt>(b);
    }
  return t;
}

Perm cycle_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

std::shared_ptr<Group> base_from_perms(const std::string& label, const std::vector<Perm>& gens, std::size_t degree) {
  return std::make_shared<Group>(label, table_from_perms(gens, degree));
}

std::vector<Perm> quaternion_generators() {
  // units +-1, +-i, +-j, +-k as b + 4s
  static const int prod[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left = [&](int q) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      const int b = prod[q][x % 4][0];
      const int s = (prod[q][x % 4][1] + x / 4) % 2;
      p[x] = static_cast<std::uint32_t>(b + 4 * s);
    }
    return p;
  };
  return {left(1), left(2)};
}

struct CatalogEntry {
  std::size_t order;
  std::function<std::shared_ptr<Group>()> build;
};

std::size_t parse_number(std::string_view s, std::string_view token) {
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty() || s[0] == '0')
    throw InvalidArgument("unknown group token '" + std::string(token) + "'");
  return n;
}

CatalogEntry catalog_entry(std::string_view token) {
  const std::string label(token);
  if (token.size() >= 2 && token[0] == 'C') {
    const std::size_t n = parse_number(token.substr(1), token);
    return {n, [label, n] {
              if (n == 1) return base_from_perms(label, {}, 1);
              return base_from_perms(label, {cycle_perm(n)}, n);
            }};
  }
  if (token.size() >= 2 && token[0] == 'D') {
    const std::size_t m = parse_number(token.substr(1), token);
    if (m % 2 != 0) throw InvalidArgument("dihedral order must be even in '" + label + "'");
    const std::size_t n = m / 2;
    return {m, [label, n] {
              if (n == 1) return base_from_perms(label, {Perm{1, 0}}, 2);
              if (n == 2) return base_from_perms(label, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}}, 4);
              Perm s(n);
              for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint32_t>((n - i) % n);
              return base_from_perms(label, {cycle_perm(n), s}, n);
            }};
  }
  if (token == "Q8") return {8, [label] { return base_from_perms(label, quaternion_generators(), 8); }};
  if (token == "A4") return {12, [label] { return base_from_perms(label, {Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}}, 4); }};
  if (token.size() == 2 && token[0] == 'S' && token[1] >= '1' && token[1] <= '4') {
    const std::size_t n = static_cast<std::size_t>(token[1] - '0');
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    return {fact, [label, n] {
              if (n == 1) return base_from_perms(label, {}, 1);
              Perm t(n);
              std::iota(t.begin(), t.end(), 0u);
              std::swap(t[0], t[1]);
              if (n == 2) return base_from_perms(label, {t}, 2);
              return base_from_perms(label, {t, cycle_perm(n)}, n);
            }};
  }
  throw InvalidArgument("unknown group token '" + label + "'");
}

std::string set_label(const ElementSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

Group::Group(std::string label, Table table) : label_(std::move(label)), table_(std::move(table)) {
  order_ = table_.inv.size();
  init_generators();
}

Group::Group(std::string label, std::vector<GroupRef> factors) : label_(std::move(label)), factors_(std::move(factors)) {
  order_ = 1;
  for (const auto& f : factors_) {
    radix_.push_back(f->order());
    order_ *= f->order();
  }
  init_generators();
}

void Group::init_generators() {
  if (is_product()) {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (Elt g : factors_[i]->generators()) {
        std::vector<Elt> parts(factors_.size(), 0);
        parts[i] = g;
        gens_.push_back(join(parts));
      }
    return;
  }
  // greedy: add the least element outside the span so far
  std::vector<bool> in(order_, false);
  in[0] = true;
  ElementSet span{0};
  for (Elt e = 1; e < order_; ++e) {
    if (in[e]) continue;
    gens_.push_back(e);
    span = closure(*this, gens_);
    for (Elt x : span) in[x] = true;
  }
}

Elt Group::mul(Elt a, Elt b) const {
  if (!is_product()) return table_.mul[static_cast<std::size_t>(a) * order_ + b];
  Elt out = 0;
  std::size_t stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::size_t r = radix_[i];
    const Elt x = static_cast<Elt>(a % r), y = static_cast<Elt>(b % r);
    a = static_cast<Elt>(a / r);
    b = static_cast<Elt>(b / r);
    out += static_cast<Elt>(factors_[i]->mul(x, y) * stride);
    stride *= r;
  }
  return out;
}

Elt Group::inv(Elt a) const {
  if (!is_product()) return table_.inv[a];
  Elt out = 0;
  std::size_t stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::size_t r = radix_[i];
    out += static_cast<Elt>(factors_[i]->inv(static_cast<Elt>(a % r)) * stride);
    a = static_cast<Elt>(a / r);
    stride *= r;
  }
  return out;
}

Elt Group::power(Elt a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elt r = 0;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::size_t Group::element_order(Elt a) const {
  std::call_once(orders_once_, [this] {
    element_orders_.assign(order_, 0);
    for (Elt x = 0; x < order_; ++x) {
      std::size_t k = 1;
      for (Elt y = x; y != 0; y = mul(y, x)) ++k;
      element_orders_[x] = x == 0 ? 1 : k;
    }
  });
  return element_orders_[a];
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (Elt x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
  return e;
}

bool Group::is_abelian() const {
  for (Elt a : gens_)
    for (Elt b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<GroupRef> Group::factors() const {
  if (is_product()) return factors_;
  if (is_trivial()) return {};
  return {shared_from_this()};
}

std::vector<Elt> Group::split(Elt a) const {
  if (!is_product()) return is_trivial() ? std::vector<Elt>{} : std::vector<Elt>{a};
  std::vector<Elt> parts(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    parts[i] = static_cast<Elt>(a % radix_[i]);
    a = static_cast<Elt>(a / radix_[i]);
  }
  return parts;
}

Elt Group::join(const std::vector<Elt>& parts) const {
  if (!is_product()) return parts.empty() ? 0 : parts[0];
  Elt out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) out = static_cast<Elt>(out * radix_[i] + parts[i]);
  return out;
}

std::size_t Group::degree() const {
  if (is_product()) {
    std::size_t d = 0;
    for (const auto& f : factors_) d += f->degree();
    return d;
  }
  return table_.perms.empty() ? order_ : table_.perms[0].size();
}

Perm Group::permutation(Elt a) const {
  if (is_product()) {
    Perm p;
    const auto parts = split(a);
    std::uint32_t offset = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (auto x : factors_[i]->permutation(parts[i])) p.push_back(x + offset);
      offset += static_cast<std::uint32_t>(factors_[i]->degree());
    }
    return p;
  }
  if (!table_.perms.empty()) return table_.perms[a];
  Perm p(order_);
  for (Elt x = 0; x < order_; ++x) p[x] = mul(a, x);
  return p;
}

std::vector<Elt> Group::elements() const {
  std::vector<Elt> e(order_);
  std::iota(e.begin(), e.end(), 0u);
  return e;
}

const ConjugacyClasses& Group::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    ConjugacyClasses& cc = classes_;
    cc.class_of.assign(order_, UINT32_MAX);
    if (!is_product()) {
      for (Elt g = 0; g < order_; ++g) {
        if (cc.class_of[g] != UINT32_MAX) continue;
        ElementSet cls;
        for (Elt x = 0; x < order_; ++x) cls.push_back(conj(g, x));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (Elt y : cls) cc.class_of[y] = static_cast<std::uint32_t>(cc.classes.size());
        cc.classes.push_back(std::move(cls));
      }
      return;
    }
    // products of factor classes, mixed radix over class indices
    std::vector<const ConjugacyClasses*> fc;
    std::size_t total = 1;
    for (const auto& f : factors_) {
      fc.push_back(&f->conjugacy_classes());
      total *= fc.back()->size();
    }
    cc.classes.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<std::size_t> which(factors_.size());
      std::size_t rest = idx;
      for (std::size_t i = factors_.size(); i-- > 0;) {
        which[i] = rest % fc[i]->size();
        rest /= fc[i]->size();
      }
      ElementSet cls{0};
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        ElementSet next;
        for (Elt base : cls)
          for (Elt y : fc[i]->classes[which[i]]) next.push_back(static_cast<Elt>(base * radix_[i] + y));
        cls = std::move(next);
      }
      std::sort(cls.begin(), cls.end());
      for (Elt y : cls) cc.class_of[y] = static_cast<std::uint32_t>(idx);
      cc.classes[idx] = std::move(cls);
    }
  });
  return classes_;
}

GroupRef trivial_group() {
  return intern("C1", [] { return base_from_perms("C1", {}, 1); });
}

GroupRef make_group(std::string_view spec) {
  if (spec.empty()) throw InvalidArgument("empty group spec");
  std::vector<CatalogEntry> entries;
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = spec.find('x', start);
    const std::string_view tok = spec.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start);
    if (tok.empty()) throw InvalidArgument("malformed group spec '" + std::string(spec) + "'");
    entries.push_back(catalog_entry(tok));
    tokens.emplace_back(tok);
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  std::size_t order = 1;
  for (const auto& e : entries) {
    order *= e.order;
    require_within(order, limits().enumeration, "group " + std::string(spec));
  }
  std::vector<GroupRef> parts;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (tokens[i] == "C1" || tokens[i] == "S1") {
      parts.push_back(trivial_group());
      continue;
    }
    parts.push_back(intern(tokens[i], entries[i].build));
  }
  return direct_product(parts);
}

GroupRef direct_product(const std::vector<GroupRef>& groups) {
  std::vector<GroupRef> flat;
  std::size_t order = 1;
  for (const auto& g : groups) {
    for (auto& f : g->factors()) flat.push_back(std::move(f));
    order *= g->order();
  }
  if (flat.empty()) return trivial_group();
  if (flat.size() == 1) return flat[0];
  std::string label;
  for (const auto& f : flat) label += (label.empty() ? "" : "x") + f->label();
  require_within(order, limits().intermediate, "direct product " + label, "--intermediate-bound");
  return intern(label, [&] { return std::make_shared<Group>(label, flat); });
}

GroupRef direct_product(const GroupRef& a, const GroupRef& b) { return direct_product(std::vector<GroupRef>{a, b}); }

std::string to_string(HomKind k) {
  switch (k) {
    case HomKind::Inclusion: return "inclusion";
    case HomKind::Projection: return "projection";
    case HomKind::Isomorphism: return "isomorphism";
  }
  return "?";
}

namespace {

std::pair<bool, bool> injective_surjective(const std::vector<Elt>& images, std::size_t target_order) {
  std::vector<bool> hit(target_order, false);
  std::size_t distinct = 0;
  for (Elt y : images)
    if (!hit[y]) {
      hit[y] = true;
      ++distinct;
    }
  return {distinct == images.size(), distinct == target_order};
}

HomKind infer_kind(const std::vector<Elt>& images, std::size_t target_order) {
  auto [inj, surj] = injective_surjective(images, target_order);
  if (inj && surj) return HomKind::Isomorphism;
  if (inj) return HomKind::Inclusion;
  if (surj) return HomKind::Projection;
  throw InvalidArgument("homomorphism is neither injective nor surjective");
}

}  // namespace

GroupHom GroupHom::make(GroupRef source, GroupRef target, std::vector<Elt> images, HomKind kind) {
  if (images.size() != source->order()) throw InvalidArgument("image table has the wrong length");
  for (Elt y : images)
    if (y >= target->order()) throw InvalidArgument("image outside the target group");
  for (Elt x = 0; x < source->order(); ++x)
    for (Elt s : source->generators())
      if (images[source->mul(x, s)] != target->mul(images[x], images[s]))
        throw InvalidArgument("map " + source->label() + " -> " + target->label() + " is not a homomorphism");
  auto [inj, surj] = injective_surjective(images, target->order());
  const bool ok = (kind == HomKind::Inclusion && inj) || (kind == HomKind::Projection && surj) ||
                  (kind == HomKind::Isomorphism && inj && surj);
  if (!ok) throw InvalidArgument("homomorphism is not of kind " + to_string(kind));
  return GroupHom(std::move(source), std::move(target), std::move(images), kind);
}

GroupHom GroupHom::structural(GroupRef source, GroupRef target, std::vector<Elt> images) {
  const HomKind k = infer_kind(images, target->order());
  return GroupHom(std::move(source), std::move(target), std::move(images), k);
}

ElementSet GroupHom::image(const ElementSet& a) const {
  ElementSet out;
  for (Elt x : a) out.push_back(images_[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet GroupHom::preimage(const ElementSet& b) const {
  std::vector<bool> in(tgt_->order(), false);
  for (Elt y : b) in[y] = true;
  ElementSet out;
  for (Elt x = 0; x < src_->order(); ++x)
    if (in[images_[x]]) out.push_back(x);
  return out;
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (first.target() != second.source()) throw DomainError("homomorphisms do not compose");
  std::vector<Elt> im(first.source()->order());
  for (Elt x = 0; x < im.size(); ++x) im[x] = second(first(x));
  return GroupHom::structural(first.source(), second.target(), std::move(im));
}

GroupHom identity_hom(const GroupRef& g) {
  return GroupHom::structural(g, g, g->elements());
}

GroupHom inverse(const GroupHom& iso) {
  if (iso.kind() != HomKind::Isomorphism) throw DomainError("inverse of a non-isomorphism");
  std::vector<Elt> im(iso.source()->order());
  for (Elt x = 0; x < im.size(); ++x) im[iso(x)] = x;
  return GroupHom::structural(iso.target(), iso.source(), std::move(im));
}

GroupHom tuple_map(const std::vector<GroupRef>& in_blocks, const std::vector<GroupRef>& out_blocks,
                   const std::vector<int>& which) {
  if (which.size() != out_blocks.size()) throw InvalidArgument("tuple map: block count mismatch");
  for (std::size_t j = 0; j < which.size(); ++j)
    if (which[j] >= 0 && (static_cast<std::size_t>(which[j]) >= in_blocks.size() || in_blocks[which[j]] != out_blocks[j]))
      throw InvalidArgument("tuple map: block " + std::to_string(j) + " does not match its source");
  const GroupRef src = direct_product(in_blocks), tgt = direct_product(out_blocks);
  std::vector<Elt> im(src->order());
  std::vector<Elt> coords(in_blocks.size());
  for (Elt x = 0; x < im.size(); ++x) {
    Elt rest = x;
    for (std::size_t i = in_blocks.size(); i-- > 0;) {
      coords[i] = static_cast<Elt>(rest % in_blocks[i]->order());
      rest = static_cast<Elt>(rest / in_blocks[i]->order());
    }
    Elt y = 0;
    for (std::size_t j = 0; j < out_blocks.size(); ++j)
      y = static_cast<Elt>(y * out_blocks[j]->order() + (which[j] >= 0 ? coords[which[j]] : 0));
    im[x] = y;
  }
  return GroupHom::structural(src, tgt, std::move(im));
}

GroupHom extend(const GroupHom& h, const GroupRef& l) {
  const GroupRef src = direct_product(h.source(), l), tgt = direct_product(h.target(), l);
  const std::size_t n = l->order();
  std::vector<Elt> im(src->order());
  for (Elt x = 0; x < im.size(); ++x) im[x] = static_cast<Elt>(h(static_cast<Elt>(x / n)) * n + x % n);
  GroupHom out = GroupHom::structural(src, tgt, std::move(im));
  return out;
}

GroupHom diagonal(const GroupRef& g) { return tuple_map({g}, {g, g}, {0, 0}); }
GroupHom swap_factors(const GroupRef& a, const GroupRef& b) { return tuple_map({a, b}, {b, a}, {1, 0}); }
GroupHom embedding(const GroupRef& a, const GroupRef& b, int which) {
  return which == 0 ? tuple_map({a}, {a, b}, {0, -1}) : tuple_map({b}, {a, b}, {-1, 0});
}
GroupHom projection(const GroupRef& a, const GroupRef& b, int which) {
  return which == 0 ? tuple_map({a, b}, {a}, {0}) : tuple_map({a, b}, {b}, {1});
}

ProductMaps direct_product_with_maps(const GroupRef& a, const GroupRef& b) {
  return {direct_product(a, b), embedding(a, b, 0), embedding(a, b, 1), projection(a, b, 0), projection(a, b, 1)};
}

ElementSet closure(const Group& g, const std::vector<Elt>& gens) {
  std::vector<bool> in(g.order(), false);
  ElementSet out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elt s : gens) {
      const Elt y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.empty() || s[0] != 0 || !std::is_sorted(s.begin(), s.end())) return false;
  if (g.order() % s.size() != 0) return false;
  std::vector<bool> in(g.order(), false);
  for (Elt x : s) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  for (Elt a : s)
    for (Elt b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

ElementSet conjugate(const Group& g, const ElementSet& s, Elt x) {
  ElementSet out;
  out.reserve(s.size());
  for (Elt a : s) out.push_back(g.conj(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const Group& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (Elt x : g.generators())
    if (conjugate(g, s, x) != s) return false;
  return true;
}

SubgroupEmbedding subgroup_group(const GroupRef& g, const ElementSet& s) {
  if (!is_subgroup(*g, s)) throw InvalidArgument("not a subgroup of " + g->label());
  if (s.size() == g->order()) return {g, identity_hom(g)};
  const std::string label = "(" + g->label() + ">" + set_label(s) + ")";
  GroupRef h;
  if (s.size() == 1) {
    h = trivial_group();
  } else {
    h = intern(label, [&] {
      const std::size_t n = s.size();
      std::unordered_map<Elt, Elt> pos;
      for (Elt i = 0; i < n; ++i) pos[s[i]] = i;
      Group::Table t;
      t.mul.resize(n * n);
      t.inv.resize(n);
      for (Elt i = 0; i < n; ++i) {
        t.perms.push_back(g->permutation(s[i]));
        t.inv[i] = pos.at(g->inv(s[i]));
        for (Elt j = 0; j < n; ++j) t.mul[i * n + j] = pos.at(g->mul(s[i], s[j]));
      }
      return std::make_shared<Group>(label, std::move(t));
    });
  }
  return {h, GroupHom::structural(h, g, s)};
}

Quotient quotient_group(const GroupRef& g, const ElementSet& n) {
  if (!is_subgroup(*g, n)) throw InvalidArgument("quotient by a non-subgroup of " + g->label());
  if (!is_normal(*g, n)) throw DomainError("quotient by a non-normal subgroup of " + g->label());
  if (n.size() == 1) return {g, identity_hom(g)};
  std::vector<Elt> label_of(g->order(), UINT32_MAX);
  std::vector<Elt> reps;
  for (Elt x = 0; x < g->order(); ++x) {
    if (label_of[x] != UINT32_MAX) continue;
    for (Elt m : n) label_of[g->mul(x, m)] = static_cast<Elt>(reps.size());
    reps.push_back(x);
  }
  GroupRef q;
  if (reps.size() == 1) {
    q = trivial_group();
  } else {
    const std::string label = "(" + g->label() + "/" + set_label(n) + ")";
    q = intern(label, [&] {
      const std::size_t k = reps.size();
      Group::Table t;
      t.mul.resize(k * k);
      t.inv.resize(k);
      for (Elt i = 0; i < k; ++i) {
        t.inv[i] = label_of[g->inv(reps[i])];
        for (Elt j = 0; j < k; ++j) t.mul[i * k + j] = label_of[g->mul(reps[i], reps[j])];
      }
      return std::make_shared<Group>(label, std::move(t));
    });
  }
  return {q, GroupHom::structural(g, q, label_of)};
}

namespace {

// Extend generator images to a homomorphism; nullopt if inconsistent.
std::optional<std::vector<Elt>> extend_on_generators(const Group& h, const Group& g, const std::vector<Elt>& img) {
  const auto& gens = h.generators();
  std::vector<Elt> map(h.order(), UINT32_MAX);
  map[0] = 0;
  std::deque<Elt> queue{0};
  while (!queue.empty()) {
    const Elt x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elt y = h.mul(x, gens[k]);
      const Elt fy = g.mul(map[x], img[k]);
      if (map[y] == UINT32_MAX) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

std::optional<GroupHom> find_embedding(const GroupRef& h, const GroupRef& g, bool normal_image) {
  if (g->order() % h->order() != 0) return std::nullopt;
  const auto& gens = h->generators();
  std::vector<std::vector<Elt>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Elt y = 0; y < g->order(); ++y)
      if (g->element_order(y) == h->element_order(gens[k])) candidates[k].push_back(y);
  std::vector<Elt> img(gens.size());
  std::optional<GroupHom> found;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      auto map = extend_on_generators(*h, *g, img);
      if (!map) return false;
      std::vector<Elt> sorted = *map;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      if (normal_image && !is_normal(*g, sorted)) return false;
      found = GroupHom::structural(h, g, std::move(*map));
      return true;
    }
    for (Elt y : candidates[k]) {
      img[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  search(0);
  return found;
}

std::optional<GroupHom> find_isomorphism(const GroupRef& h, const GroupRef& g) {
  if (h->order() != g->order()) return std::nullopt;
  return find_embedding(h, g);
}

}  // namespace gb
