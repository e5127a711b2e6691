#include "greenbiset/properties.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "greenbiset/checks.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/green.hpp"
#include "greenbiset/limits.hpp"
#include "greenbiset/subgroups.hpp"

namespace gb {

namespace {

const std::vector<std::string> kIdentities = {
    "associativity", "identity",      "opposite",       "bilinear-maps", "adjoint",        "module-assoc",
    "module-assoc-shift", "trivial-group", "unit",      "commutativity", "gram-symmetry",  "shift-coherence",
};

// Groups of the catalog where the functor is defined.
std::vector<GroupRef> domain_groups(const Functor& a, std::size_t max_order) {
  std::vector<GroupRef> out;
  for (const auto& s : catalog_up_to(max_order)) {
    GroupRef g = make_group(s);
    try {
      a.basis(g);
    } catch (const DomainError&) {
      continue;
    }
    out.push_back(g);
  }
  return out;
}

// Largest group, shift groups included, at which a basis is requested.
constexpr std::size_t kEvaluationCap = 96;

bool fits(const std::vector<GroupRef>& gs, const std::vector<std::vector<int>>& shapes, std::size_t weight,
          std::size_t bound) {
  for (const auto& exps : shapes) {
    std::size_t cost = weight;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) {
        cost *= gs[i]->order();
        if (cost > bound) return false;
      }
  }
  return true;
}

class Sampler {
 public:
  Sampler(const FunctorRef& a, std::vector<GroupRef> groups, std::uint64_t seed)
      : a_(a), groups_(std::move(groups)), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  // k groups such that, with f the functor's shift order, every product
  // shape stays within the intermediate bound after weighting by f^2 * extra
  // and every evaluation shape within kEvaluationCap after weighting by
  // f * extra. C1 is always admissible so this terminates.
  using Shapes = std::vector<std::vector<int>>;
  std::vector<GroupRef> groups(std::size_t k, const Shapes& products, const Shapes& evals, std::size_t extra = 1) {
    const std::size_t f = a_->shift_order();
    std::uniform_int_distribution<std::size_t> pick(0, groups_.size() - 1);
    for (;;) {
      std::vector<GroupRef> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(groups_[pick(rng_)]);
      if (fits(out, products, f * f * extra, limits().intermediate) && fits(out, evals, f * extra, kEvaluationCap)) {
        for (const auto& g : out) used_.insert(g->label());
        return out;
      }
    }
  }

  // A random basis vector of a(g), or zero when a(g) = 0.
  Vec element(const GroupRef& g, std::size_t* index = nullptr) {
    const std::size_t n = a_->dim(g);
    if (n == 0) return {};
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    if (index) *index = i;
    return a_->basis_vector(g, i);
  }

  std::vector<std::string> used() const { return {used_.begin(), used_.end()}; }

 private:
  FunctorRef a_;
  std::vector<GroupRef> groups_;
  std::mt19937_64 rng_;
  std::set<std::string> used_;
};

std::uint64_t stream_seed(std::uint64_t seed, const std::string& identity) {
  // FNV-1a of the name, mixed with the seed
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : identity) h = (h ^ c) * 1099511628211ull;
  return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

nlohmann::ordered_json labels(const std::vector<GroupRef>& gs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& g : gs) j.push_back(g->label());
  return j;
}

// One instance: returns null on success, otherwise a description.
using Instance = std::function<nlohmann::ordered_json(Sampler&)>;

Instance make_instance(const FunctorRef& ap, const std::string& id) {
  const Functor& a = *ap;
  const GroupRef one = trivial_group();

  if (id == "associativity")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      // d in A(H x G), b in A(G x K), x in A(K x M)
      auto gs = s.groups(4, {{1, 2, 1, 0}, {1, 2, 0, 1}, {0, 1, 2, 1}, {1, 0, 2, 1}},
                         {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}});
      const auto &h = gs[0], &g = gs[1], &k = gs[2], &m = gs[3];
      const Vec d = s.element(direct_product(h, g)), b = s.element(direct_product(g, k)),
                x = s.element(direct_product(k, m));
      if (compose(a, h, g, m, d, compose(a, g, k, m, b, x)) == compose(a, h, k, m, compose(a, h, g, k, d, b), x))
        return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "identity")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(2, {{3, 1}, {1, 3}}, {{2, 0}, {0, 2}, {1, 1}});
      const auto &h = gs[0], &k = gs[1];
      const Vec x = s.element(direct_product(h, k));
      if (compose(a, h, h, k, identity_morphism(a, h), x) == x && compose(a, h, k, k, x, identity_morphism(a, k)) == x)
        return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "opposite")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(3, {{1, 2, 1}}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
      const auto &h = gs[0], &g = gs[1], &k = gs[2];
      const Vec b = s.element(direct_product(h, g)), x = s.element(direct_product(g, k));
      const Vec lhs = opposite(a, h, k, compose(a, h, g, k, b, x));
      const Vec rhs = compose(a, k, g, h, opposite(a, g, k, x), opposite(a, h, g, b));
      if (lhs == rhs) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "bilinear-maps")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(2, {{2, 2}}, {{1, 1}});
      const auto &h = gs[0], &l = gs[1];
      const GroupRef hl = direct_product(h, l);
      const Vec u = s.element(hl), v = s.element(hl);
      if (bilinear_value(a, h, l, u, v, GramRoute::Dot) == bilinear_value(a, h, l, u, v, GramRoute::Compose))
        return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "adjoint")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      // x in A(H x K), b in A(L x K), c in A(L x H)
      auto gs = s.groups(3, {{0, 2, 2}, {2, 2, 0}, {2, 1, 1}, {1, 1, 2}}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
      const auto &h = gs[0], &k = gs[1], &l = gs[2];
      const Vec x = s.element(direct_product(h, k)), b = s.element(direct_product(l, k)),
                c = s.element(direct_product(l, h));
      const Vec lhs = bilinear_value(a, l, k, compose(a, l, h, k, c, x), b);
      const Vec rhs = bilinear_value(a, h, k, x, compose(a, h, l, k, opposite(a, l, h, c), b));
      if (lhs == rhs) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "module-assoc" || id == "module-assoc-shift") {
    GroupRef lm = one;
    if (id == "module-assoc-shift") {
      // smallest nontrivial group in the functor's domain
      const auto gs = domain_groups(a, 6);
      if (gs.size() < 2) throw DomainError(a.spec() + " has no nontrivial group to shift by");
      lm = gs[1];
    }
    return [&a, lm, one](Sampler& s) -> nlohmann::ordered_json {
      // c in A(K x G), x in A(G), m in M(H) = A(H x Lm); M(Y) x A(X) products
      // are A-products landing in A(X x Y x Lm)
      auto gs = s.groups(3, {{1, 2, 1}}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, lm->order());
      const auto &k = gs[0], &g = gs[1], &h = gs[2];
      const GroupRef hm = direct_product(h, lm);
      const Vec c = s.element(direct_product(k, g)), x = s.element(g), m = s.element(hm);
      const Vec xm = a.times(g, x, hm, m);
      const Vec lhs = a.times_then_act(direct_product(k, g), c, direct_product({g, h, lm}), xm,
                                       extend(composition_word(k, g, h), lm));
      const Vec rhs = a.times(k, compose(a, k, g, one, c, x), hm, m);
      if (lhs == rhs) return nullptr;
      return {{"groups", labels(gs)}};
    };
  }
  if (id == "trivial-group")
    return [&a, one](Sampler& s) -> nlohmann::ordered_json {
      const Vec x = s.element(one), y = s.element(one);
      const Vec t = a.times(one, x, one, y);
      if (t == compose(a, one, one, one, x, y) && t == dot(a, one, x, y)) return nullptr;
      return {{"groups", nlohmann::ordered_json::array({"C1"})}};
    };
  if (id == "unit")
    return [&a, one](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(1, {{1}}, {{1}});
      const Vec x = s.element(gs[0]);
      if (a.times(one, a.unit(), gs[0], x) == x && a.times(gs[0], x, one, a.unit()) == x) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "commutativity")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(2, {{1, 1}}, {{1, 1}});
      const auto &g = gs[0], &h = gs[1];
      const Vec x = s.element(g), y = s.element(h);
      if (a.times(g, x, h, y) == opposite(a, h, g, a.times(h, y, g, x))) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "gram-symmetry")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(2, {{2, 2}}, {{1, 1}});
      const GroupRef hl = direct_product(gs[0], gs[1]);
      const Vec u = s.element(hl), v = s.element(hl);
      if (bilinear_value(a, gs[0], gs[1], u, v) == bilinear_value(a, gs[0], gs[1], v, u)) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "shift-coherence")
    return [ap](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(2, {{1, 1}}, {{1, 1}});
      if (shift_functor(ap, gs[1])->basis(gs[0]) == ap->basis(direct_product(gs[0], gs[1]))) return nullptr;
      return {{"groups", labels(gs)}};
    };
  if (id == "cut-stability")
    return [&a](Sampler& s) -> nlohmann::ordered_json {
      auto gs = s.groups(1, {{1}}, {{1}});
      std::size_t i = 0;
      const Vec x = s.element(gs[0], &i);
      GroupRef cur = gs[0];
      BisetWord w = BisetWord::identity(cur);
      const std::size_t len = 1 + s.rng()() % 3;
      for (std::size_t j = 0; j < len; ++j) {
        const Elemental e = random_elemental(s.rng(), cur, cur->order() <= 6);
        w = w.then(e);
        cur = e.target();
      }
      try {
        a.act(w, x);
        return nullptr;
      } catch (const DomainError& err) {
        return {{"group", gs[0]->label()}, {"basis_index", i}, {"word", w.to_string()}, {"error", err.what()}};
      }
    };
  throw InvalidArgument("unknown identity: " + id);
}

}  // namespace

nlohmann::ordered_json PropertyOutcome::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = identity;
  j["instances"] = instances;
  j["failures"] = failures;
  j["groups"] = groups;
  j["first_failure"] = first_failure;
  return j;
}

std::vector<std::string> property_names(const Functor& a) {
  auto out = kIdentities;
  if (a.kind() == FunctorKind::Cut) out.push_back("cut-stability");
  return out;
}

Elemental random_elemental(std::mt19937_64& rng, const GroupRef& g, bool allow_growth) {
  const auto& lat = subgroup_lattice(g);
  std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
  const GroupRef c2 = make_group("C2");
  for (;;) {
    const auto& s = lat[pick(rng)].representative;
    switch (rng() % 4) {
      case 0: return Elemental::res(subgroup_group(g, s).inclusion);
      case 1:
        if (is_normal(*g, s)) return Elemental::def(quotient_group(g, s).projection);
        break;
      case 2:
        if (allow_growth) return Elemental::ind(embedding(g, c2, 0));
        break;
      case 3:
        if (allow_growth) return Elemental::inf(projection(g, c2, 0));
        break;
    }
  }
}

PropertyOutcome run_property(const FunctorRef& a, const std::string& identity, const PropertyConfig& cfg) {
  PropertyOutcome out;
  out.identity = identity;
  auto groups = domain_groups(*a, cfg.max_order);
  if (groups.empty()) throw DomainError(a->spec() + " is defined on no catalog group of order <= " + std::to_string(cfg.max_order));
  Sampler s(a, std::move(groups), stream_seed(cfg.seed, identity));
  const Instance inst = make_instance(a, identity);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    nlohmann::ordered_json r = inst(s);
    ++out.instances;
    if (r.is_null()) continue;
    if (out.failures++ == 0) {
      r["instance"] = i;
      out.first_failure = r;
    }
  }
  out.groups = s.used();
  return out;
}

std::vector<PropertyOutcome> run_property_suites(const FunctorRef& a, const PropertyConfig& cfg) {
  std::vector<PropertyOutcome> out;
  for (const auto& id : property_names(*a)) out.push_back(run_property(a, id, cfg));
  return out;
}

}  // namespace gb
