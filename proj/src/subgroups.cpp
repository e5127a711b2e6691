#include "greenbiset/subgroups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "greenbiset/cache.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/limits.hpp"

namespace gb {

std::size_t ElementSetHash::operator()(const ElementSet& s) const {
  std::size_t h = 1469598103934665603ull;
  for (Elt x : s) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::vector<ElementSet> conjugates(const Group& g, const ElementSet& s) {
  std::vector<ElementSet> orbit{s};
  std::set<ElementSet> seen{s};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Elt x : g.generators()) {
      ElementSet c = conjugate(g, orbit[i], x);
      if (seen.insert(c).second) orbit.push_back(std::move(c));
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

namespace {

std::vector<std::size_t> order_profile(const Group& g, const ElementSet& s) {
  std::vector<std::size_t> p;
  for (Elt x : s) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::vector<SubgroupClass> enumerate_subgroup_classes(const GroupRef& gp) {
  const Group& g = *gp;
  require_within(g.order(), limits().enumeration, "subgroup lattice of " + g.label());

  // distinct cyclic subgroups, each with a generator
  std::vector<std::pair<ElementSet, Elt>> cyclic;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elt x = 1; x < g.order(); ++x) {
      ElementSet c = closure(g, {x});
      if (seen.insert(c).second) cyclic.emplace_back(std::move(c), x);
    }
  }

  struct Found {
    ElementSet least;
    std::vector<Elt> gens;
    std::size_t size;
  };
  std::vector<Found> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](const ElementSet& s, std::vector<Elt> gens) {
    if (seen.count(s)) return;
    auto conj = conjugates(g, s);
    for (const auto& c : conj) seen.insert(c);
    found.push_back({conj.front(), std::move(gens), conj.size()});
  };
  add({0}, {});
  for (std::size_t i = 0; i < found.size(); ++i) {
    const ElementSet rep = found[i].least;
    // generators of the least member: recompute from scratch for the least conjugate
    std::vector<Elt> gens;
    {
      ElementSet span{0};
      for (Elt x : rep)
        if (!std::binary_search(span.begin(), span.end(), x)) {
          gens.push_back(x);
          span = closure(g, gens);
        }
    }
    found[i].gens = gens;
    std::vector<bool> in(g.order(), false);
    for (Elt x : rep) in[x] = true;
    for (const auto& [c, x] : cyclic) {
      if (in[x]) continue;
      std::vector<Elt> jg = gens;
      jg.push_back(x);
      ElementSet j = closure(g, jg);
      add(j, std::move(jg));
    }
  }

  std::vector<std::tuple<std::size_t, std::vector<std::size_t>, ElementSet, std::size_t>> keyed;
  for (std::size_t i = 0; i < found.size(); ++i)
    keyed.emplace_back(found[i].least.size(), order_profile(g, found[i].least), found[i].least, i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<SubgroupClass> out;
  for (const auto& [ord, prof, least, i] : keyed) {
    SubgroupClass c;
    c.representative = least;
    c.generators = found[i].gens;
    c.class_size = found[i].size;
    c.index = out.size();
    out.push_back(std::move(c));
  }
  return out;
}

SubgroupLattice::SubgroupLattice(GroupRef g, std::vector<SubgroupClass> classes)
    : group_(std::move(g)), classes_(std::move(classes)) {
  std::map<std::size_t, std::size_t> per_order;
  for (auto& c : classes_) {
    members_.push_back(conjugates(*group_, c.representative));
    if (members_.back().size() != c.class_size) throw Error("inconsistent subgroup class data for " + group_->label());
    for (const auto& m : members_.back()) index_.emplace(m, static_cast<std::uint32_t>(c.index));
    std::string label;
    if (c.order() == 1)
      label = "1";
    else if (c.order() == group_->order())
      label = "G";
    else
      label = std::to_string(c.order()) + "_" + std::to_string(++per_order[c.order()]);
    labels_.push_back(std::move(label));
  }
}

std::size_t SubgroupLattice::class_of(const ElementSet& subgroup) const {
  auto it = index_.find(subgroup);
  if (it == index_.end()) throw InvalidArgument("not a subgroup of " + group_->label());
  return it->second;
}

namespace {

nlohmann::json to_json(const std::vector<SubgroupClass>& classes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : classes)
    arr.push_back({{"rep", c.representative}, {"gens", c.generators}, {"size", c.class_size}});
  return arr;
}

std::vector<SubgroupClass> from_json(const nlohmann::json& j, const Group& g) {
  std::vector<SubgroupClass> out;
  for (const auto& e : j) {
    SubgroupClass c;
    c.representative = e.at("rep").get<ElementSet>();
    c.generators = e.at("gens").get<std::vector<Elt>>();
    c.class_size = e.at("size").get<std::size_t>();
    c.index = out.size();
    if (!is_subgroup(g, c.representative) || closure(g, c.generators) != c.representative)
      throw Error("cached subgroup data is inconsistent");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const SubgroupLattice& subgroup_lattice(const GroupRef& g) {
  static std::mutex mu;
  static std::map<const Group*, std::unique_ptr<SubgroupLattice>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(g.get()); it != memo.end()) return *it->second;
  }
  require_within(g->order(), limits().enumeration, "subgroup lattice of " + g->label());
  std::vector<SubgroupClass> classes;
  auto build = [&] { return to_json(enumerate_subgroup_classes(g)); };
  try {
    classes = from_json(cache::get_or_build("lattice", g->label(), build), *g);
  } catch (const Error&) {
    classes = enumerate_subgroup_classes(g);
  } catch (const nlohmann::json::exception&) {
    classes = enumerate_subgroup_classes(g);
  }
  auto lat = std::make_unique<SubgroupLattice>(g, std::move(classes));
  std::lock_guard lock(mu);
  auto [it, inserted] = memo.emplace(g.get(), std::move(lat));
  return *it->second;
}

}  // namespace gb
