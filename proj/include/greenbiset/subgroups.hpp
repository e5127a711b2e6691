#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "greenbiset/group.hpp"

namespace gb {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const;
};

struct SubgroupClass {
  ElementSet representative;  // lexicographically least member of the class
  std::vector<Elt> generators;
  std::size_t class_size = 0;
  std::size_t order() const { return representative.size(); }
  std::size_t index = 0;
};

/// Conjugacy classes of subgroups in canonical order: by order, then the
/// sorted multiset of element orders, then the least representative.
class SubgroupLattice {
 public:
  SubgroupLattice(GroupRef g, std::vector<SubgroupClass> classes);

  const GroupRef& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }

  /// Class of an arbitrary subgroup (sorted element list).
  std::size_t class_of(const ElementSet& subgroup) const;
  /// Every member of class i.
  const std::vector<ElementSet>& members(std::size_t i) const { return members_[i]; }
  std::size_t total_subgroups() const { return index_.size(); }

  /// Basis labels: "1", "G" for the whole group, otherwise "<order>_<k>" with
  /// k numbering classes of equal order from 1.
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  GroupRef group_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<ElementSet>> members_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index_;
  std::vector<std::string> labels_;
};

/// Cached per group; throws BoundExceeded above the enumeration bound.
const SubgroupLattice& subgroup_lattice(const GroupRef& g);

/// Same data computed fresh, bypassing every cache.
std::vector<SubgroupClass> enumerate_subgroup_classes(const GroupRef& g);

/// All conjugates of a subgroup.
std::vector<ElementSet> conjugates(const Group& g, const ElementSet& s);

}  // namespace gb
