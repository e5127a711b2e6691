#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gb {

using Elt = std::uint32_t;
using Perm = std::vector<std::uint32_t>;
/// Subgroups and other element subsets are kept as sorted index lists.
using ElementSet = std::vector<Elt>;

class Group;
using GroupRef = std::shared_ptr<const Group>;

struct ConjugacyClasses {
  std::vector<ElementSet> classes;  // class 0 is {identity}
  std::vector<std::uint32_t> class_of;
  std::size_t size() const { return classes.size(); }
};

/// A finite group with enumerated elements; the identity has index 0.
///
/// Direct products are flat: a product group stores its base factors and
/// indexes elements in mixed radix, first factor most significant. Trivial
/// factors are dropped, so 1 x H and H are the same object. Groups are
/// interned by label; two GroupRefs are equal iff they point to one object.
class Group : public std::enable_shared_from_this<Group> {
 public:
  const std::string& label() const { return label_; }
  std::size_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  Elt identity() const { return 0; }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  /// x^-1 g x
  Elt conj(Elt g, Elt x) const { return mul(inv(x), mul(g, x)); }
  Elt power(Elt a, long e) const;
  std::size_t element_order(Elt a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  /// A generating set (element indices), deterministic.
  const std::vector<Elt>& generators() const { return gens_; }

  /// Base factors; empty for the trivial group, {itself} for a base group.
  std::vector<GroupRef> factors() const;
  bool is_product() const { return !factors_.empty(); }
  std::vector<Elt> split(Elt a) const;
  Elt join(const std::vector<Elt>& parts) const;

  /// Faithful permutation action (disjoint union over factors for products).
  std::size_t degree() const;
  Perm permutation(Elt a) const;

  const ConjugacyClasses& conjugacy_classes() const;

  std::vector<Elt> elements() const;

  // construction, used by the factories in group.cpp
  struct Table {
    std::vector<Elt> mul;  // order*order
    std::vector<Elt> inv;
    std::vector<Perm> perms;  // may be empty (regular action is then used)
  };
  Group(std::string label, Table table);
  Group(std::string label, std::vector<GroupRef> factors);

 private:
  void init_generators();

  std::string label_;
  std::size_t order_ = 1;
  Table table_;                     // base groups
  std::vector<GroupRef> factors_;   // products (size >= 2)
  std::vector<std::size_t> radix_;  // factor orders
  std::vector<Elt> gens_;

  mutable std::once_flag classes_once_;
  mutable ConjugacyClasses classes_;
  mutable std::once_flag orders_once_;
  mutable std::vector<std::size_t> element_orders_;
};

/// Catalog grammar: C<n>, D<2n>, Q8, S1..S4, A4, joined by 'x'.
/// Throws InvalidArgument on unknown tokens, BoundExceeded above the
/// enumeration bound.
GroupRef make_group(std::string_view spec);
GroupRef trivial_group();

/// Flattened product; throws BoundExceeded above the intermediate bound.
GroupRef direct_product(const std::vector<GroupRef>& groups);
GroupRef direct_product(const GroupRef& a, const GroupRef& b);

enum class HomKind { Inclusion, Projection, Isomorphism };
std::string to_string(HomKind k);

/// A homomorphism stored by its full image table.
class GroupHom {
 public:
  /// Validated against the generators of `source`; `kind` must match
  /// injectivity and surjectivity. Throws InvalidArgument otherwise.
  static GroupHom make(GroupRef source, GroupRef target, std::vector<Elt> images, HomKind kind);
  /// For maps that are homomorphisms by construction; kind is inferred.
  static GroupHom structural(GroupRef source, GroupRef target, std::vector<Elt> images);

  const GroupRef& source() const { return src_; }
  const GroupRef& target() const { return tgt_; }
  HomKind kind() const { return kind_; }
  Elt operator()(Elt a) const { return images_[a]; }
  const std::vector<Elt>& images() const { return images_; }

  ElementSet image(const ElementSet& a) const;
  ElementSet preimage(const ElementSet& b) const;
  ElementSet kernel() const { return preimage({0}); }

 private:
  GroupHom(GroupRef s, GroupRef t, std::vector<Elt> images, HomKind k)
      : src_(std::move(s)), tgt_(std::move(t)), images_(std::move(images)), kind_(k) {}
  GroupRef src_, tgt_;
  std::vector<Elt> images_;
  HomKind kind_;
};

/// second o first
GroupHom compose(const GroupHom& second, const GroupHom& first);
GroupHom identity_hom(const GroupRef& g);
GroupHom inverse(const GroupHom& iso);

/// Structural map between products of blocks: output block j is a copy of
/// input block which[j], or the identity of out_blocks[j] when which[j] < 0.
/// Covers diagonals, swaps, projections and embeddings.
GroupHom tuple_map(const std::vector<GroupRef>& in_blocks, const std::vector<GroupRef>& out_blocks,
                   const std::vector<int>& which);

/// h x id_L : source x L -> target x L
GroupHom extend(const GroupHom& h, const GroupRef& l);

GroupHom diagonal(const GroupRef& g);                    // G -> G x G
GroupHom swap_factors(const GroupRef& a, const GroupRef& b);  // A x B -> B x A
GroupHom embedding(const GroupRef& a, const GroupRef& b, int which);   // into A x B
GroupHom projection(const GroupRef& a, const GroupRef& b, int which);  // from A x B

struct ProductMaps {
  GroupRef group;
  GroupHom embed_first, embed_second, project_first, project_second;
};
ProductMaps direct_product_with_maps(const GroupRef& a, const GroupRef& b);

ElementSet closure(const Group& g, const std::vector<Elt>& gens);
bool is_subgroup(const Group& g, const ElementSet& s);
bool is_normal(const Group& g, const ElementSet& s);
ElementSet conjugate(const Group& g, const ElementSet& s, Elt x);  // x^-1 S x, sorted

/// The subgroup as a group in its own right, with its inclusion.
struct SubgroupEmbedding {
  GroupRef group;
  GroupHom inclusion;
};
SubgroupEmbedding subgroup_group(const GroupRef& g, const ElementSet& s);

struct Quotient {
  GroupRef group;
  GroupHom projection;
};
/// G/N on cosets ordered by least element. G/1 is G and G/G is C1.
Quotient quotient_group(const GroupRef& g, const ElementSet& n);

/// First injective homomorphism H -> G in a deterministic search, optionally
/// with normal image.
std::optional<GroupHom> find_embedding(const GroupRef& h, const GroupRef& g, bool normal_image = false);

/// First isomorphism H -> G, if any.
std::optional<GroupHom> find_isomorphism(const GroupRef& h, const GroupRef& g);

}  // namespace gb
