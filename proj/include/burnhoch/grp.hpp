#pragma once

// Finite groups given by multiplication tables: conjugacy classes, subgroup
// lattices, centralizers, normalizers and Weyl groups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace burnhoch::grp {

using Elem = std::size_t;
/// Element subsets as bitmasks; groups are capped well below 64 elements.
using ElemSet = std::uint64_t;

inline constexpr std::size_t kMaxBuildOrder = 48;
inline constexpr std::size_t kMaxSubgroupOrder = 24;

struct GroupDescriptor {
  enum class Kind { cyclic, perm, table };
  Kind kind = Kind::cyclic;
  std::size_t n = 1;                            // cyclic
  std::size_t degree = 0;                       // perm
  std::vector<std::vector<std::size_t>> gens;   // perm, 0-indexed images
  std::vector<std::vector<std::size_t>> table;  // table
  std::string name;

  static GroupDescriptor cyclic(std::size_t n);
  static GroupDescriptor perm(std::string name, std::size_t degree,
                              std::vector<std::vector<std::size_t>> gens);

  /// {"kind":"cyclic","n":6} | {"kind":"perm","degree":3,"gens":[...]} |
  /// {"kind":"table","table":[[...],...]}
  static GroupDescriptor from_json(const nlohmann::json& j);
  /// JSON text, a catalog name (C6, S3, D4, Q8, A4, V4) or "cyclic:n".
  static GroupDescriptor parse(const std::string& text);
  nlohmann::json to_json() const;
};

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : name_("C1"), table_{{0}}, inverse_{0}, orders_{1}, classes_{{0}}, class_index_{0} {}
  /// Validates the table: square, Latin, 0 a two-sided identity, associative.
  static FiniteGroup from_table(std::vector<std::vector<Elem>> table, std::string name = "");

  std::size_t order() const { return table_.size(); }
  const std::string& name() const { return name_; }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long k) const;
  std::size_t elem_order(Elem a) const { return orders_[a]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  const std::vector<std::vector<Elem>>& table() const { return table_; }

  /// Conjugacy classes of elements, each sorted; ordered by smallest member,
  /// so class 0 is {identity}.
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }
  std::size_t class_of(Elem g) const { return class_index_[g]; }
  bool is_abelian() const;

  ElemSet generated(ElemSet generators) const;
  ElemSet cyclic_mask(Elem g) const;

 private:

  std::string name_;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_index_;
};

FiniteGroup build_group(const GroupDescriptor& desc, std::size_t bound = kMaxBuildOrder);

struct SubgroupRec {
  std::vector<Elem> elements;  // sorted, contains 0
  ElemSet mask = 1;
  bool cyclic = true;
  std::optional<Elem> generator;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem g) const { return (mask >> g) & 1U; }
  bool operator==(const SubgroupRec& o) const { return mask == o.mask; }
};

/// Validates closure under products and inverses.
SubgroupRec make_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements);
SubgroupRec subgroup_from_mask(const FiniteGroup& g, ElemSet mask);
SubgroupRec conjugate(const FiniteGroup& g, const SubgroupRec& h, Elem x);  // x H x^-1

struct SubgroupLattice {
  /// Every subgroup exactly once, grouped by conjugacy class.
  std::vector<SubgroupRec> subgroups;
  /// Indices into `subgroups`; classes ordered by (order, canonical
  /// representative), and the first member of each class is its canonical
  /// representative (lexicographically least element list).
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  /// Indices into `classes` of the classes of cyclic subgroups.
  std::vector<std::size_t> cyclic_classes;

  const SubgroupRec& representative(std::size_t cls) const { return subgroups[classes[cls].front()]; }
  /// Class index of an arbitrary subgroup.
  std::size_t class_of_subgroup(const SubgroupRec& h) const;
};

SubgroupLattice subgroups(const FiniteGroup& g, std::size_t bound = kMaxSubgroupOrder);

SubgroupRec centralizer(const FiniteGroup& g, const SubgroupRec& h);
SubgroupRec normalizer(const FiniteGroup& g, const SubgroupRec& h);
SubgroupRec element_centralizer(const FiniteGroup& g, Elem x);

/// A subgroup re-indexed as a group in its own right: local element i is
/// `to_parent[i]`, and local 0 is the identity.
struct Embedded {
  FiniteGroup group;
  std::vector<Elem> to_parent;

  std::optional<Elem> local(Elem parent) const;
};
Embedded subgroup_as_group(const FiniteGroup& g, const SubgroupRec& h);

/// Automorphism h -> w h w^-1 of a cyclic subgroup, recorded both as the
/// exponent t with gen -> gen^t and as an element map on H.
struct Automorphism {
  std::size_t exponent;
  std::vector<std::pair<Elem, Elem>> map;
};

struct WeylData {
  SubgroupRec centralizer;
  SubgroupRec normalizer;
  SubgroupRec h_times_centralizer;
  /// N/(H.Z); element i is the coset of weyl_reps[i] (least element).
  FiniteGroup weyl;
  std::vector<Elem> weyl_reps;
  /// For cyclic H, one automorphism per Weyl element, in the same order.
  std::vector<Automorphism> action;
};

WeylData weyl(const FiniteGroup& g, const SubgroupRec& h);

/// Named groups used by the verification suite.
std::vector<GroupDescriptor> default_catalog();
GroupDescriptor catalog_group(const std::string& name);

}  // namespace burnhoch::grp
