#pragma once

// Rational Burnside rings through the table of marks, the idempotents
// theta_C of cyclic groups, Mackey functors stored as explicit matrices, and
// Artin defects.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnhoch/grp.hpp"
#include "burnhoch/matrix.hpp"
#include "json.hpp"

namespace burnhoch::burnside {

using la::Rational;

struct TableOfMarks {
  grp::FiniteGroup group;
  grp::SubgroupLattice lattice;
  /// marks.at(i, j) = |(G/K_j)^{H_i}| for class representatives H_i, K_j,
  /// classes in lattice order (ascending subgroup order).
  la::Matrix marks;
  std::vector<std::string> labels;
};

TableOfMarks table_of_marks(const grp::FiniteGroup& g);

/// A(G) (x) Q with basis the transitive G-sets [G/H], one per subgroup class.
class BurnsideRing {
 public:
  static std::shared_ptr<const BurnsideRing> make(const grp::FiniteGroup& g);

  const grp::FiniteGroup& group() const { return table_.group; }
  const grp::SubgroupLattice& lattice() const { return table_.lattice; }
  const TableOfMarks& table() const { return table_; }
  std::size_t rank() const { return table_.labels.size(); }

  std::vector<Rational> marks_of(const std::vector<Rational>& coeffs) const;
  std::vector<Rational> coeffs_of(const std::vector<Rational>& marks) const;

 private:
  explicit BurnsideRing(TableOfMarks t);

  TableOfMarks table_;
  la::Matrix inverse_marks_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

class BurnsideElem {
 public:
  BurnsideElem(RingPtr ring, std::vector<Rational> coeffs);
  static BurnsideElem zero(RingPtr ring);
  static BurnsideElem one(RingPtr ring);  // [G/G]
  static BurnsideElem basis(RingPtr ring, std::size_t cls);  // [G/H_cls]
  static BurnsideElem from_marks(RingPtr ring, const std::vector<Rational>& marks);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational> marks() const { return ring_->marks_of(coeffs_); }

  BurnsideElem operator+(const BurnsideElem& o) const;
  BurnsideElem operator-(const BurnsideElem& o) const;
  /// Pointwise product of marks, transformed back.
  BurnsideElem operator*(const BurnsideElem& o) const;
  BurnsideElem scaled(const Rational& s) const;
  bool operator==(const BurnsideElem& o) const;

  /// e.g. "[C/C] - 1/2[C/e]"
  std::string str() const;

 private:
  void check_ring(const BurnsideElem& o) const;

  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// theta_C: the element whose marks are 1 at the class of C and 0 elsewhere.
BurnsideElem theta(const RingPtr& cyclic_ring);

/// A subgroup D <= G with both Burnside rings at hand.
struct Inclusion {
  RingPtr sub;
  RingPtr ambient;
  std::vector<grp::Elem> to_parent;
};
Inclusion include(const RingPtr& ambient, const grp::SubgroupRec& d);

/// [D/E] -> [G/E]
BurnsideElem induce(const Inclusion& inc, const BurnsideElem& x);
/// Decomposes each [G/K] into D-orbits D/(D n gKg^-1).
BurnsideElem restrict(const Inclusion& inc, const BurnsideElem& y);

/// A Mackey functor on the subgroups of a finite abelian group, stored as
/// explicit matrices.
struct MackeyModule {
  std::string name;
  grp::FiniteGroup ambient;
  /// All subgroups of the ambient group, in lattice order.
  std::vector<grp::SubgroupRec> subgroups;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  /// Keyed by (d, e) with subgroups[d] <= subgroups[e], d != e.
  /// ind: M(D) -> M(E), res: M(E) -> M(D).
  std::map<std::pair<std::size_t, std::size_t>, la::Matrix> ind;
  std::map<std::pair<std::size_t, std::size_t>, la::Matrix> res;
  /// Keyed by (e, f) with subgroups[f] <= subgroups[e]: the action of the
  /// E-set [E/F] on M(E).
  std::map<std::pair<std::size_t, std::size_t>, la::Matrix> action;

  std::size_t index_of(const grp::SubgroupRec& h) const;
  bool is_subgroup(std::size_t d, std::size_t e) const;
  /// Identity when d == e; incomplete-mackey error when missing.
  la::Matrix ind_matrix(std::size_t d, std::size_t e) const;
  la::Matrix res_matrix(std::size_t e, std::size_t d) const;
  /// Action of an element of A(E), E = subgroups[e], on M(E).
  la::Matrix action_matrix(std::size_t e, const BurnsideElem& x) const;
  RingPtr ring(std::size_t e) const;

  nlohmann::json to_json() const;
  static MackeyModule from_json(const nlohmann::json& j);
};

struct MackeyCheck {
  bool functorial = true;
  bool double_coset = true;
  bool unit_action = true;
  std::vector<std::string> failures;
  bool ok() const { return functorial && double_coset && unit_action; }
};

/// Functoriality of ind/res, the double coset formula on every triple
/// D, F <= E, and [E/E] acting as the identity.
MackeyCheck check_mackey_axioms(const MackeyModule& m);

/// The Burnside Mackey functor D -> A(D) (x) Q on the subgroups of C.
MackeyModule burnside_mackey(const grp::FiniteGroup& c);

struct DefectReport {
  std::string label;
  std::size_t theta_dim = 0;
  std::size_t defect_dim = 0;
  la::Subspace theta_image;
  la::Subspace defect;
  /// Rank of theta-image -> M(C) -> cokernel.
  std::size_t canonical_rank = 0;
  bool isomorphic = false;
};

/// Cokernel of the sum of inductions from all proper subgroups of
/// subgroups[c] into M(subgroups[c]).
la::Subspace artin_defect_space(const MackeyModule& m, std::size_t c);
/// Image of the action of theta on M(subgroups[c]); subgroups[c] cyclic.
la::Subspace theta_image(const MackeyModule& m, std::size_t c);
DefectReport artin_defect(const MackeyModule& m, std::size_t c);

std::string subgroup_label(const grp::SubgroupRec& h, std::size_t ambient_order);

}  // namespace burnhoch::burnside
