#pragma once

// Rational representation rings as spaces of class functions.

#include <string>
#include <vector>

#include "burnhoch/burnside.hpp"
#include "burnhoch/grp.hpp"
#include "burnhoch/matrix.hpp"

namespace burnhoch::rep {

using la::Rational;
/// Values on the conjugacy classes of a group, in FiniteGroup::classes() order.
using ClassFunction = std::vector<Rational>;
/// An element of QG: one coefficient per group element.
using GroupRingElem = std::vector<Rational>;

struct ClassFunctionSpace {
  enum class Provenance { cyclic_characters, induced_span };

  grp::FiniteGroup group;
  /// Generating characters; for cyclic groups these are the rational
  /// irreducibles, one per subgroup (the kernel), in lattice order.
  std::vector<ClassFunction> basis;
  std::vector<std::string> labels;
  /// K_0(QG) (x) Q inside Q^{con G}.
  la::Subspace k0;
  Provenance provenance = Provenance::cyclic_characters;

  std::size_t dim() const { return k0.dim(); }
};

la::Vec to_vec(const ClassFunction& f);
ClassFunction from_vec(const la::Vec& v);

Rational inner_product(const grp::FiniteGroup& g, const ClassFunction& a, const ClassFunction& b);
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b);
/// Character of Q[G/K]: x -> number of cosets fixed by x.
ClassFunction permutation_character(const grp::FiniteGroup& g, const grp::SubgroupRec& k);

/// (Ind f)(x) = 1/|H| sum over y in G with y^-1 x y in H of f(y^-1 x y);
/// f is a class function of the embedded group.
ClassFunction induce(const grp::FiniteGroup& g, const grp::Embedded& h, const ClassFunction& f);
ClassFunction restrict(const grp::FiniteGroup& g, const grp::Embedded& h, const ClassFunction& f);

ClassFunctionSpace k0_cyclic(const grp::FiniteGroup& c);
/// D -> f(generator of D), subgroups of the cyclic group c in lattice order.
std::vector<Rational> to_subgroup_map(const grp::FiniteGroup& c, const ClassFunction& f);
/// Span of the characters induced from k0_cyclic of every cyclic subgroup.
ClassFunctionSpace k0_group(const grp::FiniteGroup& g);

/// Q-valued class functions constant on x ~ x^t, t prime to |G|.
la::Subspace rational_class_functions(const grp::FiniteGroup& g);
/// Classes of elements under x ~ y iff <x> and <y> are conjugate.
std::size_t rational_class_count(const grp::FiniteGroup& g);

/// The automorphism g -> g^t of a cyclic group acting on class functions.
ClassFunction twist(const grp::FiniteGroup& c, const ClassFunction& f, std::size_t t);

/// K_0(Q(-)) (x) Q on the subgroups of a cyclic group, in k0_cyclic bases.
burnside::MackeyModule rep_mackey(const grp::FiniteGroup& c);

struct ArtinDefectDims {
  std::size_t ambient_dim;  // dim K_0(QH) (x) Q
  std::size_t induced_dim;  // dim of the span induced from proper subgroups
  std::size_t defect_dim() const { return ambient_dim - induced_dim; }
};
/// Artin defect of K_0(Q(-)) (x) Q at H, for any H.
ArtinDefectDims artin_defect_k0(const grp::FiniteGroup& h);

struct GaloisAction {
  la::FieldPtr field;
  std::size_t m = 1;
  /// Gamma_{F,C} <= (Z/m)^x, sorted.
  std::vector<std::size_t> gamma;
  /// Orbits of the elements of C under x -> x^t, t in gamma.
  std::vector<std::vector<grp::Elem>> orbits;
};

GaloisAction galois_orbits(const la::FieldPtr& field, const grp::FiniteGroup& c);

struct CentralIdempotent {
  grp::SubgroupRec kernel;
  GroupRingElem element;
};

GroupRingElem group_ring_mul(const grp::FiniteGroup& g, const GroupRingElem& a, const GroupRingElem& b);
/// One central idempotent of QC per rational irreducible, as the sum over a
/// Galois orbit of the complex primitive idempotents.
std::vector<CentralIdempotent> central_idempotents(const grp::FiniteGroup& c);

}  // namespace burnhoch::rep
