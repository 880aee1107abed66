#pragma once

// Brute-force reference computations used to produce the checked-in
// fixtures. Nothing here calls the structured algorithms it is compared
// against: marks come from enumerating cosets, homology from unnormalized
// complexes written out tuple by tuple.

#include <cstddef>
#include <vector>

#include "burnhoch/cyclic.hpp"
#include "burnhoch/grp.hpp"
#include "json.hpp"

namespace burnhoch::oracle {

/// |(G/K)^H| for class representatives H (rows) and K (columns) in lattice
/// order, by listing the cosets of K.
std::vector<std::vector<long>> marks_by_counting(const grp::FiniteGroup& g);

std::size_t conjugacy_class_count(const grp::FiniteGroup& g);
std::size_t cyclic_subgroup_class_count(const grp::FiniteGroup& g);
/// Rank of the permutation characters of G/C over cyclic C.
std::size_t permutation_character_rank(const grp::FiniteGroup& g);
/// Sum over cyclic subgroup classes (C) of the number of N_G(C)-orbits on the
/// generators of C.
std::size_t generator_orbit_count(const grp::FiniteGroup& g);

/// H_q(BZ; Q) for q < n from the unnormalized bar complex of the subgroup Z.
std::vector<std::size_t> bar_homology(const grp::FiniteGroup& g, const std::vector<grp::Elem>& z, std::size_t n);
/// bar_homology of the centralizer of each conjugacy class representative.
std::vector<std::vector<std::size_t>> centralizer_homology(const grp::FiniteGroup& g, std::size_t n);

/// HH_q(A) for q < n from the unnormalized Hochschild complex A^(q+1).
std::vector<std::size_t> hochschild_unnormalized(const cyclic::AlgebraPresentation& a, std::size_t n);

/// Everything the verification suite compares against, for one group.
nlohmann::json group_fixture(const grp::FiniteGroup& g);
/// Groups of the default catalog plus the small fields.
nlohmann::json regenerate();

}  // namespace burnhoch::oracle
