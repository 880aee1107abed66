#pragma once

// Hochschild, cyclic, periodic and negative cyclic homology of
// finite-dimensional algebras through truncated mixed complexes.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnhoch/grp.hpp"
#include "burnhoch/matrix.hpp"
#include "json.hpp"

namespace burnhoch::cyclic {

using la::Matrix;
using la::SparseVec;

inline constexpr std::size_t kDefaultBudget = 300000;

struct AlgebraPresentation {
  la::FieldPtr field = la::Field::rational();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// mul[i][j] = e_i e_j in the basis.
  std::vector<std::vector<SparseVec>> mul;
  SparseVec unit;
  std::string name;
  /// Set for group algebras: basis element i is group element i.
  std::optional<grp::FiniteGroup> group;

  SparseVec product(const SparseVec& a, const SparseVec& b) const;
  /// Associativity on all basis triples and the two unit laws.
  void validate() const;

  /// {"field":{"kind":"Q"|"cyclotomic","d":3},"dim":n,"unit":[...],
  ///  "mul":[[ [[k,"c"],...], ... ], ...]}
  static AlgebraPresentation from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

AlgebraPresentation group_algebra(const grp::FiniteGroup& g, la::FieldPtr k);
/// A number field as an algebra over Q with basis 1, x, ..., x^(n-1).
AlgebraPresentation field_algebra(la::FieldPtr f);
AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b);
/// "Q", "Q(zeta_d)", "zeta:d", "QG:<group>", a JSON object or a path to one.
AlgebraPresentation parse_algebra(const std::string& text);

/// Chain modules CN_q for 0 <= q <= N. Normalized windows use A (x) Abar^q
/// and carry b and B; unnormalized windows use A^(q+1) and carry the faces,
/// degeneracies and the cyclic operator t_q = (-1)^q tau_q.
class CyclicWindow {
 public:
  static CyclicWindow normalized(const AlgebraPresentation& a, std::size_t n, std::size_t budget = kDefaultBudget);
  static CyclicWindow unnormalized(const AlgebraPresentation& a, std::size_t n, std::size_t budget = kDefaultBudget);

  const AlgebraPresentation& algebra() const { return *algebra_; }
  bool normalized() const { return normalized_; }
  std::size_t degree() const { return n_; }
  std::size_t module_dim(std::size_t q) const;
  /// Basis indices of the tuple; entries after the first index Abar when
  /// normalized.
  std::vector<std::size_t> decode(std::size_t q, std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& tuple) const;
  std::string tuple_label(std::size_t q, std::size_t index) const;

  /// b: CN_q -> CN_{q-1}, q >= 1.
  const Matrix& b(std::size_t q) const;
  /// Connes B: CN_q -> CN_{q+1}, q < N; normalized windows only.
  const Matrix& connes_b(std::size_t q) const;

  /// Unnormalized windows only.
  Matrix face(std::size_t q, std::size_t i) const;
  Matrix degeneracy(std::size_t q, std::size_t i) const;
  Matrix cyclic_operator(std::size_t q) const;
  /// b' = sum_{i<q} (-1)^i d_i.
  Matrix b_prime(std::size_t q) const;

  /// Group algebras: conjugacy class of g_0 ... g_q for each basis tuple.
  bool graded() const { return !grades_.empty(); }
  const std::vector<std::size_t>& grades(std::size_t q) const { return grades_.at(q); }

 private:
  CyclicWindow(const AlgebraPresentation& a, std::size_t n, bool normalized, std::size_t budget);
  void build_normalized();
  void build_grades();
  std::size_t letters(std::size_t pos) const;
  SparseVec project(std::size_t basis_index) const;

  std::shared_ptr<const AlgebraPresentation> algebra_;
  std::size_t n_;
  bool normalized_;
  std::size_t unit_index_ = 0;       // basis index dropped from Abar
  std::vector<std::size_t> bar_;     // Abar index -> basis index
  std::vector<SparseVec> proj_;      // basis index -> Abar vector
  std::vector<Matrix> b_, bb_;
  std::vector<std::vector<std::size_t>> grades_;
};

enum class Theory { HH, HC, HP, HN, group_homology };
const char* to_string(Theory t);

struct Certificate {
  std::size_t window = 0;
  /// Reported degrees are 0 .. certified_max.
  std::size_t certified_max = 0;
  std::optional<std::size_t> cutoff;
  bool stabilized = true;
  std::vector<std::size_t> dims_at_cutoff;
  std::vector<std::size_t> dims_at_next_cutoff;
  /// Rank of H_n(cutoff P+1) -> H_n(cutoff P) induced by dropping the last
  /// column; stabilized also requires these to be isomorphisms.
  std::vector<std::size_t> transition_ranks;
};

struct ClassDims {
  std::string label;
  std::size_t class_index = 0;
  std::vector<std::size_t> dims;
};

struct HomologyReport {
  Theory theory = Theory::HH;
  std::string subject;
  std::vector<std::size_t> dims;
  std::vector<ClassDims> per_class;
  /// HH_0 of a group algebra: one conjugacy-class sum per entry.
  std::vector<std::string> degree0_basis;
  Certificate certificate;

  nlohmann::json to_json() const;
};

HomologyReport hochschild(const AlgebraPresentation& a, std::size_t n, std::size_t budget = kDefaultBudget);

struct ConnesCheck {
  bool exact = true;
  std::size_t spots = 0;
  std::vector<std::string> failures;
};

struct CyclicResult {
  HomologyReport hc;
  HomologyReport hh;
  /// s_maps[n]: HC_n -> HC_{n-2} in chosen homology bases, n >= 2.
  std::vector<Matrix> s_maps;
  ConnesCheck connes;
};

/// HC in degrees 0..N-2 with the periodicity operator and the exactness of
/// HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} by rank bookkeeping.
CyclicResult cyclic_homology(const AlgebraPresentation& a, std::size_t n, std::size_t budget = kDefaultBudget);

struct PeriodicResult {
  HomologyReport hp;
  HomologyReport hn;
};

/// HP and HN in degrees 0..n_max from the mixed bicomplex cut off after P
/// columns; throws not_stabilized unless cutoffs P and P+1 give the same
/// dimensions and the comparison map between them is an isomorphism.
PeriodicResult hp_hn(const AlgebraPresentation& a, std::size_t n_max, std::size_t cutoff,
                     std::size_t budget = kDefaultBudget);

/// Image of h_0: HN_0(A) -> HH_0(A) as a subspace of C_0 = A containing the
/// boundaries [A, A]; HN_0 uses 0-cycles of the complex cut off after P
/// columns.
la::Subspace hn0_image(const AlgebraPresentation& a, std::size_t cutoff, std::size_t budget = kDefaultBudget);

/// HC_0..HC_{N-1} from the b/b' bicomplex with 1-t and the norm operator;
/// algebras of dimension at most 3.
std::vector<std::size_t> hc_bicomplex(const AlgebraPresentation& a, std::size_t n);

HomologyReport conjugacy_split_hh(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n,
                                  std::size_t budget = kDefaultBudget);
/// H_*(BG; k) from the normalized bar complex, degrees 0..N-1.
HomologyReport group_homology(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n,
                              std::size_t budget = kDefaultBudget);

struct DecompositionRow {
  std::string label;
  std::vector<std::size_t> hh;
  std::vector<std::size_t> centralizer_homology;
  bool ok = false;
};

struct DecompositionCheck {
  std::vector<DecompositionRow> rows;
  bool ok = false;
};

/// HH_n of each conjugacy-class block of kG against H_n(B Z_G(c); k).
DecompositionCheck decomposition_check(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n,
                                       std::size_t budget = kDefaultBudget);

struct IdentityCheck {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// b^2 = 0, B^2 = 0, bB + Bb = 0 on a normalized window.
IdentityCheck mixed_identities(const CyclicWindow& w);
/// Simplicial and cyclic identities on an unnormalized window.
IdentityCheck cyclic_identities(const CyclicWindow& w);
/// b and B (normalized) or t (unnormalized) respect the grading.
IdentityCheck grading_preserved(const CyclicWindow& w);

}  // namespace burnhoch::cyclic
