#pragma once

// The Dennis trace K_0(QG) (x) Q -> HH_0(QG) on idempotent matrices, its
// compatibility with theta_C, and the finite-group form of the Chern
// character decomposition.

#include <string>
#include <vector>

#include "burnhoch/grp.hpp"
#include "burnhoch/matrix.hpp"
#include "burnhoch/rep.hpp"

namespace burnhoch::trace {

using la::Rational;
using rep::ClassFunction;
using rep::GroupRingElem;

/// An n x n matrix over QG, row-major, with e * e = e.
struct ProjectiveIdem {
  std::size_t n = 1;
  std::vector<GroupRingElem> entries;
  std::string label;

  const GroupRingElem& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Checks shape and e * e = e; validation error otherwise.
ProjectiveIdem make_projective(const grp::FiniteGroup& g, std::size_t n, std::vector<GroupRingElem> entries,
                               std::string label = "");
std::vector<GroupRingElem> matrix_mul(const grp::FiniteGroup& g, std::size_t n, const std::vector<GroupRingElem>& a,
                                      const std::vector<GroupRingElem>& b);
/// diag(e, f).
ProjectiveIdem block_sum(const grp::FiniteGroup& g, const ProjectiveIdem& e, const ProjectiveIdem& f);

/// Class of sum_i e_ii in QG/[QG, QG], one coordinate per conjugacy class.
std::vector<Rational> hs_trace(const grp::FiniteGroup& g, const ProjectiveIdem& e);
/// Character of the left module (QG)^n e, from the trace of x -> g x e.
ClassFunction projective_character(const grp::FiniteGroup& g, const ProjectiveIdem& e);

struct TraceMatrix {
  grp::FiniteGroup group;
  std::vector<ProjectiveIdem> projectives;
  std::vector<std::string> source;
  std::vector<std::string> target;
  /// classes x projectives
  la::Matrix matrix;
  std::size_t rank = 0;
  std::size_t k0_dim = 0;
  bool injective() const { return rank == k0_dim; }
};

/// Generators: the central idempotents of QC for cyclic G, and QG f for the
/// central idempotents f of QC over all cyclic subgroup classes C otherwise
/// (the induced projectives QG (x)_{QC} QC f).
TraceMatrix dennis_trace_matrix(const grp::FiniteGroup& g);

struct Verdict {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  void expect(bool cond, const std::string& what);
};

/// hs_trace(e)[g] = chi_P(g^-1) |[g]| / |G| for every realized projective,
/// and chi_P lies in K_0(QG) (x) Q.
Verdict character_crosscheck(const TraceMatrix& t);

/// Action of x in A(C) on HH_0(QC) = Q^C: [C/D] c = [C:D] c for c in D and
/// 0 otherwise. Rows and columns indexed by elements.
la::Matrix hh0_action(const burnside::BurnsideElem& x);

struct ThetaTraceReport {
  la::Matrix dtr;        // elements x idempotents
  la::Matrix theta_k0;   // theta on K_0 in the idempotent basis
  la::Matrix theta_hh0;  // theta on HH_0
  bool commutes = false;
  std::size_t theta_rank = 0;  // rank of dtr on the theta image
  bool ok() const { return commutes && theta_rank == 1; }
};

ThetaTraceReport theta_trace_check(const grp::FiniteGroup& c);

struct ChernReport {
  std::size_t k0_sum = 0;         // sum of dims of W-coinvariants of theta_C K_0(QC)
  std::size_t k0_dim = 0;         // dim K_0(QG) (x) Q
  std::size_t hh0_sum = 0;        // sum of W-orbits of generators of C
  std::size_t hh0_dim = 0;        // #con G
  std::size_t cyclic_classes = 0;
  bool square_commutes = false;
  std::size_t k0_assembly_rank = 0;
  std::size_t hh0_assembly_rank = 0;
  std::vector<std::string> failures;
  bool ok() const;
};

ChernReport chern_finite_check(const grp::FiniteGroup& g);

/// Every dtr([P]) lies in the image of HN_0(QG) -> HH_0(QG).
Verdict hn_image_check(const TraceMatrix& t, std::size_t cutoff = 1);

}  // namespace burnhoch::trace
