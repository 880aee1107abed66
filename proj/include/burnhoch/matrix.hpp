#pragma once

// Sparse exact matrices, canonical subspaces, and rank/kernel/cokernel.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnhoch/field.hpp"

namespace burnhoch::la {

/// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
using Vec = std::vector<Scalar>;

/// Column-major sparse matrix over a single field descriptor.
class Matrix {
 public:
  Matrix() : Matrix(Field::rational(), 0, 0) {}
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const FieldPtr& field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Scalar v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  /// Replaces column c; entries must be sorted by row and nonzero.
  void set_column(std::size_t c, SparseVec col);

  const SparseVec& column(std::size_t c) const { return cols_[c]; }
  Vec dense_column(std::size_t c) const;
  std::vector<SparseVec> row_vectors() const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  bool operator==(const Matrix& o) const;

  /// Columns [*this | o].
  Matrix hstack(const Matrix& o) const;
  /// Rows [*this ; o].
  Matrix vstack(const Matrix& o) const;
  Matrix select_columns(const std::vector<std::size_t>& which) const;
  Matrix select_rows(const std::vector<std::size_t>& which) const;

  std::vector<Vec> dense() const;
  std::string str() const;

 private:
  Scalar coerce(Scalar v) const;
  void check_compatible(const Matrix& o) const;

  FieldPtr field_;
  std::size_t rows_;
  std::vector<SparseVec> cols_;
};

/// A subspace of field^n stored by a basis in reduced column-echelon form:
/// each basis column has a pivot coordinate holding 1, every other basis
/// column is zero there, and pivots strictly increase. Two subspaces are
/// equal iff their bases are identical.
class Subspace {
 public:
  Subspace() : Subspace(Field::rational(), 0) {}
  Subspace(FieldPtr field, std::size_t ambient);  // zero subspace

  /// Column space of the given columns.
  static Subspace span(const Matrix& columns);
  static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(FieldPtr field, std::size_t ambient);

  std::size_t ambient() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldPtr& field() const { return basis_.field(); }

  /// v minus its component along the basis; zero at every pivot.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the basis; throws when v is not in the subspace.
  Vec coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

 private:
  explicit Subspace(Matrix basis);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct RankKernel {
  std::size_t rank;
  Subspace kernel;
};

/// Rank by sparse elimination with Markowitz pivoting.
std::size_t rank(const Matrix& m);
RankKernel rank_kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// Canonical complement of im(m): spanned by the unit vectors at the
/// coordinates that are not pivots of the image.
Subspace cokernel(const Matrix& m);
/// Matrix of target -> cokernel coordinates (one row per non-pivot
/// coordinate of the image), vanishing exactly on im(m).
Matrix cokernel_projection(const Matrix& m);

/// X with a * X = b; nullopt when inconsistent. Free variables are zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; throws a domain error when singular.
Matrix inverse(const Matrix& a);

/// Rank of the map induced on homology by f, where cycles are the columns of
/// `cycles` (in the source) and `boundaries` spans the boundaries in the
/// target.
std::size_t induced_rank(const Matrix& f, const Subspace& cycles, const Subspace& boundaries);

}  // namespace burnhoch::la
