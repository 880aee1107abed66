#include "burnhoch/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace burnhoch::la {

namespace detail {

template <class T>
using Row = std::vector<std::pair<std::size_t, T>>;

template <class T>
T from_scalar(const Scalar& s);
template <>
Rational from_scalar<Rational>(const Scalar& s) { return s.rational(); }
template <>
Scalar from_scalar<Scalar>(const Scalar& s) { return s; }

inline Scalar to_scalar(const FieldPtr& f, const Rational& v) { return Scalar(f, v); }
inline Scalar to_scalar(const FieldPtr&, const Scalar& v) { return v; }

template <class T>
const T* find(const Row<T>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// row - f * pivot
template <class T>
Row<T> axpy(const Row<T>& row, const T& f, const Row<T>& pivot) {
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      T v = b->second * f;
      out.emplace_back(b->first, -v);
      ++b;
    } else {
      T v = a->second - f * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

template <class T>
void normalize(Row<T>& row) {
  const T inv = inverse(row.front().second);
  for (auto& [c, v] : row) v *= inv;
}

// Fully reduced row echelon basis, keyed by pivot column.
template <class T>
struct Echelon {
  std::map<std::size_t, Row<T>> rows;

  Row<T> reduce(Row<T> v) const {
    std::vector<std::size_t> hits;
    for (const auto& [c, x] : v)
      if (rows.count(c) != 0) hits.push_back(c);
    for (std::size_t c : hits) {
      const T* coef = find(v, c);
      if (coef == nullptr) continue;
      T f = *coef;
      v = axpy(v, f, rows.at(c));
    }
    return v;
  }

  bool insert(Row<T> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    normalize(v);
    const std::size_t lead = v.front().first;
    for (auto& [p, row] : rows) {
      const T* coef = find(row, lead);
      if (coef == nullptr) continue;
      T f = *coef;
      row = axpy(row, f, v);
    }
    rows.emplace(lead, std::move(v));
    return true;
  }
};

template <class T>
std::size_t markowitz_rank(std::vector<Row<T>> rows, std::size_t ncols) {
  std::vector<std::size_t> count(ncols, 0);
  std::vector<std::vector<std::size_t>> holders(ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      ++count[e.first];
      holders[e.first].push_back(r);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t c = 0; c < ncols; ++c)
    if (count[c] != 0) queue.emplace(count[c], c);

  auto bump = [&](std::size_t c, bool up) {
    if (count[c] != 0) queue.erase({count[c], c});
    count[c] = up ? count[c] + 1 : count[c] - 1;
    if (count[c] != 0) queue.emplace(count[c], c);
  };

  std::vector<char> alive(rows.size(), 1);
  std::vector<std::size_t> stamp(rows.size(), static_cast<std::size_t>(-1));
  std::size_t rank = 0;
  std::size_t step = 0;
  while (!queue.empty()) {
    const std::size_t col = queue.begin()->second;
    ++step;
    std::vector<std::size_t> live;
    for (std::size_t r : holders[col]) {
      if (!alive[r] || stamp[r] == step) continue;
      if (find(rows[r], col) == nullptr) continue;
      stamp[r] = step;
      live.push_back(r);
    }
    holders[col].clear();
    const std::size_t pivot = *std::min_element(
        live.begin(), live.end(),
        [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    ++rank;
    alive[pivot] = 0;
    for (const auto& e : rows[pivot]) bump(e.first, false);
    const T pinv = inverse(*find(rows[pivot], col));
    for (std::size_t r : live) {
      if (r == pivot) continue;
      const T f = *find(rows[r], col) * pinv;
      Row<T> next = axpy(rows[r], f, rows[pivot]);
      // Update column counts by walking old and new supports together.
      auto a = rows[r].begin();
      auto b = next.begin();
      while (a != rows[r].end() || b != next.end()) {
        if (b == next.end() || (a != rows[r].end() && a->first < b->first)) {
          bump(a->first, false);
          ++a;
        } else if (a == rows[r].end() || b->first < a->first) {
          bump(b->first, true);
          holders[b->first].push_back(r);
          ++b;
        } else {
          ++a;
          ++b;
        }
      }
      rows[r] = std::move(next);
    }
  }
  return rank;
}

template <class T>
std::vector<Row<T>> rows_of(const Matrix& m) {
  std::vector<Row<T>> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, from_scalar<T>(v));
  return rows;
}

template <class T>
std::vector<Row<T>> cols_of(const Matrix& m) {
  std::vector<Row<T>> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cols[c].reserve(m.column(c).size());
    for (const auto& [r, v] : m.column(c)) cols[c].emplace_back(r, from_scalar<T>(v));
  }
  return cols;
}

template <class T>
Echelon<T> echelon_of(std::vector<Row<T>> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row<T>& a, const Row<T>& b) { return a.size() < b.size(); });
  Echelon<T> e;
  for (auto& r : rows) e.insert(std::move(r));
  return e;
}

template <class T>
Matrix columns_to_matrix(const FieldPtr& field, std::size_t nrows,
                         const std::vector<Row<T>>& cols) {
  Matrix m(field, nrows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SparseVec col;
    col.reserve(cols[c].size());
    for (const auto& [r, v] : cols[c]) col.emplace_back(r, to_scalar(field, v));
    m.set_column(c, std::move(col));
  }
  return m;
}

template <class T>
Matrix echelon_basis(const FieldPtr& field, std::size_t ambient, const Echelon<T>& e) {
  std::vector<Row<T>> cols;
  cols.reserve(e.rows.size());
  for (const auto& [p, row] : e.rows) cols.push_back(row);
  return columns_to_matrix(field, ambient, cols);
}

template <class T>
RankKernel rank_kernel_impl(const Matrix& m) {
  const Echelon<T> e = echelon_of(rows_of<T>(m));
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& [p, row] : e.rows) is_pivot[p] = 1;
  // For a free column f the kernel vector is e_f - sum_p R_p[f] e_p.
  std::vector<Row<T>> kernel;
  std::map<std::size_t, Row<T>> by_free;
  for (const auto& [p, row] : e.rows)
    for (const auto& [c, v] : row)
      if (c != p) by_free[c].emplace_back(p, -v);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Row<T> v = by_free[f];
    v.emplace_back(f, T(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  Matrix k = columns_to_matrix(m.field(), m.cols(), kernel);
  return {e.rows.size(), Subspace::span(k)};
}

template <class T>
Matrix span_basis(const Matrix& columns) {
  const Echelon<T> e = echelon_of(cols_of<T>(columns));
  return echelon_basis(columns.field(), columns.rows(), e);
}

template <class T>
std::optional<Matrix> solve_impl(const Matrix& a, const Matrix& b) {
  std::vector<Row<T>> rows = rows_of<T>(a);
  const std::vector<Row<T>> rhs = rows_of<T>(b);
  const std::size_t shift = a.cols();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rhs[r]) rows[r].emplace_back(c + shift, v);
  Echelon<T> e;
  for (auto& r : rows) e.insert(std::move(r));
  Matrix x(a.field(), a.cols(), b.cols());
  for (const auto& [p, row] : e.rows) {
    if (p >= shift) return std::nullopt;
    for (const auto& [c, v] : row)
      if (c >= shift) x.set(p, c - shift, to_scalar(a.field(), v));
  }
  return x;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Scalar(field, Rational(1)));
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) fail(ErrorKind::validation, "ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c)
      if (!rows[r][c].is_zero()) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<Vec> conv;
  conv.reserve(rows.size());
  for (const auto& row : rows) conv.emplace_back(row.begin(), row.end());
  return from_rows(Field::rational(), conv);
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(std::move(field), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) fail(ErrorKind::validation, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) m.set(r, c, cols[c][r]);
  }
  return m;
}

Scalar Matrix::coerce(Scalar v) const {
  if (same_field(v.field(), field_)) return v;
  if (v.is_rational()) return Scalar(field_, v.rational());
  fail(ErrorKind::descriptor_mismatch,
       "entry in " + v.field()->name() + " stored in a matrix over " + field_->name());
}

void Matrix::check_compatible(const Matrix& o) const {
  if (!same_field(field_, o.field_))
    fail(ErrorKind::descriptor_mismatch,
         "matrix fields differ: " + field_->name() + " vs " + o.field_->name());
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const Scalar* v = detail::find(cols_.at(c), r);
  return v == nullptr ? Scalar(field_, Rational(0)) : *v;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  if (r >= rows_ || c >= cols_.size()) fail(ErrorKind::validation, "matrix index out of range");
  v = coerce(std::move(v));
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t x) { return e.first < x; });
  if (it != col.end() && it->first == r) {
    if (v.is_zero())
      col.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    col.insert(it, {r, std::move(v)});
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  set(r, c, at(r, c) + coerce(v));
}

void Matrix::set_column(std::size_t c, SparseVec col) {
  for (auto& [r, v] : col) {
    if (r >= rows_) fail(ErrorKind::validation, "matrix index out of range");
    v = coerce(std::move(v));
  }
  col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second.is_zero(); }),
            col.end());
  cols_.at(c) = std::move(col);
}

Vec Matrix::dense_column(std::size_t c) const {
  Vec out(rows_, Scalar(field_, Rational(0)));
  for (const auto& [r, v] : cols_.at(c)) out[r] = v;
  return out;
}

std::vector<SparseVec> Matrix::row_vectors() const {
  std::vector<SparseVec> rows(rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [r, v] : cols_[c]) rows[r].emplace_back(c, v);
  return rows;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols(), rows_);
  auto rows = row_vectors();
  for (std::size_t r = 0; r < rows_; ++r) t.cols_[r] = std::move(rows[r]);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o);
  if (cols() != o.rows_) fail(ErrorKind::validation, "matrix product dimension mismatch");
  Matrix out(field_, rows_, o.cols());
  std::map<std::size_t, Scalar> acc;
  for (std::size_t c = 0; c < o.cols(); ++c) {
    acc.clear();
    for (const auto& [k, w] : o.cols_[c])
      for (const auto& [r, v] : cols_[k]) {
        auto [it, fresh] = acc.try_emplace(r, v * w);
        if (!fresh) it->second += v * w;
      }
    SparseVec col;
    for (auto& [r, v] : acc)
      if (!v.is_zero()) col.emplace_back(r, std::move(v));
    out.cols_[c] = std::move(col);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  if (rows_ != o.rows_ || cols() != o.cols()) fail(ErrorKind::validation, "matrix sum dimension mismatch");
  Matrix out(*this);
  for (std::size_t c = 0; c < cols(); ++c)
    out.cols_[c] = detail::axpy(cols_[c], Scalar(field_, Rational(-1)), o.cols_[c]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  if (rows_ != o.rows_ || cols() != o.cols()) fail(ErrorKind::validation, "matrix difference dimension mismatch");
  Matrix out(*this);
  for (std::size_t c = 0; c < cols(); ++c)
    out.cols_[c] = detail::axpy(cols_[c], Scalar(field_, Rational(1)), o.cols_[c]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols());
  if (s.is_zero()) return out;
  const Scalar f = coerce(s);
  for (std::size_t c = 0; c < cols(); ++c) {
    out.cols_[c] = cols_[c];
    for (auto& [r, v] : out.cols_[c]) v *= f;
  }
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols()) fail(ErrorKind::validation, "vector length mismatch");
  Vec out(rows_, Scalar(field_, Rational(0)));
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, x] : cols_[c]) out[r] += x * v[c];
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols() == o.cols() && (is_zero() && o.is_zero() ? true : same_field(field_, o.field_)) &&
         cols_ == o.cols_;
}

Matrix Matrix::hstack(const Matrix& o) const {
  check_compatible(o);
  if (rows_ != o.rows_) fail(ErrorKind::validation, "hstack row mismatch");
  Matrix out(*this);
  out.cols_.insert(out.cols_.end(), o.cols_.begin(), o.cols_.end());
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  check_compatible(o);
  if (cols() != o.cols()) fail(ErrorKind::validation, "vstack column mismatch");
  Matrix out(field_, rows_ + o.rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    out.cols_[c] = cols_[c];
    for (const auto& [r, v] : o.cols_[c]) out.cols_[c].emplace_back(r + rows_, v);
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& which) const {
  Matrix out(field_, rows_, which.size());
  for (std::size_t i = 0; i < which.size(); ++i) out.cols_[i] = cols_.at(which[i]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& which) const {
  std::vector<std::size_t> where(rows_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < which.size(); ++i) where.at(which[i]) = i;
  Matrix out(field_, which.size(), cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : cols_[c])
      if (where[r] != static_cast<std::size_t>(-1)) out.cols_[c].emplace_back(where[r], v);
    std::sort(out.cols_[c].begin(), out.cols_[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

std::vector<Vec> Matrix::dense() const {
  std::vector<Vec> out(rows_, Vec(cols(), Scalar(field_, Rational(0))));
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : cols_[c]) out[r][c] = v;
  return out;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  const auto d = dense();
  for (std::size_t r = 0; r < d.size(); ++r) {
    out << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < d[r].size(); ++c) out << (c == 0 ? "" : ", ") << d[r][c].str();
    out << "]";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FieldPtr field, std::size_t ambient) : basis_(std::move(field), ambient, 0) {}

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  for (std::size_t c = 0; c < basis_.cols(); ++c) pivots_.push_back(basis_.column(c).front().first);
}

Subspace Subspace::span(const Matrix& columns) {
  if (columns.field()->is_rational()) return Subspace(detail::span_basis<Rational>(columns));
  return Subspace(detail::span_basis<Scalar>(columns));
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return span(Matrix::from_columns(std::move(field), ambient, vectors));
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  return Subspace(Matrix::identity(std::move(field), ambient));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient()) fail(ErrorKind::validation, "vector length mismatch");
  Vec out(v);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = out[pivots_[i]];
    if (f.is_zero()) continue;
    for (const auto& [r, x] : basis_.column(i)) out[r] -= f * x;
  }
  return out;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t c = 0; c < other.dim(); ++c)
    if (!contains(other.basis().dense_column(c))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) fail(ErrorKind::domain, "vector is not in the subspace");
  Vec out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const { return span(basis_.hstack(other.basis_)); }

bool Subspace::operator==(const Subspace& o) const {
  return ambient() == o.ambient() && pivots_ == o.pivots_ && basis_ == o.basis_;
}

// ---------------------------------------------------------------------------
// Operations

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter dimension's vectors.
  if (m.field()->is_rational()) {
    if (m.rows() <= m.cols()) return detail::markowitz_rank(detail::cols_of<Rational>(m), m.rows());
    return detail::markowitz_rank(detail::rows_of<Rational>(m), m.cols());
  }
  if (m.rows() <= m.cols()) return detail::markowitz_rank(detail::cols_of<Scalar>(m), m.rows());
  return detail::markowitz_rank(detail::rows_of<Scalar>(m), m.cols());
}

RankKernel rank_kernel(const Matrix& m) {
  if (m.field()->is_rational()) return detail::rank_kernel_impl<Rational>(m);
  return detail::rank_kernel_impl<Scalar>(m);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace cokernel(const Matrix& m) {
  const Subspace im = image(m);
  std::vector<char> pivot(m.rows(), 0);
  for (std::size_t p : im.pivots()) pivot[p] = 1;
  Matrix basis(m.field(), m.rows(), m.rows() - im.dim());
  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!pivot[r]) basis.set(r, k++, Scalar(m.field(), Rational(1)));
  return Subspace::span(basis);
}

Matrix cokernel_projection(const Matrix& m) {
  const Subspace im = image(m);
  std::vector<char> pivot(m.rows(), 0);
  for (std::size_t p : im.pivots()) pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!pivot[r]) free.push_back(r);
  // Column j of the projection is the reduction of e_j read at free rows.
  Matrix proj(m.field(), free.size(), m.rows());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    Vec e(m.rows(), Scalar(m.field(), Rational(0)));
    e[j] = Scalar(m.field(), Rational(1));
    const Vec red = im.reduce(e);
    for (std::size_t i = 0; i < free.size(); ++i)
      if (!red[free[i]].is_zero()) proj.set(i, j, red[free[i]]);
  }
  return proj;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field()))
    fail(ErrorKind::descriptor_mismatch, "solve: field mismatch");
  if (a.rows() != b.rows()) fail(ErrorKind::validation, "solve: row mismatch");
  if (a.field()->is_rational()) return detail::solve_impl<Rational>(a, b);
  return detail::solve_impl<Scalar>(a, b);
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::domain, "inverse of a non-square matrix");
  if (rank(a) != a.rows()) fail(ErrorKind::domain, "inverse of a singular matrix");
  return *solve(a, Matrix::identity(a.field(), a.rows()));
}

std::size_t induced_rank(const Matrix& f, const Subspace& cycles, const Subspace& boundaries) {
  const Matrix images = f * cycles.basis();
  return Subspace::span(images.hstack(boundaries.basis())).dim() - boundaries.dim();
}

}  // namespace burnhoch::la
