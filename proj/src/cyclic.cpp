#include "burnhoch/cyclic.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "burnhoch/error.hpp"

namespace burnhoch::cyclic {

using la::Scalar;
using la::Subspace;

namespace {

using Entries = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec finish(Entries& e) {
  std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [i, v] : e) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(i, std::move(v));
    }
  }
  e.clear();
  return out;
}

Scalar sign(std::size_t k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

nlohmann::json scalar_json(const Scalar& s) {
  if (s.is_rational()) return la::rational_str(s.rational());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(la::rational_str(c));
  return arr;
}

Scalar scalar_from_json(const la::FieldPtr& f, const nlohmann::json& j) {
  if (j.is_string()) return Scalar(f, la::parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(f, la::Rational(j.get<long>()));
  if (j.is_array()) {
    la::Poly p;
    for (const auto& c : j) p.push_back(la::parse_rational(c.get<std::string>()));
    return Scalar(f, p);
  }
  fail(ErrorKind::parse, "bad scalar in algebra JSON");
}

nlohmann::json field_json(const la::FieldPtr& f) {
  if (f->is_rational()) return {{"kind", "Q"}};
  if (f->cyclotomic_index()) return {{"kind", "cyclotomic"}, {"d", *f->cyclotomic_index()}};
  nlohmann::json m = nlohmann::json::array();
  for (const auto& c : f->modulus()) m.push_back(la::rational_str(c));
  return {{"kind", "modulus"}, {"modulus", m}};
}

la::FieldPtr field_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Q") return la::Field::rational();
  if (kind == "cyclotomic") return la::cyclotomic_field(j.at("d").get<unsigned>());
  if (kind == "modulus") {
    la::Poly p;
    for (const auto& c : j.at("modulus")) p.push_back(la::parse_rational(c.get<std::string>()));
    return la::Field::from_modulus(p);
  }
  fail(ErrorKind::parse, "unknown field kind: " + kind);
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- algebras

SparseVec AlgebraPresentation::product(const SparseVec& a, const SparseVec& b) const {
  Entries e;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : mul[i][j]) e.emplace_back(k, x * y * z);
  return finish(e);
}

void AlgebraPresentation::validate() const {
  if (mul.size() != dim || labels.size() != dim) fail(ErrorKind::validation, "algebra: table size does not match dim");
  for (const auto& row : mul) {
    if (row.size() != dim) fail(ErrorKind::validation, "algebra: table is not square");
    for (const auto& v : row)
      for (const auto& [k, c] : v) {
        if (k >= dim) fail(ErrorKind::validation, "algebra: basis index out of range");
        if (!c.is_rational() && !la::same_field(c.field(), field))
          fail(ErrorKind::descriptor_mismatch, "algebra: structure constant outside the ground field");
      }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const SparseVec ei{{i, Scalar(1)}};
    if (product(unit, ei) != ei || product(ei, unit) != ei) fail(ErrorKind::validation, "algebra: unit law fails at " + labels[i]);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const SparseVec ej{{j, Scalar(1)}}, ek{{k, Scalar(1)}};
        if (product(product(ei, ej), ek) != product(ei, product(ej, ek)))
          fail(ErrorKind::validation, "algebra: not associative at (" + labels[i] + "," + labels[j] + "," + labels[k] + ")");
      }
  }
}

nlohmann::json AlgebraPresentation::to_json() const {
  nlohmann::json unit_j = nlohmann::json::array();
  std::vector<Scalar> dense(dim, Scalar(0));
  for (const auto& [i, c] : unit) dense[i] = c;
  for (const auto& c : dense) unit_j.push_back(scalar_json(c));
  nlohmann::json mul_j = nlohmann::json::array();
  for (const auto& row : mul) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) {
      nlohmann::json sv = nlohmann::json::array();
      for (const auto& [k, c] : v) sv.push_back({k, scalar_json(c)});
      r.push_back(sv);
    }
    mul_j.push_back(r);
  }
  nlohmann::json j = {{"field", field_json(field)}, {"dim", dim}, {"unit", unit_j}, {"mul", mul_j}};
  if (!name.empty()) j["name"] = name;
  j["labels"] = labels;
  return j;
}

AlgebraPresentation AlgebraPresentation::from_json(const nlohmann::json& j) {
  try {
    AlgebraPresentation a;
    a.field = field_from_json(j.at("field"));
    a.dim = j.at("dim").get<std::size_t>();
    a.name = j.value("name", std::string("algebra"));
    if (j.contains("labels")) {
      a.labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < a.dim; ++i) a.labels.push_back("e" + std::to_string(i));
    }
    const auto& u = j.at("unit");
    if (u.size() != a.dim) fail(ErrorKind::parse, "algebra: unit has wrong length");
    for (std::size_t i = 0; i < a.dim; ++i) {
      Scalar c = scalar_from_json(a.field, u[i]);
      if (!c.is_zero()) a.unit.emplace_back(i, c);
    }
    const auto& m = j.at("mul");
    if (m.size() != a.dim) fail(ErrorKind::parse, "algebra: mul has wrong row count");
    a.mul.assign(a.dim, std::vector<SparseVec>(a.dim));
    for (std::size_t r = 0; r < a.dim; ++r) {
      if (m[r].size() != a.dim) fail(ErrorKind::parse, "algebra: mul has wrong column count");
      for (std::size_t c = 0; c < a.dim; ++c) {
        Entries e;
        for (const auto& entry : m[r][c]) e.emplace_back(entry.at(0).get<std::size_t>(), scalar_from_json(a.field, entry.at(1)));
        for (const auto& [k, v] : e)
          if (k >= a.dim) fail(ErrorKind::parse, "algebra: basis index out of range");
        a.mul[r][c] = finish(e);
      }
    }
    a.validate();
    return a;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed algebra JSON: ") + e.what());
  }
}

AlgebraPresentation group_algebra(const grp::FiniteGroup& g, la::FieldPtr k) {
  AlgebraPresentation a;
  a.field = k;
  a.dim = g.order();
  a.name = (k->is_rational() ? std::string("Q") : k->name()) + "[" + g.name() + "]";
  a.group = g;
  for (grp::Elem x = 0; x < g.order(); ++x) a.labels.push_back(x == 0 ? "e" : "g" + std::to_string(x));
  a.mul.assign(a.dim, std::vector<SparseVec>(a.dim));
  const Scalar one(k, la::Rational(1));
  for (grp::Elem x = 0; x < g.order(); ++x)
    for (grp::Elem y = 0; y < g.order(); ++y) a.mul[x][y] = {{g.mul(x, y), one}};
  a.unit = {{0, one}};
  a.validate();
  return a;
}

AlgebraPresentation field_algebra(la::FieldPtr f) {
  AlgebraPresentation a;
  a.field = la::Field::rational();
  a.dim = f->degree();
  a.name = f->name();
  const Scalar x = f->is_rational() ? Scalar(1) : Scalar::generator(f);
  std::vector<Scalar> powers;
  for (std::size_t i = 0; i < 2 * a.dim; ++i) powers.push_back(i == 0 ? Scalar(f, la::Rational(1)) : powers.back() * x);
  for (std::size_t i = 0; i < a.dim; ++i) a.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  a.mul.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const auto& c = powers[i + j].coeffs();
      SparseVec v;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) v.emplace_back(k, Scalar(c[k]));
      a.mul[i][j] = v;
    }
  a.unit = {{0, Scalar(1)}};
  a.validate();
  return a;
}

AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!la::same_field(a.field, b.field)) fail(ErrorKind::descriptor_mismatch, "product of algebras over different fields");
  AlgebraPresentation p;
  p.field = a.field;
  p.dim = a.dim + b.dim;
  p.name = a.name + " x " + b.name;
  for (const auto& l : a.labels) p.labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels) p.labels.push_back("(0," + l + ")");
  p.mul.assign(p.dim, std::vector<SparseVec>(p.dim));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) p.mul[i][j] = a.mul[i][j];
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      SparseVec v;
      for (const auto& [k, c] : b.mul[i][j]) v.emplace_back(k + a.dim, c);
      p.mul[i + a.dim][j + a.dim] = v;
    }
  p.unit = a.unit;
  for (const auto& [k, c] : b.unit) p.unit.emplace_back(k + a.dim, c);
  p.validate();
  return p;
}

AlgebraPresentation parse_algebra(const std::string& text) {
  auto cyclotomic = [](const std::string& digits) {
    try {
      std::size_t used = 0;
      const unsigned long d = std::stoul(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
      return field_algebra(la::cyclotomic_field(static_cast<unsigned>(d)));
    } catch (const std::logic_error&) {
      fail(ErrorKind::parse, "bad cyclotomic index: " + digits);
    }
  };
  if (text == "Q") return field_algebra(la::Field::rational());
  if (text.rfind("zeta:", 0) == 0) return cyclotomic(text.substr(5));
  if (text.rfind("Q(zeta_", 0) == 0 && text.back() == ')') return cyclotomic(text.substr(7, text.size() - 8));
  if (text.rfind("QG:", 0) == 0) return group_algebra(grp::build_group(grp::GroupDescriptor::parse(text.substr(3))), la::Field::rational());
  std::string body = text;
  if (!text.empty() && text.front() != '{') {
    std::ifstream in(text);
    if (!in) fail(ErrorKind::parse, "unknown algebra: " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("algebra JSON: ") + e.what());
  }
  if (j.contains("group")) {
    const auto g = grp::build_group(grp::GroupDescriptor::from_json(j.at("group")));
    return group_algebra(g, j.contains("field") ? field_from_json(j.at("field")) : la::Field::rational());
  }
  return AlgebraPresentation::from_json(j);
}

// ------------------------------------------------------------------ window

CyclicWindow::CyclicWindow(const AlgebraPresentation& a, std::size_t n, bool normalized, std::size_t budget)
    : algebra_(std::make_shared<const AlgebraPresentation>(a)), n_(n), normalized_(normalized) {
  if (a.dim == 0) fail(ErrorKind::validation, "zero algebra");
  for (std::size_t q = 0; q <= n; ++q) {
    const std::size_t size = a.dim * checked_pow(normalized ? a.dim - 1 : a.dim, q, budget);
    if (size > budget)
      fail(ErrorKind::capability, "budget exceeded in degree " + std::to_string(q) + ": more than " + std::to_string(budget) +
                                      " basis tuples");
  }
  unit_index_ = a.unit.front().first;
  for (const auto& [i, c] : a.unit)
    if (!c.is_zero()) {
      unit_index_ = i;
      break;
    }
  std::vector<std::size_t> pos(a.dim, 0);
  for (std::size_t i = 0; i < a.dim; ++i)
    if (i != unit_index_) {
      pos[i] = bar_.size();
      bar_.push_back(i);
    }
  Scalar u0;
  for (const auto& [i, c] : a.unit)
    if (i == unit_index_) u0 = c;
  proj_.resize(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (i != unit_index_) {
      proj_[i] = {{pos[i], Scalar(a.field, la::Rational(1))}};
      continue;
    }
    // e_i = (1 - sum_{m != i} u_m e_m) / u_i modulo k.1
    for (const auto& [m, c] : a.unit)
      if (m != unit_index_) proj_[i].emplace_back(pos[m], -c / u0);
  }
  if (normalized) {
    build_normalized();
  } else {
    b_.push_back(Matrix(a.field, 0, module_dim(0)));
    for (std::size_t q = 1; q <= n; ++q) b_.push_back(b_prime(q) + face(q, q).scaled(sign(q)));
  }
  if (a.group) build_grades();
}

CyclicWindow CyclicWindow::normalized(const AlgebraPresentation& a, std::size_t n, std::size_t budget) {
  return CyclicWindow(a, n, true, budget);
}

CyclicWindow CyclicWindow::unnormalized(const AlgebraPresentation& a, std::size_t n, std::size_t budget) {
  return CyclicWindow(a, n, false, budget);
}

std::size_t CyclicWindow::letters(std::size_t pos) const {
  return pos == 0 || !normalized_ ? algebra_->dim : algebra_->dim - 1;
}

std::size_t CyclicWindow::module_dim(std::size_t q) const {
  return algebra_->dim * checked_pow(letters(1), q, static_cast<std::size_t>(-1) / 2);
}

std::vector<std::size_t> CyclicWindow::decode(std::size_t q, std::size_t index) const {
  std::vector<std::size_t> t(q + 1);
  t[0] = index % algebra_->dim;
  index /= algebra_->dim;
  const std::size_t r = letters(1);
  for (std::size_t p = 1; p <= q; ++p) {
    t[p] = index % r;
    index /= r;
  }
  return t;
}

std::size_t CyclicWindow::encode(const std::vector<std::size_t>& t) const {
  std::size_t idx = 0;
  const std::size_t r = letters(1);
  for (std::size_t p = t.size() - 1; p >= 1; --p) idx = idx * r + t[p];
  return idx * algebra_->dim + t[0];
}

std::string CyclicWindow::tuple_label(std::size_t q, std::size_t index) const {
  const auto t = decode(q, index);
  std::string s;
  for (std::size_t p = 0; p <= q; ++p) {
    if (p) s += "|";
    s += algebra_->labels[p == 0 || !normalized_ ? t[p] : bar_[t[p]]];
  }
  return s;
}

SparseVec CyclicWindow::project(std::size_t basis_index) const { return proj_[basis_index]; }

void CyclicWindow::build_normalized() {
  const auto& a = *algebra_;
  b_.push_back(Matrix(a.field, 0, module_dim(0)));
  Entries e;
  for (std::size_t q = 1; q <= n_; ++q) {
    Matrix m(a.field, module_dim(q - 1), module_dim(q));
    for (std::size_t col = 0; col < module_dim(q); ++col) {
      const auto t = decode(q, col);
      std::vector<std::size_t> out(q);
      // a0 a1 | a2 ... aq
      for (const auto& [k, c] : a.mul[t[0]][bar_[t[1]]]) {
        out[0] = k;
        for (std::size_t p = 2; p <= q; ++p) out[p - 1] = t[p];
        e.emplace_back(encode(out), c);
      }
      for (std::size_t i = 1; i < q; ++i) {
        const Scalar s = sign(i);
        for (const auto& [k, c] : a.mul[bar_[t[i]]][bar_[t[i + 1]]])
          for (const auto& [pb, pc] : proj_[k]) {
            out[0] = t[0];
            for (std::size_t p = 1; p < i; ++p) out[p] = t[p];
            out[i] = pb;
            for (std::size_t p = i + 2; p <= q; ++p) out[p - 1] = t[p];
            e.emplace_back(encode(out), s * c * pc);
          }
      }
      // (-1)^q aq a0 | a1 ... a_{q-1}
      const Scalar s = sign(q);
      for (const auto& [k, c] : a.mul[bar_[t[q]]][t[0]]) {
        out[0] = k;
        for (std::size_t p = 1; p < q; ++p) out[p] = t[p];
        e.emplace_back(encode(out), s * c);
      }
      m.set_column(col, finish(e));
    }
    b_.push_back(std::move(m));
  }
  for (std::size_t q = 0; q < n_; ++q) {
    Matrix m(a.field, module_dim(q + 1), module_dim(q));
    for (std::size_t col = 0; col < module_dim(q); ++col) {
      const auto t = decode(q, col);
      std::vector<std::size_t> ring(q + 1);
      for (std::size_t p = 1; p <= q; ++p) ring[p] = t[p];
      std::vector<std::size_t> out(q + 2);
      for (const auto& [p0, c0] : proj_[t[0]]) {
        ring[0] = p0;
        for (std::size_t i = 0; i <= q; ++i) {
          const Scalar s = sign(q * i) * c0;
          for (std::size_t p = 0; p <= q; ++p) out[p + 1] = ring[(i + p) % (q + 1)];
          for (const auto& [u, cu] : a.unit) {
            out[0] = u;
            e.emplace_back(encode(out), s * cu);
          }
        }
      }
      m.set_column(col, finish(e));
    }
    bb_.push_back(std::move(m));
  }
}

void CyclicWindow::build_grades() {
  const auto& g = *algebra_->group;
  for (std::size_t q = 0; q <= n_; ++q) {
    std::vector<std::size_t> gr(module_dim(q));
    for (std::size_t idx = 0; idx < gr.size(); ++idx) {
      const auto t = decode(q, idx);
      grp::Elem x = t[0];
      for (std::size_t p = 1; p <= q; ++p) x = g.mul(x, normalized_ ? bar_[t[p]] : t[p]);
      gr[idx] = g.class_of(x);
    }
    grades_.push_back(std::move(gr));
  }
}

const Matrix& CyclicWindow::b(std::size_t q) const {
  if (q > n_) fail(ErrorKind::capability, "b beyond the window");
  return b_[q];
}

const Matrix& CyclicWindow::connes_b(std::size_t q) const {
  if (!normalized_) fail(ErrorKind::capability, "B is only built on normalized windows");
  if (q >= n_) fail(ErrorKind::capability, "B beyond the window");
  return bb_[q];
}

Matrix CyclicWindow::face(std::size_t q, std::size_t i) const {
  if (normalized_) fail(ErrorKind::capability, "faces are only built on unnormalized windows");
  if (q == 0 || q > n_ || i > q) fail(ErrorKind::domain, "face index out of range");
  const auto& a = *algebra_;
  Matrix m(a.field, module_dim(q - 1), module_dim(q));
  Entries e;
  std::vector<std::size_t> out(q);
  for (std::size_t col = 0; col < module_dim(q); ++col) {
    const auto t = decode(q, col);
    if (i < q) {
      for (const auto& [k, c] : a.mul[t[i]][t[i + 1]]) {
        for (std::size_t p = 0; p < i; ++p) out[p] = t[p];
        out[i] = k;
        for (std::size_t p = i + 2; p <= q; ++p) out[p - 1] = t[p];
        e.emplace_back(encode(out), c);
      }
    } else {
      for (const auto& [k, c] : a.mul[t[q]][t[0]]) {
        out[0] = k;
        for (std::size_t p = 1; p < q; ++p) out[p] = t[p];
        e.emplace_back(encode(out), c);
      }
    }
    m.set_column(col, finish(e));
  }
  return m;
}

Matrix CyclicWindow::degeneracy(std::size_t q, std::size_t i) const {
  if (normalized_) fail(ErrorKind::capability, "degeneracies are only built on unnormalized windows");
  if (q >= n_ || i > q) fail(ErrorKind::domain, "degeneracy index out of range");
  const auto& a = *algebra_;
  Matrix m(a.field, module_dim(q + 1), module_dim(q));
  Entries e;
  std::vector<std::size_t> out(q + 2);
  for (std::size_t col = 0; col < module_dim(q); ++col) {
    const auto t = decode(q, col);
    for (std::size_t p = 0; p <= i; ++p) out[p] = t[p];
    for (std::size_t p = i + 1; p <= q; ++p) out[p + 1] = t[p];
    for (const auto& [u, c] : a.unit) {
      out[i + 1] = u;
      e.emplace_back(encode(out), c);
    }
    m.set_column(col, finish(e));
  }
  return m;
}

Matrix CyclicWindow::cyclic_operator(std::size_t q) const {
  if (normalized_) fail(ErrorKind::capability, "t is only built on unnormalized windows");
  if (q > n_) fail(ErrorKind::domain, "t beyond the window");
  const auto& a = *algebra_;
  Matrix m(a.field, module_dim(q), module_dim(q));
  const Scalar s(a.field, la::Rational(q % 2 == 0 ? 1 : -1));
  std::vector<std::size_t> out(q + 1);
  for (std::size_t col = 0; col < module_dim(q); ++col) {
    const auto t = decode(q, col);
    out[0] = t[q];
    for (std::size_t p = 0; p < q; ++p) out[p + 1] = t[p];
    m.set_column(col, {{encode(out), s}});
  }
  return m;
}

Matrix CyclicWindow::b_prime(std::size_t q) const {
  Matrix m(algebra_->field, module_dim(q - 1), module_dim(q));
  for (std::size_t i = 0; i < q; ++i) m = m + face(q, i).scaled(sign(i));
  return m;
}

// ---------------------------------------------------------------- identities

IdentityCheck mixed_identities(const CyclicWindow& w) {
  IdentityCheck r;
  const auto n = w.degree();
  auto expect_zero = [&](const Matrix& m, const std::string& what) {
    ++r.checked;
    if (!m.is_zero()) r.failures.push_back(what);
  };
  for (std::size_t q = 2; q <= n; ++q) expect_zero(w.b(q - 1) * w.b(q), "b^2 != 0 on C_" + std::to_string(q));
  for (std::size_t q = 0; q + 2 <= n; ++q) expect_zero(w.connes_b(q + 1) * w.connes_b(q), "B^2 != 0 on C_" + std::to_string(q));
  for (std::size_t q = 0; q + 1 <= n; ++q) {
    Matrix m = w.b(q + 1) * w.connes_b(q);
    if (q >= 1) m = m + w.connes_b(q - 1) * w.b(q);
    expect_zero(m, "bB + Bb != 0 on C_" + std::to_string(q));
  }
  return r;
}

IdentityCheck cyclic_identities(const CyclicWindow& w) {
  IdentityCheck r;
  const auto n = w.degree();
  auto expect = [&](const Matrix& x, const Matrix& y, const std::string& what) {
    ++r.checked;
    if (!(x == y)) r.failures.push_back(what);
  };
  const auto k = w.algebra().field;
  auto tag = [](const char* rel, std::size_t q, std::size_t i, std::size_t j) {
    return std::string(rel) + " q=" + std::to_string(q) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  for (std::size_t q = 0; q <= n; ++q) {
    const Matrix t = w.cyclic_operator(q);
    Matrix p = Matrix::identity(k, w.module_dim(q));
    for (std::size_t i = 0; i <= q; ++i) p = t * p;
    expect(p, Matrix::identity(k, w.module_dim(q)), tag("t^(q+1)=id", q, 0, 0));
    if (q >= 2)
      for (std::size_t j = 1; j <= q; ++j)
        for (std::size_t i = 0; i < j; ++i)
          expect(w.face(q - 1, i) * w.face(q, j), w.face(q - 1, j - 1) * w.face(q, i), tag("d_i d_j", q, i, j));
    if (q + 2 <= n)
      for (std::size_t j = 0; j <= q; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          expect(w.degeneracy(q + 1, i) * w.degeneracy(q, j), w.degeneracy(q + 1, j + 1) * w.degeneracy(q, i), tag("s_i s_j", q, i, j));
    if (q + 1 <= n)
      for (std::size_t j = 0; j <= q; ++j) {
        const Matrix s = w.degeneracy(q, j);
        for (std::size_t i = 0; i <= q + 1; ++i) {
          const Matrix lhs = w.face(q + 1, i) * s;
          if (i < j) {
            expect(lhs, w.degeneracy(q - 1, j - 1) * w.face(q, i), tag("d_i s_j", q, i, j));
          } else if (i == j || i == j + 1) {
            expect(lhs, Matrix::identity(k, w.module_dim(q)), tag("d_i s_j", q, i, j));
          } else {
            expect(lhs, w.degeneracy(q - 1, j) * w.face(q, i - 1), tag("d_i s_j", q, i, j));
          }
        }
      }
    if (q >= 1) {
      const Matrix tq1 = w.cyclic_operator(q - 1);
      for (std::size_t i = 1; i <= q; ++i)
        expect(w.face(q, i) * t, (tq1 * w.face(q, i - 1)).scaled(Scalar(-1)), tag("d_i t", q, i, 0));
      expect(w.face(q, 0) * t, w.face(q, q).scaled(sign(q)), tag("d_0 t", q, 0, 0));
    }
    if (q + 1 <= n) {
      const Matrix tq1 = w.cyclic_operator(q + 1);
      for (std::size_t i = 1; i <= q; ++i)
        expect(w.degeneracy(q, i) * t, (tq1 * w.degeneracy(q, i - 1)).scaled(Scalar(-1)), tag("s_i t", q, i, 0));
      expect(w.degeneracy(q, 0) * t, (tq1 * tq1 * w.degeneracy(q, q)).scaled(sign(q)), tag("s_0 t", q, 0, 0));
    }
  }
  return r;
}

IdentityCheck grading_preserved(const CyclicWindow& w) {
  IdentityCheck r;
  if (!w.graded()) {
    r.failures.push_back("window is not graded");
    return r;
  }
  auto check = [&](const Matrix& m, std::size_t src, std::size_t dst, const std::string& what) {
    ++r.checked;
    const auto& gs = w.grades(src);
    const auto& gd = w.grades(dst);
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [row, v] : m.column(c))
        if (gd[row] != gs[c]) {
          r.failures.push_back(what + " mixes " + w.tuple_label(src, c) + " and " + w.tuple_label(dst, row));
          return;
        }
  };
  for (std::size_t q = 1; q <= w.degree(); ++q) check(w.b(q), q, q - 1, "b on C_" + std::to_string(q));
  if (w.normalized()) {
    for (std::size_t q = 0; q < w.degree(); ++q) check(w.connes_b(q), q, q + 1, "B on C_" + std::to_string(q));
  } else {
    for (std::size_t q = 0; q <= w.degree(); ++q) check(w.cyclic_operator(q), q, q, "t on C_" + std::to_string(q));
  }
  return r;
}

// ---------------------------------------------------------------- reports

const char* to_string(Theory t) {
  switch (t) {
    case Theory::HH: return "HH";
    case Theory::HC: return "HC";
    case Theory::HP: return "HP";
    case Theory::HN: return "HN";
    case Theory::group_homology: return "group-homology";
  }
  return "?";
}

nlohmann::json HomologyReport::to_json() const {
  nlohmann::json cert = {{"window", certificate.window}, {"certified_max", certificate.certified_max}};
  if (certificate.cutoff) {
    cert["cutoff"] = *certificate.cutoff;
    cert["stabilized"] = certificate.stabilized;
    cert["dims_at_cutoff"] = certificate.dims_at_cutoff;
    cert["dims_at_next_cutoff"] = certificate.dims_at_next_cutoff;
    cert["transition_ranks"] = certificate.transition_ranks;
  }
  nlohmann::json j = {{"theory", to_string(theory)}, {"subject", subject}, {"dims", dims}, {"certificate", cert}};
  if (!per_class.empty()) {
    nlohmann::json pc = nlohmann::json::array();
    for (const auto& c : per_class) pc.push_back({{"class", c.label}, {"dims", c.dims}});
    j["per_class"] = pc;
  }
  if (!degree0_basis.empty()) j["degree0_basis"] = degree0_basis;
  return j;
}

namespace {

std::string class_label(const grp::FiniteGroup& g, std::size_t cls) {
  const auto x = g.classes()[cls].front();
  return x == 0 ? "[e]" : "[g" + std::to_string(x) + "]";
}

std::vector<std::string> class_sums(const grp::FiniteGroup& g) {
  std::vector<std::string> out;
  for (const auto& c : g.classes()) {
    std::string s;
    for (auto x : c) s += (s.empty() ? "" : "+") + (x == 0 ? std::string("e") : "g" + std::to_string(x));
    out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> chain_homology(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks,
                                        std::size_t top) {
  // ranks[q] = rank of the differential out of degree q (ranks[0] = 0)
  std::vector<std::size_t> h;
  for (std::size_t q = 0; q <= top; ++q) h.push_back(dims[q] - ranks[q] - ranks[q + 1]);
  return h;
}

// Total complexes of the mixed complex. Degree n holds C_{n+2k} u^k for
// lo(n) <= k <= hi; d(x u^k) = b x u^k + B x u^{k+1}.
class Total {
 public:
  enum class Kind { hc, hp, hn };

  Total(const CyclicWindow& w, Kind kind, std::size_t cutoff) : w_(w), kind_(kind), cutoff_(cutoff) {}

  struct Component {
    long k;
    std::size_t q;
    std::size_t offset;
  };

  std::vector<Component> components(long n) const {
    const long hi = kind_ == Kind::hc ? 0 : static_cast<long>(cutoff_);
    long lo = n >= 0 ? -(n / 2) : (-n + 1) / 2;
    if (kind_ == Kind::hn) lo = std::max(lo, 0L);
    std::vector<Component> out;
    std::size_t off = 0;
    for (long k = lo; k <= hi; ++k) {
      const long q = n + 2 * k;
      if (q < 0) continue;
      if (static_cast<std::size_t>(q) > w_.degree())
        fail(ErrorKind::capability, "total complex needs C_" + std::to_string(q) + " beyond the window");
      out.push_back({k, static_cast<std::size_t>(q), off});
      off += w_.module_dim(static_cast<std::size_t>(q));
    }
    return out;
  }

  std::size_t dim(long n) const {
    std::size_t d = 0;
    for (const auto& c : components(n)) d += w_.module_dim(c.q);
    return d;
  }

  Matrix differential(long n) const {
    const auto src = components(n);
    const auto dst = components(n - 1);
    auto find = [&](long k) -> const Component* {
      for (const auto& c : dst)
        if (c.k == k) return &c;
      return nullptr;
    };
    Matrix m(w_.algebra().field, dim(n - 1), dim(n));
    Entries e;
    for (const auto& c : src) {
      const Component* down = c.q >= 1 ? find(c.k) : nullptr;
      const Component* left = find(c.k + 1);
      for (std::size_t col = 0; col < w_.module_dim(c.q); ++col) {
        if (down)
          for (const auto& [r, v] : w_.b(c.q).column(col)) e.emplace_back(down->offset + r, v);
        if (left)
          for (const auto& [r, v] : w_.connes_b(c.q).column(col)) e.emplace_back(left->offset + r, v);
        m.set_column(c.offset + col, finish(e));
      }
    }
    return m;
  }

  /// Inclusion C_n -> Tot_n at k = 0.
  Matrix inclusion(std::size_t n) const {
    Matrix m(w_.algebra().field, dim(static_cast<long>(n)), w_.module_dim(n));
    for (const auto& c : components(static_cast<long>(n)))
      if (c.k == 0)
        for (std::size_t i = 0; i < w_.module_dim(n); ++i) m.set(c.offset + i, i, Scalar(1));
    return m;
  }

  /// S: Tot_n -> Tot_{n-2}, x u^k -> x u^{k+1}, dropping k = 0.
  Matrix periodicity(long n) const {
    Matrix m(w_.algebra().field, dim(n - 2), dim(n));
    const auto dst = components(n - 2);
    for (const auto& c : components(n))
      for (const auto& d : dst)
        if (d.k == c.k + 1)
          for (std::size_t i = 0; i < w_.module_dim(c.q); ++i) m.set(d.offset + i, c.offset + i, Scalar(1));
    return m;
  }

  /// Connecting map Tot_{n-2} -> C_{n-1}: B on the k = 0 component.
  Matrix connecting(long n) const {
    const std::size_t q = static_cast<std::size_t>(n - 1);
    Matrix m(w_.algebra().field, w_.module_dim(q), dim(n - 2));
    for (const auto& c : components(n - 2))
      if (c.k == 0)
        for (std::size_t col = 0; col < w_.module_dim(c.q); ++col) m.set_column(c.offset + col, w_.connes_b(c.q).column(col));
    return m;
  }

  /// Tot_n at this cutoff -> Tot_n at a smaller cutoff, dropping columns.
  Matrix truncation(long n, const Total& lower) const {
    const auto dst = lower.components(n);
    Matrix m(w_.algebra().field, lower.dim(n), dim(n));
    for (const auto& c : components(n))
      for (const auto& d : dst)
        if (d.k == c.k)
          for (std::size_t i = 0; i < w_.module_dim(c.q); ++i) m.set(d.offset + i, c.offset + i, Scalar(1));
    return m;
  }

  std::vector<std::size_t> homology(long top) const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> ranks;
    for (long n = 0; n <= top + 1; ++n) ranks.push_back(la::rank(differential(n)));
    for (long n = 0; n <= top; ++n) out.push_back(dim(n) - ranks[n] - ranks[n + 1]);
    return out;
  }

 private:
  const CyclicWindow& w_;
  Kind kind_;
  std::size_t cutoff_;
};

struct HomologySpaces {
  Subspace cycles;
  Subspace boundaries;
  std::size_t dim() const { return cycles.dim() - boundaries.dim(); }
};

// Columns completing a basis of `boundaries` to one of `cycles`.
Matrix homology_basis(const HomologySpaces& h) {
  Subspace acc = h.boundaries;
  std::vector<la::Vec> picked;
  for (std::size_t c = 0; c < h.cycles.dim() && acc.dim() < h.cycles.dim(); ++c) {
    auto v = h.cycles.basis().dense_column(c);
    if (acc.contains(v)) continue;
    acc = acc.sum(Subspace::span(h.cycles.field(), h.cycles.ambient(), {v}));
    picked.push_back(std::move(v));
  }
  return Matrix::from_columns(h.cycles.field(), h.cycles.ambient(), picked);
}

}  // namespace

HomologyReport hochschild(const AlgebraPresentation& a, std::size_t n, std::size_t budget) {
  if (n < 1) fail(ErrorKind::domain, "hochschild needs a window N >= 1");
  const auto w = CyclicWindow::normalized(a, n, budget);
  std::vector<std::size_t> dims, ranks{0};
  for (std::size_t q = 0; q <= n; ++q) dims.push_back(w.module_dim(q));
  for (std::size_t q = 1; q <= n; ++q) ranks.push_back(la::rank(w.b(q)));
  ranks.push_back(0);
  HomologyReport r;
  r.theory = Theory::HH;
  r.subject = a.name;
  r.dims = chain_homology(dims, ranks, n - 1);
  r.certificate.window = n;
  r.certificate.certified_max = n - 1;
  if (a.group) r.degree0_basis = class_sums(*a.group);
  return r;
}

CyclicResult cyclic_homology(const AlgebraPresentation& a, std::size_t n, std::size_t budget) {
  if (n < 2) fail(ErrorKind::domain, "cyclic homology needs a window N >= 2");
  const auto w = CyclicWindow::normalized(a, n, budget);
  const Total tot(w, Total::Kind::hc, 0);
  const std::size_t top = n - 2;
  CyclicResult out;
  out.hc.theory = Theory::HC;
  out.hc.subject = a.name;
  out.hc.certificate.window = n;
  out.hc.certificate.certified_max = top;
  out.hh.theory = Theory::HH;
  out.hh.subject = a.name;
  out.hh.certificate.window = n;
  out.hh.certificate.certified_max = top;
  if (a.group) out.hh.degree0_basis = class_sums(*a.group);

  std::vector<HomologySpaces> hh, hc;
  for (std::size_t q = 0; q <= top; ++q) {
    auto rk = la::rank_kernel(w.b(q));
    hh.push_back({std::move(rk.kernel), la::image(w.b(q + 1))});
    auto rc = la::rank_kernel(tot.differential(static_cast<long>(q)));
    hc.push_back({std::move(rc.kernel), la::image(tot.differential(static_cast<long>(q) + 1))});
    out.hh.dims.push_back(hh.back().dim());
    out.hc.dims.push_back(hc.back().dim());
  }

  std::vector<Matrix> bases;
  for (const auto& h : hc) bases.push_back(homology_basis(h));
  out.s_maps.resize(top + 1);
  for (std::size_t q = 2; q <= top; ++q) {
    const Matrix s = tot.periodicity(static_cast<long>(q));
    const Matrix frame = hc[q - 2].boundaries.basis().hstack(bases[q - 2]);
    const auto x = la::solve(frame, s * bases[q]);
    if (!x) fail(ErrorKind::validation, "S does not map cycles to cycles");
    std::vector<std::size_t> tail;
    for (std::size_t i = hc[q - 2].boundaries.dim(); i < frame.cols(); ++i) tail.push_back(i);
    out.s_maps[q] = x->select_rows(tail);
  }

  // HH_q -I-> HC_q -S-> HC_{q-2} -d-> HH_{q-1} -I-> HC_{q-1}
  auto zero_space = [&](std::size_t ambient) {
    return HomologySpaces{Subspace(a.field, ambient), Subspace(a.field, ambient)};
  };
  auto spot = [&](const std::string& where, const HomologySpaces& src, const Matrix& f, const HomologySpaces& mid,
                  const Matrix& g, const HomologySpaces& dst) {
    ++out.connes.spots;
    const std::size_t rf = la::induced_rank(f, src.cycles, mid.boundaries);
    const std::size_t rg = la::induced_rank(g, mid.cycles, dst.boundaries);
    const std::size_t rgf = la::induced_rank(g * f, src.cycles, dst.boundaries);
    if (rf + rg != mid.dim() || rgf != 0) {
      out.connes.exact = false;
      out.connes.failures.push_back("not exact at " + where + ": ranks " + std::to_string(rf) + "+" + std::to_string(rg) +
                                    " vs dim " + std::to_string(mid.dim()));
    }
  };
  for (std::size_t q = 0; q <= top; ++q) {
    const long lq = static_cast<long>(q);
    const Matrix inc = tot.inclusion(q);
    const HomologySpaces hc_q2 = q >= 2 ? hc[q - 2] : zero_space(tot.dim(lq - 2));
    const Matrix s = tot.periodicity(lq);
    // at HC_q
    spot("HC_" + std::to_string(q), hh[q], inc, hc[q], s, hc_q2);
    if (q >= 1) {
      const Matrix conn = tot.connecting(static_cast<long>(q));
      const HomologySpaces hc_q1 = hc[q - 1];
      const Matrix inc1 = tot.inclusion(q - 1);
      // at HC_{q-2} and at HH_{q-1}
      spot("HC_" + std::to_string(q) + "-2", hc[q], s, hc_q2, conn, hh[q - 1]);
      spot("HH_" + std::to_string(q - 1), hc_q2, conn, hh[q - 1], inc1, hc_q1);
    }
  }
  // HH_top is preceded by HC_{top-1} through the connecting map
  if (top >= 1) {
    const Matrix conn = tot.connecting(static_cast<long>(top) + 1);
    const Matrix inc = tot.inclusion(top);
    spot("HH_" + std::to_string(top), hc[top - 1], conn, hh[top], inc, hc[top]);
  } else {
    const Matrix inc = tot.inclusion(0);
    spot("HH_0", zero_space(0), Matrix(a.field, w.module_dim(0), 0), hh[0], inc, hc[0]);
  }
  return out;
}

PeriodicResult hp_hn(const AlgebraPresentation& a, std::size_t n_max, std::size_t cutoff, std::size_t budget) {
  if (cutoff < 1) fail(ErrorKind::domain, "cutoff P must be at least 1");
  const std::size_t window = n_max + 2 * (cutoff + 1) + 1;
  const auto w = CyclicWindow::normalized(a, window, budget);
  PeriodicResult out;
  auto run = [&](Total::Kind kind, Theory theory) {
    HomologyReport r;
    r.theory = theory;
    r.subject = a.name;
    r.certificate.window = window;
    r.certificate.certified_max = n_max;
    r.certificate.cutoff = cutoff;
    r.certificate.dims_at_cutoff = Total(w, kind, cutoff).homology(static_cast<long>(n_max));
    const Total lower(w, kind, cutoff), upper(w, kind, cutoff + 1);
    r.certificate.dims_at_next_cutoff = upper.homology(static_cast<long>(n_max));
    for (long n = 0; n <= static_cast<long>(n_max); ++n) {
      const auto cycles = la::rank_kernel(upper.differential(n)).kernel;
      const auto boundaries = la::image(lower.differential(n + 1));
      r.certificate.transition_ranks.push_back(la::induced_rank(upper.truncation(n, lower), cycles, boundaries));
    }
    r.certificate.stabilized = r.certificate.dims_at_cutoff == r.certificate.dims_at_next_cutoff &&
                               r.certificate.transition_ranks == r.certificate.dims_at_cutoff;
    if (!r.certificate.stabilized)
      fail(ErrorKind::not_stabilized, std::string(to_string(theory)) + " of " + a.name + " did not stabilize: P=" +
                                          std::to_string(cutoff) + " gives " + dims_str(r.certificate.dims_at_cutoff) +
                                          ", P+1 gives " + dims_str(r.certificate.dims_at_next_cutoff) +
                                          ", comparison ranks " + dims_str(r.certificate.transition_ranks));
    r.dims = r.certificate.dims_at_cutoff;
    return r;
  };
  out.hp = run(Total::Kind::hp, Theory::HP);
  out.hn = run(Total::Kind::hn, Theory::HN);
  return out;
}

la::Subspace hn0_image(const AlgebraPresentation& a, std::size_t cutoff, std::size_t budget) {
  if (cutoff < 1) fail(ErrorKind::domain, "cutoff P must be at least 1");
  const auto w = CyclicWindow::normalized(a, 2 * cutoff, budget);
  const Total tot(w, Total::Kind::hn, cutoff);
  const auto cycles = la::rank_kernel(tot.differential(0)).kernel;
  // the k = 0 component comes first
  std::vector<std::size_t> head(w.module_dim(0));
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  return la::image(cycles.basis().select_rows(head).hstack(w.b(1)));
}

std::vector<std::size_t> hc_bicomplex(const AlgebraPresentation& a, std::size_t n) {
  if (a.dim > 3) fail(ErrorKind::capability, "the b/b' bicomplex is limited to algebras of dimension <= 3");
  if (n < 1) fail(ErrorKind::domain, "hc_bicomplex needs N >= 1");
  const auto w = CyclicWindow::unnormalized(a, n);
  const auto k = a.field;
  std::vector<Matrix> bp(n + 1), t(n + 1), norm(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    if (q >= 1) bp[q] = w.b_prime(q);
    t[q] = w.cyclic_operator(q);
    Matrix p = Matrix::identity(k, w.module_dim(q)), sum(k, w.module_dim(q), w.module_dim(q));
    for (std::size_t i = 0; i <= q; ++i) {
      sum = sum + p;
      p = t[q] * p;
    }
    norm[q] = sum;
  }
  // degree m holds columns p = 0..m with q = m - p
  auto offsets = [&](long m) {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (long p = 0; p <= m; ++p) {
      off.push_back(o);
      o += w.module_dim(static_cast<std::size_t>(m - p));
    }
    off.push_back(o);
    return off;
  };
  auto differential = [&](long m) {
    const auto src = offsets(m);
    const auto dst = m >= 1 ? offsets(m - 1) : std::vector<std::size_t>{0};
    Matrix d(k, dst.back(), src.back());
    Entries e;
    for (long p = 0; p <= m; ++p) {
      const std::size_t q = static_cast<std::size_t>(m - p);
      const Matrix id = Matrix::identity(k, w.module_dim(q));
      const Matrix vert = q == 0 ? Matrix() : (p % 2 == 0 ? w.b(q) : bp[q].scaled(Scalar(-1)));
      const Matrix horiz = p == 0 ? Matrix() : (p % 2 == 1 ? id - t[q] : norm[q]);
      for (std::size_t col = 0; col < w.module_dim(q); ++col) {
        if (q >= 1)
          for (const auto& [r, v] : vert.column(col)) e.emplace_back(dst[p] + r, v);
        if (p >= 1)
          for (const auto& [r, v] : horiz.column(col)) e.emplace_back(dst[p - 1] + r, v);
        d.set_column(src[p] + col, finish(e));
      }
    }
    return d;
  };
  std::vector<std::size_t> ranks;
  for (long m = 0; m <= static_cast<long>(n); ++m) ranks.push_back(m == 0 ? 0 : la::rank(differential(m)));
  std::vector<std::size_t> out;
  for (long m = 0; m + 1 <= static_cast<long>(n); ++m) out.push_back(offsets(m).back() - ranks[m] - ranks[m + 1]);
  return out;
}

HomologyReport conjugacy_split_hh(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n, std::size_t budget) {
  if (n < 1) fail(ErrorKind::domain, "split HH needs a window N >= 1");
  const auto a = group_algebra(g, k);
  const auto w = CyclicWindow::normalized(a, n, budget);
  HomologyReport r;
  r.theory = Theory::HH;
  r.subject = a.name;
  r.certificate.window = n;
  r.certificate.certified_max = n - 1;
  r.dims.assign(n, 0);
  r.degree0_basis = class_sums(g);
  for (std::size_t cls = 0; cls < g.classes().size(); ++cls) {
    std::vector<std::vector<std::size_t>> idx(n + 1);
    for (std::size_t q = 0; q <= n; ++q)
      for (std::size_t i = 0; i < w.module_dim(q); ++i)
        if (w.grades(q)[i] == cls) idx[q].push_back(i);
    std::vector<std::size_t> dims, ranks{0};
    for (std::size_t q = 0; q <= n; ++q) dims.push_back(idx[q].size());
    for (std::size_t q = 1; q <= n; ++q) ranks.push_back(la::rank(w.b(q).select_rows(idx[q - 1]).select_columns(idx[q])));
    ranks.push_back(0);
    ClassDims c{class_label(g, cls), cls, chain_homology(dims, ranks, n - 1)};
    for (std::size_t q = 0; q < n; ++q) r.dims[q] += c.dims[q];
    r.per_class.push_back(std::move(c));
  }
  return r;
}

HomologyReport group_homology(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n, std::size_t budget) {
  if (n < 1) fail(ErrorKind::domain, "group homology needs a window N >= 1");
  const std::size_t m = g.order() - 1;
  for (std::size_t q = 0; q <= n; ++q)
    if (checked_pow(m, q, budget) > budget)
      fail(ErrorKind::capability, "budget exceeded in degree " + std::to_string(q) + " of the bar complex");
  auto dim = [&](std::size_t q) { return checked_pow(m, q, budget); };
  // tuple entries are non-identity elements, stored as element - 1
  auto decode = [&](std::size_t q, std::size_t idx) {
    std::vector<grp::Elem> t(q);
    for (std::size_t p = 0; p < q; ++p) {
      t[p] = idx % m + 1;
      idx /= m;
    }
    return t;
  };
  auto encode = [&](const std::vector<grp::Elem>& t) {
    std::size_t idx = 0;
    for (std::size_t p = t.size(); p-- > 0;) idx = idx * m + (t[p] - 1);
    return idx;
  };
  std::vector<std::size_t> dims, ranks{0};
  for (std::size_t q = 0; q <= n; ++q) dims.push_back(dim(q));
  Entries e;
  for (std::size_t q = 1; q <= n; ++q) {
    Matrix d(k, dim(q - 1), dim(q));
    for (std::size_t col = 0; col < dim(q); ++col) {
      const auto t = decode(q, col);
      std::vector<grp::Elem> out(t.begin() + 1, t.end());
      e.emplace_back(encode(out), Scalar(k, la::Rational(1)));
      for (std::size_t i = 1; i < q; ++i) {
        const grp::Elem x = g.mul(t[i - 1], t[i]);
        if (x == 0) continue;
        out.assign(t.begin(), t.end());
        out[i - 1] = x;
        out.erase(out.begin() + static_cast<long>(i));
        e.emplace_back(encode(out), Scalar(k, la::Rational(i % 2 == 0 ? 1 : -1)));
      }
      out.assign(t.begin(), t.end() - 1);
      e.emplace_back(encode(out), Scalar(k, la::Rational(q % 2 == 0 ? 1 : -1)));
      d.set_column(col, finish(e));
    }
    ranks.push_back(la::rank(d));
  }
  ranks.push_back(0);
  HomologyReport r;
  r.theory = Theory::group_homology;
  r.subject = g.name();
  r.dims = chain_homology(dims, ranks, n - 1);
  r.certificate.window = n;
  r.certificate.certified_max = n - 1;
  return r;
}

DecompositionCheck decomposition_check(const grp::FiniteGroup& g, la::FieldPtr k, std::size_t n, std::size_t budget) {
  const auto split = conjugacy_split_hh(g, k, n, budget);
  DecompositionCheck out;
  out.ok = true;
  for (const auto& c : split.per_class) {
    const auto z = grp::subgroup_as_group(g, grp::element_centralizer(g, g.classes()[c.class_index].front()));
    DecompositionRow row{c.label, c.dims, group_homology(z.group, k, n, budget).dims, false};
    row.ok = row.hh == row.centralizer_homology;
    out.ok = out.ok && row.ok;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace burnhoch::cyclic
