#include "burnhoch/field.hpp"

#include <sstream>

namespace burnhoch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::descriptor_mismatch: return "descriptor-mismatch";
    case ErrorKind::domain: return "domain";
    case ErrorKind::validation: return "validation";
    case ErrorKind::capability: return "capability";
    case ErrorKind::incomplete_mackey: return "incomplete-mackey";
    case ErrorKind::not_stabilized: return "not-stabilized";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace burnhoch

namespace burnhoch::la {

void poly_trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

long poly_degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly r(a);
  for (auto& v : r) v *= c;
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) fail(ErrorKind::domain, "polynomial division by zero");
  Poly rem(a);
  poly_trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  Poly quo(rem.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational c = rem.back() * lead_inv;
    quo[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    poly_trim(rem);
  }
  poly_trim(quo);
  return {quo, rem};
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  poly_trim(r);
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = poly_scale(a, 1 / Rational(a.back()));
  return a;
}

Rational parse_rational(const std::string& text) {
  Rational v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v.get_den()) == 0) fail(ErrorKind::parse, "bad rational: " + text);
  v.canonicalize();
  return v;
}

std::string rational_str(const Rational& v) {
  return v.get_str();
}

std::string poly_str(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Poly cyclotomic_polynomial(unsigned d) {
  if (d == 0) fail(ErrorKind::domain, "cyclotomic index must be positive");
  Poly p(d + 1);
  p[0] = -1;
  p[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [q, r] = poly_divmod(p, cyclotomic_polynomial(e));
    p = std::move(q);
  }
  return p;
}

FieldPtr Field::rational() {
  static const FieldPtr q(new Field(Poly{0, 1}));
  return q;
}

FieldPtr Field::from_modulus(Poly f) {
  poly_trim(f);
  if (f.size() < 2) fail(ErrorKind::domain, "field modulus must have degree >= 1");
  if (f.back() != 1) fail(ErrorKind::domain, "field modulus must be monic: " + poly_str(f));
  if (f.size() == 2) return rational();
  if (poly_gcd(f, poly_derivative(f)).size() != 1)
    fail(ErrorKind::domain, "field modulus is not squarefree: " + poly_str(f));
  return FieldPtr(new Field(std::move(f)));
}

FieldPtr cyclotomic_field(unsigned d) {
  Poly phi = cyclotomic_polynomial(d);
  if (phi.size() == 2) return Field::rational();
  return FieldPtr(new Field(std::move(phi), d));
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  if (cyclotomic_) return "Q(zeta_" + std::to_string(*cyclotomic_) + ")";
  return "Q[x]/(" + poly_str(modulus_) + ")";
}

bool Field::operator==(const Field& other) const {
  return modulus_ == other.modulus_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || *a == *b;
}

Scalar::Scalar() : field_(Field::rational()) {}

Scalar::Scalar(long v) : field_(Field::rational()) {
  if (v != 0) coeffs_.emplace_back(v);
}

Scalar::Scalar(Rational v) : field_(Field::rational()) {
  v.canonicalize();
  if (sgn(v) != 0) coeffs_.push_back(std::move(v));
}

Scalar::Scalar(FieldPtr field, Rational v) : field_(std::move(field)) {
  v.canonicalize();
  if (sgn(v) != 0) coeffs_.push_back(std::move(v));
}

Scalar::Scalar(FieldPtr field, Poly coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  reduce();
}

Scalar Scalar::generator(FieldPtr field) {
  return Scalar(std::move(field), Poly{0, 1});
}

void Scalar::reduce() {
  for (auto& c : coeffs_) c.canonicalize();
  poly_trim(coeffs_);
  if (coeffs_.size() > field_->degree()) coeffs_ = poly_divmod(coeffs_, field_->modulus()).second;
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Scalar::rational() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

// Rational constants embed in every field; two distinct proper extensions
// never mix.
void Scalar::check_same(const Scalar& o) const {
  if (same_field(field_, o.field_)) return;
  if (o.field_->is_rational() || field_->is_rational()) return;
  fail(ErrorKind::descriptor_mismatch,
       "scalar fields differ: " + field_->name() + " vs " + o.field_->name());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_->is_rational()) field_ = o.field_;
  coeffs_ = poly_add(coeffs_, o.coeffs_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_->is_rational()) field_ = o.field_;
  coeffs_ = poly_sub(coeffs_, o.coeffs_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_->is_rational()) field_ = o.field_;
  coeffs_ = poly_mul(coeffs_, o.coeffs_);
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::domain, "inverse of zero");
  if (coeffs_.size() == 1) return Scalar(field_, Rational(1 / coeffs_[0]));
  // Extended Euclid: s*a + t*f = gcd, and gcd is a unit when f is squarefree
  // and irreducible; a non-unit gcd means a zero divisor.
  Poly r0 = field_->modulus(), r1 = coeffs_;
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) fail(ErrorKind::domain, "element is a zero divisor in " + field_->name());
  return Scalar(field_, poly_scale(s0, 1 / r0[0]));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(field_, Rational(1));
  Scalar base(*this);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!same_field(field_, o.field_) && !(is_rational() && o.is_rational())) return false;
  return coeffs_ == o.coeffs_;
}

std::string Scalar::str() const {
  if (coeffs_.size() <= 1) return rational_str(rational());
  return poly_str(coeffs_, "z");
}

}  // namespace burnhoch::la
