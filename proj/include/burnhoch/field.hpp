#pragma once

// Exact scalars: rationals and elements of number fields Q[x]/(f).

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burnhoch/error.hpp"

namespace burnhoch::la {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense rational polynomial, coefficient of x^i at index i. Trimmed: no
/// trailing zero coefficients, so the zero polynomial is empty.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
/// Quotient and remainder; throws on division by the zero polynomial.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& a);
/// Monic gcd (empty when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);
long poly_degree(const Poly& p);
std::string poly_str(const Poly& p, const std::string& var = "x");

/// The d-th cyclotomic polynomial, obtained by dividing x^d - 1 by Phi_e for
/// every proper divisor e of d.
Poly cyclotomic_polynomial(unsigned d);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Field descriptor Q[x]/(f). A degree-1 modulus collapses to Q.
class Field {
 public:
  /// The shared descriptor for Q.
  static FieldPtr rational();
  /// Validates that f is monic and squarefree. Irreducibility is not checked.
  static FieldPtr from_modulus(Poly f);

  std::size_t degree() const { return modulus_.size() - 1; }
  const Poly& modulus() const { return modulus_; }
  bool is_rational() const { return degree() == 1; }
  std::optional<unsigned> cyclotomic_index() const { return cyclotomic_; }
  std::string name() const;

  bool operator==(const Field& other) const;

 private:
  friend FieldPtr cyclotomic_field(unsigned d);
  explicit Field(Poly f, std::optional<unsigned> cyclo = std::nullopt)
      : modulus_(std::move(f)), cyclotomic_(cyclo) {}

  Poly modulus_;
  std::optional<unsigned> cyclotomic_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Q(zeta_d) = Q[x]/(Phi_d). d = 1 and d = 2 give Q.
FieldPtr cyclotomic_field(unsigned d);

/// An element of a field descriptor; the representative is reduced modulo f.
class Scalar {
 public:
  Scalar();  // zero of Q
  Scalar(long v);  // NOLINT: integer literals are rationals
  Scalar(Rational v);  // NOLINT
  Scalar(FieldPtr field, Rational v);
  Scalar(FieldPtr field, Poly coeffs);

  /// The class of x in Q[x]/(f).
  static Scalar generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const Poly& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const { return coeffs_.size() <= 1; }
  /// Constant coefficient; only meaningful when is_rational().
  Rational rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  void reduce();

  FieldPtr field_;
  Poly coeffs_;
};

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const Scalar& v) { return v.is_zero(); }
inline Rational inverse(const Rational& v) { return 1 / v; }
inline Scalar inverse(const Scalar& v) { return v.inverse(); }

std::string rational_str(const Rational& v);
/// Parses "p" or "p/q"; throws a parse error otherwise.
Rational parse_rational(const std::string& text);

}  // namespace burnhoch::la
