#include <random>

#include "burnhoch/matrix.hpp"
#include "doctest.h"

using namespace burnhoch;
using namespace burnhoch::la;

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}, evaluated as a quotient of two
// products. Independent of the recursive division used by the library.
Poly moebius_cyclotomic(unsigned d) {
  Poly num{1}, den{1};
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Poly f(e + 1);
    f[0] = -1;
    f[e] = 1;
    const int mu = moebius(d / e);
    if (mu == 1) num = poly_mul(num, f);
    if (mu == -1) den = poly_mul(den, f);
  }
  auto [q, r] = poly_divmod(num, den);
  CHECK(r.empty());
  return q;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_pct) {
  std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
  Matrix m(Field::rational(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < density_pct) m.set(r, c, Scalar(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});
  CHECK(cyclotomic_polynomial(3) == Poly{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == Poly{1, 0, 1});
  for (unsigned d = 1; d <= 36; ++d) CHECK(cyclotomic_polynomial(d) == moebius_cyclotomic(d));

  CHECK(cyclotomic_field(1)->is_rational());
  CHECK(cyclotomic_field(4)->modulus() == Poly{1, 0, 1});
  CHECK(cyclotomic_field(3)->modulus() == Poly{1, 1, 1});
  CHECK_THROWS_AS(cyclotomic_field(0), Error);
}

TEST_CASE("field descriptors reject non-monic and non-squarefree moduli") {
  CHECK_THROWS_AS(Field::from_modulus(Poly{1, 0, 2}), Error);
  CHECK_THROWS_AS(Field::from_modulus(Poly{1, 2, 1}), Error);  // (x+1)^2
  CHECK(Field::from_modulus(Poly{-2, 0, 1})->degree() == 2);
  CHECK(Field::from_modulus(Poly{5, 1})->is_rational());
}

TEST_CASE("scalar arithmetic in cyclotomic fields") {
  for (unsigned d : {3U, 4U, 5U, 7U, 8U, 9U, 12U}) {
    const auto f = cyclotomic_field(d);
    const Scalar z = Scalar::generator(f);
    // Phi_d(z) = 0, and z has multiplicative order d.
    Scalar acc(f, Rational(0));
    const Poly& phi = f->modulus();
    for (std::size_t i = 0; i < phi.size(); ++i) acc += Scalar(f, phi[i]) * z.pow(static_cast<unsigned>(i));
    CHECK(acc.is_zero());
    CHECK(z.pow(d).is_one());
    for (unsigned e = 1; e < d; ++e) CHECK_FALSE(z.pow(e).is_one());
  }

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  const auto f = cyclotomic_field(7);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p(6);
    for (auto& c : p) c = Rational(coef(rng), 1 + (coef(rng) + 5) % 4);
    const Scalar a(f, p);
    if (a.is_zero()) continue;
    CHECK((a * a.inverse()).is_one());
  }

  const Scalar i = Scalar::generator(cyclotomic_field(4));
  CHECK((i * i + Scalar(1)).is_zero());
  CHECK_THROWS_AS(i + Scalar::generator(cyclotomic_field(3)), Error);
}

TEST_CASE("rank_kernel examples") {
  const auto q = Field::rational();
  SUBCASE("identity") {
    const auto rk = rank_kernel(Matrix::identity(q, 3));
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.dim() == 0);
  }
  SUBCASE("rank one over Q") {
    const Matrix m = Matrix::from_rows({{1, 1}, {1, 1}});
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel == Subspace::span(q, 2, {{Scalar(1), Scalar(-1)}}));
  }
  SUBCASE("over Q(i)") {
    const auto f = cyclotomic_field(4);
    const Scalar z = Scalar::generator(f);
    const Matrix m = Matrix::from_rows(f, {{z, Scalar(1)}, {Scalar(1), -z}});
    const auto rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel == Subspace::span(f, 2, {{z, Scalar(1)}}));
    CHECK(rank(m) == 1);
  }
  SUBCASE("mixed descriptors are rejected") {
    const auto f4 = cyclotomic_field(4);
    const auto f3 = cyclotomic_field(3);
    Matrix m(f4, 1, 2);
    CHECK_THROWS_AS(m.set(0, 0, Scalar::generator(f3)), Error);
    try {
      Matrix::from_rows(f4, {{Scalar::generator(f3), Scalar(1)}});
      FAIL("expected a descriptor mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::descriptor_mismatch);
    }
  }
}

TEST_CASE("cokernel examples") {
  const auto q = Field::rational();
  CHECK(cokernel(Matrix(q, 2, 1)).dim() == 2);
  CHECK(cokernel(Matrix::from_rows({{1, 0, 2}, {0, 1, 1}})).dim() == 0);
  CHECK(cokernel(Matrix::from_rows({{2}, {0}})).dim() == 1);
  // the projection kills the image and is onto the cokernel
  const Matrix m = Matrix::from_rows({{1, 1}, {1, 1}, {0, 2}});
  const Matrix p = cokernel_projection(m);
  CHECK(p.rows() == 1);
  CHECK((p * m).is_zero());
  CHECK(rank(p) == 1);
}

TEST_CASE("solve and inverse") {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  const Matrix inv = inverse(a);
  CHECK(a * inv == Matrix::identity(Field::rational(), 2));
  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), Matrix::from_rows({{1}, {2}})).has_value());
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("property: rank is transpose-invariant and agrees across eliminations") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const Matrix m = random_matrix(rng, r, c, 35);
    const std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    const auto rkk = rank_kernel(m);
    CHECK(rkk.rank == rk);
    CHECK(rkk.rank + rkk.kernel.dim() == c);
    CHECK((m * rkk.kernel.basis()).is_zero());
    CHECK(cokernel(m).dim() + rk == r);
    CHECK(image(m).dim() == rk);
  }
}

TEST_CASE("property: kernel does not depend on column order of the input") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(rng, 4, 7, 40);
    const auto k1 = rank_kernel(m).kernel;
    // permuting rows leaves the kernel unchanged
    std::vector<std::size_t> perm{3, 1, 0, 2};
    CHECK(rank_kernel(m.select_rows(perm)).kernel == k1);
  }
}

TEST_CASE("subspace canonical form") {
  const auto q = Field::rational();
  const Subspace a = Subspace::span(q, 3, {{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(0), Scalar(1), Scalar(1)}});
  const Subspace b = Subspace::span(q, 3, {{Scalar(1), Scalar(3), Scalar(4)}, {Scalar(2), Scalar(4), Scalar(6)}});
  CHECK(a == b);
  CHECK(a.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(a.contains(Vec{Scalar(1), Scalar(1), Scalar(2)}));
  CHECK_FALSE(a.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
  const Vec coords = a.coordinates(Vec{Scalar(2), Scalar(5), Scalar(7)});
  CHECK(coords == Vec{Scalar(2), Scalar(5)});
}
