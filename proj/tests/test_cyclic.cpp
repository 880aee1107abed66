#include <map>

#include "burnhoch/cyclic.hpp"
#include "burnhoch/error.hpp"
#include "doctest.h"

using namespace burnhoch;
using namespace burnhoch::cyclic;
using la::Scalar;

namespace {

using Dims = std::vector<std::size_t>;

grp::FiniteGroup named(const std::string& name) { return grp::build_group(grp::catalog_group(name)); }
grp::FiniteGroup cyclic_group(std::size_t n) { return grp::build_group(grp::GroupDescriptor::cyclic(n)); }

AlgebraPresentation dual_numbers() {
  return AlgebraPresentation::from_json(nlohmann::json::parse(
      R"({"field":{"kind":"Q"},"dim":2,"unit":["1","0"],"mul":[[[[0,"1"]],[[1,"1"]]],[[[1,"1"]],[]]],"name":"dual"})"));
}

// HH from the unnormalized Hochschild complex, built straight from the
// structure constants with tuples kept in a map.
Dims brute_hh(const AlgebraPresentation& a, std::size_t n) {
  using Tuple = std::vector<std::size_t>;
  std::vector<std::map<Tuple, std::size_t>> index(n + 1);
  std::vector<std::vector<Tuple>> tuples(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    Tuple t(q + 1, 0);
    while (true) {
      index[q][t] = tuples[q].size();
      tuples[q].push_back(t);
      std::size_t p = 0;
      while (p <= q && ++t[p] == a.dim) t[p++] = 0;
      if (p > q) break;
    }
  }
  std::vector<std::size_t> ranks{0};
  for (std::size_t q = 1; q <= n; ++q) {
    std::vector<la::Vec> cols;
    for (const auto& t : tuples[q]) {
      la::Vec col(tuples[q - 1].size(), Scalar(0));
      for (std::size_t i = 0; i <= q; ++i) {
        const std::size_t x = i < q ? t[i] : t[q], y = i < q ? t[i + 1] : t[0];
        for (const auto& [k, c] : a.mul[x][y]) {
          Tuple out;
          if (i < q) {
            out.assign(t.begin(), t.begin() + static_cast<long>(i));
            out.push_back(k);
            out.insert(out.end(), t.begin() + static_cast<long>(i) + 2, t.end());
          } else {
            out.push_back(k);
            out.insert(out.end(), t.begin() + 1, t.end() - 1);
          }
          col[index[q - 1].at(out)] += (i % 2 == 0 ? c : -c);
        }
      }
      cols.push_back(std::move(col));
    }
    ranks.push_back(la::rank(la::Matrix::from_columns(a.field, tuples[q - 1].size(), cols)));
  }
  ranks.push_back(0);
  Dims out;
  for (std::size_t q = 0; q < n; ++q) out.push_back(tuples[q].size() - ranks[q] - ranks[q + 1]);
  return out;
}

// H_*(BG; Q) from the unnormalized bar complex Q[G^n].
Dims brute_group_homology(const grp::FiniteGroup& g, std::size_t n) {
  const std::size_t m = g.order();
  auto count = [&](std::size_t q) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < q; ++i) c *= m;
    return c;
  };
  auto enc = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t p = t.size(); p-- > 0;) idx = idx * m + t[p];
    return idx;
  };
  std::vector<std::size_t> ranks{0};
  for (std::size_t q = 1; q <= n; ++q) {
    la::Matrix d(la::Field::rational(), count(q - 1), count(q));
    for (std::size_t col = 0; col < count(q); ++col) {
      std::vector<std::size_t> t(q);
      for (std::size_t p = 0, r = col; p < q; ++p, r /= m) t[p] = r % m;
      d.add(enc({t.begin() + 1, t.end()}), col, Scalar(1));
      for (std::size_t i = 1; i < q; ++i) {
        auto out = t;
        out[i - 1] = g.mul(t[i - 1], t[i]);
        out.erase(out.begin() + static_cast<long>(i));
        d.add(enc(out), col, Scalar(i % 2 == 0 ? 1 : -1));
      }
      d.add(enc({t.begin(), t.end() - 1}), col, Scalar(q % 2 == 0 ? 1 : -1));
    }
    ranks.push_back(la::rank(d));
  }
  ranks.push_back(0);
  Dims out;
  for (std::size_t q = 0; q < n; ++q) out.push_back(count(q) - ranks[q] - ranks[q + 1]);
  return out;
}

Dims zeros_after(std::size_t first, std::size_t len) {
  Dims d(len, 0);
  d[0] = first;
  return d;
}

}  // namespace

TEST_CASE("group algebras and algebra presentations") {
  const auto q = group_algebra(cyclic_group(1), la::Field::rational());
  CHECK(q.dim == 1);
  const auto c2 = group_algebra(cyclic_group(2), la::Field::rational());
  CHECK(c2.dim == 2);
  CHECK(c2.product({{1, Scalar(1)}}, {{1, Scalar(1)}}) == SparseVec{{0, Scalar(1)}});
  CHECK_NOTHROW(group_algebra(named("S3"), la::Field::rational()).validate());
  CHECK(group_algebra(named("S3"), la::Field::rational()).dim == 6);

  const auto z3 = field_algebra(la::cyclotomic_field(3));
  CHECK(z3.dim == 2);
  // x^2 = -1 - x
  CHECK(z3.mul[1][1] == SparseVec{{0, Scalar(-1)}, {1, Scalar(-1)}});

  const auto back = AlgebraPresentation::from_json(z3.to_json());
  CHECK(back.mul == z3.mul);
  CHECK(back.unit == z3.unit);
  const auto s3 = group_algebra(named("S3"), la::cyclotomic_field(3));
  CHECK(AlgebraPresentation::from_json(s3.to_json()).mul == s3.mul);

  CHECK(parse_algebra("Q").dim == 1);
  CHECK(parse_algebra("Q(zeta_4)").dim == 2);
  CHECK(parse_algebra("zeta:5").dim == 4);
  CHECK(parse_algebra("QG:S3").dim == 6);
  CHECK(parse_algebra(R"({"group":{"kind":"cyclic","n":3}})").dim == 3);
  CHECK_THROWS_AS(parse_algebra("zeta:x"), Error);
  CHECK_THROWS_AS(parse_algebra("{not json"), Error);
  CHECK_THROWS_AS(parse_algebra("/no/such/file.json"), Error);

  // e0 e0 = e1 with no unit fails validation
  const auto bad = nlohmann::json::parse(R"({"field":{"kind":"Q"},"dim":2,"unit":["1","0"],"mul":[[[[1,"1"]],[[1,"1"]]],[[[1,"1"]],[]]]})");
  try {
    AlgebraPresentation::from_json(bad);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
  }
  // (e1 e1) e2 = 0 but e1 (e1 e2) = e1
  const auto nonassoc = nlohmann::json::parse(
      R"({"field":{"kind":"Q"},"dim":3,"unit":["1","0","0"],
          "mul":[[[[0,"1"]],[[1,"1"]],[[2,"1"]]],[[[1,"1"]],[[2,"1"]],[[0,"1"]]],[[[2,"1"]],[[1,"1"]],[]]]})");
  CHECK_THROWS_AS(AlgebraPresentation::from_json(nonassoc), Error);
}

TEST_CASE("Hochschild homology examples") {
  CHECK(hochschild(parse_algebra("Q"), 4).dims == Dims{1, 0, 0, 0});
  CHECK(hochschild(parse_algebra("QG:C2"), 4).dims == Dims{2, 0, 0, 0});
  CHECK(hochschild(parse_algebra("zeta:3"), 3).dims == Dims{2, 0, 0});
  CHECK(brute_hh(parse_algebra("QG:C2"), 4) == Dims{2, 0, 0, 0});

  const auto s3 = hochschild(parse_algebra("QG:S3"), 3);
  CHECK(s3.dims == Dims{3, 0, 0});
  CHECK(s3.degree0_basis.size() == 3);
  CHECK(s3.certificate.certified_max == 2);
}

TEST_CASE("Hochschild homology agrees with the unnormalized complex") {
  for (const auto& a : {parse_algebra("Q"), parse_algebra("QG:C2"), parse_algebra("QG:C3"), parse_algebra("zeta:3"),
                        parse_algebra("zeta:4"), dual_numbers(), product_algebra(parse_algebra("Q"), dual_numbers())}) {
    CAPTURE(a.name);
    CHECK(hochschild(a, 4).dims == brute_hh(a, 4));
  }
  CHECK(hochschild(dual_numbers(), 5).dims == Dims{2, 1, 1, 1, 1});
}

TEST_CASE("window validity: a larger window agrees on the certified range") {
  for (const auto& a : {parse_algebra("QG:C3"), parse_algebra("zeta:4"), dual_numbers(), parse_algebra("QG:S3")}) {
    CAPTURE(a.name);
    const auto h3 = hochschild(a, 3).dims, h4 = hochschild(a, 4).dims;
    CHECK(Dims(h4.begin(), h4.begin() + 3) == h3);
    const auto c3 = cyclic_homology(a, 3).hc.dims, c4 = cyclic_homology(a, 4).hc.dims;
    CHECK(Dims(c4.begin(), c4.begin() + 2) == c3);
  }
}

TEST_CASE("cyclic homology examples") {
  const auto q = cyclic_homology(parse_algebra("Q"), 6);
  CHECK(q.hc.dims == Dims{1, 0, 1, 0, 1});
  CHECK(q.s_maps[2] == la::Matrix::from_rows({{1}}));
  CHECK(la::rank(q.s_maps[4]) == 1);
  CHECK(q.connes.exact);

  CHECK(cyclic_homology(parse_algebra("QG:C2"), 4).hc.dims == Dims{2, 0, 2});
  CHECK(cyclic_homology(parse_algebra("zeta:4"), 4).hc.dims == Dims{2, 0, 2});
  CHECK(cyclic_homology(parse_algebra("zeta:3"), 6).hc.dims == Dims{2, 0, 2, 0, 2});
}

TEST_CASE("cyclic homology agrees with the b/b' bicomplex") {
  for (const auto& a : {parse_algebra("Q"), parse_algebra("QG:C2"), parse_algebra("QG:C3"), parse_algebra("zeta:3"),
                        parse_algebra("zeta:4"), dual_numbers()}) {
    CAPTURE(a.name);
    const auto mixed = cyclic_homology(a, 6).hc.dims;
    const auto bicomplex = hc_bicomplex(a, 5);
    CHECK(Dims(bicomplex.begin(), bicomplex.begin() + 5) == mixed);
  }
  CHECK_THROWS_AS(hc_bicomplex(parse_algebra("QG:C4"), 2), Error);
}

TEST_CASE("Connes periodicity sequence is exact") {
  for (const auto& a : {parse_algebra("Q"), parse_algebra("QG:C2"), parse_algebra("QG:S3"), parse_algebra("zeta:3"),
                        parse_algebra("zeta:5"), dual_numbers(), product_algebra(dual_numbers(), parse_algebra("zeta:3"))}) {
    CAPTURE(a.name);
    const auto r = cyclic_homology(a, 5);
    CHECK(r.connes.exact);
    CHECK(r.connes.spots >= 9);
    for (const auto& f : r.connes.failures) MESSAGE(f);
  }
}

TEST_CASE("periodic and negative cyclic homology") {
  const auto q = hp_hn(parse_algebra("Q"), 3, 3);
  CHECK(q.hp.dims == Dims{1, 0, 1, 0});
  CHECK(q.hn.dims == Dims{1, 0, 0, 0});
  CHECK(q.hp.certificate.stabilized);
  CHECK(q.hp.certificate.cutoff == 3u);

  const auto c2 = hp_hn(parse_algebra("QG:C2"), 2, 3);
  CHECK(c2.hp.dims == Dims{2, 0, 2});
  CHECK(c2.hn.dims == Dims{2, 0, 0});
  const auto z3 = hp_hn(parse_algebra("zeta:3"), 2, 3);
  CHECK(z3.hp.dims == Dims{2, 0, 2});
  CHECK(z3.hn.dims == Dims{2, 0, 0});
  CHECK(z3.hn.certificate.dims_at_cutoff == z3.hn.certificate.dims_at_next_cutoff);
  CHECK(z3.hn.certificate.transition_ranks == z3.hn.dims);

  CHECK_THROWS_AS(hp_hn(parse_algebra("Q"), 2, 0), Error);
  // the truncations of the dual numbers keep a class in the last column
  try {
    hp_hn(dual_numbers(), 3, 3);
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_stabilized);
    CHECK(std::string(e.what()).find("(2,0,2,0)") != std::string::npos);
  }
}

TEST_CASE("additivity over Q x Q and Q[C2]") {
  const auto qq = product_algebra(parse_algebra("Q"), parse_algebra("Q"));
  const auto c2 = parse_algebra("QG:C2");
  // (1,0) -> (1+a)/2, (0,1) -> (1-a)/2 is an algebra isomorphism
  const Scalar half(la::Rational(1, 2));
  const std::vector<SparseVec> image{{{0, half}, {1, half}}, {{0, half}, {1, -half}}};
  auto map = [&](const SparseVec& v) {
    SparseVec out;
    std::vector<Scalar> dense(2, Scalar(0));
    for (const auto& [i, c] : v)
      for (const auto& [j, d] : image[i]) dense[j] += c * d;
    for (std::size_t j = 0; j < 2; ++j)
      if (!dense[j].is_zero()) out.emplace_back(j, dense[j]);
    return out;
  };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(map(qq.mul[i][j]) == c2.product(image[i], image[j]));
  CHECK(map(qq.unit) == c2.unit);

  CHECK(hochschild(qq, 4).dims == hochschild(c2, 4).dims);
  CHECK(cyclic_homology(qq, 5).hc.dims == cyclic_homology(c2, 5).hc.dims);
  const auto a = hp_hn(qq, 2, 2), b = hp_hn(c2, 2, 2);
  CHECK(a.hp.dims == b.hp.dims);
  CHECK(a.hn.dims == b.hn.dims);
  // sums of the factors
  const auto z3 = parse_algebra("zeta:3");
  const auto p = product_algebra(z3, dual_numbers());
  const auto hp = cyclic_homology(p, 5).hc.dims, h1 = cyclic_homology(z3, 5).hc.dims, h2 = cyclic_homology(dual_numbers(), 5).hc.dims;
  for (std::size_t n = 0; n < hp.size(); ++n) CHECK(hp[n] == h1[n] + h2[n]);
}

TEST_CASE("mixed complex identities on normalized windows") {
  std::vector<AlgebraPresentation> algebras{parse_algebra("Q"), parse_algebra("zeta:3"), parse_algebra("zeta:5"), dual_numbers(),
                                            product_algebra(dual_numbers(), parse_algebra("zeta:4"))};
  for (const auto& d : grp::default_catalog()) algebras.push_back(group_algebra(grp::build_group(d), la::Field::rational()));
  algebras.push_back(group_algebra(cyclic_group(3), la::cyclotomic_field(3)));
  for (const auto& a : algebras) {
    CAPTURE(a.name);
    const auto w = CyclicWindow::normalized(a, a.dim > 6 ? 3 : 4);
    const auto r = mixed_identities(w);
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("simplicial and cyclic identities on unnormalized windows") {
  std::vector<AlgebraPresentation> algebras{parse_algebra("Q"), parse_algebra("QG:C2"), parse_algebra("QG:C3"), parse_algebra("QG:C4"),
                                            parse_algebra("QG:V4"), parse_algebra("zeta:3"), parse_algebra("zeta:4"),
                                            parse_algebra("zeta:5"), dual_numbers(), product_algebra(dual_numbers(), dual_numbers())};
  for (const auto& a : algebras) {
    CAPTURE(a.name);
    const auto r = cyclic_identities(CyclicWindow::unnormalized(a, 3));
    CHECK(r.ok());
    for (const auto& f : r.failures) MESSAGE(f);
  }
  // larger algebras: one window at low degree
  CHECK(cyclic_identities(CyclicWindow::unnormalized(parse_algebra("QG:S3"), 2)).ok());
  CHECK(cyclic_identities(CyclicWindow::unnormalized(parse_algebra("QG:Q8"), 1)).ok());
}

TEST_CASE("group algebra differentials respect the conjugacy grading") {
  for (const auto& d : grp::default_catalog()) {
    const auto a = group_algebra(grp::build_group(d), la::Field::rational());
    CAPTURE(a.name);
    CHECK(grading_preserved(CyclicWindow::normalized(a, a.dim > 8 ? 2 : 3)).ok());
    CHECK(grading_preserved(CyclicWindow::unnormalized(a, a.dim > 6 ? 1 : 2)).ok());
  }
  CHECK_FALSE(grading_preserved(CyclicWindow::normalized(parse_algebra("zeta:3"), 2)).ok());
}

TEST_CASE("conjugacy split of HH") {
  const auto c1 = conjugacy_split_hh(cyclic_group(1), la::Field::rational(), 3);
  CHECK(c1.per_class.size() == 1);
  CHECK(c1.per_class[0].dims == Dims{1, 0, 0});
  const auto c2 = conjugacy_split_hh(cyclic_group(2), la::Field::rational(), 3);
  CHECK(c2.per_class.size() == 2);
  for (const auto& c : c2.per_class) CHECK(c.dims == Dims{1, 0, 0});
  const auto s3 = conjugacy_split_hh(named("S3"), la::Field::rational(), 3);
  CHECK(s3.per_class.size() == 3);
  for (const auto& c : s3.per_class) CHECK(c.dims == Dims{1, 0, 0});
  CHECK(s3.dims == Dims{3, 0, 0});
  CHECK(s3.dims == hochschild(parse_algebra("QG:S3"), 3).dims);
}

TEST_CASE("HH of catalog group algebras vanishes above degree 0") {
  for (const auto& d : grp::default_catalog()) {
    const auto g = grp::build_group(d);
    CAPTURE(g.name());
    const auto split = conjugacy_split_hh(g, la::Field::rational(), 3);
    CHECK(split.dims == zeros_after(g.classes().size(), 3));
    if (g.order() <= 6) CHECK(hochschild(group_algebra(g, la::Field::rational()), 3).dims == split.dims);
  }
}

TEST_CASE("group homology") {
  CHECK(group_homology(cyclic_group(2), la::Field::rational(), 4).dims == Dims{1, 0, 0, 0});
  CHECK(group_homology(named("S3"), la::Field::rational(), 3).dims == Dims{1, 0, 0});
  CHECK(group_homology(cyclic_group(1), la::Field::rational(), 4).dims == Dims{1, 0, 0, 0});
  for (const char* name : {"C2", "C3", "V4", "S3"}) {
    CAPTURE(name);
    const auto g = named(name);
    CHECK(group_homology(g, la::Field::rational(), 3).dims == brute_group_homology(g, 3));
  }
  CHECK_THROWS_AS(group_homology(named("A4"), la::Field::rational(), 8), Error);
}

TEST_CASE("decomposition of HH over conjugacy classes") {
  for (const auto& [name, classes] : std::vector<std::pair<std::string, std::size_t>>{{"C6", 6}, {"S3", 3}, {"D4", 5}}) {
    CAPTURE(name);
    const auto r = decomposition_check(named(name), la::Field::rational(), 3);
    CHECK(r.ok);
    CHECK(r.rows.size() == classes);
    for (const auto& row : r.rows) CHECK(row.hh == Dims{1, 0, 0});
  }
}

TEST_CASE("budget") {
  try {
    hochschild(parse_algebra("QG:A4"), 5, 100000);
    FAIL("expected a capability error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capability);
    CHECK(std::string(e.what()).find("degree 4") != std::string::npos);
  }
}

TEST_CASE("reports serialize") {
  const auto r = hp_hn(parse_algebra("Q"), 2, 1).hn.to_json();
  CHECK(r["theory"] == "HN");
  CHECK(r["dims"] == nlohmann::json::array({1, 0, 0}));
  CHECK(r["certificate"]["cutoff"] == 1);
  CHECK(r["certificate"]["stabilized"] == true);
  const auto s = conjugacy_split_hh(named("S3"), la::Field::rational(), 2).to_json();
  CHECK(s["per_class"].size() == 3);
}
