#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"
#include "unital/named_groups.hpp"
#include "unital/unitary.hpp"

using namespace unital;
using namespace unital::matgrp;

namespace {

// Leibniz expansion over all permutations; independent of elimination.
FieldElem leibniz_det(const Matrix &m) {
  const Field &f = m.field();
  const int n = m.dim();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  FieldElem total = f.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        inversions += perm[i] > perm[j];
    FieldElem term = f.one();
    for (int i = 0; i < n; ++i)
      term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(const Field &f, int n, std::mt19937 &rng) {
  Matrix m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = f.element(static_cast<int>(rng() % f.size()));
  return m;
}

Matrix diag3(const Field &f, FieldElem a, FieldElem b, FieldElem c) {
  Matrix m(f, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

std::optional<Matrix> find_conjugator(const std::vector<Matrix> &group,
                                      const Matrix &a, const Matrix &b) {
  for (const auto &c : group)
    if (a * c == c * b)
      return c;
  return std::nullopt;
}

} // namespace

TEST_CASE("determinant agrees with Leibniz expansion and is multiplicative") {
  std::mt19937 rng(7);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {5, 1}}) {
    const Field &f = gf::make_field(p, e);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 2 + trial % 3;
      const Matrix a = random_matrix(f, n, rng), b = random_matrix(f, n, rng);
      REQUIRE(a.det() == leibniz_det(a));
      REQUIRE((a * b).det() == f.mul(a.det(), b.det()));
      if (a.det() != f.zero())
        REQUIRE((a * a.inverse()).is_identity());
    }
  }
}

TEST_CASE("charpoly3") {
  const Field &f9 = gf::make_field(3, 2);
  const auto id = charpoly3(Matrix::identity(f9, 3));
  CHECK(id[2] == f9.from_int(-3));
  CHECK(id[1] == f9.from_int(3));
  CHECK(id[0] == f9.from_int(-1));
  std::mt19937 rng(3);
  int tested = 0;
  while (tested < 50) {
    const Matrix a = random_matrix(f9, 3, rng);
    if (a.det() == f9.zero())
      continue;
    CHECK(charpoly3(a)[0] == f9.neg(leibniz_det(a)));
    ++tested;
  }
}

TEST_CASE("Lemma shape: order dividing r+1 gives the trace charpoly") {
  for (int r : {2, 3}) {
    const auto &g = su3_group(r);
    const Field &f = g.field();
    int count = 0;
    for (const auto &a : g.elements()) {
      if (!a.pow(r + 1).is_identity())
        continue;
      ++count;
      const auto c = charpoly3(a);
      const FieldElem t = a.trace();
      REQUIRE(c[2] == f.neg(t));
      REQUIRE(c[1] == f.conj(t));
      REQUIRE(c[0] == f.neg(f.one()));
      REQUIRE(is_diagonalizable(a));
    }
    CHECK(count > 1);
  }
}

TEST_CASE("is_unitary") {
  for (int e : {1, 2, 3}) {
    const Field &f = gf::make_field(2, 2 * e);
    const auto form = HermitianForm::standard(f);
    CHECK(is_su3(Matrix::identity(f, 3), form));
    const Matrix j = involution_j(f);
    CHECK(is_su3(j, form));
    CHECK((j * j).is_identity());
  }
  const Field &f4 = gf::make_field(2, 2);
  const auto form = HermitianForm::standard(f4);
  Matrix bad = Matrix::identity(f4, 3);
  bad(0, 1) = f4.one(); // v = 0 but N(u) = 1
  CHECK_FALSE(is_unitary(bad, form));
  CHECK_THROWS_AS(root_element(f4, f4.one(), f4.zero()), DomainError);
  // J is not unitary in odd characteristic.
  CHECK_FALSE(is_unitary(involution_j(gf::make_field(3, 2)),
                         HermitianForm::standard(gf::make_field(3, 2))));
}

TEST_CASE("root elements") {
  const Field &f4 = gf::make_field(2, 2);
  CHECK(root_element(f4, f4.zero(), f4.zero()).is_identity());
  const Matrix inv = root_element(f4, f4.zero(), f4.one());
  CHECK((inv * inv).is_identity());
  for (int r : {2, 3, 4, 5}) {
    const Field &f = gf::field_of_order(r * r);
    const auto form = HermitianForm::standard(f);
    int valid = 0;
    for (auto u : f.elements())
      for (auto v : f.elements()) {
        if (!is_root_pair(f, u, v))
          continue;
        ++valid;
        const Matrix m = root_element(f, u, v);
        REQUIRE(is_su3(m, form));
        if (r % 2 == 0 && u != f.zero()) {
          REQUIRE(m.pow(4).is_identity());
          REQUIRE_FALSE(m.pow(2).is_identity());
        }
      }
    CHECK(valid == r * r * r); // the root group has order r^3
  }
}

TEST_CASE("congruence to the standard form") {
  const Field &f = gf::make_field(3, 2);
  const HermitianForm id_form(Matrix::identity(f, 3));
  const Matrix c = id_form.congruence_to_standard();
  CHECK(c.conj_transpose() * id_form.gram() * c ==
        HermitianForm::standard(f).gram());
  // A unitary element for the identity form becomes standard-unitary.
  const Matrix perm = Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(is_unitary(perm, id_form));
  CHECK(is_su3(to_standard(perm, id_form)));
  CHECK_THROWS_AS(HermitianForm(Matrix::from_rows(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})),
                  DomainError);
}

TEST_CASE("trace_conjugacy_test") {
  const auto &su2 = su3_group(2);
  const Field &f4 = su2.field();
  const FieldElem w = f4.root(), w2 = f4.mul(w, w);
  // Diagonal matrices are unitary for the identity form; move them over.
  const HermitianForm diag_form(Matrix::identity(f4, 3));
  const Matrix a = to_standard(diag3(f4, w, w2, f4.one()), diag_form);
  const Matrix b = to_standard(diag3(f4, w2, w, f4.one()), diag_form);
  CHECK(a.trace() == f4.zero());
  CHECK(trace_conjugacy_test(a, a, 2));
  CHECK(trace_conjugacy_test(a, b, 2));
  CHECK(find_conjugator(su2.elements(), a, b).has_value());

  const auto &su3 = su3_group(3);
  std::vector<Matrix> order4;
  for (const auto &x : su3.elements())
    if (x.order() == 4)
      order4.push_back(x);
  REQUIRE(!order4.empty());
  const Matrix first = order4.front();
  auto other = std::find_if(order4.begin(), order4.end(), [&](const Matrix &x) {
    return x.trace() != first.trace();
  });
  REQUIRE(other != order4.end());
  CHECK_FALSE(trace_conjugacy_test(first, *other, 3));
  CHECK_FALSE(find_conjugator(su3.elements(), first, *other).has_value());

  const Matrix order3 = root_element(su3.field(), su3.field().zero(),
                                     [&] {
                                       for (auto v : su3.field().elements())
                                         if (v != su3.field().zero() &&
                                             is_root_pair(su3.field(), su3.field().zero(), v))
                                           return v;
                                       return su3.field().zero();
                                     }());
  CHECK_THROWS_AS(trace_conjugacy_test(order3, order3, 3), DomainError);
}

TEST_CASE("jf_decompose") {
  const Field &f4 = gf::make_field(2, 2);
  const FieldElem w = f4.root(), w2 = f4.mul(w, w);
  const Matrix a = to_standard(diag3(f4, w, w2, f4.one()),
                               HermitianForm(Matrix::identity(f4, 3)));
  const auto d = jf_decompose(a, 2);
  CHECK(d.x * d.y == a * a);
  CHECK(d.x.pow(4).is_identity());
  CHECK(d.y.pow(4).is_identity());
  CHECK(is_su3(d.x));
  CHECK(is_su3(d.y));
  CHECK_THROWS_AS(jf_decompose(Matrix::scalar(f4, 3, w), 2), DomainError);
  CHECK_THROWS_AS(jf_decompose(a, 3), DomainError);
}

TEST_CASE("isotropic points") {
  for (int r : {2, 3, 4}) {
    const Field &f = gf::field_of_order(r * r);
    const auto pts = isotropic_points(f);
    CHECK(pts.size() == static_cast<std::size_t>(r * r * r + 1));
    for (int i = 0; i <= r; ++i)
      CHECK(pts[i][1] == f.zero());
    CHECK(pts[r + 1][1] != f.zero());
    CHECK(pts[0] == Point{f.one(), f.zero(), f.zero()});
    CHECK(pts[1] == Point{f.zero(), f.zero(), f.one()});
  }
}

TEST_CASE("named groups") {
  const auto sl23 = std::get<MatGroup>(construct_named_group("SL2", 3));
  CHECK(sl23.order() == 24);
  int involutions = 0;
  for (const auto &x : sl23.elements())
    involutions += x.order() == 2;
  CHECK(involutions == 1);
  CHECK(std::get<MatGroup>(construct_named_group("SL2", 8)).order() == 504);

  const auto su32 = std::get<MatGroup>(construct_named_group("SU3", 2));
  CHECK(su32.order() == 216);
  int central = 0;
  for (const auto &x : su32.elements())
    central += x.is_scalar();
  CHECK(central == 3);
  CHECK(su3_group(3).order() == 6048);

  CHECK(std::get<permgrp::PermGroup>(construct_named_group("PSU3", 2)).order() == 72);
  CHECK(std::get<MatGroup>(construct_named_group("Heisenberg", 5)).order() == 125);
  CHECK(std::get<MatGroup>(construct_named_group("Q8")).order() == 8);
  CHECK(std::get<MatGroup>(construct_named_group("SL2(3)-in-SL2(5)")).order() == 24);
  CHECK(std::get<MatGroup>(construct_named_group("BinaryOctahedral")).order() == 48);
  CHECK(std::get<MatGroup>(construct_named_group("SL2(5)-in-SL2(11)")).order() == 120);
  CHECK(std::get<permgrp::PermGroup>(construct_named_group("PGammaL2(8)")).order() == 1512);
  CHECK_THROWS_AS(construct_named_group("GL7"), ConstructionError);
  CHECK_THROWS_AS(construct_named_group("SL2", 6), ConstructionError);
}

TEST_CASE("Sz(8)") {
  const auto sz = suzuki8_group();
  CHECK(sz.order() == 29120);
  CHECK(sz.order() == 65ull * 64 * 7);
  // The lower unitriangular part is a Sylow 2-subgroup.
  std::vector<Matrix> unipotent;
  for (const auto &x : sz.elements()) {
    bool lower_uni = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        lower_uni = lower_uni && x(i, j) == (i == j ? x.field().one() : x.field().zero());
    if (lower_uni)
      unipotent.push_back(x);
  }
  CHECK(unipotent.size() == 64);
  std::uint64_t exponent = 1;
  for (const auto &x : unipotent)
    exponent = std::max(exponent, x.order());
  CHECK(exponent == 4);
  const auto perms = suzuki8_permutations();
  CHECK(perms.degree() == 65);
  CHECK(permgrp::is_two_transitive(perms));
}
