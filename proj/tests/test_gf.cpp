#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "unital/errors.hpp"
#include "unital/gf.hpp"

using namespace unital;
using gf::FieldElem;

namespace {

// Schoolbook product of coefficient vectors reduced by the modulus; shares
// nothing with the log/exp tables.
FieldElem naive_mul(const gf::Field &f, FieldElem a, FieldElem b) {
  const int p = f.characteristic(), e = f.degree();
  const auto ca = f.coeffs(a), cb = f.coeffs(b);
  std::vector<int> prod(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  const auto &m = f.modulus();
  for (int i = 2 * e - 1; i >= e; --i) {
    const int c = prod[i];
    for (int j = 0; j <= e; ++j)
      prod[i - e + j] = ((prod[i - e + j] - c * m[j]) % p + p) % p;
  }
  prod.resize(e);
  return f.from_coeffs(prod);
}

const std::vector<std::pair<int, int>> small_fields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2},
    {2, 4}, {5, 2}, {7, 2}, {2, 6}, {3, 4}};

} // namespace

TEST_CASE("make_field examples") {
  const auto &gf2 = gf::make_field(2, 1);
  CHECK(gf2.size() == 2);
  CHECK(gf2.modulus() == std::vector<int>{0, 1});

  const auto &gf8 = gf::make_field(2, 3);
  CHECK(gf8.modulus() == std::vector<int>{1, 1, 0, 1});

  const auto &gf9 = gf::make_field(3, 2);
  CHECK(gf9.size() == 9);
  // A generator of the multiplicative group has order 8.
  bool found = false;
  for (auto x : gf9.elements()) {
    if (x == gf9.zero())
      continue;
    FieldElem y = x;
    int k = 1;
    while (y != gf9.one()) {
      y = gf9.mul(y, x);
      ++k;
    }
    if (k == 8)
      found = true;
  }
  CHECK(found);
  CHECK(gf9.multiplicative_order(gf9.primitive()) == 8);
}

TEST_CASE("make_field errors") {
  CHECK_THROWS_AS(gf::make_field(4, 1), ConstructionError);
  CHECK_THROWS_AS(gf::make_field(6, 2), ConstructionError);
  CHECK_THROWS_AS(gf::make_field(2, 7), ConstructionError);
  CHECK_THROWS_AS(gf::make_field(17, 3), ConstructionError);
  CHECK_THROWS_AS(gf::Field(2, 2, {1, 0, 1}), ConstructionError); // (x+1)^2
  CHECK(&gf::make_field(3, 2) == &gf::make_field(3, 2));
}

TEST_CASE("built-in moduli are irreducible and primitive") {
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int e = 1; e <= 6; ++e) {
      const auto m = gf::builtin_modulus(p, e);
      if (m.empty() || e == 1)
        continue;
      CAPTURE(p);
      CAPTURE(e);
      CHECK(gf::is_irreducible(p, m));
      const auto &f = gf::make_field(p, e);
      CHECK(f.multiplicative_order(f.root()) ==
            static_cast<std::uint64_t>(f.size() - 1));
    }
}

TEST_CASE("field_arith examples") {
  const auto &gf4 = gf::make_field(2, 2);
  const FieldElem w = gf4.root(), w2 = gf4.mul(w, w);
  CHECK(w2 != w);
  CHECK(gf4.mul(w, w2) == gf4.one());

  const auto &gf8 = gf::make_field(2, 3);
  const FieldElem u = gf8.root();
  CHECK(gf8.pow(u, 3) == gf8.add(u, gf8.one()));

  const auto &gf9 = gf::make_field(3, 2);
  CHECK(gf9.pow(gf9.from_int(-1), 2) == gf9.one());
  CHECK_THROWS_AS(gf9.inv(gf9.zero()), DomainError);
}

TEST_CASE("table arithmetic agrees with schoolbook arithmetic") {
  for (auto [p, e] : small_fields) {
    const auto &f = gf::make_field(p, e);
    CAPTURE(f.size());
    for (auto a : f.elements())
      for (auto b : f.elements())
        REQUIRE(f.mul(a, b) == naive_mul(f, a, b));
  }
}

TEST_CASE("field axioms hold exhaustively up to 81 elements") {
  for (auto [p, e] : small_fields) {
    const auto &f = gf::make_field(p, e);
    CAPTURE(f.size());
    const auto el = f.elements();
    for (auto a : el) {
      REQUIRE(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero())
        REQUIRE(f.mul(a, f.inv(a)) == f.one());
      for (auto b : el) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        // Frobenius is additive and multiplicative.
        REQUIRE(f.frobenius(f.add(a, b)) ==
                f.add(f.frobenius(a), f.frobenius(b)));
        REQUIRE(f.frobenius(f.mul(a, b)) ==
                f.mul(f.frobenius(a), f.frobenius(b)));
        for (auto c : el) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("conj is an involution fixing exactly the subfield") {
  for (auto [p, e] :
       std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 4}, {5, 2},
                                        {2, 6}, {3, 4}, {7, 2}, {11, 2}}) {
    const auto &f = gf::make_field(p, e);
    const int r = f.subfield_size();
    int fixed = 0;
    for (auto x : f.elements()) {
      REQUIRE(f.conj(f.conj(x)) == x);
      REQUIRE(f.conj(x) == f.pow(x, r));
      fixed += f.in_subfield(x);
    }
    CHECK(fixed == r);
  }
  const auto &gf4 = gf::make_field(2, 2);
  CHECK(gf4.conj(gf4.root()) == gf4.mul(gf4.root(), gf4.root()));
  CHECK_THROWS_AS(gf::make_field(2, 3).conj(gf::FieldElem{1}), DomainError);
  CHECK_THROWS_AS(gf::make_field(5, 1).norm(gf::FieldElem{1}), DomainError);
}

TEST_CASE("norm: values, multiplicativity and fibre sizes") {
  const auto &gf4 = gf::make_field(2, 2);
  CHECK(gf4.norm(gf4.zero()) == gf4.zero());
  CHECK(gf4.norm(gf4.one()) == gf4.one());
  CHECK(gf4.norm(gf4.root()) == gf4.one());

  const auto &gf64 = gf::make_field(2, 6);
  std::map<int, int> fibre;
  for (auto x : gf64.elements()) {
    const auto n = gf64.norm(x);
    REQUIRE(gf64.in_subfield(n));
    ++fibre[n.value];
  }
  CHECK(fibre.size() == 8);
  for (auto [v, count] : fibre)
    CHECK(count == (v == 0 ? 1 : 9));

  for (auto [p, e] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {2, 4}, {5, 2}, {2, 6}, {3, 4}, {7, 2}}) {
    const auto &f = gf::make_field(p, e);
    for (auto a : f.elements())
      for (auto b : f.elements())
        REQUIRE(f.norm(f.mul(a, b)) == f.mul(f.norm(a), f.norm(b)));
  }
  // Larger field: sampled pairs.
  const auto &gf121 = gf::make_field(11, 2);
  int checked = 0;
  for (int i = 0; i < 121; ++i)
    for (int j = i; j < 121; j += 7) {
      auto a = gf121.element(i), b = gf121.element(j);
      REQUIRE(gf121.norm(gf121.mul(a, b)) ==
              gf121.mul(gf121.norm(a), gf121.norm(b)));
      ++checked;
    }
  CHECK(checked >= 1000);
}

TEST_CASE("solve_norm") {
  const auto &gf4 = gf::make_field(2, 2);
  CHECK(gf4.solve_norm(gf4.zero()) == gf4.zero());
  CHECK(gf4.solve_norm(gf4.one()) == gf4.one());

  const auto &gf16 = gf::make_field(2, 4);
  for (auto t : gf16.elements()) {
    if (!gf16.in_subfield(t))
      continue;
    const auto u = gf16.solve_norm(t);
    CHECK(gf16.pow(u, 5) == t);
    // First in enumeration order.
    for (int i = 0; i < u.value; ++i)
      CHECK(gf16.norm(gf16.element(i)) != t);
  }
  // A non-subfield target is rejected.
  FieldElem outside{};
  for (auto x : gf16.elements())
    if (!gf16.in_subfield(x)) {
      outside = x;
      break;
    }
  CHECK_THROWS_AS(gf16.solve_norm(outside), DomainError);
}

TEST_CASE("serialization is base-p evaluation") {
  const auto &gf9 = gf::make_field(3, 2);
  const int c[] = {2, 1};
  CHECK(gf9.from_coeffs(c).value == 2 + 1 * 3);
  CHECK(gf9.coeffs(gf9.element(7)) == std::vector<int>{1, 2});
  CHECK(gf9.to_string(gf9.element(7)) == "2x+1");
  CHECK_THROWS_AS(gf9.element(9), DomainError);
  CHECK(gf::prime_power(81) == std::pair{3, 4});
  CHECK(gf::prime_power(12) == std::pair{0, 0});
}
