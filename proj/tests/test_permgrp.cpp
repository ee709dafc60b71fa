#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "unital/errors.hpp"
#include "unital/gf.hpp"
#include "unital/group_algo.hpp"
#include "unital/matrix.hpp"
#include "unital/permgrp.hpp"

using namespace unital;
using namespace unital::permgrp;

namespace {

Perm cycle(std::size_t n, std::vector<std::uint32_t> c) {
  std::vector<std::uint32_t> im(n);
  for (std::uint32_t i = 0; i < n; ++i)
    im[i] = i;
  for (std::size_t i = 0; i < c.size(); ++i)
    im[c[i]] = c[(i + 1) % c.size()];
  return Perm(im);
}

PermGroup symmetric(std::size_t n) {
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i)
    all[i] = i;
  return PermGroup(n, {cycle(n, {0, 1}), cycle(n, all)});
}

// Right regular representation of a matrix group given by its elements.
PermGroup regular_rep(const std::vector<matgrp::Matrix> &elems,
                      const std::vector<matgrp::Matrix> &gens) {
  const auto idx = index_elements(elems);
  std::vector<Perm> pg;
  for (const auto &g : gens) {
    std::vector<std::uint32_t> im(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      im[i] = static_cast<std::uint32_t>(idx.at(elems[i] * g));
    pg.emplace_back(im);
  }
  return PermGroup(elems.size(), pg);
}

std::vector<matgrp::Matrix> sl23_gens() {
  const auto &f = gf::make_field(3, 1);
  return {matgrp::Matrix::from_rows(f, {{1, 1}, {0, 1}}),
          matgrp::Matrix::from_rows(f, {{1, 0}, {1, 1}})};
}

// PGL(2,q) action on the projective line with points (1,0),(x,1) for
// every generator matrix; the Frobenius map is optional.
PermGroup projective_line_group(int p, int e, bool with_frobenius) {
  const auto &f = gf::make_field(p, e);
  std::vector<std::vector<gf::FieldElem>> pts{{f.one(), f.zero()}};
  for (auto x : f.elements())
    pts.push_back({x, f.one()});
  auto index_of = [&](std::vector<gf::FieldElem> v) {
    v = matgrp::normalize_projective(f, v);
    return static_cast<std::uint32_t>(
        std::find(pts.begin(), pts.end(), v) - pts.begin());
  };
  std::vector<matgrp::Matrix> mats{
      matgrp::Matrix::from_rows(f, {{1, 0}, {1, 1}}),
      matgrp::Matrix::from_rows(f, {{0, 1}, {static_cast<int>(f.neg(f.one()).value), 0}})};
  auto d = matgrp::Matrix::identity(f, 2);
  d(0, 0) = f.primitive();
  d(1, 1) = f.inv(f.primitive());
  mats.push_back(d);
  for (int i = 1; i < e; ++i) {
    auto t = matgrp::Matrix::identity(f, 2);
    t(1, 0) = f.pow(f.root(), i);
    mats.push_back(t);
  }
  std::vector<Perm> gens;
  for (const auto &m : mats) {
    std::vector<std::uint32_t> im;
    for (const auto &pt : pts)
      im.push_back(index_of(matgrp::row_times(pt, m)));
    gens.emplace_back(im);
  }
  if (with_frobenius) {
    std::vector<std::uint32_t> im;
    for (const auto &pt : pts)
      im.push_back(index_of({f.frobenius(pt[0]), f.frobenius(pt[1])}));
    gens.emplace_back(im);
  }
  return PermGroup(pts.size(), gens);
}

} // namespace

TEST_CASE("Perm basics") {
  const Perm a = cycle(4, {0, 1, 2});
  const Perm b = cycle(4, {2, 3});
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  CHECK(a.fixed_point_count() == 1);
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0, 1}), DomainError);
  CHECK_THROWS_AS(a * Perm(5), DomainError);
  CHECK(a.to_string() == "1 2 0 3");
}

TEST_CASE("group_order examples") {
  CHECK(PermGroup(5, {}).order() == 1);
  const auto gens = sl23_gens();
  const auto elems = closure(matgrp::Matrix::identity(gens[0].field(), 2), gens);
  CHECK(elems.size() == 24);
  CHECK(regular_rep(elems, gens).order() == 24);
  CHECK(projective_line_group(2, 3, true).order() == 1512);
  CHECK(projective_line_group(2, 3, false).order() == 504);
  CHECK(symmetric(7).order() == 5040);
}

TEST_CASE("BSGS order and membership agree with naive closure") {
  std::mt19937 rng(12345);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<Perm> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      std::vector<std::uint32_t> im(n);
      for (std::uint32_t j = 0; j < n; ++j)
        im[j] = j;
      // Sparse random permutations keep many groups proper.
      for (int s = 0; s < 1 + trial % 2; ++s)
        std::swap(im[rng() % n], im[rng() % n]);
      if (trial % 4 == 0)
        std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(im);
    }
    const PermGroup g(n, gens);
    const auto naive = closure(Perm(n), gens, 50000);
    REQUIRE(g.order() == naive.size());
    for (const auto &x : naive)
      REQUIRE(g.contains(x));
    auto listed = g.elements();
    std::sort(listed.begin(), listed.end());
    CHECK(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
    CHECK(listed.size() == naive.size());
    ++tested;
  }
  CHECK(tested == 60);
  // Non-members are rejected.
  const PermGroup a4(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(cycle(4, {0, 1})));
}

TEST_CASE("orbits") {
  const PermGroup trivial(5, {});
  CHECK(orbits(trivial).size() == 5);
  const PermGroup g(6, {cycle(6, {0, 2}), cycle(6, {3, 4, 5})});
  const auto o = orbits(g);
  REQUIRE(o.size() == 3);
  CHECK(o[0] == std::vector<std::uint32_t>{0, 2});
  CHECK(o[1] == std::vector<std::uint32_t>{1});
  CHECK(o[2] == std::vector<std::uint32_t>{3, 4, 5});
  std::size_t total = 0;
  for (const auto &orb : o) {
    CHECK(g.order() % orb.size() == 0);
    total += orb.size();
  }
  CHECK(total == 6);
}

TEST_CASE("is_semiregular") {
  CHECK(is_semiregular(PermGroup(4, {})));
  const auto gens = sl23_gens();
  const auto elems = closure(matgrp::Matrix::identity(gens[0].field(), 2), gens);
  CHECK(is_semiregular(regular_rep(elems, gens)));
  CHECK_FALSE(is_semiregular(symmetric(4)));
}

TEST_CASE("stabilizers and restriction") {
  const auto s5 = symmetric(5);
  CHECK(s5.pointwise_stabilizer({0}).order() == 24);
  CHECK(s5.pointwise_stabilizer({0, 3}).order() == 6);
  CHECK(s5.pointwise_stabilizer({4, 3, 2, 1}).order() == 1);
  CHECK(is_two_transitive(s5));
  const PermGroup g(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4})});
  const auto r = restrict_group(g, {0, 1, 2});
  CHECK(r.order() == 3);
  CHECK_THROWS_AS(restrict_group(g, {0, 3}), DomainError);
}

TEST_CASE("structure_report examples") {
  const auto gens = sl23_gens();
  const auto elems = closure(matgrp::Matrix::identity(gens[0].field(), 2), gens);
  const auto sl23 = regular_rep(elems, gens);
  const auto rep = structure_report(sl23);
  CHECK(rep.center_order == 2u);
  CHECK(rep.derived_order == 8);
  CHECK_FALSE(rep.perfect);
  CHECK(rep.class_count == 7u);

  const auto a5 = projective_line_group(2, 2, false); // SL(2,4) on 5 points
  CHECK(a5.order() == 60);
  const auto r5 = structure_report(a5);
  CHECK(r5.perfect);
  CHECK(r5.center_order == 1u);
  CHECK(r5.class_count == 5u);
  CHECK(r5.order_histogram->at(5) == 24);

  const auto big = structure_report(symmetric(9), 1000);
  CHECK(big.order == 362880);
  CHECK_FALSE(big.center_order.has_value());
  CHECK(big.omitted.size() == 3);
  CHECK(big.derived_order == 181440);
}

TEST_CASE("conjugacy classes of S5") {
  const auto cls = conjugacy_classes(symmetric(5));
  CHECK(cls.size() == 7);
  std::size_t total = 0;
  for (const auto &c : cls)
    total += c.size;
  CHECK(total == 120);
  CHECK(cls[0].representative.is_identity());
}

TEST_CASE("product_search") {
  const auto s4 = symmetric(4);
  const auto elems = s4.elements();
  std::vector<Perm> invols;
  for (const auto &x : elems)
    if (x.order() == 2)
      invols.push_back(x);
  const auto id = Perm(4);
  const auto hit = product_search(id, invols, invols);
  REQUIRE(hit);
  CHECK(hit->first == hit->second);
  // A 4-cycle in S4 is a product of two involutions...
  CHECK(product_search(cycle(4, {0, 1, 2, 3}), invols, invols));
  // ...but not of two 3-cycles (parity).
  std::vector<Perm> threes;
  for (const auto &x : elems)
    if (x.order() == 3)
      threes.push_back(x);
  CHECK_FALSE(product_search(cycle(4, {0, 1, 2, 3}), threes, threes));
}

TEST_CASE("recognize_2transitive") {
  const PermGroup a4(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  auto r = recognize_2transitive(a4, 4);
  CHECK(r.family == Family::sharply_two_transitive);

  const auto a5 = projective_line_group(2, 2, false);
  r = recognize_2transitive(a5, 5);
  CHECK(r.family == Family::psl2);
  CHECK(r.parameter == 4);

  const auto psl28 = projective_line_group(2, 3, false);
  r = recognize_2transitive(psl28, 9);
  CHECK(r.family == Family::psl2);
  CHECK(r.parameter == 8);

  // PGammaL(2,8) on 9 points matches no Moufang family at degree 9.
  r = recognize_2transitive(projective_line_group(2, 3, true), 9);
  CHECK(r.family == Family::unknown);

  const PermGroup not2t(6, {cycle(6, {0, 1, 2, 3, 4, 5})});
  CHECK_THROWS_AS(recognize_2transitive(not2t, 6), DomainError);

  for (auto f : {Family::psl2, Family::psu3, Family::suzuki, Family::ree}) {
    CHECK(family_order(f, 8) > 0);
    CHECK(family_degree(f, 8) > 0);
  }
  CHECK(family_order(Family::suzuki, 8) == 29120);
  CHECK(family_order(Family::ree, 3) == 1512);
  CHECK(family_order(Family::psu3, 3) == 6048);
}
