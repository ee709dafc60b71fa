#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "unital/group_algo.hpp"
#include "unital/iso_search.hpp"
#include "unital/unitals.hpp"
#include "unital/unitary.hpp"

using namespace unital;
using namespace unital::design;

TEST_CASE("hermitian unital sizes") {
  const std::vector<std::pair<std::size_t, std::size_t>> expect{
      {9, 12}, {28, 63}, {65, 208}, {126, 525}};
  for (int q = 2; q <= 5; ++q) {
    const auto start = std::chrono::steady_clock::now();
    const auto u = unitals::hermitian_unital(q);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    CHECK(u.q() == q);
    CHECK(u.point_count() == expect[q - 2].first);
    CHECK(u.block_count() == expect[q - 2].second);
    // Block count from the design axioms: b = v r / k with r = q^2.
    CHECK(u.block_count() ==
          u.point_count() * static_cast<std::size_t>(q * q) / (q + 1));
    CHECK(u.find_block(unitals::hermitian_b_infinity(q)).has_value());
    if (q <= 4)
      CHECK(secs < 1.0);
  }
  CHECK_THROWS_AS(unitals::hermitian_unital(7), ConstructionError);
}

TEST_CASE("hermitian points are isotropic and normalized") {
  for (int q : {2, 3, 4}) {
    const auto pts = unitals::hermitian_points(q);
    const auto &f = gf::field_of_order(q * q);
    const auto form = matgrp::HermitianForm::standard(f);
    for (const auto &p : pts) {
      REQUIRE(form.evaluate(p, p) == f.zero());
      REQUIRE(matgrp::normalize_projective(f, p) == p);
    }
    // Points 1..q are (x0, 0, 1) with trace-zero x0.
    for (int i = 1; i <= q; ++i) {
      CHECK(pts[i][1] == f.zero());
      CHECK(pts[i][2] == f.one());
      CHECK(f.rel_trace(pts[i][0]) == f.zero());
    }
  }
}

TEST_CASE("SL(2,3) reconstruction") {
  const auto c = unitals::sl23_construction();
  CHECK(c.unital.q() == 3);
  CHECK(c.unital.block_count() == 63);
  CHECK(c.census == std::array<std::size_t, 4>{1, 32, 6, 24});
  CHECK(c.d[0] == 0);
  CHECK(c.elements[0].is_identity());
  CHECK(c.unital.block(c.unital.block_through(24, 25)) == Block{24, 25, 26, 27});

  // Nine blocks through the identity: four to infinity, S and four from D.
  const auto &through = c.unital.blocks_through(0);
  CHECK(through.size() == 9);
  int to_infinity = 0;
  for (auto bi : through)
    to_infinity += c.unital.block(bi).back() >= 24;
  CHECK(to_infinity == 4);

  // Right translations are automorphisms; they permute the points at
  // infinity as conjugation permutes the Sylow 3-subgroups.
  const auto idx = index_elements(c.elements);
  for (const auto &g : c.elements) {
    std::vector<std::uint32_t> im(28);
    for (std::size_t i = 0; i < 24; ++i)
      im[i] = static_cast<std::uint32_t>(idx.at(c.elements[i] * g));
    for (std::uint32_t t = 0; t < 4; ++t) {
      const auto conj = idx.at(g.inverse() * c.elements[c.sylow3[t][1]] * g);
      for (std::uint32_t u = 0; u < 4; ++u)
        for (auto x : c.sylow3[u])
          if (x == conj)
            im[24 + t] = 24 + u;
    }
    REQUIRE(is_automorphism(c.unital, permgrp::Perm(im)));
  }

  const auto h3 = unitals::hermitian_unital(3);
  const auto iso = design_isomorphism(c.unital, h3);
  REQUIRE(iso);
  for (const auto &b : c.unital.blocks()) {
    Block img;
    for (auto x : b)
      img.push_back((*iso)[x]);
    std::sort(img.begin(), img.end());
    REQUIRE(h3.find_block(img).has_value());
  }
}
