#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "unital/iso_search.hpp"
#include "unital/translations.hpp"
#include "unital/unitals.hpp"

using namespace unital;
using namespace unital::translations;

namespace {

// Brute-force oracle: every automorphism in the full group that fixes each
// block through z.
std::set<Perm> translations_by_filter(const Unital &u, Point z) {
  std::set<Perm> out;
  for (const auto &g : design::automorphisms(u)) {
    bool ok = true;
    for (auto b : u.blocks_through(z)) {
      design::Block img;
      for (auto x : u.block(b))
        img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      ok = ok && img == u.block(b);
    }
    if (ok)
      out.insert(g);
  }
  return out;
}

} // namespace

TEST_CASE("translation group orders") {
  for (int q : {2, 3, 4}) {
    const auto u = unitals::hermitian_unital(q);
    for (Point z : {Point(0), Point(1), Point(u.point_count() - 1)}) {
      const auto t = translation_group(u, z);
      CHECK(t.complete);
      CHECK(t.order() == static_cast<std::size_t>(q));
      CHECK(t.elements[0].is_identity());
      for (const auto &g : t.elements) {
        REQUIRE(design::is_automorphism(u, g));
        CHECK(g[z] == z);
      }
    }
  }
}

TEST_CASE("translation group matches the filtered automorphism group") {
  for (int q : {2, 3}) {
    const auto u = unitals::hermitian_unital(q);
    const auto t = translation_group(u, 2);
    CHECK(std::set<Perm>(t.elements.begin(), t.elements.end()) ==
          translations_by_filter(u, 2));
  }
}

TEST_CASE("generated group on the block through two centers") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expect{
      {6, 1}, {24, 2}, {60, 1}};
  for (int q : {2, 3, 4}) {
    const auto u = unitals::hermitian_unital(q);
    const auto g = generated_group(u, 0, 1);
    const auto b = unitals::hermitian_b_infinity(q);
    const auto gd =
        permgrp::restrict_group(g, std::vector<std::uint32_t>(b.begin(), b.end()));
    CHECK(g.order() % gd.order() == 0);
    const auto z = permgrp::center_elements(g).size();
    if (q > 2) {
      CHECK(g.order() == expect[q - 2].first);
      CHECK(z == expect[q - 2].second);
    }
  }
}

TEST_CASE("conjugates of translation groups") {
  for (int q : {2, 3, 4}) {
    const auto u = unitals::hermitian_unital(q);
    const auto t0 = translation_group(u, 0);
    const auto g = generated_group(u, 0, 1);
    std::set<Point> reached;
    for (const auto &h : g.elements()) {
      const Point z = h[0];
      reached.insert(z);
      const auto tz = translation_group(u, z);
      std::set<Perm> conj;
      for (const auto &x : t0.elements)
        conj.insert(h.inverse() * x * h);
      REQUIRE(conj == std::set<Perm>(tz.elements.begin(), tz.elements.end()));
    }
    // G is transitive on the block through the two centers.
    CHECK(reached.size() == static_cast<std::size_t>(q + 1));
  }
}

TEST_CASE("moufang check on the block at infinity") {
  for (int q : {3, 4}) {
    const auto u = unitals::hermitian_unital(q);
    const auto bi = *u.find_block(unitals::hermitian_b_infinity(q));
    std::vector<TranslationGroup> groups;
    for (auto p : u.block(bi))
      groups.push_back(translation_group(u, p));
    CHECK(moufang_check(u, bi, groups));
    auto broken = groups;
    broken[1].elements.resize(1);
    CHECK_FALSE(moufang_check(u, bi, broken));
    CHECK_THROWS_AS(generated_group(u, groups[0], broken[1]), DomainError);
  }
}

TEST_CASE("classification of hermitian unitals") {
  const auto r2 = classify(unitals::hermitian_unital(2), 0, 1);
  CHECK(r2.family == "hermitian-small");
  CHECK(r2.degree_b_infinity == 3);

  const auto r3 = classify(unitals::hermitian_unital(3), 0, 1);
  CHECK(r3.family == "SL2");
  CHECK(r3.order_g == 24);
  CHECK(r3.order_center == 2);
  CHECK(r3.kernel_is_center);
  CHECK(r3.semiregular);

  const auto r4 = classify(unitals::hermitian_unital(4), 0, 1);
  CHECK(r4.family == "SL2");
  CHECK(r4.order_g == 60);
  CHECK(r4.order_center == 1);
  CHECK(r4.kernel_is_center);
  CHECK(r4.little_projective.family == permgrp::Family::psl2);

  const auto j = to_json(r3);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"family", "q", "order_G", "order_center",
                                         "degree_B_infinity", "semiregular",
                                         "kernel_semiregular", "evidence"});
}

TEST_CASE("classification of the SL(2,3) reconstruction") {
  const auto c = unitals::sl23_construction();
  const auto r = classify(c.unital, 24, 25);
  CHECK(r.family == "SL2");
  CHECK(r.order_g == 24);
  CHECK(r.kernel_is_center);
}

TEST_CASE("classify rejects bad centers") {
  const auto u = unitals::hermitian_unital(3);
  CHECK_THROWS_AS(classify(u, 4, 4), DomainError);
}
