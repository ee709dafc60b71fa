#include "unital/unitals.hpp"

#include <algorithm>
#include <unordered_map>

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"
#include "unital/named_groups.hpp"
#include "unital/unitary.hpp"

namespace unital::unitals {

using design::Block;
using design::Point;
using gf::FieldElem;

namespace {

const gf::Field &hermitian_field(int q) {
  if (q < 2 || q > 5)
    throw ConstructionError("hermitian unital supported for q in 2..5, got " +
                            std::to_string(q));
  return gf::field_of_order(q * q);
}

} // namespace

std::vector<std::vector<FieldElem>> hermitian_points(int q) {
  return matgrp::isotropic_points(hermitian_field(q));
}

design::Block hermitian_b_infinity(int q) {
  Block b;
  for (int i = 0; i <= q; ++i)
    b.push_back(static_cast<Point>(i));
  return b;
}

design::Unital hermitian_unital(int q) {
  const auto &f = hermitian_field(q);
  const auto pts = matgrp::isotropic_points(f);
  const auto el = f.elements();
  // Lines [a0,a1,a2] normalized like points.
  std::vector<std::vector<FieldElem>> lines{{f.one(), f.zero(), f.zero()}};
  for (auto a0 : el)
    lines.push_back({a0, f.one(), f.zero()});
  for (auto a1 : el)
    for (auto a0 : el)
      lines.push_back({a0, a1, f.one()});

  std::vector<Block> blocks;
  for (const auto &l : lines) {
    Block b;
    for (Point i = 0; i < pts.size(); ++i) {
      FieldElem s = f.zero();
      for (int k = 0; k < 3; ++k)
        s = f.add(s, f.mul(l[k], pts[i][k]));
      if (s == f.zero())
        b.push_back(i);
    }
    if (b.size() == static_cast<std::size_t>(q) + 1)
      blocks.push_back(std::move(b));
    else if (b.size() != 1)
      throw InternalError("line meets the hermitian curve in " +
                          std::to_string(b.size()) + " points");
  }
  auto u = design::verify_unital(
      design::IncidenceStructure(pts.size(), std::move(blocks)));
  if (!u.find_block(hermitian_b_infinity(q)))
    throw InternalError("points 0..q do not form a block");
  return u;
}

Sl23Construction sl23_construction() {
  using matgrp::Matrix;
  const auto &f = gf::make_field(3, 1);
  const auto elems = closure(Matrix::identity(f, 2), matgrp::sl2_generators(f));
  if (elems.size() != 24)
    throw InternalError("SL(2,3) enumeration failed");
  const auto idx = index_elements(elems);
  const std::size_t n = elems.size();

  // Sylow 3-subgroups, ordered by their least nonidentity element.
  std::vector<std::array<std::size_t, 3>> sylow;
  std::vector<int> sylow_of(n, -1);
  for (std::size_t i = 1; i < n; ++i) {
    if (elems[i].order() != 3 || sylow_of[i] >= 0)
      continue;
    const std::size_t j = idx.at(elems[i] * elems[i]);
    sylow.push_back({0, i, j});
    sylow_of[i] = sylow_of[j] = static_cast<int>(sylow.size() - 1);
  }
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i < n && s.empty(); ++i)
    if (elems[i].order() == 4)
      for (std::size_t k = 0; k < 4; ++k)
        s.push_back(idx.at(elems[i].pow(static_cast<long long>(k))));
  if (sylow.size() != 4 || s.size() != 4)
    throw InternalError("unexpected SL(2,3) subgroup structure");

  auto right_coset = [&](const std::vector<std::size_t> &h, std::size_t g) {
    Block b;
    for (auto x : h)
      b.push_back(static_cast<Point>(idx.at(elems[x] * elems[g])));
    std::sort(b.begin(), b.end());
    return b;
  };

  auto left_coset = [&](const std::vector<std::size_t> &h, std::size_t g) {
    Block b;
    for (auto x : h)
      b.push_back(static_cast<Point>(idx.at(elems[g] * elems[x])));
    std::sort(b.begin(), b.end());
    return b;
  };

  std::vector<Block> fixed_blocks;
  Block b_inf{24, 25, 26, 27};
  fixed_blocks.push_back(b_inf);
  std::size_t coset_blocks = 0;
  for (std::size_t t = 0; t < sylow.size(); ++t) {
    std::vector<std::size_t> h(sylow[t].begin(), sylow[t].end());
    std::vector<Block> seen;
    for (std::size_t g = 0; g < n; ++g) {
      Block b = left_coset(h, g);
      if (std::find(seen.begin(), seen.end(), b) != seen.end())
        continue;
      seen.push_back(b);
      b.push_back(static_cast<Point>(24 + t));
      fixed_blocks.push_back(std::move(b));
      ++coset_blocks;
    }
  }
  std::size_t s_blocks = 0;
  {
    std::vector<Block> seen;
    for (std::size_t g = 0; g < n; ++g) {
      Block b = right_coset(s, g);
      if (std::find(seen.begin(), seen.end(), b) != seen.end())
        continue;
      seen.push_back(b);
      fixed_blocks.push_back(std::move(b));
      ++s_blocks;
    }
  }

  // Quotients x y^-1 already joined by a fixed block.
  std::vector<char> used(n, 0);
  used[0] = 1;
  for (const auto &t : sylow)
    for (auto x : t)
      used[x] = 1;
  for (auto x : s)
    used[x] = 1;

  std::vector<Matrix> inv;
  for (const auto &e : elems)
    inv.push_back(e.inverse());

  std::size_t scanned = 0;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        ++scanned;
        const std::array<std::size_t, 4> d{0, a, b, c};
        std::vector<char> hit = used;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i)
          for (std::size_t j = 0; j < 4 && ok; ++j) {
            if (i == j)
              continue;
            const std::size_t quo = idx.at(elems[d[i]] * inv[d[j]]);
            if (hit[quo])
              ok = false;
            hit[quo] = 1;
          }
        if (!ok)
          continue;
        std::vector<Block> blocks = fixed_blocks;
        std::vector<std::size_t> dv(d.begin(), d.end());
        for (std::size_t g = 0; g < n; ++g)
          blocks.push_back(right_coset(dv, g));
        auto u = design::verify_unital(
            design::IncidenceStructure(28, std::move(blocks)));
        return Sl23Construction{std::move(u),
                                elems,
                                sylow,
                                s,
                                d,
                                {1, coset_blocks, s_blocks, n},
                                b_inf,
                                scanned};
      }
  throw InternalError("no admissible set D in SL(2,3)");
}

design::Unital sl23_unital_search() { return sl23_construction().unital; }

} // namespace unital::unitals
