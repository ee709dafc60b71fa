#include "unital/translations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "unital/iso_search.hpp"

namespace unital::translations {

TranslationGroup translation_group(const Unital &u, Point z,
                                   std::uint64_t node_limit) {
  if (z >= u.point_count())
    throw DomainError("center out of range");
  design::MapConstraints c;
  c.points.push_back({z, z});
  for (auto b : u.blocks_through(z))
    c.blocks.push_back({b, b});
  design::SearchLimits lim;
  lim.max_solutions = 0;
  lim.node_limit = node_limit;
  auto r = design::find_isomorphisms(u, u, c, lim);
  TranslationGroup t;
  t.center = z;
  t.complete = r.complete;
  t.elements = std::move(r.maps);
  auto id = std::find_if(t.elements.begin(), t.elements.end(),
                         [](const Perm &p) { return p.is_identity(); });
  if (id != t.elements.end())
    std::rotate(t.elements.begin(), id, id + 1);
  return t;
}

PermGroup generated_group(const Unital &u, const TranslationGroup &t1,
                          const TranslationGroup &t2) {
  if (t1.center == t2.center)
    throw DomainError("translation centers must differ");
  if (t1.order() <= 1 || t2.order() <= 1)
    throw DomainError("translation group at point " +
                      std::to_string(t1.order() <= 1 ? t1.center : t2.center) +
                      " is trivial");
  std::vector<Perm> gens;
  for (const auto *t : {&t1, &t2})
    for (const auto &p : t->elements)
      if (!p.is_identity())
        gens.push_back(p);
  const auto &binf = u.block(u.block_through(t1.center, t2.center));
  return PermGroup(u.point_count(), gens,
                   std::vector<std::uint32_t>(binf.begin(), binf.end()));
}

PermGroup generated_group(const Unital &u, Point z1, Point z2) {
  return generated_group(u, translation_group(u, z1), translation_group(u, z2));
}

bool moufang_check(const Unital &u, std::size_t block,
                   const std::vector<TranslationGroup> &groups) {
  const auto &b = u.block(block);
  if (groups.size() != b.size())
    return false;
  const std::vector<std::uint32_t> pts(b.begin(), b.end());
  const std::size_t m = pts.size();
  std::vector<std::set<Perm>> restricted(m);
  std::vector<Perm> little;
  for (std::size_t i = 0; i < m; ++i) {
    if (groups[i].center != b[i])
      return false;
    for (const auto &p : groups[i].elements) {
      Perm r = [&] {
        try {
          return permgrp::restrict_perm(p, pts);
        } catch (const DomainError &) {
          return Perm(0);
        }
      }();
      if (r.degree() != m || r[static_cast<std::uint32_t>(i)] != i)
        return false;
      restricted[i].insert(r);
      if (!r.is_identity())
        little.push_back(r);
    }
    // Regular on the other m-1 points.
    if (restricted[i].size() != m - 1)
      return false;
    const std::uint32_t other = i == 0 ? 1 : 0;
    std::set<std::uint32_t> orbit;
    for (const auto &r : restricted[i])
      orbit.insert(r[other]);
    if (orbit.size() != m - 1)
      return false;
  }
  for (const auto &g : little)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = g[static_cast<std::uint32_t>(i)];
      std::set<Perm> conj;
      for (const auto &r : restricted[i])
        conj.insert(g.inverse() * r * g);
      if (conj != restricted[j])
        return false;
    }
  return true;
}

namespace {

std::string join_points(const design::Block &b) {
  std::string s;
  for (auto x : b)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

} // namespace

ClassificationReport classify(const Unital &u, Point z1, Point z2) {
  const int q = u.q();
  if (z1 == z2)
    throw DomainError("classify needs two distinct centers");
  const auto t1 = translation_group(u, z1);
  const auto t2 = translation_group(u, z2);
  for (const auto *t : {&t1, &t2})
    if (t->order() != static_cast<std::size_t>(q))
      throw DomainError("translation group at point " + std::to_string(t->center) +
                        " has order " + std::to_string(t->order()) +
                        ", expected q = " + std::to_string(q));

  ClassificationReport r;
  r.q = q;
  const PermGroup g = generated_group(u, t1, t2);
  const auto &binf = u.block(u.block_through(z1, z2));
  const std::vector<std::uint32_t> bpts(binf.begin(), binf.end());
  r.order_g = g.order();
  r.degree_b_infinity = bpts.size();
  r.evidence.push_back("|T_z1| = |T_z2| = " + std::to_string(q));
  r.evidence.push_back("B_infinity = {" + join_points(binf) + "}");

  const PermGroup gdag = permgrp::restrict_group(g, bpts);
  try {
    r.little_projective = permgrp::recognize_2transitive(gdag, bpts.size());
  } catch (const DomainError &e) {
    r.little_projective.family = permgrp::Family::unknown;
    r.little_projective.degree = bpts.size();
    r.little_projective.order = gdag.order();
    r.little_projective.evidence.push_back(e.what());
  }
  const auto &rec = r.little_projective;
  r.evidence.push_back("G on B_infinity: order " + std::to_string(gdag.order()) +
                       ", recognized as " + permgrp::to_string(rec.family) +
                       (rec.parameter ? "(" + std::to_string(rec.parameter) + ")" : ""));

  const PermGroup kernel = g.pointwise_stabilizer(bpts);
  r.order_kernel = kernel.order();
  const auto center = permgrp::center_elements(g);
  r.order_center = center.size();
  bool inside = true;
  for (const auto &z : center)
    inside = inside && kernel.contains(z);
  r.kernel_is_center = inside && r.order_kernel == r.order_center;
  r.evidence.push_back("kernel on B_infinity has order " +
                       std::to_string(r.order_kernel) +
                       (r.kernel_is_center ? " and equals the center"
                                           : " and differs from the center"));

  std::vector<std::uint32_t> affine;
  for (std::uint32_t x = 0; x < u.point_count(); ++x)
    if (!std::binary_search(binf.begin(), binf.end(), x))
      affine.push_back(x);
  r.semiregular = permgrp::is_semiregular(g, affine);
  r.kernel_semiregular = permgrp::is_semiregular(kernel, affine);
  const auto orbs = permgrp::orbits(g, affine);
  r.evidence.push_back("G has " + std::to_string(orbs.size()) +
                       " orbits on the " + std::to_string(affine.size()) +
                       " affine points");

  const std::uint64_t z = r.order_center;
  const std::uint64_t two = q % 2 ? 2 : 1;
  using permgrp::Family;
  if (q == 2 && rec.family == Family::sharply_two_transitive) {
    r.family = "hermitian-small";
  } else if (q == 3 && rec.family == Family::sharply_two_transitive) {
    r.family = z == 2 ? "SL2" : z == 1 ? "PSL2" : "unknown";
    r.evidence.push_back("PSL(2,3) is sharply 2-transitive on 4 points");
  } else if (rec.family == Family::psl2 &&
             rec.parameter == static_cast<std::uint64_t>(q)) {
    if (z == two)
      r.family = "SL2";
    else if (z == 1)
      r.family = "PSL2";
    else
      r.family = "unknown";
    if (q == 9)
      r.evidence.push_back("q = 9: candidates SL(2,9) and PSL(2,9) told apart by |Z| = " +
                           std::to_string(z));
  } else if (rec.family == Family::suzuki) {
    r.family = "Sz";
  } else if (rec.family == Family::ree) {
    r.family = "Ree";
  } else {
    r.family = "unknown";
    if (rec.family == Family::psu3)
      r.evidence.push_back("PSU3 profile does not occur for translation groups");
  }
  if (r.family != "unknown" && r.family != "hermitian-small" &&
      r.order_g != gdag.order() * z)
    r.evidence.push_back("warning: |G| != |G on B_infinity| * |Z|");
  return r;
}

nlohmann::ordered_json to_json(const ClassificationReport &r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["q"] = r.q;
  j["order_G"] = r.order_g;
  j["order_center"] = r.order_center;
  j["degree_B_infinity"] = r.degree_b_infinity;
  j["semiregular"] = r.semiregular;
  j["kernel_semiregular"] = r.kernel_semiregular;
  j["evidence"] = r.evidence;
  return j;
}

} // namespace unital::translations
