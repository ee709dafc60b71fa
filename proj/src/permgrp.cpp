#include "unital/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "unital/errors.hpp"
#include "unital/gf.hpp"
#include "unital/group_algo.hpp"

namespace unital::permgrp {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::vector<std::uint32_t> base_prefix)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      throw DomainError("generator degree does not match group degree");
  for (auto b : base_prefix) {
    if (b >= degree_)
      throw DomainError("base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end())
      base_.push_back(b);
  }
  schreier_sims();
  order_ = 1;
  for (const auto &l : levels_) {
    const std::uint64_t len = l.orbit.size();
    if (order_ > UINT64_MAX / len)
      throw DomainError("group order overflows 64 bits");
    order_ *= len;
  }
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto &l : levels_)
    out.push_back(l.orbit.size());
  return out;
}

void PermGroup::build_level_orbit(Level &level) const {
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.point] = Perm(degree_);
  level.orbit = {level.point};
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const auto x = level.orbit[i];
    for (const auto &s : level.gens) {
      const auto y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto b = g[levels_[l].point];
    const auto &u = levels_[l].transversal[b];
    if (!u)
      return {std::move(g), l};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  std::vector<Perm> strong;
  for (const auto &g : gens_)
    if (!g.is_identity())
      strong.push_back(g);

  auto first_moved = [](const Perm &g) {
    for (std::uint32_t x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return x;
    throw InternalError("identity has no moved point");
  };
  for (const auto &g : strong) {
    bool fixes_base = std::all_of(base_.begin(), base_.end(),
                                  [&](std::uint32_t b) { return g[b] == b; });
    if (fixes_base)
      base_.push_back(first_moved(g));
  }

  levels_.clear();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level level;
    level.point = base_[i];
    for (const auto &g : strong) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = g[base_[j]] == base_[j];
      if (fixes)
        level.gens.push_back(g);
    }
    build_level_orbit(level);
    levels_.push_back(std::move(level));
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; !extended && oi < levels_[li].orbit.size(); ++oi) {
      const auto b = levels_[li].orbit[oi];
      for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
        const Perm &s = levels_[li].gens[si];
        const auto bs = s[b];
        Perm h = *levels_[li].transversal[b] * s *
                 levels_[li].transversal[bs]->inverse();
        if (h.is_identity())
          continue;
        auto [residue, j] = sift(std::move(h), li + 1);
        if (residue.is_identity())
          continue;
        if (j == levels_.size()) {
          Level level;
          level.point = first_moved(residue);
          base_.push_back(level.point);
          levels_.push_back(std::move(level));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          build_level_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended)
      --i;
  }
}

bool PermGroup::contains(const Perm &g) const {
  if (g.degree() != degree_)
    return false;
  return sift(g, 0).first.is_identity();
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order_ > cap)
    throw DomainError("group of order " + std::to_string(order_) +
                      " exceeds enumeration cap");
  std::vector<Perm> elems{Perm(degree_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(elems.size() * it->orbit.size());
    for (auto b : it->orbit)
      for (const auto &h : elems)
        next.push_back(h * *it->transversal[b]);
    elems = std::move(next);
  }
  return elems;
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t x) const {
  std::vector<std::uint32_t> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &g : gens_) {
      const auto y = g[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

PermGroup
PermGroup::pointwise_stabilizer(const std::vector<std::uint32_t> &points) const {
  PermGroup rebased(degree_, gens_, points);
  std::size_t distinct = 0;
  std::unordered_set<std::uint32_t> seen;
  for (auto p : points)
    distinct += seen.insert(p).second;
  std::vector<Perm> gens;
  if (distinct < rebased.levels_.size())
    gens = rebased.levels_[distinct].gens;
  return PermGroup(degree_, std::move(gens));
}

std::optional<Perm> PermGroup::transversal_element(std::uint32_t y) const {
  if (levels_.empty())
    return std::nullopt;
  return levels_[0].transversal[y];
}

std::vector<std::vector<std::uint32_t>>
orbits(const PermGroup &g, const std::vector<std::uint32_t> &domain) {
  std::vector<std::uint32_t> points = domain;
  if (points.empty()) {
    points.resize(g.degree());
    std::iota(points.begin(), points.end(), 0u);
  }
  std::vector<bool> done(g.degree(), false);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto x : points) {
    if (done[x])
      continue;
    auto orb = g.orbit(x);
    for (auto y : orb)
      done[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_semiregular(const PermGroup &g, const std::vector<std::uint32_t> &domain) {
  for (const auto &orb : orbits(g, domain))
    if (orb.size() != g.order())
      return false;
  return true;
}

bool is_transitive(const PermGroup &g) {
  return g.degree() <= 1 || g.orbit(0).size() == g.degree();
}

bool is_two_transitive(const PermGroup &g) {
  if (g.degree() < 2 || !is_transitive(g))
    return false;
  const auto stab = g.pointwise_stabilizer({0});
  return stab.orbit(1).size() == g.degree() - 1;
}

Perm restrict_perm(const Perm &p, const std::vector<std::uint32_t> &points) {
  std::unordered_map<std::uint32_t, std::uint32_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i)
    idx.emplace(points[i], static_cast<std::uint32_t>(i));
  std::vector<std::uint32_t> images(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = idx.find(p[points[i]]);
    if (it == idx.end())
      throw DomainError("point set is not invariant under the permutation");
    images[i] = it->second;
  }
  return Perm(std::move(images));
}

PermGroup restrict_group(const PermGroup &g,
                         const std::vector<std::uint32_t> &points) {
  std::vector<Perm> gens;
  for (const auto &s : g.generators())
    gens.push_back(restrict_perm(s, points));
  return PermGroup(points.size(), std::move(gens));
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &subset) {
  std::vector<Perm> gens;
  for (const auto &s : subset)
    if (!s.is_identity())
      gens.push_back(s);
  PermGroup h(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &s : g.generators()) {
      Perm c = s.inverse() * gens[i] * s;
      if (!h.contains(c)) {
        gens.push_back(std::move(c));
        h = PermGroup(g.degree(), gens);
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::vector<Perm> center_elements(const PermGroup &g, std::size_t cap) {
  std::vector<Perm> out;
  for (auto &x : g.elements(cap)) {
    bool central = true;
    for (const auto &s : g.generators())
      if (!(x * s == s * x)) {
        central = false;
        break;
      }
    if (central)
      out.push_back(std::move(x));
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup &g,
                                              std::size_t cap) {
  const auto elems = g.elements(cap);
  const auto ids = conjugacy_class_ids(elems, g.generators());
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (ids[i] == classes.size())
      classes.push_back({elems[i], 0, elems[i].order()});
    ++classes[ids[i]].size;
  }
  return classes;
}

StructureReport structure_report(const PermGroup &g, std::size_t cap) {
  StructureReport r;
  r.order = g.order();
  r.derived_order = derived_subgroup(g).order();
  r.perfect = r.derived_order == r.order;
  if (r.order > cap) {
    r.omitted = {"center_order", "order_histogram", "class_count"};
    return r;
  }
  r.center_order = center_elements(g, cap).size();
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto &x : g.elements(cap))
    ++hist[x.order()];
  r.order_histogram = std::move(hist);
  r.class_count = conjugacy_classes(g, cap).size();
  return r;
}

std::string to_string(Family f) {
  switch (f) {
  case Family::sharply_two_transitive:
    return "sharply-2-transitive";
  case Family::psl2:
    return "PSL2";
  case Family::psu3:
    return "PSU3";
  case Family::suzuki:
    return "Sz";
  case Family::ree:
    return "Ree";
  case Family::unknown:
    break;
  }
  return "unknown";
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

// Exponent k with n == base^k, or -1.
int exact_log(std::uint64_t n, std::uint64_t base) {
  int k = 0;
  while (n > 1 && n % base == 0) {
    n /= base;
    ++k;
  }
  return n == 1 ? k : -1;
}

std::uint64_t icbrt(std::uint64_t n) {
  std::uint64_t f = 0;
  while ((f + 1) * (f + 1) * (f + 1) <= n)
    ++f;
  return f;
}

} // namespace

std::uint64_t family_degree(Family f, std::uint64_t t) {
  switch (f) {
  case Family::psl2:
    return t + 1;
  case Family::psu3:
    return t * t * t + 1;
  case Family::suzuki:
    return t * t + 1;
  case Family::ree:
    return t * t * t + 1;
  default:
    return 0;
  }
}

std::uint64_t family_order(Family f, std::uint64_t t) {
  switch (f) {
  case Family::psl2:
    return t * (t * t - 1) / std::gcd<std::uint64_t>(2, t - 1);
  case Family::psu3:
    return (t * t * t + 1) * t * t * t * (t * t - 1) /
           std::gcd<std::uint64_t>(3, t + 1);
  case Family::suzuki:
    return t * t * (t * t + 1) * (t - 1);
  case Family::ree:
    return t * t * t * (t * t * t + 1) * (t - 1);
  default:
    return 0;
  }
}

RecognitionResult recognize_2transitive(const PermGroup &g, std::size_t degree) {
  if (g.degree() != degree || !is_two_transitive(g))
    throw DomainError("group is not 2-transitive on " + std::to_string(degree) +
                      " points");
  RecognitionResult r;
  r.degree = degree;
  r.order = g.order();
  const std::uint64_t m = degree;
  const std::uint64_t n = r.order;
  r.evidence.push_back("degree " + std::to_string(m) + ", order " +
                       std::to_string(n));

  if (n == m * (m - 1)) {
    r.family = Family::sharply_two_transitive;
    r.parameter = m;
    r.evidence.push_back("order equals degree*(degree-1)");
    return r;
  }

  const bool perfect = derived_subgroup(g).order() == n;
  r.evidence.push_back(perfect ? "perfect" : "not perfect");

  struct Candidate {
    Family family;
    std::uint64_t t;
  };
  std::vector<Candidate> candidates;
  if (auto [p, e] = gf::prime_power(m - 1); p != 0 && m - 1 > 3)
    candidates.push_back({Family::psl2, m - 1});
  if (const auto f = icbrt(m - 1); f * f * f == m - 1 && f >= 3 &&
                                   gf::prime_power(f).first != 0)
    candidates.push_back({Family::psu3, f});
  if (int k = exact_log(m - 1, 2); k > 0 && k % 2 == 0 && (k / 2) % 2 == 1 &&
                                   k / 2 >= 3)
    candidates.push_back({Family::suzuki, ipow(2, k / 2)});
  if (int k = exact_log(m - 1, 3); k > 0 && k % 3 == 0 && (k / 3) % 2 == 1)
    candidates.push_back({Family::ree, ipow(3, k / 3)});

  for (const auto &c : candidates) {
    if (family_order(c.family, c.t) != n ||
        family_degree(c.family, c.t) != m)
      continue;
    // Ree(3) is the only member that is not simple.
    const bool expect_perfect = !(c.family == Family::ree && c.t == 3);
    if (perfect != expect_perfect) {
      r.evidence.push_back(to_string(c.family) + "(" + std::to_string(c.t) +
                           ") order matches but perfectness does not");
      continue;
    }
    r.family = c.family;
    r.parameter = c.t;
    r.evidence.push_back(to_string(c.family) + "(" + std::to_string(c.t) +
                         "): degree and order formulas match");
    return r;
  }
  r.evidence.push_back("no family matches");
  return r;
}

} // namespace unital::permgrp
