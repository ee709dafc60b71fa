#include "unital/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "unital/errors.hpp"
#include "unital/iso_search.hpp"
#include "unital/permgrp.hpp"
#include "unital/translations.hpp"
#include "unital/unitals.hpp"
#include "unital/unitary.hpp"
#include "unital/zoo.hpp"

namespace unital::acceptance {

using permgrp::Perm;
using permgrp::PermGroup;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Collects failed expectations; detail lists the observations.
struct Ledger {
  bool pass = true;
  std::ostringstream out;

  void note(const std::string &s) {
    if (out.tellp() > 0)
      out << "; ";
    out << s;
  }
  void expect(bool ok, const std::string &s) {
    if (!ok) {
      pass = false;
      note("FAILED " + s);
    }
  }
};

std::vector<std::uint32_t> as_points(const design::Block &b) {
  return {b.begin(), b.end()};
}

std::vector<std::uint32_t> complement(std::size_t n, const design::Block &b) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < n; ++x)
    if (!std::binary_search(b.begin(), b.end(), x))
      out.push_back(x);
  return out;
}

void zoo_all(Ledger &l, const std::string &name, const std::vector<int> &params) {
  for (int p : params)
    for (const auto &r : zoo::run_check(name, p)) {
      l.expect(r.pass, name + " " + r.params.dump() + ": " +
                           (r.witnesses.empty() ? "" : r.witnesses.back()));
      if (r.pass)
        l.note(name + " " + r.params.dump() + " pass, swept " +
               std::to_string(r.swept));
    }
}

void c1(Ledger &l) {
  const std::vector<std::pair<std::size_t, std::size_t>> want{{9, 12}, {28, 63}, {65, 208}};
  for (int q = 2; q <= 4; ++q) {
    const auto t = Clock::now();
    const auto u = unitals::hermitian_unital(q);
    const double s = since(t);
    const auto audit = design::audit_unital(u.structure());
    l.expect(audit.valid && audit.q == q, "audit q=" + std::to_string(q));
    l.expect(u.point_count() == want[q - 2].first &&
                 u.block_count() == want[q - 2].second,
             "size q=" + std::to_string(q));
    l.expect(s < 1.0, "time q=" + std::to_string(q));
    char buf[96];
    std::snprintf(buf, sizeof buf, "q=%d (%zu,%zu) %.3f s", q, u.point_count(),
                  u.block_count(), s);
    l.note(buf);
  }
}

void c2(Ledger &l) {
  {
    const auto u = unitals::hermitian_unital(3);
    const auto binf = unitals::hermitian_b_infinity(3);
    for (auto z : binf)
      l.expect(translations::translation_group(u, z).order() == 3,
               "|T_" + std::to_string(z) + "| = 3");
    const PermGroup g = translations::generated_group(u, 0, 1);
    const auto z = permgrp::center_elements(g).size();
    const auto derived = permgrp::derived_subgroup(g).order();
    const PermGroup gd = permgrp::restrict_group(g, as_points(binf));
    const auto affine = complement(u.point_count(), binf);
    const auto orbs = permgrp::orbits(g, affine);
    l.expect(g.order() == 24, "|G| = 24 on hermitian(3)");
    l.expect(z == 2, "center order 2");
    l.expect(derived == 8, "derived subgroup order 8");
    l.expect(gd.order() == 12 && gd.order() * z == g.order() &&
                 permgrp::is_two_transitive(gd),
             "G/Z sharply 2-transitive of degree 4");
    l.expect(permgrp::is_semiregular(g, affine) && orbs.size() == 1 &&
                 orbs[0].size() == 24,
             "G regular on 24 affine points");
    l.note("q=3: |G|=" + std::to_string(g.order()) + " |Z|=" + std::to_string(z) +
           " |G'|=" + std::to_string(derived) + " |G/Z|=" +
           std::to_string(gd.order()) + " affine orbits " +
           std::to_string(orbs.size()));
  }
  {
    const auto u = unitals::hermitian_unital(4);
    const auto binf = unitals::hermitian_b_infinity(4);
    const PermGroup g = translations::generated_group(u, 0, 1);
    const auto z = permgrp::center_elements(g).size();
    const bool perfect = permgrp::derived_subgroup(g).order() == g.order();
    const auto affine = complement(u.point_count(), binf);
    const auto orbs = permgrp::orbits(g, affine);
    l.expect(g.order() == 60, "|G| = 60 on hermitian(4)");
    l.expect(z == 1, "trivial center");
    l.expect(perfect, "G perfect");
    l.expect(permgrp::is_semiregular(g, affine) && orbs.size() == 1 &&
                 orbs[0].size() == 60,
             "G regular on 60 affine points");
    l.note("q=4: |G|=" + std::to_string(g.order()) + " |Z|=" + std::to_string(z) +
           (perfect ? " perfect" : " not perfect"));
  }
}

void c3(Ledger &l) {
  {
    const auto u = unitals::hermitian_unital(2);
    const auto aut = design::automorphisms(u);
    std::size_t worst = 0;
    for (const auto &g : aut)
      if (!g.is_identity())
        worst = std::max(worst, g.fixed_point_count());
    l.expect(worst <= 4, "nontrivial automorphisms of hermitian(2) fix <= 4");
    l.note("hermitian(2): " + std::to_string(aut.size()) +
           " automorphisms, max fixed " + std::to_string(worst));
    for (std::uint32_t z = 0; z < u.point_count(); ++z)
      for (const auto &t : translations::translation_group(u, z).elements)
        if (!t.is_identity())
          l.expect(t.fixed_point_count() == 1,
                   "translation at " + std::to_string(z) + " fixes one point");
  }
  {
    const auto u = unitals::hermitian_unital(3);
    const PermGroup g = translations::generated_group(u, 0, 1);
    std::size_t worst = 0;
    for (const auto &x : g.elements())
      if (!x.is_identity())
        worst = std::max(worst, x.fixed_point_count());
    l.expect(worst <= 10, "nontrivial elements of G on hermitian(3) fix <= 10");
    std::size_t translations_seen = 0;
    for (auto z : unitals::hermitian_b_infinity(3))
      for (const auto &t : translations::translation_group(u, z).elements)
        if (!t.is_identity()) {
          ++translations_seen;
          l.expect(t.fixed_point_count() == 1,
                   "translation at " + std::to_string(z) + " fixes one point");
        }
    l.note("hermitian(3): |G|=" + std::to_string(g.order()) + ", max fixed " +
           std::to_string(worst) + ", " + std::to_string(translations_seen) +
           " translations fix exactly 1");
  }
}

void c4(Ledger &l) {
  l.expect(matgrp::su3_group(2).order() == 216, "|SU(3,4|2)| = 216");
  l.expect(matgrp::su3_group(3).order() == 6048, "|SU(3,9|3)| = 6048");
  zoo_all(l, "su3_trace_conjugacy", {2, 3});
}

void c5(Ledger &l) {
  l.expect(matgrp::su3_group(4).order() == 62400, "|SU(3,16|4)| = 62400");
  zoo_all(l, "su3_root_decomposition", {2, 4});
}

void c6(Ledger &l) { zoo_all(l, "central_extension", {3, 5, 7, 11}); }

void c7(Ledger &l) {
  const auto r = zoo::check_suzuki();
  l.expect(r.pass, "suzuki check");
  for (int o : {2, 5, 7, 13}) {
    bool seen = false;
    for (const auto &w : r.witnesses)
      seen = seen || (w.rfind("order " + std::to_string(o) + " class", 0) == 0 &&
                      w.find(" = ") != std::string::npos);
    l.expect(seen, "involution pair witness for order " + std::to_string(o));
  }
  l.note(r.witnesses.front());
  for (const auto &w : r.witnesses)
    if (w.rfind("order 4 class", 0) == 0)
      l.note(w);
}

void c8(Ledger &l) {
  const auto r = zoo::check_ree3();
  l.expect(r.pass, "ree3 check");
  bool identity = false;
  for (const auto &w : r.witnesses)
    identity = identity || w.rfind("SL(2,8)", 0) == 0;
  l.expect(identity, "SL(2,8) factorization identity");
  l.note("|PGammaL(2,8)| = 1512, " + std::to_string(r.swept) +
         " prime-order elements and identities checked");
}

void c9(Ledger &l) {
  const auto c = unitals::sl23_construction();
  l.expect(c.unital.block_count() == 63, "63 blocks");
  l.expect(c.census == std::array<std::size_t, 4>{1, 32, 6, 24}, "census 1+32+6+24");
  const auto iso = design::design_isomorphism(c.unital, unitals::hermitian_unital(3));
  l.expect(iso.has_value(), "isomorphic to hermitian(3)");
  l.note("census " + std::to_string(c.census[0]) + "+" + std::to_string(c.census[1]) +
         "+" + std::to_string(c.census[2]) + "+" + std::to_string(c.census[3]) +
         ", D after " + std::to_string(c.candidates_scanned) + " candidates" +
         (iso ? ", isomorphism found" : ""));
}

void c10(Ledger &l) { zoo_all(l, "commutator_rootgroups", {4, 5, 7, 8, 9}); }

void c11(Ledger &l) {
  const std::vector<std::string> want{"hermitian-small", "SL2", "SL2"};
  for (int q = 2; q <= 4; ++q) {
    const auto r = translations::classify(unitals::hermitian_unital(q), 0, 1);
    l.expect(r.family == want[q - 2], "family q=" + std::to_string(q));
    l.expect(r.semiregular, "semiregular q=" + std::to_string(q));
    l.note("q=" + std::to_string(q) + " " + r.family + " |G|=" +
           std::to_string(r.order_g) + (r.semiregular ? " semiregular" : ""));
  }
}

struct Criterion {
  const char *title;
  double limit;
  void (*run)(Ledger &);
};

const Criterion criteria[] = {
    {"hermitian unitals of order 2, 3, 4", 3, c1},
    {"translation groups of hermitian(3) and hermitian(4)", 30, c2},
    {"fixed point bound", 10, c3},
    {"SU(3) trace equality versus conjugacy", 300, c4},
    {"SU(3) root decompositions and central elements", 600, c5},
    {"central extensions of sharply 2-transitive groups", 300, c6},
    {"Sz(8) strong reality", 300, c7},
    {"Ree(3) factorizations", 60, c8},
    {"SL(2,3) reconstruction of the order 3 unital", 120, c9},
    {"root groups are commutators in PSL(2,q)", 120, c10},
    {"classification of hermitian unitals", 1800, c11},
};

} // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 11)
    throw DomainError("criterion id must be in 1..11");
  const auto &c = criteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  Ledger l;
  const auto t = Clock::now();
  try {
    c.run(l);
  } catch (const std::exception &e) {
    l.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = since(t);
  if (r.seconds > r.limit_seconds)
    l.expect(false, "time limit");
  r.pass = l.pass;
  r.detail = l.out.str();
  return r;
}

std::vector<CriterionResult>
run_all(const std::function<void(const CriterionResult &)> &on_result) {
  std::vector<CriterionResult> out;
  double total = 0;
  for (int id = 1; id <= 11; ++id) {
    auto r = run_criterion(id);
    total += r.seconds;
    if (id == 11) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "; full suite %.1f s", total);
      r.detail += buf;
      if (total > r.limit_seconds) {
        r.pass = false;
        r.detail += " over the limit";
      }
    }
    if (on_result)
      on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult &r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %2d ", r.pass ? "PASS" : "FAIL", r.id);
  char tail[48];
  std::snprintf(tail, sizeof tail, " (%.2f s): ", r.seconds);
  return buf + r.title + tail + r.detail;
}

} // namespace unital::acceptance
