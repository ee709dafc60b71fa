#include "unital/zoo.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"
#include "unital/named_groups.hpp"
#include "unital/permgrp.hpp"
#include "unital/unitary.hpp"

namespace unital::zoo {

using gf::Field;
using gf::FieldElem;
using matgrp::Matrix;
using permgrp::Perm;
using permgrp::PermGroup;
using permgrp::product_search;

namespace {

class Timer {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult start(std::string name, nlohmann::ordered_json params = {}) {
  CheckResult r;
  r.name = std::move(name);
  if (!params.is_null())
    r.params = std::move(params);
  r.pass = true;
  return r;
}

void fail(CheckResult &r, std::string witness) {
  r.pass = false;
  r.witnesses.push_back(std::move(witness));
}

std::string str(const Matrix &m) { return m.to_string(); }
std::string str(const Perm &p) { return p.to_string(); }

} // namespace

nlohmann::ordered_json to_json(const CheckResult &r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["witnesses"] = r.witnesses;
  j["swept"] = r.swept;
  j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms + 0.5);
  return j;
}

// ---------------------------------------------------------------------------

CheckResult check_commutator_rootgroups(int q) {
  static const std::set<int> allowed{4, 5, 7, 8, 9, 11, 13};
  if (!allowed.contains(q))
    throw DomainError("commutator_rootgroups needs q in {4,5,7,8,9,11,13}, got " +
                      std::to_string(q));
  Timer t;
  auto r = start("commutator_rootgroups", {{"q", q}});
  const PermGroup g = matgrp::psl2_permutations(q);
  const auto &elems = g.elements();
  const std::uint64_t stab_order =
      static_cast<std::uint64_t>(q) * (q - 1) / (q % 2 ? 2 : 1);
  const Perm id = g.identity();
  for (std::uint32_t x = 0; x <= static_cast<std::uint32_t>(q); ++x) {
    std::vector<Perm> phi, delta{id};
    for (const auto &e : elems)
      if (e[x] == x) {
        phi.push_back(e);
        if (e.fixed_point_count() == 1)
          delta.push_back(e);
      }
    if (phi.size() != stab_order || delta.size() != static_cast<std::size_t>(q)) {
      fail(r, "point " + std::to_string(x) + ": |Phi_x| = " +
                  std::to_string(phi.size()) + ", |Delta_x| = " +
                  std::to_string(delta.size()));
      continue;
    }
    const std::unordered_set<Perm> dset(delta.begin(), delta.end());
    std::unordered_set<Perm> comms;
    for (const auto &d : delta)
      for (const auto &f : phi) {
        ++r.swept;
        comms.insert(commutator(d, f));
      }
    for (const auto &c : comms)
      if (!dset.contains(c))
        fail(r, "point " + std::to_string(x) + ": commutator " + str(c) +
                    " outside Delta_x");
    const auto gen = closure(id, std::vector<Perm>(comms.begin(), comms.end()));
    if (std::unordered_set<Perm>(gen.begin(), gen.end()) != dset)
      fail(r, "point " + std::to_string(x) + ": commutators generate " +
                  std::to_string(gen.size()) + " elements");
  }
  if (r.pass)
    r.witnesses.push_back("|G| = " + std::to_string(elems.size()) + ", " +
                          std::to_string(q + 1) + " points, |Delta_x| = " +
                          std::to_string(q) + ", |Phi_x| = " +
                          std::to_string(stab_order));
  r.elapsed_ms = t.ms();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Heisenberg element [[1,x,z],[0,1,y],[0,0,1]] rewritten as (x, y, z - xy/2)
// so that the cocycle is the alternating form; M acts on (x, y) as a
// column vector and leaves the last coordinate alone.
Matrix act_on_heisenberg(const Matrix &h, const Matrix &m) {
  const Field &f = h.field();
  const FieldElem half = f.inv(f.from_int(2));
  const FieldElem x = h(0, 1), y = h(1, 2);
  const FieldElem c = f.sub(h(0, 2), f.mul(half, f.mul(x, y)));
  const FieldElem x2 = f.add(f.mul(m(0, 0), x), f.mul(m(0, 1), y));
  const FieldElem y2 = f.add(f.mul(m(1, 0), x), f.mul(m(1, 1), y));
  Matrix out = Matrix::identity(f, 3);
  out(0, 1) = x2;
  out(1, 2) = y2;
  out(0, 2) = f.add(c, f.mul(half, f.mul(x2, y2)));
  return out;
}

} // namespace

CheckResult check_central_extension(int p) {
  if (p != 3 && p != 5 && p != 7 && p != 11)
    throw DomainError("central_extension needs p in {3,5,7,11}, got " +
                      std::to_string(p));
  Timer t;
  auto r = start("central_extension", {{"p", p}});
  const Field &f = gf::make_field(p, 1);
  const auto pgrp = matgrp::heisenberg_group(p);
  const auto hgrp = matgrp::sharply_transitive_complement(p);
  const auto &pel = pgrp.elements();
  const auto &hel = hgrp.elements();
  const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
  const std::uint64_t e_order = pel.size() * hel.size();
  r.witnesses.push_back("|P| = " + std::to_string(pel.size()) + ", |H| = " +
                        std::to_string(hel.size()) + " (" + hgrp.name() +
                        "), |E| = " + std::to_string(e_order));
  if (pel.size() != pp * p || hel.size() != pp - 1 || e_order != pp * p * (pp - 1))
    fail(r, "orders differ from p^3 and p^2-1");

  std::size_t involutions = 0;
  for (const auto &h : hel)
    involutions += h.order() == 2;
  r.witnesses.push_back("H has " + std::to_string(involutions) + " involution(s)");
  if (involutions != 1)
    fail(r, "H does not have a unique involution");

  // H regular on the nonzero vectors of P/Z.
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      if (a == 0 && b == 0)
        continue;
      std::set<std::pair<int, int>> seen;
      for (const auto &m : hel) {
        ++r.swept;
        const auto x = f.add(f.mul(m(0, 0), f.from_int(a)), f.mul(m(0, 1), f.from_int(b)));
        const auto y = f.add(f.mul(m(1, 0), f.from_int(a)), f.mul(m(1, 1), f.from_int(b)));
        if (x == f.zero() && y == f.zero())
          fail(r, "zero vector in an H-orbit");
        seen.insert({x.value, y.value});
      }
      if (seen.size() != pp - 1)
        fail(r, "H-orbit of (" + std::to_string(a) + "," + std::to_string(b) +
                    ") has size " + std::to_string(seen.size()));
    }

  // The action is by automorphisms that fix Z pointwise.
  for (const auto &m : hgrp.generators())
    for (const auto &g : pel)
      for (const auto &s : pgrp.generators()) {
        ++r.swept;
        if (act_on_heisenberg(g * s, m) !=
            act_on_heisenberg(g, m) * act_on_heisenberg(s, m)) {
          fail(r, "H generator " + str(m) + " is not an automorphism of P");
          break;
        }
      }
  std::vector<Matrix> center;
  for (const auto &g : pel) {
    bool central = true;
    for (const auto &s : pgrp.generators())
      central = central && g * s == s * g;
    if (central)
      center.push_back(g);
  }
  for (const auto &z : center)
    for (const auto &m : hgrp.generators())
      if (act_on_heisenberg(z, m) != z)
        fail(r, "H moves the central element " + str(z));

  // P' = Z.
  std::unordered_set<Matrix> comms;
  for (const auto &a : pel)
    for (const auto &b : pgrp.generators())
      comms.insert(commutator(a, b));
  const auto derived =
      closure(pgrp.identity(), std::vector<Matrix>(comms.begin(), comms.end()));
  const bool p_nonabelian = comms.size() > 1;
  if (!p_nonabelian || derived.size() != static_cast<std::size_t>(p) ||
      std::unordered_set<Matrix>(derived.begin(), derived.end()) !=
          std::unordered_set<Matrix>(center.begin(), center.end()))
    fail(r, "P' differs from Z: |P'| = " + std::to_string(derived.size()) +
                ", |Z| = " + std::to_string(center.size()));
  else
    r.witnesses.push_back("P nonabelian, P' = Z of order " + std::to_string(p) +
                          ", so E does not split over Z");

  // E/Z on the p^2 vectors: translations from P, linear maps from H.
  auto vec_index = [&](FieldElem x, FieldElem y) {
    return static_cast<std::uint32_t>(x.value + p * y.value);
  };
  std::vector<Perm> gens;
  for (const auto &s : pgrp.generators()) {
    std::vector<std::uint32_t> im(pp);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        im[a + p * b] = vec_index(f.add(f.from_int(a), s(0, 1)),
                                  f.add(f.from_int(b), s(1, 2)));
    gens.emplace_back(im);
  }
  for (const auto &m : hgrp.generators()) {
    std::vector<std::uint32_t> im(pp);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const auto va = f.from_int(a), vb = f.from_int(b);
        im[a + p * b] = vec_index(f.add(f.mul(m(0, 0), va), f.mul(m(0, 1), vb)),
                                  f.add(f.mul(m(1, 0), va), f.mul(m(1, 1), vb)));
      }
    gens.emplace_back(im);
  }
  const PermGroup quotient(pp, gens);
  const bool sharp = quotient.order() == pp * (pp - 1) &&
                     permgrp::is_two_transitive(quotient);
  if (!sharp || quotient.order() * p != e_order)
    fail(r, "E/Z on " + std::to_string(pp) + " points has order " +
                std::to_string(quotient.order()));
  else
    r.witnesses.push_back("E/Z sharply 2-transitive of degree " +
                          std::to_string(pp) + ", order " +
                          std::to_string(quotient.order()));
  r.elapsed_ms = t.ms();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0)
      d.push_back(k);
  return d;
}

} // namespace

CheckResult check_su3_trace_conjugacy(int r) {
  if (r != 2 && r != 3)
    throw DomainError("su3_trace_conjugacy needs r in {2,3}, got " +
                      std::to_string(r));
  Timer t;
  auto res = start("su3_trace_conjugacy", {{"r", r}});
  const auto &g = matgrp::su3_group(r);
  const auto &elems = g.elements();
  const auto cls = conjugacy_class_ids(elems, g.generators());
  if (elems.size() != matgrp::su3_order(r))
    fail(res, "SU(3) enumeration has " + std::to_string(elems.size()) + " elements");

  for (int d : divisors(r + 1)) {
    // class id -> trace; trace -> class ids
    std::map<std::size_t, std::set<int>> traces_of;
    std::map<int, std::set<std::size_t>> classes_of;
    std::map<std::size_t, std::size_t> rep;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].order() != static_cast<std::uint64_t>(d))
        continue;
      ++n;
      const int tr = elems[i].trace().value;
      traces_of[cls[i]].insert(tr);
      classes_of[tr].insert(cls[i]);
      rep.try_emplace(cls[i], i);
    }
    res.swept += n * n;
    for (const auto &[c, trs] : traces_of)
      if (trs.size() != 1)
        fail(res, "order " + std::to_string(d) + ": class of " +
                      str(elems[rep[c]]) + " has several traces");
    for (const auto &[tr, cs] : classes_of)
      if (cs.size() != 1) {
        auto it = cs.begin();
        fail(res, "order " + std::to_string(d) + ": " + str(elems[rep[*it]]) +
                      " and " + str(elems[rep[*std::next(it)]]) +
                      " share a trace but are not conjugate");
      }
    // Cross-check the library predicate on class representatives.
    for (const auto &[c1, i1] : rep)
      for (const auto &[c2, i2] : rep)
        if (matgrp::trace_conjugacy_test(elems[i1], elems[i2], r) != (c1 == c2))
          fail(res, "trace_conjugacy_test disagrees on " + str(elems[i1]) +
                        " and " + str(elems[i2]));
    res.witnesses.push_back("order " + std::to_string(d) + ": " +
                            std::to_string(n) + " elements, " +
                            std::to_string(rep.size()) + " classes");
  }
  res.elapsed_ms = t.ms();
  return res;
}

CheckResult check_su3_root_decomposition(int r) {
  if (r != 2 && r != 4)
    throw DomainError("su3_root_decomposition needs r in {2,4}, got " +
                      std::to_string(r));
  Timer t;
  auto res = start("su3_root_decomposition", {{"r", r}});
  const auto &g = matgrp::su3_group(r);
  const auto &elems = g.elements();
  const Matrix id = g.identity();
  const auto cls = conjugacy_class_ids(elems, g.generators());

  std::vector<Matrix> order4, twopower, central;
  for (const auto &e : elems) {
    const auto o = e.order();
    if (4 % o == 0)
      order4.push_back(e);
    if ((o & (o - 1)) == 0)
      twopower.push_back(e);
    if (e.is_scalar() && !e.is_identity())
      central.push_back(e);
  }

  // Oracle: a factorization of A^2 exists, decided per class by search.
  std::map<std::size_t, bool> oracle;
  std::uint64_t fallbacks = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto &a = elems[i];
    if (a.is_scalar() || !a.pow(r + 1).is_identity())
      continue;
    ++res.swept;
    if (!oracle.contains(cls[i]))
      oracle[cls[i]] = product_search(a * a, order4, order4).has_value();
    try {
      const auto dec = matgrp::jf_decompose(a, r);
      fallbacks += dec.fallback;
      const bool ok = dec.x * dec.y == a * a && dec.x.pow(4) == id &&
                      dec.y.pow(4) == id && matgrp::is_su3(dec.x) &&
                      matgrp::is_su3(dec.y);
      if (!ok)
        fail(res, "decomposition of " + str(a) + " does not certify");
      if (!oracle[cls[i]])
        fail(res, "decomposition found for " + str(a) + " but search found none");
    } catch (const DomainError &e) {
      fail(res, "jf_decompose failed on " + str(a) + ": " + e.what());
    }
  }
  res.witnesses.push_back(std::to_string(res.swept) +
                          " non-central elements decomposed over " +
                          std::to_string(oracle.size()) + " classes, " +
                          std::to_string(fallbacks) + " via another u");

  for (const auto &z : central) {
    ++res.swept;
    if (auto hit = product_search(z, twopower, twopower))
      fail(res, "central " + str(z) + " = " + str(hit->first) + " * " +
                    str(hit->second));
    bool threw = false;
    try {
      matgrp::jf_decompose(z, r);
    } catch (const DomainError &) {
      threw = true;
    }
    if (!threw)
      fail(res, "jf_decompose accepted central " + str(z));
  }
  res.witnesses.push_back(
      central.empty()
          ? "center trivial"
          : std::to_string(central.size()) +
                " nontrivial central elements, none a product of two of the " +
                std::to_string(twopower.size()) + " 2-elements");
  res.elapsed_ms = t.ms();
  return res;
}

CheckResult check_su3_involution_product(int r) {
  if (r % 2 == 0)
    throw DomainError("1/2 is undefined in characteristic 2");
  const Field &f = gf::field_of_order(r * r);
  Timer t;
  auto res = start("su3_involution_product", {{"r", r}});
  auto c = [&](int n) { return f.from_int(n); };
  const FieldElem neg_half = f.neg(f.inv(c(2)));
  Matrix a = Matrix::identity(f, 3);
  a(1, 0) = c(1);
  a(2, 0) = neg_half;
  a(2, 1) = c(-1);
  Matrix b = Matrix::identity(f, 3);
  b(0, 1) = c(-4);
  b(0, 2) = c(-8);
  b(1, 2) = c(4);
  Matrix expect = Matrix::identity(f, 3);
  expect(0, 1) = c(-4);
  expect(0, 2) = c(-8);
  expect(1, 0) = c(1);
  expect(1, 1) = c(-3);
  expect(1, 2) = c(-4);
  expect(2, 0) = neg_half;
  expect(2, 1) = c(1);
  expect(2, 2) = c(1);

  const Matrix id = Matrix::identity(f, 3);
  auto fixes = [&](const Matrix &m, int row) {
    std::vector<FieldElem> e(3, f.zero());
    e[row] = f.one();
    for (int j = 0; j < 3; ++j) {
      FieldElem s = f.zero();
      for (int k = 0; k < 3; ++k)
        s = f.add(s, f.mul(e[k], m(k, j)));
      if (s != e[j])
        return false;
    }
    return true;
  };
  auto sub_id = [&](const Matrix &m) {
    Matrix n = m;
    for (int i = 0; i < 3; ++i)
      n(i, i) = f.sub(n(i, i), f.one());
    return n;
  };
  for (const auto &[m, row, label] :
       {std::tuple{a, 0, "lower"}, std::tuple{b, 2, "upper"}}) {
    ++res.swept;
    if (!matgrp::is_su3(m))
      fail(res, std::string(label) + " factor not in SU(3): " + str(m));
    const Matrix n = sub_id(m);
    if (m == id || !(n * n * n == Matrix(f, 3)) || !fixes(m, row))
      fail(res, std::string(label) + " factor is not a root element: " + str(m));
  }
  const Matrix prod = a * b;
  if (prod != expect)
    fail(res, "product " + str(prod) + " differs from " + str(expect));
  if (prod == id || !(prod * prod == id))
    fail(res, "product " + str(prod) + " is not an involution");
  if (res.pass)
    res.witnesses.push_back(str(a) + " * " + str(b) + " = " + str(prod));
  res.elapsed_ms = t.ms();
  return res;
}

// ---------------------------------------------------------------------------

CheckResult check_suzuki() {
  Timer t;
  auto res = start("suzuki", {{"q", 8}});
  const PermGroup g = matgrp::suzuki8_permutations();
  const std::uint64_t expect = 65ULL * 64 * 7;
  if (g.order() != expect ||
      permgrp::family_order(permgrp::Family::suzuki, 8) != expect)
    fail(res, "|Sz(8)| = " + std::to_string(g.order()));
  const auto &elems = g.elements();
  std::vector<Perm> involutions, sylow;
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto &e : elems) {
    const auto o = e.order();
    ++hist[o];
    if (o == 2)
      involutions.push_back(e);
    if (e[0] == 0 && (o == 1 || o == 2 || o == 4))
      sylow.push_back(e);
  }
  res.swept = elems.size();
  std::string h;
  for (const auto &[o, n] : hist) {
    h += (h.empty() ? "" : ", ") + std::to_string(o) + ":" + std::to_string(n);
    if (o != 1 && o != 2 && o != 4 && o != 5 && o != 7 && o != 13)
      fail(res, "element of order " + std::to_string(o));
  }
  res.witnesses.push_back("order " + std::to_string(g.order()) +
                          ", element orders {" + h + "}");
  const auto syl = closure(g.identity(), sylow);
  if (sylow.size() != 64 || syl.size() != 64 || !hist.contains(4))
    fail(res, "Sylow 2-subgroup at point 0 has " + std::to_string(sylow.size()) +
                  " 2-elements");
  else
    res.witnesses.push_back("Sylow 2-subgroup order 64, exponent 4");

  for (const auto &c : permgrp::conjugacy_classes(g)) {
    if (c.element_order == 1)
      continue;
    const auto hit = product_search(c.representative, involutions, involutions);
    const std::string head = "order " + std::to_string(c.element_order) +
                             " class of size " + std::to_string(c.size);
    if (c.element_order == 4)
      res.witnesses.push_back(head + (hit ? ": product of two involutions (recorded)"
                                          : ": not a product of two involutions (recorded)"));
    else if (!hit)
      fail(res, head + ": representative " + str(c.representative) +
                    " is not a product of two involutions");
    else
      res.witnesses.push_back(head + ": " + str(c.representative) + " = " +
                              str(hit->first) + " * " + str(hit->second));
  }
  res.elapsed_ms = t.ms();
  return res;
}

CheckResult check_ree3() {
  Timer t;
  auto res = start("ree3", {{"q", 3}});
  const PermGroup g = matgrp::pgammal28_permutations();
  if (g.order() != 1512 || permgrp::family_order(permgrp::Family::ree, 3) != 1512)
    fail(res, "|PGammaL(2,8)| = " + std::to_string(g.order()));
  const auto &elems = g.elements();
  std::vector<Perm> nine;
  for (const auto &e : elems)
    if (9 % e.order() == 0)
      nine.push_back(e);
  std::map<std::uint64_t, std::uint64_t> done;
  for (const auto &e : elems) {
    const auto o = e.order();
    if (o != 2 && o != 3 && o != 7)
      continue;
    ++res.swept;
    const auto hit = product_search(e, nine, nine);
    if (!hit) {
      fail(res, "order " + std::to_string(o) + " element " + str(e) +
                    " has no factorization");
      continue;
    }
    if (o == 2 && (hit->first.order() == 1 || hit->second.order() == 1))
      fail(res, "involution " + str(e) + " factored with a trivial element");
    if (done[o]++ == 0)
      res.witnesses.push_back("order " + std::to_string(o) + ": " + str(e) +
                              " = " + str(hit->first) + " * " +
                              str(hit->second) + " with orders " +
                              std::to_string(hit->first.order()) + "," +
                              std::to_string(hit->second.order()));
  }
  for (auto o : {2, 3, 7})
    if (!done.contains(o))
      fail(res, "no element of order " + std::to_string(o));

  // [[1,u+1],[0,1]] = [[1,1],[1,0]] [[0,1],[1,u]] in SL(2,8).
  const Field &f = gf::make_field(2, 3);
  std::optional<FieldElem> u;
  for (auto x : f.elements())
    if (!u && f.add(f.add(f.pow(x, 3), x), f.one()) == f.zero())
      u = x;
  if (!u) {
    fail(res, "u^3 + u + 1 has no root in GF(8)");
  } else {
    Matrix lhs = Matrix::identity(f, 2);
    lhs(0, 1) = f.add(*u, f.one());
    Matrix s(f, 2);
    s(0, 0) = s(0, 1) = s(1, 0) = f.one();
    Matrix w(f, 2);
    w(0, 1) = w(1, 0) = f.one();
    w(1, 1) = *u;
    ++res.swept;
    if (s * w != lhs || s.order() != 3 || w.order() != 9 ||
        s.det() != f.one() || w.det() != f.one())
      fail(res, "SL(2,8) identity fails: " + str(s) + " * " + str(w) + " = " +
                    str(s * w));
    else
      res.witnesses.push_back("SL(2,8): " + str(lhs) + " = " + str(s) + " * " +
                              str(w) + ", factor orders 3,9");
  }
  res.elapsed_ms = t.ms();
  return res;
}

CheckResult check_counting_identities() {
  Timer t;
  auto res = start("counting_identities");
  using u128 = unsigned __int128;
  auto ipow = [](u128 b, int e) {
    u128 x = 1;
    while (e-- > 0)
      x *= b;
    return x;
  };
  auto to_str = [](u128 x) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    } while (x != 0);
    return s;
  };
  auto expect = [&](const std::string &what, u128 lhs, u128 rhs) {
    ++res.swept;
    if (lhs != rhs)
      fail(res, what + ": " + to_str(lhs) + " != " + to_str(rhs));
    else
      res.witnesses.push_back(what + " = " + to_str(lhs));
  };
  const u128 r = 8;
  expect("r=8 affine count (r^3+1) r^3 (r^2+r+1)(r-1)",
         (r * r * r + 1) * r * r * r * (r * r + r + 1) * (r - 1),
         ipow(2, 9) * ipow(3, 3) * 7 * 19 * 73);
  expect("|SU(3,64|8)| = 513*512*63", u128(513) * 512 * 63,
         ipow(2, 9) * ipow(3, 5) * 7 * 19);
  expect("su3_order(8)", matgrp::su3_order(8), u128(513) * 512 * 63);
  expect("|Ree(3)| = 28*27*2", u128(28) * 27 * 2, 1512);
  expect("family_order(Ree, 3)",
         permgrp::family_order(permgrp::Family::ree, 3), 1512);

  std::vector<std::pair<int, int>> sols;
  for (int d = 1; d <= 60; ++d)
    for (int m = 1; m <= 60; ++m) {
      ++res.swept;
      if (ipow(2, d) + 1 == ipow(3, m))
        sols.push_back({d, m});
    }
  const std::vector<std::pair<int, int>> want{{1, 1}, {3, 2}};
  std::string s;
  for (auto [d, m] : sols)
    s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(d) + "," +
         std::to_string(m) + ")";
  if (sols != want)
    fail(res, "2^d+1 = 3^m solutions: " + s);
  else
    res.witnesses.push_back("2^d+1 = 3^m for d,m <= 60: " + s);
  res.elapsed_ms = t.ms();
  return res;
}

// ---------------------------------------------------------------------------

const std::vector<CheckSpec> &registry() {
  static const std::vector<CheckSpec> specs{
      {"commutator_rootgroups", {4, 5, 7, 8, 9, 11, 13}, check_commutator_rootgroups},
      {"central_extension", {3, 5, 7, 11}, check_central_extension},
      {"su3_trace_conjugacy", {2, 3}, check_su3_trace_conjugacy},
      {"su3_root_decomposition", {2, 4}, check_su3_root_decomposition},
      {"su3_involution_product", {3, 5}, check_su3_involution_product},
      {"suzuki", {}, [](int) { return check_suzuki(); }},
      {"ree3", {}, [](int) { return check_ree3(); }},
      {"counting_identities", {}, [](int) { return check_counting_identities(); }},
  };
  return specs;
}

std::vector<CheckResult> run_check(const std::string &name,
                                   std::optional<int> param) {
  for (const auto &spec : registry()) {
    if (spec.name != name)
      continue;
    if (spec.params.empty()) {
      if (param)
        throw DomainError(name + " takes no parameter");
      return {spec.run(0)};
    }
    if (param)
      return {spec.run(*param)};
    std::vector<CheckResult> out;
    for (int p : spec.params)
      out.push_back(spec.run(p));
    return out;
  }
  throw DomainError("unknown zoo check " + name);
}

} // namespace unital::zoo
