#include "unital/named_groups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"
#include "unital/unitary.hpp"

namespace unital::matgrp {

using permgrp::Perm;
using permgrp::PermGroup;

std::vector<Point> projective_line(const Field &f) {
  std::vector<Point> pts{{f.one(), f.zero()}};
  for (auto x : f.elements())
    pts.push_back({x, f.one()});
  return pts;
}

namespace {

std::unordered_map<std::uint64_t, std::uint32_t>
point_index(const Field &f, const std::vector<Point> &points) {
  std::unordered_map<std::uint64_t, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < points.size(); ++i)
    idx.emplace(vector_key(f, points[i]), i);
  return idx;
}

Perm induced(const Field &f, const std::vector<Point> &points,
             const std::unordered_map<std::uint64_t, std::uint32_t> &idx,
             const std::function<Point(const Point &)> &map) {
  std::vector<std::uint32_t> im;
  im.reserve(points.size());
  for (const auto &p : points) {
    auto it = idx.find(vector_key(f, normalize_projective(f, map(p))));
    if (it == idx.end())
      throw DomainError("image point outside the point set");
    im.push_back(it->second);
  }
  return Perm(std::move(im));
}

void certify_order(const PermGroup &g, std::uint64_t expected,
                   const std::string &what) {
  if (g.order() != expected)
    throw ConstructionError(what + ": order " + std::to_string(g.order()) +
                            " differs from " + std::to_string(expected));
}

} // namespace

Perm projective_perm(const Matrix &m, const std::vector<Point> &points) {
  const Field &f = m.field();
  return induced(f, points, point_index(f, points),
                 [&](const Point &p) { return row_times(p, m); });
}

PermGroup projective_action(const std::vector<Matrix> &gens,
                            const std::vector<Point> &points) {
  std::vector<Perm> perms;
  if (!gens.empty()) {
    const Field &f = gens[0].field();
    const auto idx = point_index(f, points);
    for (const auto &m : gens)
      perms.push_back(induced(f, points, idx,
                              [&](const Point &p) { return row_times(p, m); }));
  }
  return PermGroup(points.size(), perms);
}

std::vector<Matrix> sl2_generators(const Field &f) {
  auto up = Matrix::identity(f, 2);
  up(0, 1) = f.one();
  auto low = Matrix::identity(f, 2);
  low(1, 0) = f.one();
  std::vector<Matrix> gens{up, low};
  if (f.size() > 3) {
    Matrix d(f, 2);
    d(0, 0) = f.primitive();
    d(1, 1) = f.inv(f.primitive());
    gens.push_back(d);
  }
  return gens;
}

MatGroup sl2_group(int q) {
  const Field &f = gf::field_of_order(q);
  const std::uint64_t x = q;
  MatGroup g("SL2(" + std::to_string(q) + ")", f, 2, sl2_generators(f),
             x * (x * x - 1));
  g.certify();
  return g;
}

MatGroup heisenberg_group(int p) {
  if (!gf::is_prime(p))
    throw ConstructionError("Heisenberg group needs a prime");
  const Field &f = gf::make_field(p, 1);
  auto a = Matrix::identity(f, 3);
  a(0, 1) = f.one();
  auto b = Matrix::identity(f, 3);
  b(1, 2) = f.one();
  const std::uint64_t x = p;
  MatGroup g("Heisenberg(" + std::to_string(p) + ")", f, 3, {a, b}, x * x * x);
  g.certify();
  return g;
}

MatGroup sharply_transitive_complement(int p) {
  static const std::map<int, std::string> names{{3, "Q8"},
                                                {5, "SL2(3)-in-SL2(5)"},
                                                {7, "BinaryOctahedral"},
                                                {11, "SL2(5)-in-SL2(11)"}};
  auto nit = names.find(p);
  if (nit == names.end())
    throw ConstructionError("no sharply transitive complement table entry for p=" +
                            std::to_string(p));
  const Field &f = gf::make_field(p, 1);
  const std::size_t target = static_cast<std::size_t>(p * p - 1);
  const FieldElem two = f.from_int(2);
  const auto sl2 = closure(Matrix::identity(f, 2), sl2_generators(f));
  std::vector<Matrix> fpf;
  for (const auto &m : sl2)
    if (m.trace() != two)
      fpf.push_back(m);
  const Matrix id = Matrix::identity(f, 2);
  auto has_fixed_vector = [&](const Matrix &m) {
    return m.trace() == two && !m.is_identity();
  };
  for (std::size_t i = 0; i < fpf.size(); ++i)
    for (std::size_t j = i + 1; j < fpf.size(); ++j) {
      auto h = bounded_closure(id, {fpf[i], fpf[j]}, target, has_fixed_vector);
      if (h && h->size() == target) {
        MatGroup g(nit->second, f, 2, {fpf[i], fpf[j]}, target);
        g.certify();
        return g;
      }
    }
  throw InternalError("no sharply transitive subgroup found");
}

namespace {

Matrix suzuki_t(const Field &f, FieldElem a, FieldElem b) {
  auto th = [&](FieldElem x) { return f.pow(x, 4); };
  Matrix m = Matrix::identity(f, 4);
  m(1, 0) = a;
  m(2, 0) = b;
  m(2, 1) = th(a);
  m(3, 0) = f.add(f.add(f.mul(f.mul(a, a), th(a)), f.mul(a, b)), th(b));
  m(3, 1) = f.add(f.mul(a, th(a)), b);
  m(3, 2) = a;
  return m;
}

} // namespace

MatGroup suzuki8_group() {
  const Field &f = gf::make_field(2, 3);
  const FieldElem l = f.primitive();
  Matrix d(f, 4);
  d(0, 0) = f.pow(l, 3);
  d(1, 1) = f.pow(l, 2);
  d(2, 2) = f.inv(f.pow(l, 2));
  d(3, 3) = f.inv(f.pow(l, 3));
  Matrix w(f, 4);
  for (int i = 0; i < 4; ++i)
    w(i, 3 - i) = f.one();
  MatGroup g("Sz(8)", f, 4,
             {suzuki_t(f, f.one(), f.zero()), suzuki_t(f, f.zero(), f.one()), d,
              w},
             29120);
  g.certify();
  return g;
}

PermGroup suzuki8_permutations() {
  const MatGroup g = suzuki8_group();
  const Field &f = g.field();
  std::vector<Point> pts{{f.one(), f.zero(), f.zero(), f.zero()}};
  std::unordered_map<std::uint64_t, std::size_t> seen{{vector_key(f, pts[0]), 0}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (const auto &m : g.generators()) {
      auto y = normalize_projective(f, row_times(pts[i], m));
      if (seen.emplace(vector_key(f, y), pts.size()).second)
        pts.push_back(std::move(y));
    }
  std::sort(pts.begin(), pts.end(), [&](const Point &a, const Point &b) {
    return vector_key(f, a) < vector_key(f, b);
  });
  auto out = projective_action(g.generators(), pts);
  certify_order(out, 29120, "Sz(8) on the ovoid");
  return out;
}

PermGroup psu3_permutations(int r) {
  const auto &su = su3_group(r);
  const std::uint64_t center = (r + 1) % 3 == 0 ? 3 : 1;
  auto out = projective_action(su.generators(), isotropic_points(su.field()));
  certify_order(out, su3_order(r) / center, "PSU3(" + std::to_string(r) + ")");
  return out;
}

PermGroup psl2_permutations(int q) {
  const Field &f = gf::field_of_order(q);
  auto out = projective_action(sl2_generators(f), projective_line(f));
  const std::uint64_t x = q;
  certify_order(out, x * (x * x - 1) / (q % 2 == 0 ? 1 : 2),
                "PSL2(" + std::to_string(q) + ")");
  return out;
}

PermGroup pgammal28_permutations() {
  const Field &f = gf::make_field(2, 3);
  const auto pts = projective_line(f);
  const auto idx = point_index(f, pts);
  std::vector<Perm> gens;
  for (const auto &m : sl2_generators(f))
    gens.push_back(induced(f, pts, idx,
                           [&](const Point &p) { return row_times(p, m); }));
  gens.push_back(induced(f, pts, idx, [&](const Point &p) {
    return Point{f.frobenius(p[0]), f.frobenius(p[1])};
  }));
  PermGroup out(pts.size(), gens);
  certify_order(out, 1512, "PGammaL2(8)");
  return out;
}

std::vector<std::string> named_group_names() {
  return {"SL2",     "SU3",  "PSU3",           "Heisenberg",
          "Q8",      "BinaryOctahedral",       "SL2(3)-in-SL2(5)",
          "SL2(5)-in-SL2(11)", "Sz(8)",         "PGammaL2(8)"};
}

NamedGroup construct_named_group(std::string_view name, int param) {
  try {
    if (name == "SL2")
      return sl2_group(param);
    if (name == "SU3") {
      MatGroup g = su3_group(param);
      g.certify();
      return g;
    }
    if (name == "PSU3")
      return psu3_permutations(param);
    if (name == "Heisenberg")
      return heisenberg_group(param);
    if (name == "Q8")
      return sharply_transitive_complement(3);
    if (name == "SL2(3)-in-SL2(5)")
      return sharply_transitive_complement(5);
    if (name == "BinaryOctahedral")
      return sharply_transitive_complement(7);
    if (name == "SL2(5)-in-SL2(11)")
      return sharply_transitive_complement(11);
    if (name == "Sz(8)")
      return suzuki8_group();
    if (name == "PGammaL2(8)")
      return pgammal28_permutations();
  } catch (const DomainError &e) {
    throw ConstructionError(std::string(name) + ": " + e.what());
  }
  throw ConstructionError("unknown group name " + std::string(name));
}

} // namespace unital::matgrp
