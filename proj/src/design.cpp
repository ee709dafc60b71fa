#include "unital/design.hpp"

#include <algorithm>

namespace unital::design {

IncidenceStructure::IncidenceStructure(std::size_t point_count,
                                       std::vector<Block> blocks)
    : points_(point_count), blocks_(std::move(blocks)) {
  for (auto &b : blocks_) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw DomainError("block repeats a point");
    if (!b.empty() && b.back() >= points_)
      throw DomainError("block entry " + std::to_string(b.back()) +
                        " out of range");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

namespace {

int cube_root_order(std::size_t n) {
  for (int q = 2; static_cast<std::size_t>(q) * q * q + 1 <= n; ++q)
    if (static_cast<std::size_t>(q) * q * q + 1 == n)
      return q;
  return 0;
}

std::string join(const std::vector<Point> &v) {
  std::string s;
  for (auto x : v)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

} // namespace

Audit audit_unital(const IncidenceStructure &s) {
  Audit a;
  a.points = s.point_count();
  a.blocks = s.block_count();
  const std::size_t n = s.point_count();
  auto add = [&](std::string kind, std::vector<Point> w, std::string msg) {
    a.violations.push_back({std::move(kind), std::move(w), std::move(msg)});
  };

  int q = cube_root_order(n);
  if (q == 0) {
    add("point count", {}, std::to_string(n) + " is not q^3+1 for any q >= 2");
    if (!s.blocks().empty() && s.block(0).size() >= 3)
      q = static_cast<int>(s.block(0).size()) - 1;
  }
  a.q = q;
  if (q == 0) {
    a.valid = false;
    return a;
  }
  const std::size_t k = q + 1;
  const std::size_t want_blocks = static_cast<std::size_t>(q) * q * (q * q - q + 1);

  std::size_t bad_size = 0;
  for (std::size_t i = 0; i < s.block_count(); ++i)
    if (s.block(i).size() != k && bad_size++ == 0)
      add("block size", s.block(i),
          "block " + std::to_string(i) + " has " +
              std::to_string(s.block(i).size()) + " points, expected " +
              std::to_string(k));

  std::vector<std::uint16_t> cover(n * n, 0);
  std::vector<std::size_t> degree(n, 0);
  for (const auto &b : s.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      ++degree[b[i]];
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (cover[b[i] * n + b[j]] < 0xffff)
          ++cover[b[i] * n + b[j]];
    }
  }
  std::size_t uncovered = 0, multiple = 0;
  std::vector<Point> first_uncovered, first_multiple;
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) {
      const auto c = cover[x * n + y];
      if (c == 0 && uncovered++ == 0)
        first_uncovered = {x, y};
      if (c > 1 && multiple++ == 0)
        first_multiple = {x, y};
    }
  if (uncovered)
    add("pair uncovered", first_uncovered,
        "points " + join(first_uncovered) + " lie on no block (" +
            std::to_string(uncovered) + " pairs)");
  if (multiple)
    add("pair multiply covered", first_multiple,
        "points " + join(first_multiple) + " lie on several blocks (" +
            std::to_string(multiple) + " pairs)");

  const std::size_t want_degree = static_cast<std::size_t>(q) * q;
  for (Point x = 0; x < n; ++x)
    if (degree[x] != want_degree) {
      add("point degree", {x},
          "point " + std::to_string(x) + " is on " + std::to_string(degree[x]) +
              " blocks, expected " + std::to_string(want_degree));
      break;
    }
  if (s.block_count() != want_blocks)
    add("block count", {},
        std::to_string(s.block_count()) + " blocks, expected " +
            std::to_string(want_blocks));
  a.valid = a.violations.empty();
  return a;
}

UnitalViolation::UnitalViolation(Audit audit)
    : DomainError(audit.violations.empty()
                      ? std::string("not a unital")
                      : audit.violations.front().kind + ": " +
                            audit.violations.front().message),
      audit_(std::move(audit)) {}

Unital::Unital(IncidenceStructure s, int q) : s_(std::move(s)), q_(q) {
  const std::size_t n = s_.point_count();
  pair_block_.assign(n * n, 0);
  point_blocks_.assign(n, {});
  for (std::size_t i = 0; i < s_.block_count(); ++i) {
    const auto &b = s_.block(i);
    for (auto x : b) {
      point_blocks_[x].push_back(i);
      for (auto y : b)
        if (x != y)
          pair_block_[x * n + y] = static_cast<std::uint32_t>(i);
    }
  }
}

Unital verify_unital(IncidenceStructure s) {
  Audit a = audit_unital(s);
  if (!a.valid)
    throw UnitalViolation(std::move(a));
  return Unital(std::move(s), a.q);
}

std::size_t Unital::block_through(Point p1, Point p2) const {
  const std::size_t n = point_count();
  if (p1 >= n || p2 >= n)
    throw DomainError("point out of range");
  if (p1 == p2)
    throw DomainError("block_through needs two distinct points");
  return pair_block_[p1 * n + p2];
}

std::optional<std::size_t> Unital::find_block(const Block &b) const {
  if (b.size() < 2)
    return std::nullopt;
  const std::size_t i = block_through(b[0], b[1]);
  if (s_.block(i) == b)
    return i;
  return std::nullopt;
}

bool Unital::on_block(Point p, std::size_t block) const {
  const auto &b = s_.block(block);
  return std::binary_search(b.begin(), b.end(), p);
}

std::vector<std::size_t> block_action(const Unital &u,
                                      const permgrp::Perm &phi) {
  if (phi.degree() != u.point_count())
    throw DomainError("permutation degree does not match the unital");
  std::vector<std::size_t> out(u.block_count());
  for (std::size_t i = 0; i < u.block_count(); ++i) {
    const auto &b = u.block(i);
    const std::size_t j = u.block_through(phi[b[0]], phi[b[1]]);
    for (auto x : b)
      if (!u.on_block(phi[x], j))
        throw DomainError("block " + std::to_string(i) + " is not mapped to a block");
    out[i] = j;
  }
  return out;
}

bool is_automorphism(const Unital &u, const permgrp::Perm &phi) {
  if (phi.degree() != u.point_count())
    throw DomainError("permutation degree does not match the unital");
  for (const auto &b : u.blocks()) {
    const std::size_t j = u.block_through(phi[b[0]], phi[b[1]]);
    for (std::size_t t = 2; t < b.size(); ++t)
      if (!u.on_block(phi[b[t]], j))
        return false;
  }
  return true;
}

FixedPointCheck fixed_point_bound_check(const Unital &u,
                                        const permgrp::Perm &phi) {
  if (!is_automorphism(u, phi))
    throw DomainError("fixed point bound needs an automorphism");
  FixedPointCheck c;
  c.fixed = phi.fixed_point_count();
  c.bound = static_cast<std::size_t>(u.q() * u.q() + u.q() - 2);
  c.trivial = phi.is_identity();
  c.consistent = c.fixed <= c.bound || c.trivial;
  return c;
}

} // namespace unital::design
