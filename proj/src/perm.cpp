#include "unital/perm.hpp"

#include <numeric>
#include <sstream>

#include "unital/errors.hpp"

namespace unital::permgrp {

Perm::Perm(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x])
      throw DomainError("image list is not a permutation");
    hit[x] = true;
  }
}

Perm operator*(const Perm &g, const Perm &h) {
  if (g.degree() != h.degree())
    throw DomainError("permutation degree mismatch");
  Perm r;
  r.images_.resize(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x)
    r.images_[x] = h.images_[g.images_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    r.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t l = 1;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < degree(); ++x)
    c += images_[x] == x;
  return c;
}

std::vector<std::uint32_t> Perm::fixed_points() const {
  std::vector<std::uint32_t> out;
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] == x)
      out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t x = 0; x < degree(); ++x)
    os << (x ? " " : "") << images_[x];
  return os.str();
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace unital::permgrp
