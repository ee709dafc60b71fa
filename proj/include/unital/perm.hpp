#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace unital::permgrp {

/// Permutation of {0..n-1}. Groups act on the right: x^(gh) = (x^g)^h, so
/// (g * h)[x] == h[g[x]].
class Perm {
public:
  Perm() = default;
  /// Identity on n points.
  explicit Perm(std::size_t n);
  /// Throws DomainError if `images` is not a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t n) { return Perm(n); }

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t> &images() const { return images_; }

  friend Perm operator*(const Perm &g, const Perm &h);
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

  Perm inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t fixed_point_count() const;
  std::vector<std::uint32_t> fixed_points() const;

  std::string to_string() const;
  std::size_t hash() const;

private:
  std::vector<std::uint32_t> images_;
};

} // namespace unital::permgrp

template <> struct std::hash<unital::permgrp::Perm> {
  std::size_t operator()(const unital::permgrp::Perm &p) const {
    return p.hash();
  }
};
