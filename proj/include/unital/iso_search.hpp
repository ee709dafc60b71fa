#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "unital/design.hpp"

namespace unital::design {

/// Forced images for the search: point x must map to y, block i to block j.
struct MapConstraints {
  std::vector<std::pair<Point, Point>> points;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
};

struct SearchLimits {
  std::size_t max_solutions = 1; // 0 = all
  std::uint64_t node_limit = 0;  // 0 = unbounded
};

struct SearchResult {
  std::vector<permgrp::Perm> maps; // in discovery order
  bool complete = true;            // false when node_limit cut the search
  std::uint64_t nodes = 0;
};

/// Depth-first search for point bijections a -> b mapping blocks onto
/// blocks. The next point assigned is the one with the fewest candidate
/// images; candidates are tried in ascending order, so results are
/// deterministic.
SearchResult find_isomorphisms(const Unital &a, const Unital &b,
                               const MapConstraints &constraints = {},
                               const SearchLimits &limits = {});

/// First isomorphism found, or none.
std::optional<permgrp::Perm> design_isomorphism(const Unital &a,
                                                const Unital &b);

/// Every automorphism of u (use only for small unitals).
std::vector<permgrp::Perm> automorphisms(const Unital &u);

} // namespace unital::design
