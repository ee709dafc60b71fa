#include "unital/iso_search.hpp"

#include <limits>

namespace unital::design {

namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

class Search {
public:
  Search(const Unital &a, const Unital &b, const SearchLimits &limits)
      : a_(a), b_(b), limits_(limits), n_(a.point_count()),
        pmap_(n_, none), pinv_(n_, none), bmap_(a.block_count(), none),
        binv_(b.block_count(), none) {}

  bool force_block(std::size_t i, std::size_t j) {
    if (bmap_[i] == j)
      return true;
    if (bmap_[i] != none || binv_[j] != none)
      return false;
    set_block(i, j);
    return true;
  }

  bool force_point(Point x, Point y) {
    if (pmap_[x] == y)
      return true;
    if (pmap_[x] != none || pinv_[y] != none)
      return false;
    return assign(x, y);
  }

  SearchResult run() {
    recurse();
    result_.complete = !aborted_;
    return std::move(result_);
  }

private:
  void set_block(std::size_t i, std::size_t j) {
    bmap_[i] = j;
    binv_[j] = i;
    block_trail_.push_back(i);
  }

  bool assign(Point x, Point y) {
    // Blocks through x already mapped must receive y.
    for (auto bi : a_.blocks_through(x))
      if (bmap_[bi] != none && !b_.on_block(y, bmap_[bi]))
        return false;
    pmap_[x] = y;
    pinv_[y] = x;
    point_trail_.push_back(x);
    for (Point z = 0; z < n_; ++z) {
      if (z == x || pmap_[z] == none)
        continue;
      const std::size_t bi = a_.block_through(x, z);
      const std::size_t bj = b_.block_through(y, static_cast<Point>(pmap_[z]));
      if (bmap_[bi] == bj)
        continue;
      if (bmap_[bi] != none || binv_[bj] != none)
        return false;
      // Points of bi mapped earlier must land on bj.
      for (auto w : a_.block(bi))
        if (pmap_[w] != none && !b_.on_block(static_cast<Point>(pmap_[w]), bj))
          return false;
      set_block(bi, bj);
    }
    return true;
  }

  void undo(std::size_t points, std::size_t blocks) {
    while (point_trail_.size() > points) {
      const Point x = point_trail_.back();
      point_trail_.pop_back();
      pinv_[pmap_[x]] = none;
      pmap_[x] = none;
    }
    while (block_trail_.size() > blocks) {
      const std::size_t i = block_trail_.back();
      block_trail_.pop_back();
      binv_[bmap_[i]] = none;
      bmap_[i] = none;
    }
  }

  std::vector<Point> candidates(Point x) const {
    std::vector<char> ok(n_, 0);
    for (Point y = 0; y < n_; ++y)
      ok[y] = pinv_[y] == none;
    for (auto bi : a_.blocks_through(x)) {
      if (bmap_[bi] == none)
        continue;
      std::vector<char> in(n_, 0);
      for (auto y : b_.block(bmap_[bi]))
        in[y] = 1;
      for (Point y = 0; y < n_; ++y)
        ok[y] = ok[y] && in[y];
    }
    std::vector<Point> out;
    for (Point y = 0; y < n_; ++y)
      if (ok[y])
        out.push_back(y);
    return out;
  }

  bool done() const {
    return aborted_ || (limits_.max_solutions != 0 &&
                        result_.maps.size() >= limits_.max_solutions);
  }

  void recurse() {
    if (done())
      return;
    if (limits_.node_limit && result_.nodes >= limits_.node_limit) {
      aborted_ = true;
      return;
    }
    ++result_.nodes;
    Point best = 0;
    std::vector<Point> best_cands;
    bool found = false;
    for (Point x = 0; x < n_; ++x) {
      if (pmap_[x] != none)
        continue;
      auto c = candidates(x);
      if (!found || c.size() < best_cands.size()) {
        best = x;
        best_cands = std::move(c);
        found = true;
        if (best_cands.size() <= 1)
          break;
      }
    }
    if (!found) {
      std::vector<std::uint32_t> im(n_);
      for (Point x = 0; x < n_; ++x)
        im[x] = static_cast<std::uint32_t>(pmap_[x]);
      result_.maps.emplace_back(std::move(im));
      return;
    }
    for (auto y : best_cands) {
      const std::size_t pt = point_trail_.size(), bt = block_trail_.size();
      if (assign(best, y))
        recurse();
      undo(pt, bt);
      if (done())
        return;
    }
  }

  const Unital &a_;
  const Unital &b_;
  SearchLimits limits_;
  std::size_t n_;
  std::vector<std::size_t> pmap_, pinv_, bmap_, binv_;
  std::vector<Point> point_trail_;
  std::vector<std::size_t> block_trail_;
  SearchResult result_;
  bool aborted_ = false;
};

} // namespace

SearchResult find_isomorphisms(const Unital &a, const Unital &b,
                               const MapConstraints &constraints,
                               const SearchLimits &limits) {
  if (a.point_count() != b.point_count() || a.block_count() != b.block_count() ||
      a.q() != b.q())
    return {};
  Search s(a, b, limits);
  for (auto [i, j] : constraints.blocks)
    if (i >= a.block_count() || j >= b.block_count() || !s.force_block(i, j))
      return {};
  for (auto [x, y] : constraints.points)
    if (x >= a.point_count() || y >= b.point_count() || !s.force_point(x, y))
      return {};
  return s.run();
}

std::optional<permgrp::Perm> design_isomorphism(const Unital &a,
                                                const Unital &b) {
  auto r = find_isomorphisms(a, b);
  if (r.maps.empty())
    return std::nullopt;
  return r.maps.front();
}

std::vector<permgrp::Perm> automorphisms(const Unital &u) {
  SearchLimits all;
  all.max_solutions = 0;
  return find_isomorphisms(u, u, {}, all).maps;
}

} // namespace unital::design
