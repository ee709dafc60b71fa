#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unital/perm.hpp"

namespace unital::permgrp {

/// Permutation group with a base and strong generating set, built eagerly
/// by deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
public:
  /// `base_prefix` points are placed first in the base (redundant points
  /// are kept so that stabilizers of the prefix can be read off).
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::vector<std::uint32_t> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t> &base() const { return base_; }
  /// Basic orbit sizes along the base.
  std::vector<std::size_t> basic_orbit_sizes() const;

  bool contains(const Perm &g) const;

  /// All elements in a deterministic order; throws DomainError above `cap`.
  std::vector<Perm> elements(std::size_t cap = 200000) const;

  /// Orbit of x under the group, in BFS order.
  std::vector<std::uint32_t> orbit(std::uint32_t x) const;

  /// Pointwise stabilizer of the given points.
  PermGroup pointwise_stabilizer(const std::vector<std::uint32_t> &points) const;

  /// Some group element mapping base()[0] to y, when y is in that orbit.
  std::optional<Perm> transversal_element(std::uint32_t y) const;

  Perm identity() const { return Perm(degree_); }

private:
  struct Level {
    std::uint32_t point;
    std::vector<Perm> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::optional<Perm>> transversal; // indexed by point
  };

  void build_level_orbit(Level &level) const;
  /// Returns the residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Orbit partition of `domain` (or of all points when empty), each orbit
/// sorted, orbits ordered by least element. Orbits are full group orbits,
/// so points outside `domain` appear when `domain` is not invariant.
std::vector<std::vector<std::uint32_t>>
orbits(const PermGroup &g, const std::vector<std::uint32_t> &domain = {});

/// Every point of `domain` has a trivial stabilizer.
bool is_semiregular(const PermGroup &g,
                    const std::vector<std::uint32_t> &domain = {});

bool is_transitive(const PermGroup &g);
bool is_two_transitive(const PermGroup &g);

/// Image of a generator set under restriction to an invariant point set,
/// relabelled to 0..points.size()-1 in the given order. Throws DomainError
/// when the set is not invariant.
Perm restrict_perm(const Perm &p, const std::vector<std::uint32_t> &points);
PermGroup restrict_group(const PermGroup &g,
                         const std::vector<std::uint32_t> &points);

/// Normal closure of `subset` in `g`.
PermGroup normal_closure(const PermGroup &g, const std::vector<Perm> &subset);
PermGroup derived_subgroup(const PermGroup &g);
/// Elements commuting with all generators; needs full enumeration.
std::vector<Perm> center_elements(const PermGroup &g,
                                  std::size_t cap = 100000);

struct ConjugacyClass {
  Perm representative; // least element of the class in enumeration order
  std::size_t size;
  std::uint64_t element_order;
};

/// Classes ordered by representative enumeration index.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup &g,
                                              std::size_t cap = 100000);

struct StructureReport {
  std::uint64_t order = 0;
  std::optional<std::uint64_t> center_order;
  std::uint64_t derived_order = 0;
  bool perfect = false;
  std::optional<std::map<std::uint64_t, std::uint64_t>> order_histogram;
  std::optional<std::size_t> class_count;
  std::vector<std::string> omitted;
};

/// Center, histogram and class count are omitted (listed in `omitted`)
/// when the order exceeds `cap`.
StructureReport structure_report(const PermGroup &g, std::size_t cap = 100000);

/// First (s, t) in scan order with s * t == target.
template <class E>
std::optional<std::pair<E, E>> product_search(const E &target,
                                              const std::vector<E> &s_set,
                                              const std::vector<E> &t_set);

enum class Family { sharply_two_transitive, psl2, psu3, suzuki, ree, unknown };

std::string to_string(Family f);

struct RecognitionResult {
  Family family = Family::unknown;
  std::uint64_t parameter = 0; // q, f, 2^s or 3^r depending on family
  std::uint64_t degree = 0;
  std::uint64_t order = 0;
  std::vector<std::string> evidence;
};

/// Matches (degree, order) of a 2-transitive group against the finite
/// Moufang set families. Throws DomainError if `g` is not 2-transitive on
/// `degree` points.
RecognitionResult recognize_2transitive(const PermGroup &g, std::size_t degree);

/// Order formula of each family at a parameter, 0 when undefined.
std::uint64_t family_order(Family f, std::uint64_t parameter);
std::uint64_t family_degree(Family f, std::uint64_t parameter);

// ---------------------------------------------------------------------------

template <class E>
std::optional<std::pair<E, E>> product_search(const E &target,
                                              const std::vector<E> &s_set,
                                              const std::vector<E> &t_set) {
  std::unordered_map<E, std::size_t> t_index;
  for (std::size_t i = 0; i < t_set.size(); ++i)
    t_index.emplace(t_set[i], i);
  for (const auto &s : s_set) {
    // s * t == target  <=>  t == s^-1 * target
    const E t = s.inverse() * target;
    if (t_index.contains(t))
      return std::make_pair(s, t);
  }
  return std::nullopt;
}

} // namespace unital::permgrp
