#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "unital/design.hpp"
#include "unital/permgrp.hpp"

namespace unital::translations {

using design::Point;
using design::Unital;
using permgrp::Perm;
using permgrp::PermGroup;

/// All automorphisms fixing every block through `center`.
struct TranslationGroup {
  Point center = 0;
  std::vector<Perm> elements; // identity first, then discovery order
  bool complete = true;       // false when the node limit cut the search

  std::size_t order() const { return elements.size(); }
};

/// Exhaustive backtracking with the pencil at z mapped onto itself.
/// `node_limit` 0 means unbounded.
TranslationGroup translation_group(const Unital &u, Point z,
                                   std::uint64_t node_limit = 0);

/// Group generated by two translation groups on all points; the base
/// starts with the block joining the centers. Throws DomainError when a
/// group is trivial or the centers coincide.
PermGroup generated_group(const Unital &u, const TranslationGroup &t1,
                          const TranslationGroup &t2);
PermGroup generated_group(const Unital &u, Point z1, Point z2);

/// Root-group conditions on the block `block`: groups[i] belongs to the
/// i-th point of the block, must fix it, act regularly on the other
/// points, and the family must be closed under conjugation by the group
/// the restrictions generate.
bool moufang_check(const Unital &u, std::size_t block,
                   const std::vector<TranslationGroup> &groups);

struct ClassificationReport {
  std::string family; // SL2, PSL2, Sz, Ree, hermitian-small or unknown
  int q = 0;
  std::uint64_t order_g = 0;
  std::uint64_t order_center = 0;
  std::uint64_t order_kernel = 0;
  std::size_t degree_b_infinity = 0;
  bool semiregular = false;
  bool kernel_semiregular = false;
  bool kernel_is_center = false;
  permgrp::RecognitionResult little_projective;
  std::vector<std::string> evidence;
};

/// Requires |T_z1| = |T_z2| = q (DomainError otherwise).
ClassificationReport classify(const Unital &u, Point z1, Point z2);

/// Keys: family, q, order_G, order_center, degree_B_infinity,
/// semiregular, kernel_semiregular, evidence.
nlohmann::ordered_json to_json(const ClassificationReport &r);

} // namespace unital::translations
