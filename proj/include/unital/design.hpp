#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital/errors.hpp"
#include "unital/perm.hpp"

namespace unital::design {

using Point = std::uint32_t;
using Block = std::vector<Point>;

/// Point count plus a block list in canonical form: each block strictly
/// increasing, blocks sorted lexicographically.
class IncidenceStructure {
public:
  /// Sorts blocks into canonical form. Throws DomainError on out-of-range
  /// entries or repeated points inside a block.
  IncidenceStructure(std::size_t point_count, std::vector<Block> blocks);

  std::size_t point_count() const { return points_; }
  const std::vector<Block> &blocks() const { return blocks_; }
  const Block &block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_count() const { return blocks_.size(); }

  friend bool operator==(const IncidenceStructure &,
                         const IncidenceStructure &) = default;

private:
  std::size_t points_;
  std::vector<Block> blocks_;
};

struct Violation {
  std::string kind; // e.g. "pair uncovered"
  std::vector<Point> witness;
  std::string message;
};

struct Audit {
  bool valid = false;
  int q = 0; // inferred order, 0 when none fits
  std::size_t points = 0;
  std::size_t blocks = 0;
  std::vector<Violation> violations;
};

/// Checks every unital axiom and lists each violated one with a witness
/// (the first offending pair, point or block in scan order).
Audit audit_unital(const IncidenceStructure &s);

/// Thrown by verify_unital; carries the full audit.
class UnitalViolation : public DomainError {
public:
  explicit UnitalViolation(Audit audit);
  const Audit &audit() const { return audit_; }

private:
  Audit audit_;
};

/// A validated 2-(q^3+1, q+1, 1) design with a pair-to-block table.
class Unital {
public:
  int q() const { return q_; }
  const IncidenceStructure &structure() const { return s_; }
  std::size_t point_count() const { return s_.point_count(); }
  std::size_t block_count() const { return s_.block_count(); }
  const std::vector<Block> &blocks() const { return s_.blocks(); }
  const Block &block(std::size_t i) const { return s_.block(i); }

  /// Index of the unique block through p1 and p2; DomainError if equal.
  std::size_t block_through(Point p1, Point p2) const;
  /// Indices of the q^2 blocks through p, ascending.
  const std::vector<std::size_t> &blocks_through(Point p) const {
    return point_blocks_.at(p);
  }
  /// Index of a block given as a sorted point list, if present.
  std::optional<std::size_t> find_block(const Block &b) const;
  bool on_block(Point p, std::size_t block) const;

private:
  friend Unital verify_unital(IncidenceStructure s);
  Unital(IncidenceStructure s, int q);

  IncidenceStructure s_;
  int q_;
  std::vector<std::uint32_t> pair_block_; // n*n, diagonal unused
  std::vector<std::vector<std::size_t>> point_blocks_;
};

/// Throws UnitalViolation listing all violations.
Unital verify_unital(IncidenceStructure s);

/// Throws DomainError on degree mismatch.
bool is_automorphism(const Unital &u, const permgrp::Perm &phi);

/// Image block index for each block under an automorphism.
std::vector<std::size_t> block_action(const Unital &u, const permgrp::Perm &phi);

struct FixedPointCheck {
  std::size_t fixed = 0;
  std::size_t bound = 0;  // q^2 + q - 2
  bool trivial = false;   // phi is the identity
  bool consistent = false; // fixed > bound implies trivial
};

/// Throws DomainError when phi is not an automorphism.
FixedPointCheck fixed_point_bound_check(const Unital &u,
                                        const permgrp::Perm &phi);

} // namespace unital::design
