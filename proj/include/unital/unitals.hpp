#pragma once

#include <array>
#include <vector>

#include "unital/design.hpp"
#include "unital/matrix.hpp"

namespace unital::unitals {

/// Hermitian unital of order q in {2,3,4,5}: isotropic points of the
/// antidiagonal form on PG(2,q^2) cut by secant lines. Points 0..q form
/// the block on the line x1 = 0. Throws ConstructionError for other q.
design::Unital hermitian_unital(int q);

/// The block {0, ..., q} of hermitian_unital(q).
design::Block hermitian_b_infinity(int q);

/// Homogeneous coordinates of the points of hermitian_unital(q).
std::vector<std::vector<gf::FieldElem>> hermitian_points(int q);

struct Sl23Construction {
  design::Unital unital;
  std::vector<matgrp::Matrix> elements;   // affine point i is elements[i]
  std::vector<std::array<std::size_t, 3>> sylow3; // element indices per subgroup
  std::vector<std::size_t> s;             // the cyclic subgroup S of order 4
  std::array<std::size_t, 4> d;           // the set D, identity first
  std::array<std::size_t, 4> census;      // B_inf, coset blocks, S cosets, D translates
  design::Block b_infinity;               // {24, 25, 26, 27}
  std::size_t candidates_scanned = 0;
};

/// Rebuilds the order-3 unital from SL(2,3) acting on itself by right
/// multiplication: 24 affine points, 4 points at infinity (one per Sylow
/// 3-subgroup T, joined to the left cosets gT), the right cosets of S and
/// the right translates of the first admissible D in lexicographic scan
/// order. Throws InternalError if no D exists.
Sl23Construction sl23_construction();
design::Unital sl23_unital_search();

} // namespace unital::unitals
