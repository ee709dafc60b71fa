#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unital/matgroup.hpp"
#include "unital/permgrp.hpp"

namespace unital::matgrp {

using Point = std::vector<FieldElem>;

/// (1,0) followed by (x,1) for x in element order.
std::vector<Point> projective_line(const Field &f);

/// Permutation of `points` induced by x -> normalize(x M). Throws
/// DomainError when the image leaves the point set.
permgrp::Perm projective_perm(const Matrix &m, const std::vector<Point> &points);

/// Permutation group induced on `points` by the matrices.
permgrp::PermGroup projective_action(const std::vector<Matrix> &gens,
                                     const std::vector<Point> &points);

std::vector<Matrix> sl2_generators(const Field &f);

/// SL(2,q), declared order q(q^2-1).
MatGroup sl2_group(int q);
/// Unipotent upper triangular 3x3 matrices over GF(p), order p^3.
MatGroup heisenberg_group(int p);
/// Subgroup of SL(2,p) of order p^2-1 acting sharply transitively on the
/// nonzero vectors, for p in {3,5,7,11} (Q8, SL(2,3), the binary
/// octahedral group, SL(2,5)). First hit of a scan over generator pairs.
MatGroup sharply_transitive_complement(int p);
/// Sz(8) as 4x4 matrices over GF(8), declared order 29120.
MatGroup suzuki8_group();
/// Sz(8) on the 65 points of its ovoid.
permgrp::PermGroup suzuki8_permutations();
/// PSU(3, r) on the r^3+1 isotropic points.
permgrp::PermGroup psu3_permutations(int r);
/// PSL(2,q) on the projective line.
permgrp::PermGroup psl2_permutations(int q);
/// PGammaL(2,8) on the projective line, order 1512.
permgrp::PermGroup pgammal28_permutations();

using NamedGroup = std::variant<MatGroup, permgrp::PermGroup>;

/// Names: SL2, SU3, PSU3, Heisenberg (with parameter), Q8,
/// BinaryOctahedral, SL2(3)-in-SL2(5), SL2(5)-in-SL2(11), Sz(8),
/// PGammaL2(8). Orders are certified; unknown names or parameters throw
/// ConstructionError.
NamedGroup construct_named_group(std::string_view name, int param = 0);

std::vector<std::string> named_group_names();

} // namespace unital::matgrp
