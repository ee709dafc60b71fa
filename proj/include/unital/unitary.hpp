#pragma once

#include <cstdint>
#include <vector>

#include "unital/matgroup.hpp"
#include "unital/matrix.hpp"

namespace unital::matgrp {

/// Hermitian form h(x, y) = conj(x)^T G y on GF(r^2)^3.
class HermitianForm {
public:
  /// The antidiagonal form x0 conj(y2) + x1 conj(y1) + x2 conj(y0).
  static HermitianForm standard(const Field &f);
  /// Throws DomainError unless gram is 3x3, hermitian and nondegenerate.
  explicit HermitianForm(Matrix gram);

  const Matrix &gram() const { return gram_; }
  const Field &field() const { return gram_.field(); }
  bool is_standard() const;
  FieldElem evaluate(const std::vector<FieldElem> &x,
                     const std::vector<FieldElem> &y) const;

  /// C with conj(C)^T G C equal to the standard gram matrix; the columns
  /// are found by a first-hit scan, so C is deterministic.
  Matrix congruence_to_standard() const;

private:
  Matrix gram_;
};

/// conj(A)^T G A == G.
bool is_unitary(const Matrix &a, const HermitianForm &form);
/// is_unitary and det A == 1.
bool is_su3(const Matrix &a, const HermitianForm &form);
bool is_su3(const Matrix &a);

/// A matrix unitary for `form` rewritten in the standard basis.
Matrix to_standard(const Matrix &a, const HermitianForm &form);

/// [[1,u,v],[0,1,-conj(u)],[0,0,1]]; requires v + conj(v) == -u conj(u)
/// (DomainError otherwise). In characteristic 2 the signs disappear.
Matrix root_element(const Field &f, FieldElem u, FieldElem v);
bool is_root_pair(const Field &f, FieldElem u, FieldElem v);

/// [[1,0,0],[0,1,0],[1,0,1]]; unitary only in characteristic 2.
Matrix involution_j(const Field &f);

/// Trace equality for A, B in SU(3) whose orders divide r+1. Throws
/// DomainError when an order does not divide r+1.
bool trace_conjugacy_test(const Matrix &a, const Matrix &b, int r);

/// Generators of SU(3, r^2 | r) for the standard form: upper root
/// elements, their antidiagonal conjugates and a diagonal torus element.
std::vector<Matrix> su3_generators(int r);

/// Order (r^3+1) r^3 (r^2-1).
std::uint64_t su3_order(int r);

/// Cached SU(3, r^2 | r) with declared order su3_order(r).
const MatGroup &su3_group(int r);

struct JFDecomposition {
  Matrix x;          // c^-1 J F J c
  Matrix y;          // c^-1 F c
  Matrix f;          // F_{u,v}
  Matrix conjugator; // c with c^-1 (JF)^2 c == A^2
  FieldElem u;
  FieldElem v;
  bool fallback = false; // true when another u was needed
};

/// Writes A^2 as X Y with X^4 == Y^4 == 1 for r a power of 2 and A a
/// non-central element of SU(3, r^2|r) with A^(r+1) == 1. Throws
/// DomainError for central A or when the hypotheses fail.
JFDecomposition jf_decompose(const Matrix &a, int r);

/// Isotropic points of the standard form in PG(2, r^2), normalized with
/// last nonzero coordinate 1 and sorted by (x2, x1, x0) encodings. The
/// first r+1 points are those with x1 == 0.
std::vector<std::vector<FieldElem>> isotropic_points(const Field &f);

/// Integer key of a coordinate vector.
std::uint64_t vector_key(const Field &f, const std::vector<FieldElem> &v);

} // namespace unital::matgrp
