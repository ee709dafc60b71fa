#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "unital/gf.hpp"

namespace unital::matgrp {

using gf::Field;
using gf::FieldElem;

/// Square matrix of dimension 1..4 over a finite field. Value type; the
/// field is referenced, not owned (fields from make_field live forever).
class Matrix {
public:
  static constexpr int max_dim = 4;

  Matrix(const Field &field, int n);
  static Matrix identity(const Field &field, int n);
  static Matrix scalar(const Field &field, int n, FieldElem s);
  /// Rows of integer encodings (see gf::FieldElem).
  static Matrix from_rows(const Field &field,
                          std::initializer_list<std::initializer_list<int>> rows);
  static Matrix from_encoding(const Field &field, int n,
                              const std::vector<int> &row_major);

  int dim() const { return n_; }
  const Field &field() const { return *field_; }

  FieldElem operator()(int i, int j) const { return a_[i * max_dim + j]; }
  FieldElem &operator()(int i, int j) { return a_[i * max_dim + j]; }

  friend Matrix operator*(const Matrix &x, const Matrix &y);
  friend bool operator==(const Matrix &x, const Matrix &y) {
    return x.n_ == y.n_ && x.field_ == y.field_ && x.a_ == y.a_;
  }

  FieldElem trace() const;
  FieldElem det() const;
  Matrix inverse() const;
  Matrix transpose() const;
  /// Entrywise conj (x -> x^r) followed by transpose.
  Matrix conj_transpose() const;
  Matrix map_entries(const std::function<FieldElem(FieldElem)> &f) const;
  Matrix pow(long long k) const;
  Matrix scaled(FieldElem s) const;

  bool is_identity() const;
  bool is_scalar() const;
  std::uint64_t order() const;

  /// Row-major integer encodings.
  std::vector<int> encode() const;
  std::string to_string() const;
  std::size_t hash() const;

private:
  const Field *field_;
  int n_;
  std::array<FieldElem, max_dim * max_dim> a_{};
};

/// Row vector times matrix.
std::vector<FieldElem> row_times(const std::vector<FieldElem> &v,
                                 const Matrix &m);

/// Scales a nonzero vector so its last nonzero coordinate is 1.
std::vector<FieldElem> normalize_projective(const Field &f,
                                            std::vector<FieldElem> v);

/// det(X id - A) = X^3 + c2 X^2 + c1 X + c0 as {c0, c1, c2}.
std::array<FieldElem, 3> charpoly3(const Matrix &a);

/// Minimal polynomial is square-free with all roots in the field.
bool is_diagonalizable(const Matrix &a);

} // namespace unital::matgrp

template <> struct std::hash<unital::matgrp::Matrix> {
  std::size_t operator()(const unital::matgrp::Matrix &m) const {
    return m.hash();
  }
};
