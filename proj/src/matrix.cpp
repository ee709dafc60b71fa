#include "unital/matrix.hpp"

#include <sstream>

#include "unital/errors.hpp"

namespace unital::matgrp {

Matrix::Matrix(const Field &field, int n) : field_(&field), n_(n) {
  if (n < 1 || n > max_dim)
    throw DomainError("matrix dimension must lie in 1..4");
}

Matrix Matrix::identity(const Field &field, int n) {
  return scalar(field, n, field.one());
}

Matrix Matrix::scalar(const Field &field, int n, FieldElem s) {
  Matrix m(field, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = s;
  return m;
}

Matrix Matrix::from_rows(
    const Field &field, std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(field, static_cast<int>(rows.size()));
  int i = 0;
  for (const auto &row : rows) {
    if (static_cast<int>(row.size()) != m.n_)
      throw DomainError("matrix rows must be square");
    int j = 0;
    for (int v : row)
      m(i, j++) = field.element(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_encoding(const Field &field, int n,
                             const std::vector<int> &row_major) {
  if (static_cast<int>(row_major.size()) != n * n)
    throw DomainError("matrix encoding has wrong length");
  Matrix m(field, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = field.element(row_major[i * n + j]);
  return m;
}

Matrix operator*(const Matrix &x, const Matrix &y) {
  if (x.n_ != y.n_ || x.field_ != y.field_)
    throw DomainError("matrix shape or field mismatch");
  const Field &f = *x.field_;
  Matrix r(f, x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int j = 0; j < x.n_; ++j) {
      FieldElem s = f.zero();
      for (int k = 0; k < x.n_; ++k)
        s = f.add(s, f.mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

FieldElem Matrix::trace() const {
  FieldElem s = field_->zero();
  for (int i = 0; i < n_; ++i)
    s = field_->add(s, (*this)(i, i));
  return s;
}

FieldElem Matrix::det() const {
  // Gaussian elimination on a copy.
  const Field &f = *field_;
  Matrix m = *this;
  FieldElem d = f.one();
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (m(r, c) != f.zero()) {
        piv = r;
        break;
      }
    if (piv < 0)
      return f.zero();
    if (piv != c) {
      for (int j = 0; j < n_; ++j)
        std::swap(m(c, j), m(piv, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const FieldElem inv = f.inv(m(c, c));
    for (int r = c + 1; r < n_; ++r) {
      const FieldElem factor = f.mul(m(r, c), inv);
      if (factor == f.zero())
        continue;
      for (int j = c; j < n_; ++j)
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  const Field &f = *field_;
  Matrix m = *this;
  Matrix inv = identity(f, n_);
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (m(r, c) != f.zero()) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw DomainError("matrix is singular");
    for (int j = 0; j < n_; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const FieldElem s = f.inv(m(c, c));
    for (int j = 0; j < n_; ++j) {
      m(c, j) = f.mul(m(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c || m(r, c) == f.zero())
        continue;
      const FieldElem factor = m(r, c);
      for (int j = 0; j < n_; ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(*field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t(j, i) = field_->conj((*this)(i, j));
  return t;
}

Matrix Matrix::map_entries(const std::function<FieldElem(FieldElem)> &fn) const {
  Matrix t(*field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t(i, j) = fn((*this)(i, j));
  return t;
}

Matrix Matrix::pow(long long k) const {
  if (k < 0)
    return inverse().pow(-k);
  Matrix result = identity(*field_, n_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::scaled(FieldElem s) const {
  return map_entries([&](FieldElem x) { return field_->mul(s, x); });
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? field_->one() : field_->zero()))
        return false;
  return true;
}

bool Matrix::is_scalar() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? (*this)(0, 0) : field_->zero()))
        return false;
  return true;
}

std::uint64_t Matrix::order() const {
  if (det() == field_->zero())
    throw DomainError("singular matrix has no order");
  std::uint64_t k = 1;
  Matrix h = *this;
  while (!h.is_identity()) {
    h = h * *this;
    ++k;
  }
  return k;
}

std::vector<int> Matrix::encode() const {
  std::vector<int> out;
  out.reserve(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      out.push_back((*this)(i, j).value);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j)
      os << (j ? "," : "") << (*this)(i, j).value;
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t Matrix::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      h ^= (*this)(i, j).value;
      h *= 1099511628211ull;
    }
  return h;
}

std::vector<FieldElem> row_times(const std::vector<FieldElem> &v,
                                 const Matrix &m) {
  const Field &f = m.field();
  std::vector<FieldElem> out(m.dim(), f.zero());
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i)
      out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  return out;
}

std::vector<FieldElem> normalize_projective(const Field &f,
                                            std::vector<FieldElem> v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] != f.zero()) {
      const FieldElem s = f.inv(v[i]);
      for (auto &x : v)
        x = f.mul(x, s);
      return v;
    }
  }
  throw DomainError("zero vector has no projective point");
}

std::array<FieldElem, 3> charpoly3(const Matrix &a) {
  if (a.dim() != 3)
    throw DomainError("charpoly3 needs a 3x3 matrix");
  const Field &f = a.field();
  FieldElem minors = f.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      minors = f.add(minors, f.sub(f.mul(a(i, i), a(j, j)),
                                   f.mul(a(i, j), a(j, i))));
  return {f.neg(a.det()), minors, f.neg(a.trace())};
}

bool is_diagonalizable(const Matrix &a) {
  const Field &f = a.field();
  const int n = a.dim();
  Matrix prod = Matrix::identity(f, n);
  int roots = 0;
  for (auto lambda : f.elements()) {
    Matrix shifted = a;
    for (int i = 0; i < n; ++i)
      shifted(i, i) = f.sub(shifted(i, i), lambda);
    if (shifted.det() != f.zero())
      continue;
    ++roots;
    prod = prod * shifted;
  }
  if (roots == 0)
    return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (prod(i, j) != f.zero())
        return false;
  return true;
}

} // namespace unital::matgrp
