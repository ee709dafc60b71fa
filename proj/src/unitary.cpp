#include "unital/unitary.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"

namespace unital::matgrp {

namespace {

Matrix antidiagonal(const Field &f) {
  Matrix g(f, 3);
  g(0, 2) = g(1, 1) = g(2, 0) = f.one();
  return g;
}

bool is_power_of_two(int r) { return r > 0 && (r & (r - 1)) == 0; }

const Field &quadratic_field(int r) {
  if (r < 2 || static_cast<long long>(r) * r > 4096)
    throw DomainError("unsupported subfield order " + std::to_string(r));
  const auto [p, e] = gf::prime_power(r);
  if (p == 0)
    throw DomainError(std::to_string(r) + " is not a prime power");
  return gf::make_field(p, 2 * e);
}

} // namespace

HermitianForm HermitianForm::standard(const Field &f) {
  return HermitianForm(antidiagonal(f));
}

HermitianForm::HermitianForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.dim() != 3)
    throw DomainError("hermitian form must be 3x3");
  if (!gram_.field().has_conjugation())
    throw DomainError("hermitian form needs a quadratic extension field");
  if (!(gram_.conj_transpose() == gram_))
    throw DomainError("gram matrix is not hermitian");
  if (gram_.det() == gram_.field().zero())
    throw DomainError("hermitian form is degenerate");
}

bool HermitianForm::is_standard() const {
  return gram_ == antidiagonal(gram_.field());
}

FieldElem HermitianForm::evaluate(const std::vector<FieldElem> &x,
                                  const std::vector<FieldElem> &y) const {
  const Field &f = field();
  FieldElem s = f.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      s = f.add(s, f.mul(f.mul(f.conj(x[i]), gram_(i, j)), y[j]));
  return s;
}

Matrix HermitianForm::congruence_to_standard() const {
  const Field &f = field();
  const int q = f.size();
  auto vec = [&](int code) {
    std::vector<FieldElem> v(3);
    for (int i = 0; i < 3; ++i) {
      v[i] = f.element(code % q);
      code /= q;
    }
    return v;
  };
  const int total = q * q * q;
  for (int a = 1; a < total; ++a) {
    const auto c0 = vec(a);
    if (evaluate(c0, c0) != f.zero())
      continue;
    for (int b = 1; b < total; ++b) {
      const auto c2 = vec(b);
      if (evaluate(c2, c2) != f.zero() || evaluate(c0, c2) != f.one())
        continue;
      for (int m = 1; m < total; ++m) {
        const auto c1 = vec(m);
        if (evaluate(c1, c1) == f.one() && evaluate(c0, c1) == f.zero() &&
            evaluate(c2, c1) == f.zero()) {
          Matrix c(f, 3);
          for (int i = 0; i < 3; ++i) {
            c(i, 0) = c0[i];
            c(i, 1) = c1[i];
            c(i, 2) = c2[i];
          }
          return c;
        }
      }
    }
  }
  throw InternalError("no standard basis found for hermitian form");
}

bool is_unitary(const Matrix &a, const HermitianForm &form) {
  if (a.dim() != 3 || &a.field() != &form.field())
    return false;
  return a.conj_transpose() * form.gram() * a == form.gram();
}

bool is_su3(const Matrix &a, const HermitianForm &form) {
  return is_unitary(a, form) && a.det() == a.field().one();
}

bool is_su3(const Matrix &a) {
  return a.dim() == 3 && a.field().has_conjugation() &&
         is_su3(a, HermitianForm::standard(a.field()));
}

Matrix to_standard(const Matrix &a, const HermitianForm &form) {
  if (!is_unitary(a, form))
    throw DomainError("matrix is not unitary for the given form");
  const Matrix c = form.congruence_to_standard();
  return c.inverse() * a * c;
}

bool is_root_pair(const Field &f, FieldElem u, FieldElem v) {
  return f.add(f.rel_trace(v), f.norm(u)) == f.zero();
}

Matrix root_element(const Field &f, FieldElem u, FieldElem v) {
  if (!is_root_pair(f, u, v))
    throw DomainError("root element parameters violate v + conj(v) = -N(u)");
  Matrix m = Matrix::identity(f, 3);
  m(0, 1) = u;
  m(0, 2) = v;
  m(1, 2) = f.neg(f.conj(u));
  return m;
}

Matrix involution_j(const Field &f) {
  Matrix m = Matrix::identity(f, 3);
  m(2, 0) = f.one();
  return m;
}

bool trace_conjugacy_test(const Matrix &a, const Matrix &b, int r) {
  if (!a.pow(r + 1).is_identity() || !b.pow(r + 1).is_identity())
    throw DomainError("element order does not divide r+1");
  return a.trace() == b.trace();
}

std::uint64_t su3_order(int r) {
  const std::uint64_t x = r;
  return (x * x * x + 1) * x * x * x * (x * x - 1);
}

std::vector<Matrix> su3_generators(int r) {
  const Field &f = quadratic_field(r);
  const Matrix w = antidiagonal(f);
  std::vector<Matrix> upper;
  for (FieldElem u : {f.one(), f.primitive(), f.zero()})
    for (auto v : f.elements())
      if (v != f.zero() && is_root_pair(f, u, v)) {
        upper.push_back(root_element(f, u, v));
        break;
      }
  std::vector<Matrix> gens = upper;
  for (const auto &m : upper)
    gens.push_back(w * m * w);
  const FieldElem mu = f.primitive();
  Matrix d(f, 3);
  d(0, 0) = mu;
  d(1, 1) = f.pow(mu, r - 1);
  d(2, 2) = f.inv(f.pow(mu, r));
  gens.push_back(d);
  return gens;
}

const MatGroup &su3_group(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<MatGroup>> cache;
  std::lock_guard lock(mu);
  auto &slot = cache[r];
  if (!slot) {
    const Field &f = quadratic_field(r);
    slot = std::make_unique<MatGroup>("SU3(" + std::to_string(r) + ")", f, 3,
                                      su3_generators(r), su3_order(r));
  }
  return *slot;
}

namespace {

using Orbit = std::unordered_map<Matrix, Matrix>;

std::shared_ptr<const Orbit> conjugation_orbit_cached(const Matrix &b, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const Orbit>>
      cache;
  const auto key = std::make_pair(r, b.encode());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  const auto &gens = su3_group(r).generators();
  auto orbit = std::make_shared<const Orbit>(
      conjugation_orbit(b, Matrix::identity(b.field(), 3), gens));
  std::lock_guard lock(mu);
  return cache.emplace(key, orbit).first->second;
}

} // namespace

JFDecomposition jf_decompose(const Matrix &a, int r) {
  if (!is_power_of_two(r))
    throw DomainError("jf_decompose needs r a power of 2");
  const Field &f = quadratic_field(r);
  if (&a.field() != &f || !is_su3(a))
    throw DomainError("matrix is not in SU(3, r^2|r)");
  if (a.is_scalar())
    throw DomainError("central element admits no decomposition");
  if (!a.pow(r + 1).is_identity())
    throw DomainError("A^(r+1) is not the identity");

  const Matrix a2 = a * a;
  const Matrix j = involution_j(f);
  const FieldElem v = f.add(a.trace(), f.one());
  const FieldElem target = f.rel_trace(v);
  const FieldElem first_u = f.solve_norm(target);

  std::vector<FieldElem> candidates{first_u};
  for (auto u : f.elements())
    if (u != first_u && f.norm(u) == target)
      candidates.push_back(u);

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Matrix fm = root_element(f, candidates[k], v);
    const Matrix jf = j * fm;
    const auto orbit = conjugation_orbit_cached(jf * jf, r);
    auto it = orbit->find(a2);
    if (it == orbit->end())
      continue;
    const Matrix &c = it->second;
    const Matrix ci = c.inverse();
    JFDecomposition out{ci * j * fm * j * c, ci * fm * c, fm, c,
                        candidates[k], v, k > 0};
    if (!(out.x * out.y == a2))
      throw InternalError("jf_decompose produced a wrong product");
    return out;
  }
  throw InternalError("no conjugate of A^2 of the form (J F)^2");
}

std::uint64_t vector_key(const Field &f, const std::vector<FieldElem> &v) {
  std::uint64_t key = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    key = key * static_cast<std::uint64_t>(f.size()) + it->value;
  return key;
}

std::vector<std::vector<FieldElem>> isotropic_points(const Field &f) {
  const HermitianForm form = HermitianForm::standard(f);
  const auto el = f.elements();
  std::vector<std::vector<FieldElem>> out;
  auto consider = [&](std::vector<FieldElem> x) {
    if (form.evaluate(x, x) == f.zero())
      out.push_back(std::move(x));
  };
  consider({f.one(), f.zero(), f.zero()});
  for (auto x0 : el)
    consider({x0, f.one(), f.zero()});
  for (auto x1 : el)
    for (auto x0 : el)
      consider({x0, x1, f.one()});
  return out;
}

} // namespace unital::matgrp
