#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace unital::gf {

/// A field element, stored by its integer encoding: the base-p evaluation
/// of the coefficient vector (little-endian in the modulus root).
struct FieldElem {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// GF(p^e) with a fixed modulus. Immutable after construction; all lookups
/// are table driven.
///
/// Fields of even degree carry the quadratic-extension structure over the
/// subfield GF(p^(e/2)): conjugation x -> x^r, norm x -> x^(r+1) and the
/// relative trace x + conj(x), where r = p^(e/2).
class Field {
public:
  /// `modulus` is little-endian and monic of degree `e`. Throws
  /// ConstructionError when p is not prime or the modulus is reducible.
  Field(int p, int e, std::vector<int> modulus);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int size() const { return q_; }
  const std::vector<int> &modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem element(int index) const;
  FieldElem from_int(long long n) const;
  /// The root of the modulus (for e = 1 this is the constant root).
  FieldElem root() const;
  /// First element of multiplicative order q-1 in enumeration order.
  FieldElem primitive() const { return {exp_[1]}; }

  std::vector<int> coeffs(FieldElem x) const;
  FieldElem from_coeffs(std::span<const int> c) const;

  FieldElem add(FieldElem x, FieldElem y) const {
    if (p_ == 2)
      return {static_cast<std::uint16_t>(x.value ^ y.value)};
    if (!add_.empty())
      return {add_[x.value * q_ + y.value]};
    return add_slow(x, y);
  }
  FieldElem neg(FieldElem x) const { return {neg_[x.value]}; }
  FieldElem sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }
  FieldElem mul(FieldElem x, FieldElem y) const {
    if (x.value == 0 || y.value == 0)
      return {0};
    return {exp_[log_[x.value] + log_[y.value]]};
  }
  /// Throws DomainError on zero.
  FieldElem inv(FieldElem x) const;
  FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }
  FieldElem pow(FieldElem x, long long k) const;
  FieldElem frobenius(FieldElem x) const { return pow(x, p_); }

  /// Discrete logarithm to the base primitive(); x must be nonzero.
  int log(FieldElem x) const;
  std::uint64_t multiplicative_order(FieldElem x) const;

  bool has_conjugation() const { return e_ % 2 == 0; }
  /// r with size() == r^2; DomainError for odd degree.
  int subfield_size() const;
  FieldElem conj(FieldElem x) const;
  FieldElem norm(FieldElem x) const;
  FieldElem rel_trace(FieldElem x) const { return add(x, conj(x)); }
  bool in_subfield(FieldElem x) const;
  /// First element u in enumeration order with norm(u) == target.
  FieldElem solve_norm(FieldElem target) const;

  /// All elements in enumeration order (ascending encoding).
  std::vector<FieldElem> elements() const;

  std::string to_string(FieldElem x) const;

private:
  FieldElem add_slow(FieldElem x, FieldElem y) const;
  int slow_mul(int a, int b) const;
  void require_conjugation() const;

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> exp_; // length 2(q-1), exp_[k] = g^k
  std::vector<int> log_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> add_; // q*q when q <= 256
  std::vector<std::uint16_t> conj_;
};

bool is_prime(long long n);

/// Little-endian monic modulus for GF(p^e) from the built-in table (Conway
/// polynomials for e >= 2, the polynomial x for prime fields). Empty when
/// (p, e) is outside the table.
std::vector<int> builtin_modulus(int p, int e);

/// Irreducibility over GF(p) by trial division with all monic polynomials
/// of degree <= deg/2.
bool is_irreducible(int p, std::span<const int> poly);

/// Cached field from the built-in table; the reference stays valid for the
/// lifetime of the program. Thread safe.
const Field &make_field(int p, int e);

/// make_field for a prime power q.
const Field &field_of_order(int q);

/// Splits q = p^e; returns {0, 0} if q is not a prime power.
std::pair<int, int> prime_power(long long q);

} // namespace unital::gf
