#include "unital/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "unital/errors.hpp"

namespace unital::gf {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(static_cast<int>(n));
  return out;
}

// Remainder of a modulo a monic b over GF(p); little-endian, trimmed.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i] % p;
    if (c == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  a.resize(std::min<std::size_t>(a.size(), db));
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

} // namespace

bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::pair<int, int> prime_power(long long q) {
  if (q < 2)
    return {0, 0};
  const auto f = prime_factors(q);
  if (f.size() != 1)
    return {0, 0};
  int e = 0;
  while (q > 1) {
    q /= f[0];
    ++e;
  }
  return {f[0], e};
}

bool is_irreducible(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1)
    return false;
  if (deg == 1)
    return true;
  // Every monic divisor of degree d <= deg/2, enumerated by its low
  // coefficients.
  for (int d = 1; d <= deg / 2; ++d) {
    const int count = ipow(p, d);
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> div(d + 1);
      int t = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = t % p;
        t /= p;
      }
      div[d] = 1;
      if (poly_mod(std::vector<int>(poly.begin(), poly.end()), div, p).empty())
        return false;
    }
  }
  return true;
}

std::vector<int> builtin_modulus(int p, int e) {
  if (!is_prime(p) || e < 1)
    return {};
  if (e == 1)
    return {0, 1};
  // Conway polynomials, little-endian.
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  auto it = table.find({p, e});
  return it == table.end() ? std::vector<int>{} : it->second;
}

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  if (!is_prime(p))
    throw ConstructionError("characteristic " + std::to_string(p) +
                            " is not prime");
  if (e < 1 || e > 6)
    throw ConstructionError("extension degree must lie in 1..6");
  long long q = 1;
  for (int i = 0; i < e; ++i)
    q *= p;
  if (q > 4096)
    throw ConstructionError("field order exceeds 4096");
  q_ = static_cast<int>(q);
  if (static_cast<int>(modulus_.size()) != e + 1 || modulus_.back() != 1)
    throw ConstructionError("modulus must be monic of degree e");
  for (int c : modulus_)
    if (c < 0 || c >= p)
      throw ConstructionError("modulus coefficient out of range");
  if (!is_irreducible(p, modulus_))
    throw ConstructionError("modulus is reducible");

  neg_.resize(q_);
  for (int x = 0; x < q_; ++x) {
    auto c = coeffs(FieldElem{static_cast<std::uint16_t>(x)});
    for (auto &v : c)
      v = (p - v) % p;
    neg_[x] = from_coeffs(c).value;
  }
  if (p != 2 && q_ <= 256) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    for (int x = 0; x < q_; ++x)
      for (int y = 0; y < q_; ++y)
        add_[x * q_ + y] = add_slow(FieldElem{static_cast<std::uint16_t>(x)},
                                    FieldElem{static_cast<std::uint16_t>(y)})
                               .value;
  }

  // Primitive element: first g whose powers g^((q-1)/l) avoid 1.
  const auto ls = prime_factors(q_ - 1);
  auto slow_pow = [&](int g, long long k) {
    int r = 1;
    while (k-- > 0)
      r = slow_mul(r, g);
    return r;
  };
  int gen = -1;
  for (int g = 1; g < q_ && gen < 0; ++g) {
    bool ok = true;
    for (int l : ls)
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok)
      gen = g;
  }
  if (q_ == 2)
    gen = 1;
  exp_.resize(2 * static_cast<std::size_t>(q_ - 1) + 1);
  log_.assign(q_, -1);
  int cur = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = static_cast<std::uint16_t>(cur);
    log_[cur] = k;
    cur = slow_mul(cur, gen);
  }
  for (std::size_t k = q_ - 1; k < exp_.size(); ++k)
    exp_[k] = exp_[k - (q_ - 1)];
  // exp_[1] must be the generator even for GF(2).
  if (q_ == 2)
    exp_[1] = 1;

  if (e_ % 2 == 0) {
    const int r = ipow(p_, e_ / 2);
    conj_.resize(q_);
    for (int x = 0; x < q_; ++x)
      conj_[x] = pow(FieldElem{static_cast<std::uint16_t>(x)}, r).value;
  }
}

FieldElem Field::element(int index) const {
  if (index < 0 || index >= q_)
    throw DomainError("field element index out of range");
  return {static_cast<std::uint16_t>(index)};
}

FieldElem Field::from_int(long long n) const {
  return {static_cast<std::uint16_t>(((n % p_) + p_) % p_)};
}

FieldElem Field::root() const {
  if (e_ == 1)
    return from_int(-modulus_[0]);
  return {static_cast<std::uint16_t>(p_)};
}

std::vector<int> Field::coeffs(FieldElem x) const {
  std::vector<int> c(e_);
  int v = x.value;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElem Field::from_coeffs(std::span<const int> c) const {
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    v = v * p_ + ((c[i] % p_) + p_) % p_;
  return {static_cast<std::uint16_t>(v)};
}

FieldElem Field::add_slow(FieldElem x, FieldElem y) const {
  int a = x.value, b = y.value, r = 0, place = 1;
  for (int i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return {static_cast<std::uint16_t>(r)};
}

int Field::slow_mul(int a, int b) const {
  const auto ca = coeffs(FieldElem{static_cast<std::uint16_t>(a)});
  const auto cb = coeffs(FieldElem{static_cast<std::uint16_t>(b)});
  std::vector<int> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  auto red = poly_mod(prod, modulus_, p_);
  red.resize(e_, 0);
  return from_coeffs(red).value;
}

FieldElem Field::inv(FieldElem x) const {
  if (x.value == 0)
    throw DomainError("inversion of zero");
  return {exp_[(q_ - 1 - log_[x.value]) % (q_ - 1)]};
}

FieldElem Field::pow(FieldElem x, long long k) const {
  if (k < 0)
    return pow(inv(x), -k);
  if (k == 0)
    return one();
  if (x.value == 0)
    return zero();
  const long long l = (static_cast<long long>(log_[x.value]) * (k % (q_ - 1))) %
                      (q_ - 1);
  return {exp_[l]};
}

int Field::log(FieldElem x) const {
  if (x.value == 0)
    throw DomainError("logarithm of zero");
  return log_[x.value];
}

std::uint64_t Field::multiplicative_order(FieldElem x) const {
  const int l = log(x);
  return static_cast<std::uint64_t>((q_ - 1) / std::gcd(l, q_ - 1));
}

void Field::require_conjugation() const {
  if (e_ % 2 != 0)
    throw DomainError("GF(" + std::to_string(q_) +
                      ") is not a quadratic extension");
}

int Field::subfield_size() const {
  require_conjugation();
  return ipow(p_, e_ / 2);
}

FieldElem Field::conj(FieldElem x) const {
  require_conjugation();
  return {conj_[x.value]};
}

FieldElem Field::norm(FieldElem x) const {
  return mul(x, conj(x));
}

bool Field::in_subfield(FieldElem x) const { return conj(x) == x; }

FieldElem Field::solve_norm(FieldElem target) const {
  require_conjugation();
  if (!in_subfield(target))
    throw DomainError("norm target is not in the subfield");
  for (int i = 0; i < q_; ++i) {
    const FieldElem u{static_cast<std::uint16_t>(i)};
    if (norm(u) == target)
      return u;
  }
  throw InternalError("norm map not surjective");
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(q_);
  for (int i = 0; i < q_; ++i)
    out[i].value = static_cast<std::uint16_t>(i);
  return out;
}

std::string Field::to_string(FieldElem x) const {
  if (e_ == 1)
    return std::to_string(x.value);
  const auto c = coeffs(x);
  std::ostringstream os;
  bool first = true;
  for (int i = e_ - 1; i >= 0; --i) {
    if (c[i] == 0)
      continue;
    if (!first)
      os << "+";
    first = false;
    if (i == 0 || c[i] != 1)
      os << c[i];
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  if (first)
    os << "0";
  return os.str();
}

const Field &make_field(int p, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, e});
  if (it != cache.end())
    return *it->second;
  if (!is_prime(p))
    throw ConstructionError(std::to_string(p) + " is not prime");
  auto modulus = builtin_modulus(p, e);
  if (modulus.empty())
    throw ConstructionError("GF(" + std::to_string(p) + "^" +
                            std::to_string(e) + ") is not in the modulus table");
  auto f = std::make_unique<Field>(p, e, std::move(modulus));
  return *cache.emplace(std::make_pair(p, e), std::move(f)).first->second;
}

const Field &field_of_order(int q) {
  const auto [p, e] = prime_power(q);
  if (p == 0)
    throw ConstructionError(std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

} // namespace unital::gf
