#pragma once

// Element-type agnostic algorithms for small finite groups given by
// generators. An element type E must provide operator*, operator==,
// inverse(), is_identity() and a std::hash specialization.

#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "unital/errors.hpp"

namespace unital {

/// Breadth-first closure under right multiplication by generators. The
/// identity must be supplied since it cannot be derived from an empty
/// generator list. Throws ConstructionError when `cap` is exceeded.
template <class E>
std::vector<E> closure(const E &identity, const std::vector<E> &gens,
                       std::size_t cap = 200000) {
  std::vector<E> elems{identity};
  std::unordered_map<E, std::size_t> seen{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : gens) {
      E h = elems[i] * g;
      if (seen.try_emplace(h, elems.size()).second) {
        elems.push_back(std::move(h));
        if (elems.size() > cap)
          throw ConstructionError("group closure exceeded element cap " +
                                  std::to_string(cap));
      }
    }
  }
  return elems;
}

/// As closure() but returns std::nullopt instead of throwing, and aborts
/// early when `reject` holds for some element.
template <class E, class Reject>
std::optional<std::vector<E>> bounded_closure(const E &identity,
                                              const std::vector<E> &gens,
                                              std::size_t cap, Reject reject) {
  std::vector<E> elems{identity};
  std::unordered_map<E, std::size_t> seen{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : gens) {
      E h = elems[i] * g;
      if (seen.try_emplace(h, elems.size()).second) {
        if (reject(h) || elems.size() + 1 > cap)
          return std::nullopt;
        elems.push_back(std::move(h));
      }
    }
  }
  return elems;
}

template <class E> std::uint64_t element_order(const E &g) {
  std::uint64_t k = 1;
  E h = g;
  while (!h.is_identity()) {
    h = h * g;
    ++k;
  }
  return k;
}

template <class E> E power(const E &g, const E &identity, std::uint64_t k) {
  E result = identity;
  E base = g;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

template <class E> E commutator(const E &a, const E &b) {
  return a.inverse() * b.inverse() * a * b;
}

/// Index map for a fully enumerated group.
template <class E>
std::unordered_map<E, std::size_t> index_elements(const std::vector<E> &elems) {
  std::unordered_map<E, std::size_t> idx;
  idx.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    idx.emplace(elems[i], i);
  return idx;
}

/// Conjugacy class id per element (classes numbered by least member index).
/// Classes are orbits of x -> g^-1 x g over the generators.
template <class E>
std::vector<std::size_t> conjugacy_class_ids(const std::vector<E> &elems,
                                             const std::vector<E> &gens) {
  const auto idx = index_elements(elems);
  std::vector<E> gen_inv;
  for (const auto &g : gens)
    gen_inv.push_back(g.inverse());
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(elems.size(), unset);
  std::size_t next = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] != unset)
      continue;
    cls[i] = next;
    std::deque<std::size_t> queue{i};
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const E c = gen_inv[k] * elems[j] * gens[k];
        const std::size_t m = idx.at(c);
        if (cls[m] == unset) {
          cls[m] = next;
          queue.push_back(m);
        }
      }
    }
    ++next;
  }
  return cls;
}

/// Orbit of `x` under conjugation, with for each member y an element c
/// satisfying c^-1 x c == y.
template <class E>
std::unordered_map<E, E> conjugation_orbit(const E &x, const E &identity,
                                           const std::vector<E> &gens) {
  std::unordered_map<E, E> orbit{{x, identity}};
  std::deque<E> queue{x};
  std::vector<E> gen_inv;
  for (const auto &g : gens)
    gen_inv.push_back(g.inverse());
  while (!queue.empty()) {
    const E y = queue.front();
    queue.pop_front();
    const E cy = orbit.at(y);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      E z = gen_inv[k] * y * gens[k];
      if (orbit.try_emplace(z, cy * gens[k]).second)
        queue.push_back(std::move(z));
    }
  }
  return orbit;
}

} // namespace unital
