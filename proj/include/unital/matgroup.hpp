#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "unital/matrix.hpp"

namespace unital::matgrp {

/// Matrix group given by generators. Elements are enumerated by
/// breadth-first closure on first use (capped at 2*10^5) and shared
/// between copies.
class MatGroup {
public:
  MatGroup(std::string name, const Field &field, int dim,
           std::vector<Matrix> generators,
           std::optional<std::uint64_t> declared_order = std::nullopt);

  const std::string &name() const { return name_; }
  const Field &field() const { return *field_; }
  int dim() const { return dim_; }
  const std::vector<Matrix> &generators() const { return gens_; }
  std::optional<std::uint64_t> declared_order() const { return declared_; }
  Matrix identity() const { return Matrix::identity(*field_, dim_); }

  const std::vector<Matrix> &elements() const;
  std::uint64_t order() const { return elements().size(); }
  bool contains(const Matrix &m) const;
  /// Position in elements(); throws DomainError for non-members.
  std::size_t index_of(const Matrix &m) const;

  /// Enumerates and compares with the declared order; throws
  /// ConstructionError on mismatch.
  void certify() const;

private:
  struct Cache {
    std::once_flag once;
    std::vector<Matrix> elems;
    std::unordered_map<Matrix, std::size_t> index;
  };

  std::string name_;
  const Field *field_;
  int dim_;
  std::vector<Matrix> gens_;
  std::optional<std::uint64_t> declared_;
  std::shared_ptr<Cache> cache_;
};

} // namespace unital::matgrp
