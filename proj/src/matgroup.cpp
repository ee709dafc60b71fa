#include "unital/matgroup.hpp"

#include "unital/errors.hpp"
#include "unital/group_algo.hpp"

namespace unital::matgrp {

MatGroup::MatGroup(std::string name, const Field &field, int dim,
                   std::vector<Matrix> generators,
                   std::optional<std::uint64_t> declared_order)
    : name_(std::move(name)), field_(&field), dim_(dim),
      gens_(std::move(generators)), declared_(declared_order),
      cache_(std::make_shared<Cache>()) {
  for (const auto &g : gens_)
    if (g.dim() != dim_ || &g.field() != field_)
      throw DomainError("generator shape or field mismatch in " + name_);
}

const std::vector<Matrix> &MatGroup::elements() const {
  std::call_once(cache_->once, [this] {
    cache_->elems = closure(identity(), gens_, 200000);
    cache_->index = index_elements(cache_->elems);
  });
  return cache_->elems;
}

bool MatGroup::contains(const Matrix &m) const {
  elements();
  return cache_->index.contains(m);
}

std::size_t MatGroup::index_of(const Matrix &m) const {
  elements();
  auto it = cache_->index.find(m);
  if (it == cache_->index.end())
    throw DomainError("matrix is not an element of " + name_);
  return it->second;
}

void MatGroup::certify() const {
  if (declared_ && order() != *declared_)
    throw ConstructionError(name_ + ": enumerated order " +
                            std::to_string(order()) + " differs from " +
                            std::to_string(*declared_));
}

} // namespace unital::matgrp
