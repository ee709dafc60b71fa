#pragma once

#include <stdexcept>
#include <string>

namespace unital {

/// An operation was applied outside its domain (e.g. inverting zero,
/// decomposing a central element).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A named object (field, group, unital) could not be built from the
/// requested parameters.
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// A search that is guaranteed to succeed did not.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace unital
