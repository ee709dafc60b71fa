#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "unital/design.hpp"

namespace unital::design {

/// Contents of a unital v1 file before validation.
struct UnitalFile {
  int q = 0;
  IncidenceStructure structure{0, {}};
  std::optional<Block> b_infinity; // from a "# b_infinity:" comment
};

/// Parses format v1. Comment lines start with '#'. Throws ParseError
/// carrying the 1-based line number.
UnitalFile parse_unital(std::istream &in);
UnitalFile parse_unital_string(const std::string &text);
UnitalFile read_unital_file(const std::string &path);

/// Header, canonical block lines and, when given, a trailing
/// "# b_infinity: ..." line. LF endings, no trailing whitespace.
std::string serialize_unital(const IncidenceStructure &s, int q,
                             const std::optional<Block> &b_infinity = {});
std::string serialize_unital(const Unital &u,
                             const std::optional<Block> &b_infinity = {});

void write_unital_file(const std::string &path, const std::string &contents);

} // namespace unital::design
