#include "unital/unital_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace unital::design {

namespace {

std::vector<long long> parse_ints(const std::string &s, std::size_t line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(' ', i);
    if (j == std::string::npos)
      j = s.size();
    if (j == i)
      throw ParseError(line, "unexpected extra space");
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || ptr != s.data() + j || v < 0)
      throw ParseError(line, "bad integer '" + s.substr(i, j - i) + "'");
    out.push_back(v);
    i = j + 1;
    if (j + 1 == s.size())
      throw ParseError(line, "trailing whitespace");
  }
  return out;
}

long long header_value(const std::string &text, const std::string &key,
                       std::size_t line) {
  if (text.rfind(key + " ", 0) != 0)
    throw ParseError(line, "expected '" + key + " <int>'");
  const auto v = parse_ints(text.substr(key.size() + 1), line);
  if (v.size() != 1)
    throw ParseError(line, "expected a single integer after '" + key + "'");
  return v[0];
}

} // namespace

UnitalFile parse_unital(std::istream &in) {
  std::string text;
  std::size_t line_no = 0;
  std::size_t stage = 0;
  UnitalFile out;
  long long points = 0;
  std::vector<Block> blocks;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r')
      throw ParseError(line_no, "CR line ending");
    if (!text.empty() && text[0] == '#') {
      const std::string tag = "# b_infinity:";
      if (text.rfind(tag, 0) == 0) {
        std::string rest = text.substr(tag.size());
        if (!rest.empty() && rest[0] == ' ')
          rest.erase(0, 1);
        Block b;
        for (auto v : parse_ints(rest, line_no))
          b.push_back(static_cast<Point>(v));
        out.b_infinity = std::move(b);
      }
      continue;
    }
    switch (stage) {
    case 0:
      if (text != "unital v1")
        throw ParseError(line_no, "expected header 'unital v1'");
      break;
    case 1:
      out.q = static_cast<int>(header_value(text, "q", line_no));
      break;
    case 2:
      points = header_value(text, "points", line_no);
      if (points > 1000000)
        throw ParseError(line_no, "point count too large");
      break;
    default: {
      if (text.empty())
        throw ParseError(line_no, "empty line");
      Block b;
      for (auto v : parse_ints(text, line_no)) {
        if (v >= points)
          throw ParseError(line_no, "point index " + std::to_string(v) +
                                        " out of range");
        if (!b.empty() && static_cast<Point>(v) <= b.back())
          throw ParseError(line_no, "block indices not strictly increasing");
        b.push_back(static_cast<Point>(v));
      }
      blocks.push_back(std::move(b));
    }
    }
    ++stage;
  }
  if (stage < 3)
    throw ParseError(line_no + 1, "truncated header");
  out.structure = IncidenceStructure(static_cast<std::size_t>(points),
                                     std::move(blocks));
  if (out.b_infinity)
    for (auto x : *out.b_infinity)
      if (x >= points)
        throw ParseError(line_no, "b_infinity point out of range");
  return out;
}

UnitalFile parse_unital_string(const std::string &text) {
  std::istringstream in(text);
  return parse_unital(in);
}

UnitalFile read_unital_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(0, "cannot open " + path);
  return parse_unital(in);
}

std::string serialize_unital(const IncidenceStructure &s, int q,
                             const std::optional<Block> &b_infinity) {
  std::ostringstream os;
  os << "unital v1\nq " << q << "\npoints " << s.point_count() << '\n';
  auto line = [&](const Block &b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      os << (i ? " " : "") << b[i];
    os << '\n';
  };
  for (const auto &b : s.blocks())
    line(b);
  if (b_infinity) {
    os << "# b_infinity: ";
    line(*b_infinity);
  }
  return os.str();
}

std::string serialize_unital(const Unital &u,
                             const std::optional<Block> &b_infinity) {
  return serialize_unital(u.structure(), u.q(), b_infinity);
}

void write_unital_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError(0, "cannot write " + path);
  out << contents;
}

} // namespace unital::design
