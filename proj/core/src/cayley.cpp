#include "pointlike/cayley.hpp"

#include <sstream>
#include <vector>

namespace pointlike {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Elt parse_entry(const std::string& tok, std::size_t n, std::size_t line_no) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric token '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric token '" + tok + "'");
  if (v >= n)
    throw ParseError("line " + std::to_string(line_no) + ": entry " + tok +
                     " out of range [0, " + std::to_string(n) + ")");
  return static_cast<Elt>(v);
}

}  // namespace

Semigroup parse_cayley(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  std::size_t n = 0;
  bool have_order = false;
  std::vector<Elt> table;
  std::size_t rows_read = 0;
  std::vector<std::string> labels;

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = strip_comment(line);
    auto toks = tokens_of(body);
    if (toks.empty()) continue;

    if (!have_order) {
      if (toks.size() != 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected the order alone");
      unsigned long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoul(toks[0], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != toks[0].size() || v == 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad order '" + toks[0] + "'");
      n = v;
      have_order = true;
      continue;
    }

    if (toks[0] == "labels:" || toks[0] == "labels") {
      if (toks[0] == "labels") {
        if (toks.size() < 2 || toks[1] != ":")
          throw ParseError("line " + std::to_string(line_no) + ": malformed labels line");
        toks.erase(toks.begin());
      }
      toks.erase(toks.begin());
      if (toks.size() != n)
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n) + " labels, got " + std::to_string(toks.size()));
      labels = toks;
      continue;
    }

    if (rows_read == n)
      throw ParseError("line " + std::to_string(line_no) + ": unexpected extra row");
    if (toks.size() != n)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " entries in row " + std::to_string(rows_read) + ", got " +
                       std::to_string(toks.size()));
    for (const auto& tok : toks) table.push_back(parse_entry(tok, n, line_no));
    ++rows_read;
  }

  if (!have_order) throw ParseError("empty input: missing order line");
  if (rows_read != n)
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                     std::to_string(rows_read));
  if (auto fail = find_associativity_failure(table, n))
    throw ParseError("table is not associative: (x*y)*z != x*(y*z) at x=" +
                     std::to_string(fail->x) + " y=" + std::to_string(fail->y) +
                     " z=" + std::to_string(fail->z));
  return Semigroup::from_table_unchecked(std::move(table), n, std::move(labels));
}

std::string render_cayley(const Semigroup& s) {
  std::ostringstream out;
  const auto n = s.order();
  out << n << "\n";
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << s.mul(x, y);
    }
    out << "\n";
  }
  if (!s.labels().empty()) {
    out << "labels:";
    for (const auto& l : s.labels()) out << ' ' << l;
    out << "\n";
  }
  return out.str();
}

}  // namespace pointlike
