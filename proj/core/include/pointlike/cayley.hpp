#pragma once

#include <stdexcept>
#include <string>

#include "pointlike/semigroup.hpp"

namespace pointlike {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//   line 1: n
//   lines 2..n+1: n space-separated 0-based entries, row = left factor
//   optional trailer: "labels: <n whitespace-separated labels>"
//   '#' starts a comment anywhere on a line.
// Associativity is validated; the error cites the first failing triple.
Semigroup parse_cayley(const std::string& text);

std::string render_cayley(const Semigroup& s);

}  // namespace pointlike
