#pragma once

// Plain-text structure-constant files.
//
//   dialgebra v1
//   dim 2
//   vdash 1 1 -> 1:1
//   dashv 2 1 -> 2:1, 1:-1/2
//
// Indices are 1-based. Products not listed are zero. '#' starts a comment.

#include "dias/dialgebra.hpp"
#include "dias/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dias {

inline constexpr Index kMaxFileDim = 64;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Dialgebra<Rational> parse_dialgebra(std::string_view text, std::string name = {});
Dialgebra<Rational> load_dialgebra(const std::string& path);

/// Canonical text: entries grouped per (product, i, j) and ordered
/// lexicographically by (product name, i, j, k).
std::string serialize_dialgebra(const Dialgebra<Rational>& d);

}  // namespace dias
