// Text syntax for representations.
//
//   expr   := term { op term }            left-associative
//   op     := (x)_R | (x)_C | (x)_H | (+)
//   term   := '(' expr ')' | atom [':' spec]
//   atom   := SO(n) | SU(n) | SP(n) | Spin(n) | U(n) | T(k) | G2 | F4 | E6 | E7 | E8
//   spec   := '[' int {',' int} ']' | R^d | C^d | Q^d | Lambda^k [C^n|R^n] | S^k [C^n]
//           | S^2_0 | adjoint | spin
//
// A missing spec means the defining representation.
#pragma once

#include <stdexcept>
#include <string>

#include "cohom/matrep.hpp"

namespace cohom {

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Throws ParseError on malformed text and TypeError on well-formed text that names no
// representation (odd labels under SO(3), (x)_H on a real factor, ...).
RepExpr parse_rep(const std::string& text);

// Canonical text with explicit labels; parse_rep(print_rep(e)) == e.
std::string print_rep(const RepExpr& e);

}  // namespace cohom
