#pragma once

#include <cstdint>
#include <string>

#include "coulomb/poly.hpp"

namespace coulomb {

// Parses the textual polynomial syntax:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] integer)?
//   atom   := rational | variable | '(' expr ')'
//
// Rational literals are "n" or "n/d"; variables are mu h m q t1..tr z1..zr
// x1..xr u v (bare t/z/x are accepted at rank 1). Negative exponents are
// accepted only on Laurent variables (m, q, t, z, x) and only when the base
// is a single monomial. Indexed variables must have index <= rank.
//
// Malformed input raises UsageError with a line:column position.
Poly parse_poly(const std::string& text, std::int32_t rank);

}  // namespace coulomb
