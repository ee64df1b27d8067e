#pragma once

#include "qlat/ncalg/ncpoly.hpp"

#include <string>
#include <vector>

namespace qlat::nc {

// Parses an expression over the generators of `p` and returns its normal form.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer | identifier | '(' expr ')'
//
// Identifiers are generators of `p` or the reserved scalars q and i. `^` binds
// tightest and takes a nonnegative integer; a pure power of q also accepts a
// parenthesized signed half-integer, e.g. q^(-1/2). Division is allowed only
// by invertible scalars (c * q^(k/2)), which covers rational literals like 1/2.
// Multiplication is explicit and noncommutative.
NCPoly parse_expr(const std::string &text, const PresentationPtr &p);

// Parses "y*x -> (1/q)*x*y" against an ordered generator list. The left side
// must be an out-of-order pair; the right side is kept as written (no
// normalization) and validated when the presentation is built.
RewriteRule parse_rule(const std::string &text, const std::vector<std::string> &generators);

} // namespace qlat::nc
