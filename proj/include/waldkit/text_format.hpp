#pragma once

// Plain-text ideal files:
//
//   # comment
//   vars x1 x2 x3        (or "vars 3" for default names x1..x3)
//   x1*x2
//   x2^2*x3              (factors may also be juxtaposed: x2^2x3)
//
// Every non-empty, non-comment line after the header is one generator.

#include "waldkit/core.hpp"

#include <string>
#include <string_view>

namespace waldkit {

/// Throws ParseError (with 1-based line/column) on malformed input, and the
/// core construction errors for the zero or unit ideal.
MonomialIdeal parse_ideal(std::string_view text);

/// Parses one monomial against an existing context.
Monomial parse_monomial(const ContextPtr& context, std::string_view text);

/// Inverse of parse_ideal.
std::string format_ideal(const MonomialIdeal& ideal);

} // namespace waldkit
