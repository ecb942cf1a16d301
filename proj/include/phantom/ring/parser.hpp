#pragma once

#include <string_view>

#include "phantom/ring/polynomial.hpp"

namespace phantom {

// Grammar: sums and differences of terms; a term is a product of decimal
// coefficients, declared variables with optional ^exponent, and parenthesised
// sub-expressions. '*' is optional and whitespace is ignored. Variable names
// written back to back ("xy") are split by longest declared prefix.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace phantom
