#pragma once

#include <string>

#include "poly.hpp"

namespace fjump {

// "F13[x,y]" or "F3^2:t^2+1[x,y]" (extension modulus is a polynomial in t).
RingPtr parse_ring(const std::string& text);

// Integer coefficients, "^" powers, "*" optional between factors, "+"/"-",
// parenthesized subexpressions. For k > 1 rings the extension generator is t.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace fjump
