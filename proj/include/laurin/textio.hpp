#ifndef LAURIN_TEXTIO_HPP
#define LAURIN_TEXTIO_HPP

#include <string>

#include "laurin/laurent.hpp"
#include "laurin/ring.hpp"

namespace laurin {

// Ring grammar: Q | Z | F_<p> | Z/<n> | Z/<n>[1/<m>] | Z[1/<m>].
// Whitespace-insensitive; parse errors name the offending token.
RingPtr parse_ring(const std::string& text);

// Polynomial grammar: terms `c`, `c*X^e`, `X^e`, `-X^e` joined by +/-;
// exponents are signed integers; coefficients use the ring's element
// syntax (integers, or a/b where b is invertible).
LaurentPoly parse_poly(const RingPtr& ring, const std::string& text);

RElem parse_element(const RingPtr& ring, const std::string& text);

} // namespace laurin

#endif
