#pragma once

#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"
#include "ratpow/ring.hpp"

namespace ratpow {

// Parses a comma-separated list of variable names, e.g. "x,y,z".
// Whitespace around names is ignored.  Validation (identifier grammar,
// uniqueness) is the Ring constructor's, rethrown with a position.
Ring parse_ring(const std::string& spec, const Integer& characteristic = 0);

// Parses the monomial-ideal grammar: generators separated by commas, each a
// '*'-separated product of `var` or `var^k` factors.  When every variable
// name is a single letter, juxtaposition like "xy^5" is also accepted.  The
// whole input may be "0" (zero ideal); a generator "1" is the empty product.
// Positions in errors are 1-based line/column into `text`.
MonomialIdeal parse_ideal(const std::string& text, const Ring& ring);

// Parses a comma-separated list of integers, e.g. "1,0,2" (used for
// valuation coefficients and exponent vectors on the command line).
std::vector<Integer> parse_integer_list(const std::string& text);

} // namespace ratpow
