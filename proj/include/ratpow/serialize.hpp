#pragma once

#include <string>
#include <vector>

#include "ratpow/decompose.hpp"
#include "ratpow/ideal.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/powers.hpp"

namespace ratpow {

// Text forms.  All of them re-parse with parse_ideal / are stable across
// runs: generators print in the canonical stored order, factors always use
// explicit '*' and omit '^1'.
std::string monomial_to_text(const Ring& ring, const Exponents& a); // "x^3*y^3", "1"
std::string ideal_to_text(const MonomialIdeal& I);                  // "x*y, y*z"; "0"; "1"
std::string prime_to_text(const MonomialPrime& p);                  // "(x,y)"
// "ideal(x*y, y*z)" — a generator list consumable by a computer algebra
// system for cross-checking.
std::string ideal_to_cas(const MonomialIdeal& I);

// Half-spaces print over the exponent coordinates a1..an:
// "3*a1 + a2 >= 8"; a polyhedron prints one half-space per line.
std::string halfspace_to_text(const HalfSpace& h);
std::string polyhedron_to_text(const HalfSpacePolyhedron& P);

// Structured forms (single-line JSON).  Exponents are plain integers; all
// polyhedron numbers are decimal strings ("p/q" for rationals).
std::string ideal_to_json(const MonomialIdeal& I);
// {"ring":…,"generators":…,"method":"newton-scaling","u":"4/3"}
std::string power_result_to_json(const RationalPowerResult& r);
std::string polyhedron_to_json(const HalfSpacePolyhedron& P);
// [{"prime":["x","y"],"generators":[[2,0],…]},…]
std::string primary_decomposition_to_json(const PrimaryDecomposition& D);
std::string primes_to_json(const std::vector<MonomialPrime>& primes);

// Inverse of ideal_to_json; rebuilds the ring from the "ring" field.
MonomialIdeal ideal_from_json(const std::string& text);

} // namespace ratpow
