#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ratpow/ideal.hpp"

namespace ratpow {

// An irreducible monomial ideal (x_i^{e_i} : e_i > 0), stored as the vector
// of exponents with 0 marking absent variables.
struct IrreducibleComponent {
    Ring ring;
    Exponents exponents;

    IrreducibleComponent(Ring ring_, Exponents exponents_);

    // The component as a monomial ideal.
    MonomialIdeal to_ideal() const;
    // The radical of the component: the prime on its support.
    MonomialPrime support() const;

    friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.ring == b.ring && a.exponents == b.exponents;
    }
};

// Decomposes I into an irredundant intersection of irreducible monomial
// ideals by recursive generator splitting.
// Throws PreconditionError on the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I);

// Associated primes: the deduplicated supports of the irreducible components.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I);

// Inclusion-minimal associated primes.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I);

// Maximum cardinality of an associated prime.
std::size_t big_height(const MonomialIdeal& I);

// Minimum cardinality of a minimal prime.
std::size_t height(const MonomialIdeal& I);

// True iff every element of p is a zerodivisor on R/I, i.e. p is contained in
// an associated prime of I.  I must be proper; for the zero ideal the answer
// is false.
bool grade_is_zero(const MonomialPrime& p, const MonomialIdeal& I);

struct PrimaryDecomposition {
    std::vector<std::pair<MonomialPrime, MonomialIdeal>> components;
};

// The primary decomposition Q_p = I R_p cap R over the minimal primes.  Only
// defined when Ass(I) = Min(I); an embedded prime raises PreconditionError
// naming the prime.
PrimaryDecomposition primary_components_min(const MonomialIdeal& I);

} // namespace ratpow
