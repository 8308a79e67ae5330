#pragma once

#include <cstddef>
#include <vector>

#include "ratpow/ring.hpp"

namespace ratpow {

// A monomial ideal in canonical form: the unique minimal generating set,
// sorted in descending lexicographic order.  The zero ideal has no
// generators; the unit ideal is generated by the zero exponent vector.
class MonomialIdeal {
public:
    // Minimalizes and sorts the given generators.  Throws DimensionError if a
    // vector has the wrong length, PreconditionError on a negative exponent.
    MonomialIdeal(Ring ring, std::vector<Exponents> generators);

    static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(Ring ring);

    // Trusts the caller that the generators already form an antichain under
    // divisibility and skips the quadratic minimalization sweep.  Used by the
    // lattice-point scans, whose output is locally minimal by construction.
    static MonomialIdeal from_antichain(Ring ring, std::vector<Exponents> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    // Proper means different from the unit ideal; the zero ideal is proper.
    bool is_proper() const { return !is_unit(); }

    // True when x^a lies in the ideal, i.e. some generator divides it.
    bool contains_monomial(const Exponents& a) const;
    // True when other is contained in this ideal.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

private:
    Ring ring_;
    std::vector<Exponents> gens_;
};

// A monomial prime ideal (x_i : i in variables), stored by sorted variable
// indices.  Must be nonempty.
struct MonomialPrime {
    Ring ring;
    std::vector<std::size_t> variables;

    MonomialPrime(Ring ring_, std::vector<std::size_t> variables_);

    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.ring == b.ring && a.variables == b.variables;
    }
    friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
        return a.variables < b.variables;
    }
};

// The prime as a monomial ideal, generated by its variables.
MonomialIdeal prime_ideal(const MonomialPrime& p);

// True when the support of every generator contains a variable of p, i.e.
// I is contained in the prime.  (Equivalent to p containing I.)
bool prime_contains(const MonomialPrime& p, const MonomialIdeal& I);

// Discards generators divisible by another generator.  This is what the
// MonomialIdeal constructor applies; exposed for reuse on raw vectors.
std::vector<Exponents> minimalize(std::vector<Exponents> generators);

// I + J, pre: same ring.
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

// I * J, pre: same ring.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

// I^k for k >= 0; power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, const Integer& k);

// I intersect J, pre: same ring.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// I : J.  Throws UndefinedColonError when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

// I : J^infinity, the stable value of iterated colons.
MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J);

// Radical: exponents clipped to 1, then minimalized.
MonomialIdeal radical(const MonomialIdeal& I);

// True when every generator exponent is 0 or 1.  For monomial ideals this is
// exactly the condition I = radical(I).
bool is_squarefree(const MonomialIdeal& I);
inline bool is_radical(const MonomialIdeal& I) { return is_squarefree(I); }

// The contraction I R_p cap R: variables outside p become units, so their
// exponents are zeroed out, then the result is minimalized.
MonomialIdeal contract_to_prime(const MonomialIdeal& I, const MonomialPrime& p);

// I + J viewed in the concatenated ring on disjoint variable blocks, together
// with the embeddings of each block's exponent vectors.
struct BlockSum {
    Ring joined_ring;
    MonomialIdeal ideal;
    std::size_t left_size;
    std::size_t right_size;

    // Pads an exponent vector of the left/right block out to the joined ring.
    Exponents embed_left(const Exponents& a) const;
    Exponents embed_right(const Exponents& b) const;
};

// Throws RingMismatchError if the two rings share a variable name.
BlockSum disjoint_block_sum(const MonomialIdeal& I, const MonomialIdeal& J);

} // namespace ratpow
