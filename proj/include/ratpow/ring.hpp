#pragma once

#include <string>
#include <vector>

#include "ratpow/errors.hpp"
#include "ratpow/numeric.hpp"

namespace ratpow {

// A polynomial ring presented by its variable names.  Only the names and the
// characteristic matter; coefficients never appear since all ideals here are
// monomial.
class Ring {
public:
    // Throws PreconditionError unless every name matches
    // [A-Za-z][A-Za-z0-9_]* and the names are pairwise distinct.
    explicit Ring(std::vector<std::string> variable_names, Integer characteristic = 0);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& variable_names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Integer& characteristic() const { return characteristic_; }

    // Index of a variable name; throws PreconditionError if absent.
    std::size_t index_of(const std::string& name) const;

    // True when every variable name is a single letter, which enables
    // juxtaposition syntax ("xy^2") in the monomial parser.
    bool single_letter_names() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.names_ == b.names_ && a.characteristic_ == b.characteristic_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    Integer characteristic_;
};

// A monomial, stored as its exponent vector.
using Exponents = std::vector<Integer>;

// Componentwise comparisons and arithmetic on exponent vectors.  All functions
// assume equal lengths; callers are expected to have validated dimensions.

// True when x^a divides x^b, i.e. a <= b componentwise.
bool divides(const Exponents& a, const Exponents& b);

// Componentwise max: the exponent vector of lcm(x^a, x^b).
Exponents exponent_lcm(const Exponents& a, const Exponents& b);

// Componentwise sum: the exponent vector of x^a * x^b.
Exponents exponent_sum(const Exponents& a, const Exponents& b);

// Componentwise max(a - b, 0): the exponent vector of x^a : x^b.
Exponents exponent_sub_clamped(const Exponents& a, const Exponents& b);

// k * a for k >= 0.
Exponents exponent_scale(const Exponents& a, const Integer& k);

Integer total_degree(const Exponents& a);

// Lexicographic comparison, first coordinate most significant.
int lex_compare(const Exponents& a, const Exponents& b);

} // namespace ratpow
