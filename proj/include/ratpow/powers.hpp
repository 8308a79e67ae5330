#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"

namespace ratpow {

// How a (symbolic) rational power was computed.
enum class PowerMethod {
    newton_scaling,          // lattice points of u * NP(I)
    root_characterization,   // q-th roots of the p-th symbolic power
    sp_scaling,              // lattice points of u * SP(I)
    prime_intersection,      // meet of rational powers of the associated primes
    localization_contraction,// contractions of the rational power to Ass(I)
    saturation,              // rational power saturated by the grade-positive primes
};

std::string method_name(PowerMethod method);
// Inverse of method_name; returns nullopt for unknown names.
std::optional<PowerMethod> method_from_name(const std::string& name);

struct RationalPowerResult {
    MonomialIdeal ideal;
    Rational u;
    PowerMethod method;
};

// A linear functional with nonnegative integer coefficients, not all zero.
struct SkewValuation {
    std::vector<Integer> coefficients;
    explicit SkewValuation(std::vector<Integer> coefficients_);
};

// min over the generators of I of <v, g>.
Rational skew_value(const SkewValuation& v, const MonomialIdeal& I);

// The integral closure: all monomials in NP(I).  Fixed points are exactly
// the integrally closed monomial ideals; zero and unit are their own closure.
MonomialIdeal integral_closure(const MonomialIdeal& I, const Integer& box_margin = 0);

// The u-th rational power: the monomials x^a with a in u * NP(I).
// Throws PreconditionError for u <= 0; maps zero/unit ideals to themselves.
RationalPowerResult rational_power(const MonomialIdeal& I, const Rational& u,
                                   const Integer& box_margin = 0);

// The u-th rational symbolic power by the chosen algorithm.
// localization_contraction and saturation accept any nonzero proper monomial
// ideal; the other methods require I squarefree.  newton_scaling is not a
// symbolic method and is rejected.
RationalPowerResult rational_symbolic_power(
    const MonomialIdeal& I, const Rational& u,
    PowerMethod method = PowerMethod::localization_contraction,
    const Integer& box_margin = 0);

// The u-th differential power for a monomial ideal in characteristic zero:
// x^b belongs iff x^{q b - a} in I for every multi-index a with |a| <= p-1
// and a <= q b, where u = p/q in lowest terms.  Only monomial membership is
// evaluated; for monomial I in characteristic 0 the differential power is
// itself a monomial ideal, an assumption the test suite checks against the
// rational symbolic power rather than proving in code.
MonomialIdeal differential_power_monomial(const MonomialIdeal& I, const Rational& u,
                                          const Integer& box_margin = 0);

// saturate(rational_power(I, u), K).  I and K must be nonzero, proper and in
// the same ring.
MonomialIdeal saturated_power(const MonomialIdeal& I, const Rational& u,
                              const MonomialIdeal& K);

// The rational symbolic power computed through saturation: K_u is the
// intersection of the associated primes p of the rational power with
// grade(p, R/I) >= 1; when no such prime exists the rational power is
// already symbolic.
MonomialIdeal symbolic_via_saturation(const MonomialIdeal& I, const Rational& u);

// The skew Waldschmidt constant: min of <v, a> over the symbolic polyhedron.
// I must be squarefree (and neither zero nor unit).
Rational waldschmidt(const MonomialIdeal& I, const SkewValuation& v);

// The limit-definition estimates v(I^{(k)})/k for k = 1..count, computed from
// ordinary symbolic powers.  Converges to (and bounds) waldschmidt(I, v).
std::vector<Rational> waldschmidt_diagnostic(const MonomialIdeal& I,
                                             const SkewValuation& v,
                                             std::size_t count);

// Valuative membership test: x^a lies in the u-th rational symbolic power
// iff v(a) >= u * v-hat(I) for the finitely many facet valuations v of SP(I).
bool member_by_valuation(const MonomialIdeal& I, const Rational& u, const Exponents& a);

// The splitting map Phi_m on exponent vectors of m-th roots of monomials:
// a/m when every entry is divisible by m, nothing otherwise.
std::optional<Exponents> phi_splitting(const Integer& m, const Exponents& a);

// The companion embedding: b maps to m*b.  phi_splitting after phi_embedding
// is the identity.
Exponents phi_embedding(const Integer& m, const Exponents& b);

// Computes the stability denominator and validates it by a jump-scan: every
// u = k/d with d <= max_denominator and 0 < u <= u_max must give the same
// rational power as ceil(u*e)/e.  A finer jump raises InternalCheckError
// instead of returning a wrong e.
Integer stability_denominator_verified(const MonomialIdeal& I,
                                       const Integer& max_denominator,
                                       const Rational& u_max);

} // namespace ratpow
