#pragma once

#include <vector>

#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"

namespace ratpow {

// One constraint <normal, a> >= rhs.  Stored normalized: the normal entries
// are coprime nonnegative integers and the rhs is a positive rational.
// Nonnegativity constraints a_i >= 0 are never stored; they are implicit in
// every polyhedron here.
struct HalfSpace {
    std::vector<Integer> normal;
    Rational rhs;

    // Normalizes (scales the normal to coprime integers).  Throws
    // PreconditionError on a negative or all-zero normal or nonpositive rhs.
    HalfSpace(std::vector<Integer> normal_, Rational rhs_);
    HalfSpace(const std::vector<Rational>& normal_, const Rational& rhs_);

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.normal == b.normal && a.rhs == b.rhs;
    }
};

// A polyhedron of Newton type: an irredundant list of half-spaces with
// nonnegative normals, intersected with the nonnegative orthant.  The
// recession cone always contains the orthant, so the set of integer points is
// closed under adding unit vectors.
struct HalfSpacePolyhedron {
    Ring ring;
    std::vector<HalfSpace> halfspaces;
};

struct LpOptimum {
    Rational value;
    std::vector<Rational> vertex;
};

struct StabilityDenominator {
    Integer e;
};

// H-representation of conv(generators of I) + nonnegative orthant, computed
// by Fourier-Motzkin elimination and reduced to facets only.
// Throws EmptyPolyhedronError on the zero ideal, PreconditionError on the
// unit ideal.
HalfSpacePolyhedron newton_polyhedron(const MonomialIdeal& I);

// Intersection of the Newton polyhedra of the associated primes of a
// squarefree ideal: one half-space sum_{i in p} a_i >= 1 per prime, filtered
// to the inclusion-minimal supports.  Throws PreconditionError when I is not
// squarefree (or is zero or unit).
HalfSpacePolyhedron symbolic_polyhedron(const MonomialIdeal& I);

// u * P for u > 0: same normals, rhs scaled by u.
HalfSpacePolyhedron scale(const HalfSpacePolyhedron& P, const Rational& u);

// Exact membership test; a must be nonnegative and of the right dimension.
bool contains_point(const HalfSpacePolyhedron& P, const std::vector<Rational>& a);

// Exact minimum of <objective, a> over P (with a >= 0 implicit), plus one
// optimal vertex.  The objective must be nonnegative, which makes the
// minimum exist; an empty P raises InfeasibleError.
LpOptimum lp_minimize(const HalfSpacePolyhedron& P, const std::vector<Rational>& objective);

// The unique minimal generating set of the ideal of all integer points of P.
// Minimal generators a satisfy, for every i with a_i > 0, some facet
// <w, a> >= rhs with w_i > 0 and <w, a> - w_i < rhs; hence a_i <= max over
// facets with w_i > 0 of ceil(rhs / w_i), which bounds the scan box.  Callers
// that know a tighter bound (e.g. from ideal generators) may pass box_hint;
// box_margin enlarges the box for cross-checking.  The scan honors the
// RATPOW_THREADS environment variable; output is deterministic regardless.
MonomialIdeal minimal_lattice_generators(const HalfSpacePolyhedron& P,
                                         const std::vector<Integer>& box_hint = {},
                                         const Integer& box_margin = 0);

// The denominator e such that every rational power of I equals one taken at
// a multiple of 1/e: the lcm of the rhs values of the facets of NP(I).  If
// u' = ceil(u*e)/e then ceil(u*c) = ceil(u'*c) for every facet rhs c
// dividing e, so the lattice points of u*NP(I) and u'*NP(I) agree.
StabilityDenominator stability_denominator(const MonomialIdeal& I);

} // namespace ratpow
