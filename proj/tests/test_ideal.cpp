#include "doctest.h"

#include "ratpow/ideal.hpp"

using namespace ratpow;

namespace {

Ring xy() { return Ring({"x", "y"}); }
Ring xyz() { return Ring({"x", "y", "z"}); }

Exponents e(std::vector<long> v) {
    Exponents out;
    for (long x : v) out.emplace_back(x);
    return out;
}

MonomialIdeal ideal(const Ring& r, std::vector<std::vector<long>> gens) {
    std::vector<Exponents> g;
    for (auto& v : gens) g.push_back(e(v));
    return MonomialIdeal(r, std::move(g));
}

} // namespace

TEST_CASE("construction minimalizes and sorts") {
    // (xy, xy^2) has the single minimal generator xy.
    auto I = ideal(xy(), {{1, 1}, {1, 2}});
    CHECK(I.generators() == std::vector<Exponents>{e({1, 1})});

    // Duplicates collapse; order of input is irrelevant.
    auto J1 = ideal(xy(), {{2, 0}, {0, 3}, {2, 0}});
    auto J2 = ideal(xy(), {{0, 3}, {2, 0}});
    CHECK(J1 == J2);

    // Canonical order is descending lexicographic.
    CHECK(J1.generators() == std::vector<Exponents>{e({2, 0}), e({0, 3})});
}

TEST_CASE("zero and unit ideals") {
    auto Z = MonomialIdeal::zero(xy());
    auto U = MonomialIdeal::unit(xy());
    CHECK(Z.is_zero());
    CHECK(Z.is_proper());
    CHECK(!Z.is_unit());
    CHECK(U.is_unit());
    CHECK(!U.is_proper());
    CHECK(!U.is_zero());

    // A generating set containing 1 collapses to the unit ideal.
    auto V = ideal(xy(), {{3, 1}, {0, 0}});
    CHECK(V == U);

    CHECK(U.contains(Z));
    CHECK(U.contains(U));
    CHECK(!Z.contains(U));
    CHECK(Z.contains(Z));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(MonomialIdeal(xy(), {e({1, 2, 3})}), DimensionError);
    CHECK_THROWS_AS(MonomialIdeal(xy(), {Exponents{Integer(-1), Integer(0)}}),
                    PreconditionError);
    CHECK_THROWS_AS(Ring({"x", "x"}), PreconditionError);
    CHECK_THROWS_AS(Ring({"2x"}), PreconditionError);
    CHECK_THROWS_AS(Ring({""}), PreconditionError);
    CHECK_NOTHROW(Ring({"x1", "X_2"}));
}

TEST_CASE("membership and containment") {
    auto I = ideal(xy(), {{1, 1}});
    CHECK(I.contains_monomial(e({1, 1})));
    CHECK(I.contains_monomial(e({5, 2})));
    CHECK(!I.contains_monomial(e({3, 0})));
    CHECK(ideal(xy(), {{1, 0}}).contains(I));
    CHECK(!I.contains(ideal(xy(), {{1, 0}})));
}

TEST_CASE("sum product power") {
    auto I = ideal(xy(), {{2, 0}});
    auto J = ideal(xy(), {{0, 3}});
    CHECK(sum(I, J) == ideal(xy(), {{2, 0}, {0, 3}}));
    CHECK(product(I, J) == ideal(xy(), {{2, 3}}));
    CHECK(power(sum(I, J), 2) == ideal(xy(), {{4, 0}, {2, 3}, {0, 6}}));
    CHECK(power(I, 0) == MonomialIdeal::unit(xy()));
    CHECK(power(MonomialIdeal::zero(xy()), 0) == MonomialIdeal::unit(xy()));
    CHECK(power(MonomialIdeal::zero(xy()), 3) == MonomialIdeal::zero(xy()));
    CHECK_THROWS_AS(power(I, -1), PreconditionError);

    auto other = MonomialIdeal::zero(xyz());
    CHECK_THROWS_AS(sum(I, other), RingMismatchError);
    CHECK_THROWS_AS(product(I, other), RingMismatchError);
    CHECK_THROWS_AS(intersect(I, other), RingMismatchError);
}

TEST_CASE("sum and product with zero and unit") {
    auto I = ideal(xy(), {{1, 1}});
    auto Z = MonomialIdeal::zero(xy());
    auto U = MonomialIdeal::unit(xy());
    CHECK(sum(I, Z) == I);
    CHECK(sum(I, U) == U);
    CHECK(product(I, Z) == Z);
    CHECK(product(I, U) == I);
    CHECK(intersect(I, Z) == Z);
    CHECK(intersect(I, U) == I);
}

TEST_CASE("intersection of principal ideals is the lcm") {
    auto I = ideal(xy(), {{3, 1}});
    auto J = ideal(xy(), {{1, 2}});
    CHECK(intersect(I, J) == ideal(xy(), {{3, 2}}));
}

TEST_CASE("intersection of (y^3) with (x,z)^3") {
    // (y^3) cap (x,z)^3 = y^3 * (x,z)^3 since the supports are disjoint.
    auto A = ideal(xyz(), {{0, 3, 0}});
    auto B = power(ideal(xyz(), {{1, 0, 0}, {0, 0, 1}}), 3);
    auto got = intersect(A, B);
    CHECK(got == ideal(xyz(), {{3, 3, 0}, {2, 3, 1}, {1, 3, 2}, {0, 3, 3}}));
}

TEST_CASE("colon") {
    // (x^3 y, x y^2) : (x y) = (x^2, y).
    auto I = ideal(xy(), {{3, 1}, {1, 2}});
    CHECK(colon(I, ideal(xy(), {{1, 1}})) == ideal(xy(), {{2, 0}, {0, 1}}));

    // Colon by a sum intersects the single colons.
    auto J = ideal(xy(), {{1, 0}, {0, 1}});
    CHECK(colon(I, J) == intersect(colon(I, ideal(xy(), {{1, 0}})),
                                   colon(I, ideal(xy(), {{0, 1}}))));

    CHECK(colon(I, MonomialIdeal::unit(xy())) == I);
    CHECK(colon(MonomialIdeal::zero(xy()), J) == MonomialIdeal::zero(xy()));
    CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(xy())), UndefinedColonError);
}

TEST_CASE("colon inverts multiplication by a monomial") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 2, 1}, {3, 0, 2}});
    auto m = ideal(xyz(), {{2, 1, 3}});
    CHECK(colon(product(I, m), m) == I);
}

TEST_CASE("saturation") {
    // ((x^2 y, x y^3)) : y^inf = (x).
    auto I = ideal(xy(), {{2, 1}, {1, 3}});
    auto Y = ideal(xy(), {{0, 1}});
    CHECK(saturate(I, Y) == ideal(xy(), {{1, 0}}));

    // Saturating by the unit ideal changes nothing.
    CHECK(saturate(I, MonomialIdeal::unit(xy())) == I);

    // Saturation is a fixed point of further colons.
    auto S = saturate(I, Y);
    CHECK(colon(S, Y) == S);
}

TEST_CASE("radical and squarefreeness") {
    auto I = ideal(xy(), {{2, 0}, {1, 3}});
    CHECK(radical(I) == ideal(xy(), {{1, 0}}));
    CHECK(radical(radical(I)) == radical(I));
    CHECK(!is_squarefree(I));
    CHECK(is_squarefree(radical(I)));
    CHECK(is_radical(radical(I)));
    CHECK(is_squarefree(MonomialIdeal::zero(xy())));
    CHECK(is_squarefree(MonomialIdeal::unit(xy())));

    // Radical is monotone.
    auto J = ideal(xy(), {{4, 4}});
    CHECK(I.contains(J));
    CHECK(radical(I).contains(radical(J)));
}

TEST_CASE("monomial primes") {
    auto p = MonomialPrime(xyz(), {2, 0});
    CHECK(p.variables == std::vector<std::size_t>{0, 2});
    CHECK(prime_ideal(p) == ideal(xyz(), {{1, 0, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(MonomialPrime(xyz(), {}), PreconditionError);
    CHECK_THROWS_AS(MonomialPrime(xyz(), {3}), DimensionError);

    auto I = ideal(xyz(), {{1, 0, 1}, {0, 0, 2}});
    CHECK(prime_contains(p, I));
    CHECK(!prime_contains(MonomialPrime(xyz(), {1}), I));
    CHECK(prime_contains(p, MonomialIdeal::zero(xyz())));
    CHECK(!prime_contains(p, MonomialIdeal::unit(xyz())));
}

TEST_CASE("contraction to a prime") {
    // Contracting ( x^2 y, z^3 ) to (x,z) drops the y exponent.
    auto I = ideal(xyz(), {{2, 1, 0}, {0, 0, 3}});
    auto p = MonomialPrime(xyz(), {0, 2});
    CHECK(contract_to_prime(I, p) == ideal(xyz(), {{2, 0, 0}, {0, 0, 3}}));

    // Contraction only grows the ideal and is idempotent.
    auto C = contract_to_prime(I, p);
    CHECK(C.contains(I));
    CHECK(contract_to_prime(C, p) == C);

    // Contracting to a prime containing all variables is the identity.
    auto m = MonomialPrime(xyz(), {0, 1, 2});
    CHECK(contract_to_prime(I, m) == I);

    CHECK(contract_to_prime(MonomialIdeal::zero(xyz()), p) ==
          MonomialIdeal::zero(xyz()));
}

TEST_CASE("disjoint block sum") {
    auto I = ideal(Ring({"x", "y"}), {{1, 1}});
    auto J = ideal(Ring({"z"}), {{2}});
    auto B = disjoint_block_sum(I, J);
    CHECK(B.joined_ring.variable_names() ==
          std::vector<std::string>{"x", "y", "z"});
    CHECK(B.ideal == ideal(Ring({"x", "y", "z"}), {{1, 1, 0}, {0, 0, 2}}));
    CHECK(B.embed_left(e({1, 1})) == e({1, 1, 0}));
    CHECK(B.embed_right(e({2})) == e({0, 0, 2}));

    CHECK_THROWS_AS(disjoint_block_sum(I, ideal(Ring({"y"}), {{1}})),
                    RingMismatchError);
}
