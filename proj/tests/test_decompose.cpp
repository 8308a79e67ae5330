#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ratpow/decompose.hpp"

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

MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& comps) {
    MonomialIdeal out = MonomialIdeal::unit(comps.front().ring);
    for (const auto& c : comps) out = intersect(out, c.to_ideal());
    return out;
}

std::set<std::vector<std::size_t>> prime_set(const std::vector<MonomialPrime>& ps) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& p : ps) out.insert(p.variables);
    return out;
}

// Brute-force associated primes: p is associated iff I : m = p for some
// monomial m.  Only usable for small exponents and few variables.
std::set<std::vector<std::size_t>> brute_force_ass(const MonomialIdeal& I, long box) {
    std::set<std::vector<std::size_t>> out;
    std::size_t n = I.ring().size();
    std::vector<long> m(n, 0);
    for (;;) {
        Exponents mv;
        for (long v : m) mv.emplace_back(v);
        MonomialIdeal q = colon(I, MonomialIdeal(I.ring(), {mv}));
        // Is q a monomial prime?
        std::vector<std::size_t> vars;
        bool is_prime = !q.is_unit() && !q.is_zero();
        if (is_prime) {
            for (const auto& g : q.generators()) {
                std::size_t support = 0, where = 0;
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (g[i] > 0) { ++support; where = i; }
                if (support != 1 || g[where] != 1) { is_prime = false; break; }
                vars.push_back(where);
            }
        }
        if (is_prime) {
            std::sort(vars.begin(), vars.end());
            out.insert(vars);
        }
        std::size_t i = 0;
        while (i < n && m[i] == box) { m[i] = 0; ++i; }
        if (i == n) break;
        ++m[i];
    }
    return out;
}

} // namespace

TEST_CASE("irreducible decomposition of simple ideals") {
    // (xy) = (x) cap (y).
    auto comps = irreducible_decomposition(ideal(xy(), {{1, 1}}));
    REQUIRE(comps.size() == 2);
    std::set<Exponents> got;
    for (const auto& c : comps) got.insert(c.exponents);
    CHECK(got == std::set<Exponents>{e({1, 0}), e({0, 1})});

    // (x^2, xy) = (x) cap (x^2, y).
    comps = irreducible_decomposition(ideal(xy(), {{2, 0}, {1, 1}}));
    got.clear();
    for (const auto& c : comps) got.insert(c.exponents);
    CHECK(got == std::set<Exponents>{e({1, 0}), e({2, 1})});
    CHECK(intersect_components(comps) == ideal(xy(), {{2, 0}, {1, 1}}));
}

TEST_CASE("decomposition rejects zero and unit ideals") {
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(xy())),
                    PreconditionError);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(xy())),
                    PreconditionError);
    CHECK_THROWS_AS(associated_primes(MonomialIdeal::zero(xy())), PreconditionError);
    CHECK_THROWS_AS(big_height(MonomialIdeal::unit(xy())), PreconditionError);
}

TEST_CASE("associated primes of (xy^5, x^2y^2, x^4y)") {
    auto I = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    auto comps = irreducible_decomposition(I);
    CHECK(intersect_components(comps) == I);
    // Radicals are (x), (y) and (x,y).
    std::set<std::vector<std::size_t>> radicals;
    for (const auto& c : comps) radicals.insert(c.support().variables);
    CHECK(radicals == std::set<std::vector<std::size_t>>{{0}, {1}, {0, 1}});

    CHECK(prime_set(associated_primes(I)) ==
          std::set<std::vector<std::size_t>>{{0}, {1}, {0, 1}});
    CHECK(prime_set(minimal_primes(I)) ==
          std::set<std::vector<std::size_t>>{{0}, {1}});
    CHECK(big_height(I) == 2);
    CHECK(height(I) == 1);
}

TEST_CASE("associated primes of (xy, yz)") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}});
    CHECK(prime_set(associated_primes(I)) ==
          std::set<std::vector<std::size_t>>{{1}, {0, 2}});
}

TEST_CASE("minimal primes of the triangle (xy, yz, zx)") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(prime_set(minimal_primes(I)) ==
          std::set<std::vector<std::size_t>>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(prime_set(associated_primes(I)) == prime_set(minimal_primes(I)));
    CHECK(big_height(I) == 2);
    CHECK(big_height(ideal(xyz(), {{1, 0, 0}})) == 1);
}

TEST_CASE("brute-force cross-check of associated primes") {
    std::mt19937_64 rng(12345);
    Ring r({"a", "b", "c"});
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Exponents> gens;
        std::size_t count = 1 + rng() % 4;
        for (std::size_t k = 0; k < count; ++k) {
            Exponents g(3);
            bool nonzero = false;
            for (auto& x : g) {
                x = Integer(rng() % 4);
                if (x > 0) nonzero = true;
            }
            if (!nonzero) g[rng() % 3] = 1;
            gens.push_back(std::move(g));
        }
        MonomialIdeal I(r, std::move(gens));
        if (I.is_unit()) continue;
        CHECK(prime_set(associated_primes(I)) == brute_force_ass(I, 4));
    }
}

TEST_CASE("squarefree ideals have no embedded primes") {
    std::mt19937_64 rng(777);
    Ring r({"a", "b", "c", "d"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Exponents> gens;
        std::size_t count = 1 + rng() % 5;
        for (std::size_t k = 0; k < count; ++k) {
            Exponents g(4);
            bool nonzero = false;
            for (auto& x : g) {
                x = Integer(rng() % 2);
                if (x > 0) nonzero = true;
            }
            if (!nonzero) g[rng() % 4] = 1;
            gens.push_back(std::move(g));
        }
        MonomialIdeal I(r, std::move(gens));
        if (I.is_unit()) continue;
        CHECK(prime_set(associated_primes(I)) == prime_set(minimal_primes(I)));
        // Decomposition always reassembles the input.
        CHECK(intersect_components(irreducible_decomposition(I)) == I);
    }
}

TEST_CASE("grade_is_zero") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(grade_is_zero(MonomialPrime(xyz(), {0, 1}), I));
    CHECK(!grade_is_zero(MonomialPrime(xyz(), {0, 1, 2}), I));
    CHECK(grade_is_zero(MonomialPrime(xyz(), {1}), ideal(xyz(), {{1, 1, 0}, {0, 1, 1}})));
    CHECK(!grade_is_zero(MonomialPrime(xyz(), {0}), MonomialIdeal::zero(xyz())));
    CHECK_THROWS_AS(grade_is_zero(MonomialPrime(xyz(), {0}), MonomialIdeal::unit(xyz())),
                    PreconditionError);
}

TEST_CASE("primary components over minimal primes") {
    // (xy, yz): components ((y),(y)) and ((x,z),(x,z)).
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}});
    auto pd = primary_components_min(I);
    REQUIRE(pd.components.size() == 2);
    MonomialIdeal check = MonomialIdeal::unit(xyz());
    for (const auto& [p, Q] : pd.components) {
        CHECK(radical(Q) == prime_ideal(p));
        check = intersect(check, Q);
    }
    CHECK(check == I);

    // A prime decomposes as itself.
    auto p = ideal(xyz(), {{1, 0, 0}, {0, 0, 1}});
    auto pdp = primary_components_min(p);
    REQUIRE(pdp.components.size() == 1);
    CHECK(pdp.components[0].second == p);

    // Embedded prime obstructs.
    auto emb = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    CHECK_THROWS_WITH_AS(primary_components_min(emb),
                         doctest::Contains("(x,y)"), PreconditionError);
}

TEST_CASE("triangle primary components") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto pd = primary_components_min(I);
    REQUIRE(pd.components.size() == 3);
    for (const auto& [p, Q] : pd.components)
        CHECK(Q == prime_ideal(p)); // contraction of the triangle is the prime itself
}
