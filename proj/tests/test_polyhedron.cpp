#include "doctest.h"

#include <cstdlib>
#include <random>

#include "ratpow/polyhedron.hpp"
#include "ratpow/simplex.hpp"

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

std::vector<Rational> qvec(std::vector<Rational> v) { return v; }

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> to_rat(const Exponents& a) {
    std::vector<Rational> out;
    for (const auto& x : a) out.emplace_back(x);
    return out;
}

// Is v a convex combination of the generators?  Solved as an exact LP
// feasibility problem with equalities encoded as paired inequalities.
bool in_hull_plus_orthant(const std::vector<Exponents>& gens,
                          const std::vector<Rational>& v) {
    // v >= sum l_g g, sum l_g = 1, l >= 0: feasibility with slack r = v - sum.
    std::size_t n = v.size(), m = gens.size();
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < n; ++i) { // -sum_g l_g g_i >= -v_i
        std::vector<Rational> row(m);
        for (std::size_t g = 0; g < m; ++g) row[g] = -Rational(gens[g][i]);
        A.push_back(std::move(row));
        b.push_back(-v[i]);
    }
    A.emplace_back(m, Rational(1)); // sum l = 1 as two inequalities
    b.push_back(q(1));
    A.emplace_back(m, Rational(-1));
    b.push_back(q(-1));
    return lp_solve_min(A, b, std::vector<Rational>(m, q(0))).status == LpStatus::optimal;
}

long count_lattice_points(const HalfSpacePolyhedron& P, long box) {
    std::size_t n = P.ring.size();
    std::vector<long> a(n, 0);
    long count = 0;
    for (;;) {
        std::vector<Rational> pt;
        for (long v : a) pt.emplace_back(v);
        if (contains_point(P, pt)) ++count;
        std::size_t i = 0;
        while (i < n && a[i] == box) { a[i] = 0; ++i; }
        if (i == n) return count;
        ++a[i];
    }
}

} // namespace

TEST_CASE("newton polyhedron of (xy, yz)") {
    auto P = newton_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(P.halfspaces.size() == 2);
    CHECK(P.halfspaces[0].normal == std::vector<Integer>{0, 1, 0});
    CHECK(P.halfspaces[0].rhs == q(1));
    CHECK(P.halfspaces[1].normal == std::vector<Integer>{1, 0, 1});
    CHECK(P.halfspaces[1].rhs == q(1));
}

TEST_CASE("newton polyhedron of (x^2, y^2)") {
    auto P = newton_polyhedron(ideal(xy(), {{2, 0}, {0, 2}}));
    REQUIRE(P.halfspaces.size() == 1);
    CHECK(P.halfspaces[0].normal == std::vector<Integer>{1, 1});
    CHECK(P.halfspaces[0].rhs == q(2));
}

TEST_CASE("newton polyhedron of (xy^5, x^2y^2, x^4y)") {
    auto I = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    auto P = newton_polyhedron(I);
    REQUIRE(P.halfspaces.size() == 4);
    CHECK(P.halfspaces[0].normal == std::vector<Integer>{3, 1});
    CHECK(P.halfspaces[0].rhs == q(8));
    CHECK(P.halfspaces[1].normal == std::vector<Integer>{1, 2});
    CHECK(P.halfspaces[1].rhs == q(6));
    CHECK(P.halfspaces[2].normal == std::vector<Integer>{1, 0});
    CHECK(P.halfspaces[2].rhs == q(1));
    CHECK(P.halfspaces[3].normal == std::vector<Integer>{0, 1});
    CHECK(P.halfspaces[3].rhs == q(1));

    // Every generator satisfies all facet constraints.
    for (const auto& g : I.generators()) CHECK(contains_point(P, to_rat(g)));
}

TEST_CASE("newton polyhedron corner cases") {
    CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::zero(xy())), EmptyPolyhedronError);
    CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::unit(xy())), PreconditionError);

    auto P = newton_polyhedron(ideal(Ring({"x"}), {{3}}));
    REQUIRE(P.halfspaces.size() == 1);
    CHECK(P.halfspaces[0].normal == std::vector<Integer>{1});
    CHECK(P.halfspaces[0].rhs == q(3));
}

TEST_CASE("round trip: generators lie in NP, vertices lie in the hull") {
    std::mt19937_64 rng(4242);
    Ring r({"a", "b", "c"});
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Exponents> gens;
        std::size_t count = 1 + rng() % 5;
        for (std::size_t k = 0; k < count; ++k) {
            Exponents g(3);
            bool nonzero = false;
            for (auto& x : g) {
                x = Integer(rng() % 5);
                if (x > 0) nonzero = true;
            }
            if (!nonzero) g[rng() % 3] = 1;
            gens.push_back(std::move(g));
        }
        MonomialIdeal I(r, std::move(gens));
        if (I.is_unit()) continue;
        auto P = newton_polyhedron(I);
        for (const auto& g : I.generators()) CHECK(contains_point(P, to_rat(g)));

        // Optimal vertices of random LPs over P lie in conv(gens) + orthant.
        for (int probe = 0; probe < 3; ++probe) {
            std::vector<Rational> obj{q(1 + long(rng() % 4)), q(1 + long(rng() % 4)),
                                      q(1 + long(rng() % 4))};
            auto opt = lp_minimize(P, obj);
            CHECK(in_hull_plus_orthant(I.generators(), opt.vertex));
        }
    }
}

TEST_CASE("LP irredundancy of stored half-spaces") {
    auto I = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    auto P = newton_polyhedron(I);
    for (std::size_t f = 0; f < P.halfspaces.size(); ++f) {
        // Minimizing a facet's normal over the others must beat its rhs.
        HalfSpacePolyhedron others{P.ring, {}};
        for (std::size_t g = 0; g < P.halfspaces.size(); ++g)
            if (g != f) others.halfspaces.push_back(P.halfspaces[g]);
        std::vector<Rational> obj;
        for (const auto& w : P.halfspaces[f].normal) obj.emplace_back(w);
        CHECK(lp_minimize(others, obj).value < P.halfspaces[f].rhs);
    }
}

TEST_CASE("integer-point irredundancy within the generator box") {
    auto I = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    auto P = newton_polyhedron(I);
    // The box must reach past the largest facet rhs to expose every facet.
    long inside = count_lattice_points(P, 10);
    for (std::size_t f = 0; f < P.halfspaces.size(); ++f) {
        HalfSpacePolyhedron others{P.ring, {}};
        for (std::size_t g = 0; g < P.halfspaces.size(); ++g)
            if (g != f) others.halfspaces.push_back(P.halfspaces[g]);
        CHECK(count_lattice_points(others, 10) > inside);
    }
}

TEST_CASE("symbolic polyhedron examples") {
    auto P = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(P.halfspaces.size() == 2);
    CHECK(P.halfspaces[0].normal == std::vector<Integer>{0, 1, 0});
    CHECK(P.halfspaces[1].normal == std::vector<Integer>{1, 0, 1});
    CHECK(P.halfspaces[0].rhs == q(1));
    CHECK(P.halfspaces[1].rhs == q(1));

    auto T = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    REQUIRE(T.halfspaces.size() == 3);
    for (const auto& h : T.halfspaces) {
        Integer total = 0;
        for (const auto& w : h.normal) total += w;
        CHECK(total == 2); // each constraint is a pair-sum >= 1
        CHECK(h.rhs == q(1));
    }

    auto single = symbolic_polyhedron(ideal(xyz(), {{1, 0, 0}, {0, 0, 1}}));
    REQUIRE(single.halfspaces.size() == 1);
    CHECK(single.halfspaces[0].normal == std::vector<Integer>{1, 0, 1});

    CHECK_THROWS_AS(symbolic_polyhedron(ideal(xy(), {{2, 0}})), PreconditionError);
}

TEST_CASE("scaling") {
    auto P = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}}));
    auto S = scale(P, q(5, 2));
    CHECK(S.halfspaces[0].rhs == q(5, 2));
    CHECK(S.halfspaces[1].rhs == q(5, 2));
    CHECK(S.halfspaces[0].normal == P.halfspaces[0].normal);

    CHECK(scale(P, q(1)).halfspaces == P.halfspaces);
    CHECK(scale(scale(P, q(2)), q(1, 2)).halfspaces == P.halfspaces);
    CHECK_THROWS_AS(scale(P, q(0)), PreconditionError);
    CHECK_THROWS_AS(scale(P, q(-1)), PreconditionError);
}

TEST_CASE("scale membership is division") {
    auto P = newton_polyhedron(ideal(xy(), {{1, 5}, {2, 2}, {4, 1}}));
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Rational u(1 + long(rng() % 6), 1 + long(rng() % 4));
        auto S = scale(P, u);
        std::vector<Rational> a{Rational(long(rng() % 12), 1 + long(rng() % 3)),
                                Rational(long(rng() % 12), 1 + long(rng() % 3))};
        std::vector<Rational> shrunk{a[0] / u, a[1] / u};
        CHECK(contains_point(S, a) == contains_point(P, shrunk));
    }
}

TEST_CASE("contains_point") {
    auto T = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(contains_point(T, qvec({q(1, 2), q(1, 2), q(1, 2)})));
    auto P = newton_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}}));
    CHECK(!contains_point(P, qvec({q(0), q(0), q(0)})));
    CHECK(contains_point(P, qvec({q(1), q(1), q(0)})));
    CHECK_THROWS_AS(contains_point(P, qvec({q(1), q(1)})), DimensionError);
    CHECK_THROWS_AS(contains_point(P, qvec({q(-1), q(1), q(1)})), PreconditionError);
}

TEST_CASE("lp_minimize") {
    auto T = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    auto opt = lp_minimize(T, qvec({q(1), q(1), q(1)}));
    CHECK(opt.value == q(3, 2));
    CHECK(opt.vertex == qvec({q(1, 2), q(1, 2), q(1, 2)}));

    auto P = newton_polyhedron(ideal(xyz(), {{1, 0, 0}, {0, 0, 1}}));
    CHECK(lp_minimize(P, qvec({q(1), q(1), q(1)})).value == q(1));

    auto S = symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}}));
    CHECK(lp_minimize(S, qvec({q(0), q(1), q(0)})).value == q(1));

    // The optimum never exceeds the value at any generator.
    auto I = ideal(xy(), {{1, 5}, {2, 2}, {4, 1}});
    auto NP = newton_polyhedron(I);
    auto vopt = lp_minimize(NP, qvec({q(2), q(3)}));
    for (const auto& g : I.generators()) {
        Rational at = q(2) * Rational(g[0]) + q(3) * Rational(g[1]);
        CHECK(vopt.value <= at);
    }
    CHECK_THROWS_AS(lp_minimize(NP, qvec({q(-1), q(1)})), PreconditionError);
}

TEST_CASE("minimal lattice generators") {
    // {a1 + a2 >= 2} has minimal points (2,0),(1,1),(0,2).
    auto P = newton_polyhedron(ideal(xy(), {{2, 0}, {0, 2}}));
    CHECK(minimal_lattice_generators(P) == ideal(xy(), {{2, 0}, {1, 1}, {0, 2}}));

    // Example with rhs 5/2 on both symbolic constraints.
    auto S = scale(symbolic_polyhedron(ideal(xyz(), {{1, 1, 0}, {0, 1, 1}})), q(5, 2));
    CHECK(minimal_lattice_generators(S) ==
          ideal(xyz(), {{3, 3, 0}, {2, 3, 1}, {1, 3, 2}, {0, 3, 3}}));

    auto X = newton_polyhedron(ideal(Ring({"x"}), {{1}}));
    CHECK(minimal_lattice_generators(X) == ideal(Ring({"x"}), {{1}}));

    // No half-spaces: the whole orthant, so the origin generates.
    HalfSpacePolyhedron whole{xy(), {}};
    CHECK(minimal_lattice_generators(whole) == MonomialIdeal::unit(xy()));
}

TEST_CASE("lattice generators are insensitive to box margin and threads") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto S = scale(symbolic_polyhedron(I), q(7, 3));
    auto base = minimal_lattice_generators(S);
    CHECK(base == minimal_lattice_generators(S, {}, 2));

    setenv("RATPOW_THREADS", "3", 1);
    auto threaded = minimal_lattice_generators(S);
    unsetenv("RATPOW_THREADS");
    CHECK(base == threaded);
}

TEST_CASE("lattice generator output is a minimal antichain inside P") {
    std::mt19937_64 rng(31337);
    Ring r({"a", "b", "c"});
    for (int trial = 0; trial < 10; ++trial) {
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
        auto P = scale(newton_polyhedron(I), Rational(1 + long(rng() % 5),
                                                      1 + long(rng() % 3)));
        auto M = minimal_lattice_generators(P);
        for (const auto& a : M.generators()) {
            CHECK(contains_point(P, to_rat(a)));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                Exponents down = a;
                --down[i];
                CHECK(!contains_point(P, to_rat(down)));
            }
            // Antichain: no other generator divides it.
            for (const auto& b : M.generators())
                if (&a != &b) CHECK(!divides(b, a));
        }
    }
}

TEST_CASE("NP is inside SP for squarefree ideals (integer points)") {
    auto I = ideal(xyz(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto NP = newton_polyhedron(I);
    auto SP = symbolic_polyhedron(I);
    std::vector<long> a(3, 0);
    for (a[0] = 0; a[0] <= 3; ++a[0])
        for (a[1] = 0; a[1] <= 3; ++a[1])
            for (a[2] = 0; a[2] <= 3; ++a[2]) {
                std::vector<Rational> pt{q(a[0]), q(a[1]), q(a[2])};
                if (contains_point(NP, pt)) CHECK(contains_point(SP, pt));
            }
}

TEST_CASE("stability denominator") {
    CHECK(stability_denominator(ideal(Ring({"x"}), {{1}})).e == 1);
    CHECK(stability_denominator(ideal(xy(), {{2, 0}, {0, 2}})).e == 2);
    CHECK(stability_denominator(ideal(xy(), {{1, 5}, {2, 2}, {4, 1}})).e == 24);
}
