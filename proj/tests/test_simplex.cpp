#include "doctest.h"

#include "ratpow/simplex.hpp"

using namespace ratpow;

namespace {

using Rows = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

Rational q(long n, long d = 1) { return Rational(n, d); }

bool feasible(const Rows& A, const Vec& b, const Vec& x) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += A[i][j] * x[j];
        if (lhs < b[i]) return false;
    }
    for (const auto& v : x)
        if (v < 0) return false;
    return true;
}

} // namespace

TEST_CASE("two-constraint optimum at a vertex") {
    // min x + y on x + 2y >= 6, 3x + y >= 8: optimum at (2,2).
    Rows A{{q(1), q(2)}, {q(3), q(1)}};
    Vec b{q(6), q(8)};
    auto sol = lp_solve_min(A, b, {q(1), q(1)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == q(4));
    CHECK(sol.point == Vec{q(2), q(2)});
}

TEST_CASE("optimum along a facet") {
    Rows A{{q(1), q(2)}, {q(3), q(1)}};
    Vec b{q(6), q(8)};
    auto sol = lp_solve_min(A, b, {q(3), q(1)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == q(8));
    CHECK(feasible(A, b, sol.point));
}

TEST_CASE("rational coefficients") {
    // min x/2 + y/3 on x + y >= 5/2: all weight on y.
    auto sol = lp_solve_min({{q(1), q(1)}}, {q(5, 2)}, {q(1, 2), q(1, 3)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == q(5, 6));
    CHECK(sol.point == Vec{q(0), q(5, 2)});
}

TEST_CASE("infeasible system") {
    // x >= 1 together with -x >= 0.
    auto sol = lp_solve_min({{q(1)}, {q(-1)}}, {q(1), q(0)}, {q(1)});
    CHECK(sol.status == LpStatus::infeasible);
}

TEST_CASE("unbounded objective") {
    auto sol = lp_solve_min({{q(1)}}, {q(0)}, {q(-1)});
    CHECK(sol.status == LpStatus::unbounded);
}

TEST_CASE("redundant and degenerate rows") {
    Rows A{{q(1), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
    Vec b{q(1), q(1), q(0), q(1)};
    auto sol = lp_solve_min(A, b, {q(1), q(1)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == q(1));
    CHECK(sol.point == Vec{q(1), q(0)});
}

TEST_CASE("equalities via paired inequalities") {
    // Feasibility of l1 + l2 = 1, l1 - l2 = 0: the unique point (1/2, 1/2).
    Rows A{{q(1), q(1)}, {q(-1), q(-1)}, {q(1), q(-1)}, {q(-1), q(1)}};
    Vec b{q(1), q(-1), q(0), q(0)};
    auto sol = lp_solve_min(A, b, {q(0), q(0)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.point == Vec{q(1, 2), q(1, 2)});
}

TEST_CASE("zero-variable corner cases") {
    auto sol = lp_solve_min({}, {}, {q(1), q(2)});
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.value == q(0));
    CHECK(sol.point == Vec{q(0), q(0)});

    CHECK_THROWS_AS(lp_solve_min({{q(1)}}, {q(1), q(2)}, {q(1)}), DimensionError);
    CHECK_THROWS_AS(lp_solve_min({{q(1), q(2)}}, {q(1)}, {q(1)}), DimensionError);
}

TEST_CASE("three-dimensional optimum") {
    // min 2x + 3y + z on x+y >= 2, y+z >= 2, x+z >= 2.
    Rows A{{q(1), q(1), q(0)}, {q(0), q(1), q(1)}, {q(1), q(0), q(1)}};
    Vec b{q(2), q(2), q(2)};
    auto sol = lp_solve_min(A, b, {q(2), q(3), q(1)});
    REQUIRE(sol.status == LpStatus::optimal);
    // Candidates: (1,1,1) -> 6, (2,0,2) -> 6, (0,2,2) -> 8, (2,2,0) -> 10.
    CHECK(sol.value == q(6));
    CHECK(feasible(A, b, sol.point));
}
