#pragma once

#include <vector>

#include "ratpow/numeric.hpp"

namespace ratpow {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status;
    Rational value;               // objective at the optimum (when optimal)
    std::vector<Rational> point;  // an optimal basic solution (when optimal)
};

// Minimizes c.x subject to A x >= b and x >= 0, exactly over the rationals.
// Two-phase primal simplex with Bland's rule, so it always terminates.
// A is a list of rows; every row and c must have the same length.
LpSolution lp_solve_min(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

} // namespace ratpow
