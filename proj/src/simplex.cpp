#include "ratpow/simplex.hpp"

#include <algorithm>
#include <cstddef>

namespace ratpow {

namespace {

// Full-tableau simplex state.  Columns are laid out as
//   [ structural x (n) | surplus s (m) | artificial z (m) | rhs ]
// and the basis always holds one column index per row.
struct Tableau {
    std::vector<std::vector<Rational>> rows; // m x (cols+1), last entry = rhs
    std::vector<Rational> cost;              // reduced-cost row, cols+1 wide
    std::vector<std::size_t> basis;          // basic column per row
    std::size_t cols;

    Rational& rhs(std::size_t i) { return rows[i][cols]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = rows[r][c];
        for (auto& v : rows[r]) v /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Runs Bland's rule to optimality on the current cost row; allowed[j]
    // marks columns that may enter.  Returns false when unbounded.
    bool optimize(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (allowed[j] && cost[j] < 0) { enter = j; break; }
            }
            if (enter == cols) return true; // optimal

            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rhs(i) / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false; // unbounded
            pivot(leave, enter);
        }
    }
};

} // namespace

LpSolution lp_solve_min(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m)
        throw DimensionError("constraint matrix and rhs sizes do not match");
    for (const auto& row : A)
        if (row.size() != n)
            throw DimensionError("constraint row and objective sizes do not match");

    Tableau t;
    t.cols = n + 2 * m;
    t.basis.resize(m);
    t.rows.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        // a.x - s_i = b_i, flipped so the rhs is nonnegative, plus an
        // artificial z_i to provide the initial identity basis.
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.rows[i][j] = flip ? -A[i][j] : A[i][j];
        t.rows[i][n + i] = flip ? Rational(1) : Rational(-1);
        t.rows[i][n + m + i] = 1;
        t.rhs(i) = flip ? -b[i] : b[i];
        t.basis[i] = n + m + i;
    }

    // Phase 1: minimize the sum of artificials.  The reduced-cost row for
    // basis z is (sum of structural parts of each row), negated.
    t.cost.assign(t.cols + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= t.cols; ++j)
            if (t.rows[i][j] != 0 && j < n + m) t.cost[j] -= t.rows[i][j];
    for (std::size_t i = 0; i < m; ++i) t.cost[t.cols] -= t.rhs(i);

    std::vector<bool> allowed(t.cols, true);
    if (!t.optimize(allowed))
        throw InternalCheckError("phase-1 objective cannot be unbounded");
    if (-t.cost[t.cols] > 0)
        return {LpStatus::infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis; a row with no usable
    // pivot column is redundant and gets dropped.
    for (std::size_t i = t.rows.size(); i-- > 0;) {
        if (t.basis[i] < n + m) continue;
        std::size_t pivot_col = t.cols;
        for (std::size_t j = 0; j < n + m; ++j)
            if (t.rows[i][j] != 0) { pivot_col = j; break; }
        if (pivot_col == t.cols) {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            t.pivot(i, pivot_col);
        }
    }

    // Phase 2: original costs on the structural variables; artificials are
    // barred from entering.
    t.cost.assign(t.cols + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) t.cost[j] = c[j];
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < n && t.cost[t.basis[i]] != 0) {
            Rational f = t.cost[t.basis[i]];
            for (std::size_t j = 0; j <= t.cols; ++j) t.cost[j] -= f * t.rows[i][j];
        }
    }
    for (std::size_t j = n + m; j < t.cols; ++j) allowed[j] = false;
    if (!t.optimize(allowed))
        return {LpStatus::unbounded, Rational(0), {}};

    LpSolution out;
    out.status = LpStatus::optimal;
    out.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) out.point[t.basis[i]] = t.rhs(i);
    out.value = 0;
    for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.point[j];
    return out;
}

} // namespace ratpow
