#include "ratpow/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>
#include <utility>

#include "ratpow/decompose.hpp"
#include "ratpow/simplex.hpp"

namespace ratpow {

namespace {

Integer vector_gcd(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) g = int_gcd(g, x);
    return g;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> M) {
    std::size_t rank = 0;
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (M[r][c] == 0) continue;
            Rational f = M[r][c] / M[rank][c];
            for (std::size_t j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

// A row of the elimination tableau: sum(coef[v] * var_v) + coef.back() >= 0.
// The ancestor bitset tracks which original rows combined into this one, so
// Imbert's acceleration can drop rows that are provably redundant.
struct FmRow {
    std::vector<Integer> coef;
    std::uint64_t anc_lo = 0;
    std::uint64_t anc_hi = 0;
};

int ancestor_count(const FmRow& r) {
    return __builtin_popcountll(r.anc_lo) + __builtin_popcountll(r.anc_hi);
}

void set_ancestor(FmRow& r, std::size_t index) {
    if (index < 64)
        r.anc_lo |= std::uint64_t(1) << index;
    else
        r.anc_hi |= std::uint64_t(1) << (index - 64);
}

// Divides the row by the gcd of its entries.  Returns false for rows with no
// variable part, which carry no constraint (their constant must be >= 0).
bool normalize_row(FmRow& r) {
    bool any_var = false;
    for (std::size_t j = 0; j + 1 < r.coef.size(); ++j)
        if (r.coef[j] != 0) { any_var = true; break; }
    if (!any_var) {
        if (r.coef.back() < 0)
            throw InternalCheckError("elimination produced an infeasible row");
        return false;
    }
    Integer g = vector_gcd(r.coef);
    if (g > 1)
        for (auto& x : r.coef) x /= g;
    return true;
}

void insert_row(std::map<std::vector<Integer>, FmRow>& pool, FmRow row) {
    auto it = pool.find(row.coef);
    if (it == pool.end()) {
        auto key = row.coef;
        pool.emplace(std::move(key), std::move(row));
    } else if (ancestor_count(row) < ancestor_count(it->second)) {
        it->second = std::move(row);
    }
}

// Eliminates one column from the system by combining positive and negative
// rows.  `eliminated` counts this elimination too; a combined row with more
// than eliminated+1 ancestors is redundant by Imbert's criterion.
std::map<std::vector<Integer>, FmRow>
eliminate_column(const std::map<std::vector<Integer>, FmRow>& rows,
                 std::size_t col, int eliminated) {
    std::vector<const FmRow*> pos, neg;
    std::map<std::vector<Integer>, FmRow> out;
    for (const auto& [key, r] : rows) {
        if (r.coef[col] > 0)
            pos.push_back(&r);
        else if (r.coef[col] < 0)
            neg.push_back(&r);
        else
            out.emplace(key, r);
    }
    for (const FmRow* p : pos) {
        for (const FmRow* q : neg) {
            FmRow combined;
            combined.anc_lo = p->anc_lo | q->anc_lo;
            combined.anc_hi = p->anc_hi | q->anc_hi;
            if (ancestor_count(combined) > eliminated + 1) continue;
            const Integer pc = p->coef[col];
            const Integer nc = -q->coef[col];
            combined.coef.resize(p->coef.size());
            for (std::size_t j = 0; j < combined.coef.size(); ++j)
                combined.coef[j] = p->coef[j] * nc + q->coef[j] * pc;
            if (normalize_row(combined)) insert_row(out, std::move(combined));
        }
    }
    return out;
}

bool halfspace_before(const HalfSpace& a, const HalfSpace& b) {
    if (a.rhs != b.rhs) return a.rhs > b.rhs;
    Integer da = 0, db = 0;
    for (const auto& x : a.normal) da += x;
    for (const auto& x : b.normal) db += x;
    if (da != db) return da < db;
    return a.normal > b.normal;
}

// True when the candidate supporting half-space defines a facet: the affine
// hull of its tight face (tight generators plus the orthant rays it
// contains) must have dimension n-1.
bool is_facet(const HalfSpace& h, const std::vector<Exponents>& gens,
              const Integer& support_value, std::size_t n) {
    std::vector<const Exponents*> tight;
    for (const auto& g : gens) {
        Integer dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += h.normal[i] * g[i];
        if (dot == support_value) tight.push_back(&g);
    }
    if (tight.empty())
        throw InternalCheckError("supporting half-space with no tight generator");

    std::vector<std::vector<Rational>> M;
    for (std::size_t k = 1; k < tight.size(); ++k) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = Rational((*tight[k])[i] - (*tight[0])[i]);
        M.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (h.normal[i] != 0) continue;
        std::vector<Rational> row(n, Rational(0));
        row[i] = 1;
        M.push_back(std::move(row));
    }
    return matrix_rank(std::move(M)) == n - 1;
}

unsigned configured_threads() {
    const char* env = std::getenv("RATPOW_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    if (v > 32) return 32;
    return static_cast<unsigned>(v);
}

// Scans the sub-box with first coordinate in [lo, hi] and the remaining
// coordinates in [0, box_i] for lattice points of P that are minimal, i.e.
// where decrementing any positive coordinate violates some facet.  The facet
// dot products are maintained incrementally along the odometer walk.
void scan_slab(const std::vector<std::vector<Integer>>& normals,
               const std::vector<Integer>& thresholds,
               const std::vector<Integer>& box,
               const Integer& lo, const Integer& hi,
               std::vector<Exponents>& out) {
    const std::size_t n = box.size();
    const std::size_t h = normals.size();
    Exponents a(n, Integer(0));
    a[0] = lo;
    std::vector<Integer> vals(h);
    for (std::size_t f = 0; f < h; ++f) vals[f] = normals[f][0] * lo;

    for (;;) {
        bool inside = true;
        for (std::size_t f = 0; f < h; ++f)
            if (vals[f] < thresholds[f]) { inside = false; break; }
        if (inside) {
            bool minimal = true;
            for (std::size_t i = 0; i < n && minimal; ++i) {
                if (a[i] == 0) continue;
                bool witnessed = false;
                for (std::size_t f = 0; f < h; ++f) {
                    if (vals[f] - normals[f][i] < thresholds[f]) { witnessed = true; break; }
                }
                if (!witnessed) minimal = false;
            }
            if (minimal) out.push_back(a);
        }

        // Odometer step: last coordinate fastest; the first coordinate is
        // confined to [lo, hi].
        std::size_t j = n;
        for (;;) {
            if (j == 0) return;
            --j;
            const Integer& limit = (j == 0) ? hi : box[j];
            if (a[j] < limit) break;
            for (std::size_t f = 0; f < h; ++f) vals[f] -= normals[f][j] * a[j];
            a[j] = (j == 0) ? lo : Integer(0);
            if (j == 0) return; // wrapped past the slab
        }
        ++a[j];
        for (std::size_t f = 0; f < h; ++f) vals[f] += normals[f][j];
    }
}

} // namespace

HalfSpace::HalfSpace(std::vector<Integer> normal_, Rational rhs_)
    : normal(std::move(normal_)), rhs(std::move(rhs_)) {
    Integer g = 0;
    for (const auto& x : normal) {
        if (x < 0) throw PreconditionError("half-space normal must be nonnegative");
        g = int_gcd(g, x);
    }
    if (g == 0) throw PreconditionError("half-space normal must be nonzero");
    if (rhs <= 0) throw PreconditionError("half-space rhs must be positive");
    if (g > 1) {
        for (auto& x : normal) x /= g;
        rhs /= Rational(g);
    }
}

HalfSpace::HalfSpace(const std::vector<Rational>& normal_, const Rational& rhs_)
    : HalfSpace(
          [&] {
              Integer scale = 1;
              for (const auto& x : normal_) scale = int_lcm(scale, rat_den(x));
              std::vector<Integer> ints;
              ints.reserve(normal_.size());
              for (const auto& x : normal_)
                  ints.push_back(rat_num(x) * (scale / rat_den(x)));
              return ints;
          }(),
          [&] {
              Integer scale = 1;
              for (const auto& x : normal_) scale = int_lcm(scale, rat_den(x));
              return rhs_ * Rational(scale);
          }()) {}

HalfSpacePolyhedron newton_polyhedron(const MonomialIdeal& I) {
    if (I.is_zero())
        throw EmptyPolyhedronError("the zero ideal has an empty Newton polyhedron");
    if (I.is_unit())
        throw PreconditionError("the unit ideal has no Newton polyhedron");

    const std::vector<Exponents>& gens = I.generators();
    const std::size_t n = I.ring().size();
    const std::size_t m = gens.size();
    const std::size_t L = m - 1; // lambda variables; the last one is substituted
    if (n + m + 1 > 128)
        throw PreconditionError("too many generators for the elimination tableau");

    // System in variables (lambda_0..lambda_{L-1}, a_0..a_{n-1}):
    //   a_i - sum_g lambda_g g_i - (1 - sum lambda_g) G_i >= 0   (hull + orthant)
    //   lambda_g >= 0,  1 - sum lambda_g >= 0
    // where G is the last generator.
    std::map<std::vector<Integer>, FmRow> rows;
    std::size_t next_index = 0;
    const Exponents& G = gens[m - 1];
    for (std::size_t i = 0; i < n; ++i) {
        FmRow r;
        r.coef.assign(L + n + 1, Integer(0));
        for (std::size_t g = 0; g < L; ++g) r.coef[g] = G[i] - gens[g][i];
        r.coef[L + i] = 1;
        r.coef.back() = -G[i];
        set_ancestor(r, next_index++);
        if (normalize_row(r)) insert_row(rows, std::move(r));
    }
    for (std::size_t g = 0; g < L; ++g) {
        FmRow r;
        r.coef.assign(L + n + 1, Integer(0));
        r.coef[g] = 1;
        set_ancestor(r, next_index++);
        insert_row(rows, std::move(r));
    }
    {
        FmRow r;
        r.coef.assign(L + n + 1, Integer(0));
        for (std::size_t g = 0; g < L; ++g) r.coef[g] = -1;
        r.coef.back() = 1;
        set_ancestor(r, next_index++);
        if (normalize_row(r)) insert_row(rows, std::move(r));
    }

    for (std::size_t col = 0; col < L; ++col)
        rows = eliminate_column(rows, col, static_cast<int>(col) + 1);

    // Extract candidate half-spaces <w, a> >= -const and keep the facets.
    std::vector<HalfSpace> facets;
    for (const auto& [key, r] : rows) {
        std::vector<Integer> w(r.coef.begin() + static_cast<std::ptrdiff_t>(L),
                               r.coef.begin() + static_cast<std::ptrdiff_t>(L + n));
        for (const auto& x : w)
            if (x < 0)
                throw InternalCheckError("elimination produced a negative normal");
        Integer rhs = -r.coef.back();
        if (rhs <= 0) continue; // implied by the nonnegative orthant

        HalfSpace h(std::move(w), Rational(rhs));
        // The supporting value of this normal over P is its minimum over the
        // generators (the normal is nonnegative, so vertices decide).
        Integer support = 0;
        bool first = true;
        for (const auto& g : gens) {
            Integer dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += h.normal[i] * g[i];
            if (first || dot < support) { support = dot; first = false; }
        }
        if (Rational(support) < h.rhs)
            throw InternalCheckError("elimination produced an invalid inequality");
        if (Rational(support) > h.rhs) continue; // not supporting here
        if (is_facet(h, gens, support, n)) facets.push_back(std::move(h));
    }

    std::sort(facets.begin(), facets.end(), halfspace_before);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return HalfSpacePolyhedron{I.ring(), std::move(facets)};
}

HalfSpacePolyhedron symbolic_polyhedron(const MonomialIdeal& I) {
    if (!is_squarefree(I))
        throw PreconditionError("symbolic polyhedron needs a squarefree ideal");
    std::vector<MonomialPrime> ass = associated_primes(I); // rejects zero/unit

    // Keep inclusion-minimal supports: a prime containing a smaller one
    // contributes a half-space implied by the smaller prime's.
    std::vector<HalfSpace> halfspaces;
    for (const auto& p : ass) {
        bool minimal = true;
        for (const auto& q : ass) {
            if (q.variables == p.variables) continue;
            if (std::includes(p.variables.begin(), p.variables.end(),
                              q.variables.begin(), q.variables.end())) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        std::vector<Integer> w(I.ring().size(), Integer(0));
        for (std::size_t i : p.variables) w[i] = 1;
        halfspaces.emplace_back(std::move(w), Rational(1));
    }
    std::sort(halfspaces.begin(), halfspaces.end(), halfspace_before);
    return HalfSpacePolyhedron{I.ring(), std::move(halfspaces)};
}

HalfSpacePolyhedron scale(const HalfSpacePolyhedron& P, const Rational& u) {
    if (u <= 0) throw PreconditionError("scaling factor must be positive");
    HalfSpacePolyhedron out{P.ring, {}};
    out.halfspaces.reserve(P.halfspaces.size());
    for (const auto& h : P.halfspaces)
        out.halfspaces.emplace_back(h.normal, h.rhs * u);
    return out;
}

bool contains_point(const HalfSpacePolyhedron& P, const std::vector<Rational>& a) {
    if (a.size() != P.ring.size())
        throw DimensionError("point has wrong dimension");
    for (const auto& x : a)
        if (x < 0) throw PreconditionError("membership test needs a nonnegative point");
    for (const auto& h : P.halfspaces) {
        Rational dot = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (h.normal[i] != 0) dot += Rational(h.normal[i]) * a[i];
        if (dot < h.rhs) return false;
    }
    return true;
}

LpOptimum lp_minimize(const HalfSpacePolyhedron& P, const std::vector<Rational>& objective) {
    if (objective.size() != P.ring.size())
        throw DimensionError("objective has wrong dimension");
    for (const auto& c : objective)
        if (c < 0) throw PreconditionError("objective must be nonnegative");

    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& h : P.halfspaces) {
        std::vector<Rational> row(h.normal.size());
        for (std::size_t i = 0; i < h.normal.size(); ++i) row[i] = Rational(h.normal[i]);
        A.push_back(std::move(row));
        b.push_back(h.rhs);
    }
    LpSolution sol = lp_solve_min(A, b, objective);
    if (sol.status == LpStatus::infeasible)
        throw InfeasibleError("polyhedron is empty");
    if (sol.status == LpStatus::unbounded)
        throw InternalCheckError("nonnegative objective cannot be unbounded below");
    return LpOptimum{std::move(sol.value), std::move(sol.point)};
}

MonomialIdeal minimal_lattice_generators(const HalfSpacePolyhedron& P,
                                         const std::vector<Integer>& box_hint,
                                         const Integer& box_margin) {
    const std::size_t n = P.ring.size();
    if (!box_hint.empty() && box_hint.size() != n)
        throw DimensionError("box hint has wrong dimension");
    if (box_margin < 0)
        throw PreconditionError("box margin must be nonnegative");

    const std::size_t h = P.halfspaces.size();
    std::vector<std::vector<Integer>> normals(h);
    std::vector<Integer> thresholds(h);
    for (std::size_t f = 0; f < h; ++f) {
        normals[f] = P.halfspaces[f].normal;
        // Integer dots compare against the rhs ceiling.
        thresholds[f] = ceil_rat(P.halfspaces[f].rhs);
    }

    // A minimal point cannot exceed ceil(rhs / w_i) in coordinate i for every
    // facet with w_i > 0 (see header); coordinates no facet watches are 0.
    std::vector<Integer> box(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t f = 0; f < h; ++f) {
            if (normals[f][i] == 0) continue;
            Integer bound = ceil_rat(P.halfspaces[f].rhs / Rational(normals[f][i]));
            box[i] = std::max(box[i], bound);
        }
        if (!box_hint.empty()) box[i] = std::min(box[i], box_hint[i]);
        box[i] += box_margin;
    }

    // Split the first coordinate's range into slabs; each is scanned
    // independently since minimality is a pointwise facet test.
    unsigned threads = configured_threads();
    Integer range = box.empty() ? Integer(0) : box[0] + 1;
    if (Integer(threads) > range) threads = static_cast<unsigned>(range);
    std::vector<std::vector<Exponents>> results(threads);
    if (threads <= 1 || n == 0) {
        if (n > 0) scan_slab(normals, thresholds, box, 0, box[0], results[0]);
        else results.resize(1);
    } else {
        std::vector<std::thread> pool;
        Integer chunk = range / threads;
        Integer extra = range % threads;
        Integer lo = 0;
        for (unsigned t = 0; t < threads; ++t) {
            Integer size = chunk + (Integer(t) < extra ? 1 : 0);
            Integer hi = lo + size - 1;
            pool.emplace_back([&, t, lo, hi] {
                scan_slab(normals, thresholds, box, lo, hi, results[t]);
            });
            lo = hi + 1;
        }
        for (auto& th : pool) th.join();
    }

    std::vector<Exponents> points;
    for (auto& r : results)
        points.insert(points.end(), std::make_move_iterator(r.begin()),
                      std::make_move_iterator(r.end()));
    if (n == 0) return MonomialIdeal::unit(P.ring);
    return MonomialIdeal::from_antichain(P.ring, std::move(points));
}

StabilityDenominator stability_denominator(const MonomialIdeal& I) {
    HalfSpacePolyhedron P = newton_polyhedron(I);
    Integer e = 1;
    for (const auto& h : P.halfspaces) e = int_lcm(e, rat_num(h.rhs));
    return StabilityDenominator{e};
}

} // namespace ratpow
