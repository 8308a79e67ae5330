#include "ratpow/powers.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ratpow/decompose.hpp"
#include "ratpow/errors.hpp"
#include "ratpow/polyhedron.hpp"

namespace ratpow {

namespace {

void require_positive_exponent(const Rational& u) {
    if (u <= 0) {
        throw PreconditionError("power exponent must be positive, got " + rat_to_string(u));
    }
}

// Coordinate maxima of the generators; the scan box for every monomial
// operation at exponent u is the product of [0, ceil(u*M_i) + 1].
std::vector<Integer> generator_maxima(const MonomialIdeal& I) {
    std::vector<Integer> maxima(I.ring().size(), Integer(0));
    for (const auto& g : I.generators()) {
        for (std::size_t i = 0; i < maxima.size(); ++i) {
            maxima[i] = std::max(maxima[i], g[i]);
        }
    }
    return maxima;
}

std::vector<Integer> scan_box(const MonomialIdeal& I, const Rational& u,
                              const Integer& box_margin) {
    std::vector<Integer> box = generator_maxima(I);
    for (auto& b : box) {
        b = ceil_rat(u * Rational(b)) + 1 + box_margin;
    }
    return box;
}

// Minimal points of an up-closed predicate inside the box prod [0, box[i]].
// Points are visited in ascending lexicographic order, so every proper
// divisor of a point precedes it; a point divisible by an already-found
// minimal point is skipped without evaluating the predicate, and any point
// that passes is therefore itself minimal.  The found points form an
// antichain by construction.
template <typename Pred>
std::vector<Exponents> minimal_points_in_box(const std::vector<Integer>& box, Pred&& pred) {
    const std::size_t n = box.size();
    std::vector<Exponents> found;
    Exponents point(n, Integer(0));
    for (;;) {
        bool covered = false;
        for (const auto& f : found) {
            if (divides(f, point)) {
                covered = true;
                break;
            }
        }
        if (!covered && pred(point)) {
            found.push_back(point);
        }
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (point[i] < box[i]) {
                ++point[i];
                std::fill(point.begin() + static_cast<std::ptrdiff_t>(i) + 1, point.end(),
                          Integer(0));
                break;
            }
            if (i == 0) {
                return found;
            }
        }
        if (n == 0) {
            return found;
        }
    }
}

MonomialIdeal require_squarefree(const MonomialIdeal& I, const char* what) {
    if (I.is_zero() || I.is_unit()) {
        throw PreconditionError(std::string(what) + " needs a nonzero proper ideal");
    }
    if (!is_squarefree(I)) {
        throw PreconditionError(std::string(what) + " needs a squarefree monomial ideal");
    }
    return I;
}

// Membership of x^c in the p-th symbolic power of squarefree I, evaluated
// prime by prime: (p')^p contains x^c iff the coordinates of c over p' sum
// to at least p.
bool in_symbolic_integer_power(const std::vector<MonomialPrime>& primes, const Integer& p,
                               const Exponents& c) {
    for (const auto& prime : primes) {
        Integer degree(0);
        for (std::size_t i : prime.variables) {
            degree += c[i];
        }
        if (degree < p) {
            return false;
        }
    }
    return true;
}

RationalPowerResult symbolic_by_root(const MonomialIdeal& I, const Rational& u,
                                     const Integer& box_margin) {
    const auto primes = minimal_primes(I);
    const Integer p = rat_num(u);
    const Integer q = rat_den(u);
    const auto box = scan_box(I, u, box_margin);
    auto points = minimal_points_in_box(box, [&](const Exponents& a) {
        Exponents c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            c[i] = q * a[i];
        }
        return in_symbolic_integer_power(primes, p, c);
    });
    return {MonomialIdeal::from_antichain(I.ring(), std::move(points)), u,
            PowerMethod::root_characterization};
}

RationalPowerResult symbolic_by_sp_scaling(const MonomialIdeal& I, const Rational& u,
                                           const Integer& box_margin) {
    auto P = scale(symbolic_polyhedron(I), u);
    auto ideal = minimal_lattice_generators(P, scan_box(I, u, Integer(0)), box_margin);
    return {std::move(ideal), u, PowerMethod::sp_scaling};
}

RationalPowerResult symbolic_by_prime_intersection(const MonomialIdeal& I, const Rational& u,
                                                   const Integer& box_margin) {
    MonomialIdeal result = MonomialIdeal::unit(I.ring());
    for (const auto& prime : associated_primes(I)) {
        result = intersect(result, rational_power(prime_ideal(prime), u, box_margin).ideal);
    }
    return {std::move(result), u, PowerMethod::prime_intersection};
}

RationalPowerResult symbolic_by_localization(const MonomialIdeal& I, const Rational& u,
                                             const Integer& box_margin) {
    if (I.is_zero() || I.is_unit()) {
        throw PreconditionError("rational symbolic power needs a nonzero proper ideal");
    }
    const MonomialIdeal closure_power = rational_power(I, u, box_margin).ideal;
    MonomialIdeal result = MonomialIdeal::unit(I.ring());
    for (const auto& prime : associated_primes(I)) {
        result = intersect(result, contract_to_prime(closure_power, prime));
    }
    return {std::move(result), u, PowerMethod::localization_contraction};
}

} // namespace

std::string method_name(PowerMethod method) {
    switch (method) {
    case PowerMethod::newton_scaling: return "newton-scaling";
    case PowerMethod::root_characterization: return "root-characterization";
    case PowerMethod::sp_scaling: return "sp-scaling";
    case PowerMethod::prime_intersection: return "prime-intersection";
    case PowerMethod::localization_contraction: return "localization-contraction";
    case PowerMethod::saturation: return "saturation";
    }
    throw InternalCheckError("unknown power method");
}

std::optional<PowerMethod> method_from_name(const std::string& name) {
    for (PowerMethod m : {PowerMethod::newton_scaling, PowerMethod::root_characterization,
                          PowerMethod::sp_scaling, PowerMethod::prime_intersection,
                          PowerMethod::localization_contraction, PowerMethod::saturation}) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

SkewValuation::SkewValuation(std::vector<Integer> coefficients_)
    : coefficients(std::move(coefficients_)) {
    bool positive = false;
    for (const auto& c : coefficients) {
        if (c < 0) {
            throw PreconditionError("skew valuation coefficients must be nonnegative");
        }
        if (c > 0) {
            positive = true;
        }
    }
    if (!positive) {
        throw PreconditionError("skew valuation must have a positive coefficient");
    }
}

Rational skew_value(const SkewValuation& v, const MonomialIdeal& I) {
    if (I.is_zero()) {
        throw PreconditionError("skew value of the zero ideal is undefined");
    }
    if (v.coefficients.size() != I.ring().size()) {
        throw DimensionError("skew valuation has " + std::to_string(v.coefficients.size()) +
                             " coefficients for a ring with " +
                             std::to_string(I.ring().size()) + " variables");
    }
    bool first = true;
    Integer best(0);
    for (const auto& g : I.generators()) {
        Integer value(0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            value += v.coefficients[i] * g[i];
        }
        if (first || value < best) {
            best = value;
            first = false;
        }
    }
    return Rational(best);
}

MonomialIdeal integral_closure(const MonomialIdeal& I, const Integer& box_margin) {
    if (I.is_zero() || I.is_unit()) {
        return I;
    }
    return minimal_lattice_generators(newton_polyhedron(I), scan_box(I, 1, Integer(0)),
                                      box_margin);
}

RationalPowerResult rational_power(const MonomialIdeal& I, const Rational& u,
                                   const Integer& box_margin) {
    require_positive_exponent(u);
    if (I.is_zero() || I.is_unit()) {
        return {I, u, PowerMethod::newton_scaling};
    }
    auto P = scale(newton_polyhedron(I), u);
    auto ideal = minimal_lattice_generators(P, scan_box(I, u, Integer(0)), box_margin);
    return {std::move(ideal), u, PowerMethod::newton_scaling};
}

RationalPowerResult rational_symbolic_power(const MonomialIdeal& I, const Rational& u,
                                            PowerMethod method, const Integer& box_margin) {
    require_positive_exponent(u);
    switch (method) {
    case PowerMethod::newton_scaling:
        throw PreconditionError("newton-scaling computes rational powers, not symbolic ones");
    case PowerMethod::root_characterization:
        return symbolic_by_root(require_squarefree(I, "root-characterization"), u, box_margin);
    case PowerMethod::sp_scaling:
        return symbolic_by_sp_scaling(require_squarefree(I, "sp-scaling"), u, box_margin);
    case PowerMethod::prime_intersection:
        return symbolic_by_prime_intersection(require_squarefree(I, "prime-intersection"), u,
                                              box_margin);
    case PowerMethod::localization_contraction:
        return symbolic_by_localization(I, u, box_margin);
    case PowerMethod::saturation:
        return {symbolic_via_saturation(I, u), u, PowerMethod::saturation};
    }
    throw InternalCheckError("unknown power method");
}

MonomialIdeal differential_power_monomial(const MonomialIdeal& I, const Rational& u,
                                          const Integer& box_margin) {
    if (I.ring().characteristic() != 0) {
        throw PreconditionError("differential powers require characteristic zero");
    }
    require_positive_exponent(u);
    if (I.is_zero()) {
        return I;
    }
    const Integer p = rat_num(u);
    const Integer q = rat_den(u);
    const std::size_t n = I.ring().size();

    // x^b qualifies iff x^{q b - a} lies in I for every a <= q b with
    // |a| <= p - 1.  The set of qualifying b is up-closed: replacing b by
    // b + e_j and a by the witness a with a_j reduced by q (clamped at 0)
    // maps each required membership to one already granted for b.  Failing
    // memberships propagate upward among the a, so only the maximal a --
    // those with |a| = p - 1, or a = q b when |q b| <= p - 1 -- need tests.
    const auto qualifies = [&](const Exponents& b) {
        Exponents c(n);
        Integer c_total(0);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = q * b[i];
            c_total += c[i];
        }
        if (c_total <= p - 1) {
            return I.is_unit(); // the only required quotient is x^0
        }
        // Walk the maximal a: distribute p - 1 across coordinates, capped by c.
        Exponents rest = c;
        bool all_contained = true;
        const auto walk = [&](const auto& self, std::size_t i, Integer budget) -> void {
            if (!all_contained) {
                return;
            }
            if (i + 1 == n) {
                if (budget > rest[i]) {
                    return; // cap exceeded; a larger coordinate absorbs it elsewhere
                }
                Integer saved = rest[i];
                rest[i] -= budget;
                if (!I.contains_monomial(rest)) {
                    all_contained = false;
                }
                rest[i] = saved;
                return;
            }
            Integer top = std::min(budget, rest[i]);
            for (Integer take(0); take <= top; ++take) {
                Integer saved = rest[i];
                rest[i] -= take;
                self(self, i + 1, budget - take);
                rest[i] = saved;
                if (!all_contained) {
                    return;
                }
            }
        };
        walk(walk, 0, p - 1);
        return all_contained;
    };

    auto points = minimal_points_in_box(scan_box(I, u, box_margin), qualifies);
    return MonomialIdeal::from_antichain(I.ring(), std::move(points));
}

MonomialIdeal saturated_power(const MonomialIdeal& I, const Rational& u,
                              const MonomialIdeal& K) {
    if (I.is_zero() || I.is_unit() || K.is_zero() || K.is_unit()) {
        throw PreconditionError("saturated powers need nonzero proper ideals");
    }
    if (I.ring() != K.ring()) {
        throw RingMismatchError("saturated power of ideals in different rings");
    }
    return saturate(rational_power(I, u).ideal, K);
}

MonomialIdeal symbolic_via_saturation(const MonomialIdeal& I, const Rational& u) {
    if (I.is_zero() || I.is_unit()) {
        throw PreconditionError("rational symbolic power needs a nonzero proper ideal");
    }
    const MonomialIdeal closure_power = rational_power(I, u).ideal;
    MonomialIdeal excess = MonomialIdeal::unit(I.ring());
    bool any = false;
    for (const auto& prime : associated_primes(closure_power)) {
        if (!grade_is_zero(prime, I)) {
            excess = intersect(excess, prime_ideal(prime));
            any = true;
        }
    }
    if (!any) {
        return closure_power;
    }
    return saturate(closure_power, excess);
}

Rational waldschmidt(const MonomialIdeal& I, const SkewValuation& v) {
    require_squarefree(I, "waldschmidt constant");
    if (v.coefficients.size() != I.ring().size()) {
        throw DimensionError("skew valuation does not match the ring");
    }
    std::vector<Rational> objective(v.coefficients.size());
    for (std::size_t i = 0; i < objective.size(); ++i) {
        objective[i] = Rational(v.coefficients[i]);
    }
    return lp_minimize(symbolic_polyhedron(I), objective).value;
}

std::vector<Rational> waldschmidt_diagnostic(const MonomialIdeal& I, const SkewValuation& v,
                                             std::size_t count) {
    require_squarefree(I, "waldschmidt diagnostic");
    const auto primes = minimal_primes(I);
    std::vector<Rational> estimates;
    estimates.reserve(count);
    std::vector<MonomialIdeal> prime_powers;
    for (const auto& prime : primes) {
        prime_powers.push_back(prime_ideal(prime));
    }
    for (std::size_t k = 1; k <= count; ++k) {
        MonomialIdeal symbolic = MonomialIdeal::unit(I.ring());
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (k > 1) {
                prime_powers[j] = product(prime_powers[j], prime_ideal(primes[j]));
            }
            symbolic = intersect(symbolic, prime_powers[j]);
        }
        estimates.push_back(skew_value(v, symbolic) / Rational(k));
    }
    return estimates;
}

bool member_by_valuation(const MonomialIdeal& I, const Rational& u, const Exponents& a) {
    require_squarefree(I, "valuative membership");
    require_positive_exponent(u);
    if (a.size() != I.ring().size()) {
        throw DimensionError("exponent vector does not match the ring");
    }
    for (const auto& e : a) {
        if (e < 0) {
            throw PreconditionError("exponent vectors must be nonnegative");
        }
    }
    const auto SP = symbolic_polyhedron(I);
    for (const auto& h : SP.halfspaces) {
        std::vector<Rational> objective(h.normal.size());
        Integer value(0);
        for (std::size_t i = 0; i < h.normal.size(); ++i) {
            objective[i] = Rational(h.normal[i]);
            value += h.normal[i] * a[i];
        }
        const Rational vhat = lp_minimize(SP, objective).value;
        if (Rational(value) < u * vhat) {
            return false;
        }
    }
    return true;
}

std::optional<Exponents> phi_splitting(const Integer& m, const Exponents& a) {
    if (m <= 0) {
        throw PreconditionError("splitting index must be positive");
    }
    Exponents b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] % m != 0) {
            return std::nullopt;
        }
        b[i] = a[i] / m;
    }
    return b;
}

Exponents phi_embedding(const Integer& m, const Exponents& b) {
    if (m <= 0) {
        throw PreconditionError("splitting index must be positive");
    }
    Exponents a(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = m * b[i];
    }
    return a;
}

Integer stability_denominator_verified(const MonomialIdeal& I, const Integer& max_denominator,
                                       const Rational& u_max) {
    const Integer e = stability_denominator(I).e;
    if (max_denominator < 1 || u_max <= 0) {
        throw PreconditionError("jump-scan needs a positive denominator bound and range");
    }
    std::map<Rational, MonomialIdeal> on_grid;
    for (Integer d(1); d <= max_denominator; ++d) {
        const Integer k_max = ceil_rat(u_max * Rational(d));
        for (Integer k(1); k <= k_max; ++k) {
            const Rational u(k, d);
            const Rational snapped(ceil_rat(u * Rational(e)), e);
            auto it = on_grid.find(snapped);
            if (it == on_grid.end()) {
                it = on_grid.emplace(snapped, rational_power(I, snapped).ideal).first;
            }
            if (u == snapped) {
                continue;
            }
            if (rational_power(I, u).ideal != it->second) {
                throw InternalCheckError(
                    "stability denominator " + int_to_string(e) + " misses a jump at u = " +
                    rat_to_string(u) + " (differs from u = " + rat_to_string(snapped) + ")");
            }
        }
    }
    return e;
}

} // namespace ratpow
