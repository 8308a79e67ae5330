#include "ratpow/decompose.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ratpow {

namespace {

void require_decomposable(const MonomialIdeal& I) {
    if (I.is_zero())
        throw PreconditionError("cannot decompose the zero ideal");
    if (I.is_unit())
        throw PreconditionError("cannot decompose the unit ideal");
}

// True when the ideal of a is contained in the ideal of b, for irreducible
// ideals stored as exponent vectors: every pure power x_i^{a_i} must be a
// multiple of the matching generator x_i^{b_i}.
bool component_inside(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && (b[i] == 0 || a[i] < b[i])) return false;
    return true;
}

std::string prime_to_string(const MonomialPrime& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.variables.size(); ++k) {
        if (k) out += ",";
        out += p.ring.name(p.variables[k]);
    }
    return out + ")";
}

// Irreducible components via socle corners of the artinianized ideal.
//
// Cap each variable at D_i = 1 + (largest exponent of x_i among the
// generators) and let J = I + (x_i^{D_i}).  For an artinian monomial ideal
// the irredundant irreducible components are exactly m^{w+1} over the socle
// corners w: monomials outside J all of whose variable bumps x_i*w land in
// J.  Since no generator of I reaches exponent D_i, a monomial lies in I
// exactly when its coordinatewise cap at D-1 lies in J, so erasing the
// entries that equal D_i from each component of J yields components of I
// (possibly with nested repeats, filtered below).
//
// A corner must satisfy w_i + 1 = g_i for some generator g of J witnessing
// x_i*w in J, so every coordinate of a corner comes from the short list
// {g_i - 1 : g_i >= 1} plus the cap D_i - 1.  That grid is searched
// directly.
std::vector<Exponents> corner_vectors(const MonomialIdeal& I) {
    const std::size_t n = I.ring().size();
    const std::vector<Exponents>& gens = I.generators();

    std::vector<Integer> cap(n);  // cap[i] = D_i - 1
    for (std::size_t i = 0; i < n; ++i) {
        Integer top(0);
        for (const auto& g : gens) top = std::max(top, g[i]);
        cap[i] = top;
    }

    std::vector<std::vector<Integer>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<Integer> values;
        for (const auto& g : gens)
            if (g[i] > 0) values.insert(g[i] - 1);
        values.insert(cap[i]);
        choices[i].assign(values.begin(), values.end());
    }

    const auto divides = [&](const Exponents& g, const Exponents& w) {
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] > w[i]) return false;
        return true;
    };
    // Divisibility of w with coordinate i raised by one.
    const auto divides_bumped = [&](const Exponents& g, const Exponents& w, std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i ? g[j] > w[j] + 1 : g[j] > w[j]) return false;
        }
        return true;
    };

    std::set<Exponents> raw;
    std::vector<std::size_t> pick(n, 0);
    Exponents w(n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) w[i] = choices[i][pick[i]];

        bool corner = true;
        for (const auto& g : gens) {
            if (divides(g, w)) { corner = false; break; }  // w inside J
        }
        for (std::size_t i = 0; corner && i < n; ++i) {
            if (w[i] == cap[i]) continue;  // bump reaches the pure cap power
            bool bumped_inside = false;
            for (const auto& g : gens) {
                if (divides_bumped(g, w, i)) { bumped_inside = true; break; }
            }
            corner = bumped_inside;
        }
        if (corner) {
            Exponents component(n, Integer(0));
            for (std::size_t i = 0; i < n; ++i)
                if (w[i] < cap[i]) component[i] = w[i] + 1;
            raw.insert(std::move(component));
        }

        std::size_t i = 0;
        while (i < n && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
        if (i == n) break;
        ++pick[i];
    }
    return {raw.begin(), raw.end()};
}

std::vector<Exponents> irreducible_vectors(const MonomialIdeal& I) {
    require_decomposable(I);
    std::vector<Exponents> raw = corner_vectors(I);

    // Drop any component containing another one; what remains is the unique
    // irredundant irreducible decomposition.
    std::vector<Exponents> kept;
    for (const auto& c : raw) {
        bool redundant = false;
        for (const auto& d : raw) {
            if (d != c && component_inside(d, c)) { redundant = true; break; }
        }
        if (!redundant) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const Exponents& a, const Exponents& b) {
        return lex_compare(a, b) > 0;
    });
    return kept;
}

} // namespace

IrreducibleComponent::IrreducibleComponent(Ring ring_, Exponents exponents_)
    : ring(std::move(ring_)), exponents(std::move(exponents_)) {
    if (exponents.size() != ring.size())
        throw DimensionError("component exponent vector has wrong length");
    bool any = false;
    for (const auto& e : exponents) {
        if (e < 0) throw PreconditionError("negative exponent in component");
        if (e > 0) any = true;
    }
    if (!any) throw PreconditionError("irreducible component must be proper");
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0) {
            Exponents g(exponents.size(), Integer(0));
            g[i] = exponents[i];
            gens.push_back(std::move(g));
        }
    }
    return MonomialIdeal(ring, std::move(gens));
}

MonomialPrime IrreducibleComponent::support() const {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) vars.push_back(i);
    return MonomialPrime(ring, std::move(vars));
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    std::vector<IrreducibleComponent> out;
    for (auto& v : irreducible_vectors(I))
        out.emplace_back(I.ring(), std::move(v));
    return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I) {
    std::set<std::vector<std::size_t>> supports;
    for (const auto& v : irreducible_vectors(I)) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] > 0) vars.push_back(i);
        supports.insert(std::move(vars));
    }
    std::vector<MonomialPrime> out;
    for (const auto& vars : supports) out.emplace_back(I.ring(), vars);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& I) {
    std::vector<MonomialPrime> ass = associated_primes(I);
    std::vector<MonomialPrime> out;
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
        if (minimal) out.push_back(p);
    }
    return out;
}

std::size_t big_height(const MonomialIdeal& I) {
    std::size_t h = 0;
    for (const auto& p : associated_primes(I)) h = std::max(h, p.variables.size());
    return h;
}

std::size_t height(const MonomialIdeal& I) {
    std::size_t h = I.ring().size();
    for (const auto& p : minimal_primes(I)) h = std::min(h, p.variables.size());
    return h;
}

bool grade_is_zero(const MonomialPrime& p, const MonomialIdeal& I) {
    if (p.ring != I.ring())
        throw RingMismatchError("prime and ideal live in different rings");
    if (!I.is_proper())
        throw PreconditionError("grade predicate needs a proper ideal");
    if (I.is_zero()) return false;
    for (const auto& q : associated_primes(I))
        if (std::includes(q.variables.begin(), q.variables.end(),
                          p.variables.begin(), p.variables.end()))
            return true;
    return false;
}

PrimaryDecomposition primary_components_min(const MonomialIdeal& I) {
    std::vector<MonomialPrime> ass = associated_primes(I);
    std::vector<MonomialPrime> min = minimal_primes(I);
    if (ass.size() != min.size()) {
        for (const auto& p : ass) {
            bool is_min = std::find(min.begin(), min.end(), p) != min.end();
            if (!is_min)
                throw PreconditionError("embedded prime " + prime_to_string(p) +
                                        " obstructs the minimal primary decomposition");
        }
    }

    PrimaryDecomposition out;
    MonomialIdeal check = MonomialIdeal::unit(I.ring());
    for (const auto& p : min) {
        MonomialIdeal Q = contract_to_prime(I, p);
        check = intersect(check, Q);
        out.components.emplace_back(p, std::move(Q));
    }
    if (check != I)
        throw InternalCheckError("primary components do not intersect to the input");
    return out;
}

} // namespace ratpow
