#include "ratpow/ideal.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ratpow {

namespace {

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ring() != J.ring())
        throw RingMismatchError("operands live in different rings");
}

// Descending lexicographic order for canonical generator storage.
bool lex_greater(const Exponents& a, const Exponents& b) {
    return lex_compare(a, b) > 0;
}

} // namespace

std::vector<Exponents> minimalize(std::vector<Exponents> generators) {
    // Sort by total degree so every potential divisor of a vector precedes
    // it; within a degree only equal vectors divide each other.
    std::sort(generators.begin(), generators.end(),
              [](const Exponents& a, const Exponents& b) {
                  Integer da = total_degree(a), db = total_degree(b);
                  if (da != db) return da < db;
                  return lex_compare(a, b) < 0;
              });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<Exponents> kept;
    kept.reserve(generators.size());
    for (auto& g : generators) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (divides(k, g)) { dominated = true; break; }
        }
        if (!dominated) kept.push_back(std::move(g));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponents> generators)
    : ring_(std::move(ring)) {
    for (const auto& g : generators) {
        if (g.size() != ring_.size())
            throw DimensionError("exponent vector has length " + std::to_string(g.size()) +
                                 ", expected " + std::to_string(ring_.size()));
        for (const auto& e : g)
            if (e < 0) throw PreconditionError("negative exponent");
    }
    gens_ = minimalize(std::move(generators));
    std::sort(gens_.begin(), gens_.end(), lex_greater);
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    Exponents one(ring.size(), Integer(0));
    return MonomialIdeal(std::move(ring), {std::move(one)});
}

MonomialIdeal MonomialIdeal::from_antichain(Ring ring, std::vector<Exponents> generators) {
    MonomialIdeal out = zero(std::move(ring));
    for (const auto& g : generators)
        if (g.size() != out.ring_.size())
            throw DimensionError("exponent vector has wrong length");
    out.gens_ = std::move(generators);
    std::sort(out.gens_.begin(), out.gens_.end(), lex_greater);
    return out;
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains_monomial(const Exponents& a) const {
    if (a.size() != ring_.size())
        throw DimensionError("exponent vector has wrong length");
    for (const auto& g : gens_)
        if (divides(g, a)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_ring(*this, other);
    for (const auto& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

MonomialPrime::MonomialPrime(Ring ring_, std::vector<std::size_t> variables_)
    : ring(std::move(ring_)), variables(std::move(variables_)) {
    if (variables.empty())
        throw PreconditionError("monomial prime needs at least one variable");
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    if (variables.back() >= ring.size())
        throw DimensionError("prime variable index out of range");
}

MonomialIdeal prime_ideal(const MonomialPrime& p) {
    std::vector<Exponents> gens;
    gens.reserve(p.variables.size());
    for (std::size_t i : p.variables) {
        Exponents e(p.ring.size(), Integer(0));
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(p.ring, std::move(gens));
}

bool prime_contains(const MonomialPrime& p, const MonomialIdeal& I) {
    if (p.ring != I.ring())
        throw RingMismatchError("prime and ideal live in different rings");
    for (const auto& g : I.generators()) {
        bool meets = false;
        for (std::size_t i : p.variables)
            if (g[i] > 0) { meets = true; break; }
        if (!meets) return false;
    }
    return true;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Exponents> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Exponents> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators())
            gens.push_back(exponent_sum(g, h));
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, const Integer& k) {
    if (k < 0) throw PreconditionError("power exponent must be nonnegative");
    MonomialIdeal result = MonomialIdeal::unit(I.ring());
    for (Integer i = 0; i < k; ++i) result = product(result, I);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<Exponents> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& g : I.generators())
        for (const auto& h : J.generators())
            gens.push_back(exponent_lcm(g, h));
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    if (J.is_zero())
        throw UndefinedColonError("colon by the zero ideal is undefined");
    // I : (h_1, ..., h_r) is the intersection of the I : (h_j).
    bool first = true;
    MonomialIdeal result = MonomialIdeal::unit(I.ring());
    for (const auto& h : J.generators()) {
        std::vector<Exponents> gens;
        gens.reserve(I.generators().size());
        for (const auto& g : I.generators())
            gens.push_back(exponent_sub_clamped(g, h));
        MonomialIdeal single(I.ring(), std::move(gens));
        result = first ? single : intersect(result, single);
        first = false;
    }
    return result;
}

MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    MonomialIdeal current = I;
    for (;;) {
        MonomialIdeal next = colon(current, J);
        if (next == current) return current;
        current = std::move(next);
    }
}

MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Exponents> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        Exponents r(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(r));
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& I) {
    for (const auto& g : I.generators())
        for (const auto& e : g)
            if (e > 1) return false;
    return true;
}

MonomialIdeal contract_to_prime(const MonomialIdeal& I, const MonomialPrime& p) {
    if (I.ring() != p.ring)
        throw RingMismatchError("ideal and prime live in different rings");
    std::vector<bool> in_prime(I.ring().size(), false);
    for (std::size_t i : p.variables) in_prime[i] = true;
    std::vector<Exponents> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        Exponents c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = in_prime[i] ? g[i] : 0;
        gens.push_back(std::move(c));
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

Exponents BlockSum::embed_left(const Exponents& a) const {
    if (a.size() != left_size) throw DimensionError("left block vector has wrong length");
    Exponents out(left_size + right_size, Integer(0));
    for (std::size_t i = 0; i < left_size; ++i) out[i] = a[i];
    return out;
}

Exponents BlockSum::embed_right(const Exponents& b) const {
    if (b.size() != right_size) throw DimensionError("right block vector has wrong length");
    Exponents out(left_size + right_size, Integer(0));
    for (std::size_t i = 0; i < right_size; ++i) out[left_size + i] = b[i];
    return out;
}

BlockSum disjoint_block_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    std::set<std::string> left_names(I.ring().variable_names().begin(),
                                     I.ring().variable_names().end());
    for (const auto& name : J.ring().variable_names())
        if (left_names.count(name))
            throw RingMismatchError("blocks share the variable '" + name + "'");

    std::vector<std::string> names = I.ring().variable_names();
    names.insert(names.end(), J.ring().variable_names().begin(),
                 J.ring().variable_names().end());
    Ring joined(std::move(names), I.ring().characteristic());

    BlockSum out{joined, MonomialIdeal::zero(joined), I.ring().size(), J.ring().size()};
    std::vector<Exponents> gens;
    gens.reserve(I.generators().size() + J.generators().size());
    for (const auto& g : I.generators()) gens.push_back(out.embed_left(g));
    for (const auto& h : J.generators()) gens.push_back(out.embed_right(h));
    out.ideal = MonomialIdeal(joined, std::move(gens));
    return out;
}

} // namespace ratpow
