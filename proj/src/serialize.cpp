#include "ratpow/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "ratpow/errors.hpp"
#include "ratpow/numeric.hpp"

namespace ratpow {

namespace {

// Ring names match the identifier grammar, so they embed in JSON verbatim.
void append_name_array(std::string& out, const std::vector<std::string>& names) {
    out += '[';
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += names[i];
        out += '"';
    }
    out += ']';
}

void append_exponents(std::string& out, const Exponents& a) {
    out += '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += int_to_string(a[i]);
    }
    out += ']';
}

void append_generators(std::string& out, const MonomialIdeal& I) {
    out += "\"generators\":[";
    const auto& gens = I.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ',';
        append_exponents(out, gens[i]);
    }
    out += ']';
}

void append_ring_fields(std::string& out, const Ring& ring) {
    out += "\"ring\":";
    append_name_array(out, ring.variable_names());
    if (ring.characteristic() != 0) {
        out += ",\"characteristic\":";
        out += int_to_string(ring.characteristic());
    }
}

Integer json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        return Integer(v.get<long long>());
    }
    if (v.is_number_unsigned()) {
        return Integer(v.get<unsigned long long>());
    }
    throw ParseError("expected an integer exponent", 1, 1);
}

} // namespace

std::string monomial_to_text(const Ring& ring, const Exponents& a) {
    if (a.size() != ring.size()) {
        throw DimensionError("monomial has " + std::to_string(a.size()) +
                             " exponents in a ring with " + std::to_string(ring.size()) +
                             " variables");
    }
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.variable_names()[i];
        if (a[i] != 1) {
            out += '^';
            out += int_to_string(a[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string ideal_to_text(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const auto& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += monomial_to_text(I.ring(), g);
    }
    return out;
}

std::string prime_to_text(const MonomialPrime& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.variables.size(); ++i) {
        if (i) out += ',';
        out += p.ring.variable_names()[p.variables[i]];
    }
    out += ')';
    return out;
}

std::string ideal_to_cas(const MonomialIdeal& I) {
    return "ideal(" + (I.is_zero() ? std::string("0") : ideal_to_text(I)) + ")";
}

std::string halfspace_to_text(const HalfSpace& h) {
    std::string out;
    for (std::size_t i = 0; i < h.normal.size(); ++i) {
        if (h.normal[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (h.normal[i] != 1) {
            out += int_to_string(h.normal[i]);
            out += '*';
        }
        out += 'a';
        out += std::to_string(i + 1);
    }
    if (out.empty()) out = "0";
    out += " >= ";
    out += rat_to_string(h.rhs);
    return out;
}

std::string polyhedron_to_text(const HalfSpacePolyhedron& P) {
    std::string out;
    for (const auto& h : P.halfspaces) {
        out += halfspace_to_text(h);
        out += '\n';
    }
    return out;
}

std::string ideal_to_json(const MonomialIdeal& I) {
    std::string out = "{";
    append_ring_fields(out, I.ring());
    out += ',';
    append_generators(out, I);
    out += '}';
    return out;
}

std::string power_result_to_json(const RationalPowerResult& r) {
    std::string out = "{";
    append_ring_fields(out, r.ideal.ring());
    out += ',';
    append_generators(out, r.ideal);
    out += ",\"method\":\"";
    out += method_name(r.method);
    out += "\",\"u\":\"";
    out += rat_to_string(r.u);
    out += "\"}";
    return out;
}

std::string polyhedron_to_json(const HalfSpacePolyhedron& P) {
    std::string out = "{\"halfspaces\":[";
    for (std::size_t i = 0; i < P.halfspaces.size(); ++i) {
        if (i) out += ',';
        out += "{\"normal\":[";
        const auto& h = P.halfspaces[i];
        for (std::size_t j = 0; j < h.normal.size(); ++j) {
            if (j) out += ',';
            out += '"';
            out += int_to_string(h.normal[j]);
            out += '"';
        }
        out += "],\"rhs\":\"";
        out += rat_to_string(h.rhs);
        out += "\"}";
    }
    out += "]}";
    return out;
}

std::string primary_decomposition_to_json(const PrimaryDecomposition& D) {
    std::string out = "[";
    for (std::size_t i = 0; i < D.components.size(); ++i) {
        if (i) out += ',';
        const auto& [prime, component] = D.components[i];
        out += "{\"prime\":";
        std::vector<std::string> names;
        for (std::size_t v : prime.variables) {
            names.push_back(prime.ring.variable_names()[v]);
        }
        append_name_array(out, names);
        out += ',';
        append_generators(out, component);
        out += '}';
    }
    out += ']';
    return out;
}

std::string primes_to_json(const std::vector<MonomialPrime>& primes) {
    std::string out = "[";
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) out += ',';
        std::vector<std::string> names;
        for (std::size_t v : primes[i].variables) {
            names.push_back(primes[i].ring.variable_names()[v]);
        }
        append_name_array(out, names);
    }
    out += ']';
    return out;
}

MonomialIdeal ideal_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("ring") ||
        !doc.contains("generators")) {
        throw ParseError("expected an object with \"ring\" and \"generators\"", 1, 1);
    }
    std::vector<std::string> names;
    for (const auto& n : doc["ring"]) {
        if (!n.is_string()) {
            throw ParseError("ring names must be strings", 1, 1);
        }
        names.push_back(n.get<std::string>());
    }
    Integer characteristic(0);
    if (doc.contains("characteristic")) {
        characteristic = json_integer(doc["characteristic"]);
    }
    Ring ring(std::move(names), characteristic);
    std::vector<Exponents> gens;
    for (const auto& row : doc["generators"]) {
        Exponents g;
        for (const auto& v : row) {
            Integer x = json_integer(v);
            if (x < 0) {
                throw ParseError("exponents must be nonnegative", 1, 1);
            }
            g.push_back(std::move(x));
        }
        if (g.size() != ring.size()) {
            throw ParseError("generator length does not match the ring", 1, 1);
        }
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ring, std::move(gens));
}

} // namespace ratpow
