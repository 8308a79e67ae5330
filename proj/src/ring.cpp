#include "ratpow/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ratpow {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Ring::Ring(std::vector<std::string> variable_names, Integer characteristic)
    : names_(std::move(variable_names)), characteristic_(std::move(characteristic)) {
    if (names_.empty())
        throw PreconditionError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_identifier(name))
            throw PreconditionError("invalid variable name '" + name + "'");
        if (!seen.insert(name).second)
            throw PreconditionError("duplicate variable name '" + name + "'");
    }
    if (characteristic_ < 0)
        throw PreconditionError("characteristic must be nonnegative");
}

std::size_t Ring::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw PreconditionError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

bool Ring::single_letter_names() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents exponent_sub_clamped(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] > b[i] ? a[i] - b[i] : Integer(0);
    return out;
}

Exponents exponent_scale(const Exponents& a, const Integer& k) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
    return out;
}

Integer total_degree(const Exponents& a) {
    Integer d = 0;
    for (const auto& e : a) d += e;
    return d;
}

int lex_compare(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

} // namespace ratpow
