#include "ratpow/numeric.hpp"

#include <cctype>

namespace ratpow {

namespace {

// Reads an optionally signed integer from text[pos...]; advances pos.
Integer read_integer(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin)
        throw ParseError("expected an integer", 1, start + 1);
    Integer value(text.substr(digits_begin, pos - digits_begin));
    return negative ? Integer(-value) : value;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    Integer num = read_integer(text, pos);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_integer(text, pos);
        if (den == 0)
            throw ParseError("malformed rational: zero denominator", 1, pos);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size())
        throw ParseError("malformed rational: trailing characters", 1, pos + 1);
    return Rational(num, den);
}

} // namespace ratpow
