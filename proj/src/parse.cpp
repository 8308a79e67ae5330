#include "ratpow/parse.hpp"

#include <cctype>
#include <optional>

#include "ratpow/errors.hpp"

namespace ratpow {

namespace {

bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_ident_char(char c) {
    return is_letter(c) || (c >= '0' && c <= '9') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
    const std::string& text;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool done() const { return i >= text.size(); }
    char peek() const { return text[i]; }
    void advance() {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line, column);
    }
};

Integer read_natural(Cursor& cur, const char* what) {
    if (cur.done() || !is_digit(cur.peek())) {
        cur.fail(std::string("expected ") + what);
    }
    std::string digits;
    while (!cur.done() && is_digit(cur.peek())) {
        digits.push_back(cur.peek());
        cur.advance();
    }
    return Integer(digits);
}

// One `var` or `var^k` factor, accumulated into exps.
void read_factor(Cursor& cur, const Ring& ring, bool single_letters, Exponents& exps) {
    const std::size_t at_line = cur.line, at_column = cur.column;
    std::string name;
    if (single_letters) {
        name.push_back(cur.peek());
        cur.advance();
    } else {
        while (!cur.done() && is_ident_char(cur.peek())) {
            name.push_back(cur.peek());
            cur.advance();
        }
    }
    std::size_t index = 0;
    try {
        index = ring.index_of(name);
    } catch (const Error&) {
        throw ParseError("unknown variable '" + name + "'", at_line, at_column);
    }
    Integer k(1);
    if (!cur.done() && cur.peek() == '^') {
        cur.advance();
        k = read_natural(cur, "exponent after '^'");
    }
    exps[index] += k;
}

// One generator; nullopt when the generator is the literal 0.
std::optional<Exponents> read_generator(Cursor& cur, const Ring& ring) {
    const bool single_letters = ring.single_letter_names();
    if (cur.done()) {
        cur.fail("expected a generator");
    }
    if (cur.peek() == '0' || cur.peek() == '1') {
        const char c = cur.peek();
        cur.advance();
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())) &&
            cur.peek() != ',') {
            cur.fail(std::string("unexpected character after '") + c + "'");
        }
        if (c == '0') {
            return std::nullopt;
        }
        return Exponents(ring.size(), Integer(0));
    }
    Exponents exps(ring.size(), Integer(0));
    for (;;) {
        if (cur.done() || !is_letter(cur.peek())) {
            cur.fail("expected a variable");
        }
        read_factor(cur, ring, single_letters, exps);
        std::size_t resume = cur.i, resume_line = cur.line, resume_column = cur.column;
        cur.skip_space();
        if (!cur.done() && cur.peek() == '*') {
            cur.advance();
            cur.skip_space();
            continue;
        }
        if (single_letters && !cur.done() && cur.i == resume && is_letter(cur.peek())) {
            continue; // juxtaposition: xy^5
        }
        // Not a continuation; hand back any skipped spaces to the caller.
        cur.i = resume;
        cur.line = resume_line;
        cur.column = resume_column;
        return exps;
    }
}

} // namespace

Ring parse_ring(const std::string& spec, const Integer& characteristic) {
    Cursor cur{spec};
    std::vector<std::string> names;
    for (;;) {
        cur.skip_space();
        const std::size_t at_line = cur.line, at_column = cur.column;
        if (cur.done() || !is_letter(cur.peek())) {
            cur.fail("expected a variable name");
        }
        std::string name;
        while (!cur.done() && is_ident_char(cur.peek())) {
            name.push_back(cur.peek());
            cur.advance();
        }
        for (const auto& seen : names) {
            if (seen == name) {
                throw ParseError("duplicate variable '" + name + "'", at_line, at_column);
            }
        }
        names.push_back(std::move(name));
        cur.skip_space();
        if (cur.done()) {
            break;
        }
        if (cur.peek() != ',') {
            cur.fail("expected ',' between variable names");
        }
        cur.advance();
    }
    return Ring(std::move(names), characteristic);
}

MonomialIdeal parse_ideal(const std::string& text, const Ring& ring) {
    Cursor cur{text};
    std::vector<Exponents> gens;
    for (;;) {
        cur.skip_space();
        if (auto g = read_generator(cur, ring)) {
            gens.push_back(std::move(*g));
        }
        cur.skip_space();
        if (cur.done()) {
            break;
        }
        if (cur.peek() != ',') {
            cur.fail("expected ',' between generators");
        }
        cur.advance();
    }
    return MonomialIdeal(ring, std::move(gens));
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    Cursor cur{text};
    std::vector<Integer> out;
    for (;;) {
        cur.skip_space();
        bool negative = false;
        if (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
            negative = cur.peek() == '-';
            cur.advance();
        }
        Integer value = read_natural(cur, "an integer");
        out.push_back(negative ? Integer(-value) : value);
        cur.skip_space();
        if (cur.done()) {
            break;
        }
        if (cur.peek() != ',') {
            cur.fail("expected ',' between integers");
        }
        cur.advance();
    }
    return out;
}

} // namespace ratpow
