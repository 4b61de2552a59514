#include "laurin/textio.hpp"

#include <cctype>

namespace laurin {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c))
            parse_error("expected '" + std::string(1, c) + "' in " + what + " at offset " +
                        std::to_string(pos) + " of \"" + s + "\"");
    }
    Int integer(const std::string& what) {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            ++pos;
        }
        if (digits.empty())
            parse_error("expected an integer in " + what + " at offset " + std::to_string(start) +
                        " of \"" + s + "\"");
        Int v(digits);
        return neg ? Int(-v) : v;
    }
};

} // namespace

RingPtr parse_ring(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    RingPtr out;
    if (c.eat('Q')) {
        out = Ring::rationals();
    } else if (c.eat('F')) {
        c.expect('_', "ring F_<p>");
        out = Ring::prime_field(c.integer("prime field modulus"));
    } else if (c.eat('Z')) {
        if (c.eat('/')) {
            Int n = c.integer("modulus of Z/<n>");
            check(n >= 1, ErrorKind::Parse, "Z/<n> needs n >= 1, got " + n.str());
            if (c.peek() == '[') {
                c.expect('[', "localization");
                c.expect('1', "localization");
                c.expect('/', "localization");
                Int m = c.integer("inverted element");
                c.expect(']', "localization");
                check(m >= 1, ErrorKind::Parse, "Z/<n>[1/<m>] needs m >= 1");
                out = Ring::localized_integers_mod(n, m);
            } else {
                out = Ring::integers_mod(n);
            }
        } else if (c.peek() == '[') {
            c.expect('[', "localization");
            c.expect('1', "localization");
            c.expect('/', "localization");
            Int m = c.integer("inverted element");
            c.expect(']', "localization");
            check(m >= 1, ErrorKind::Parse, "Z[1/<m>] needs m >= 1");
            out = Ring::localized_integers(m);
        } else {
            out = Ring::integers();
        }
    } else {
        parse_error("unrecognized ring token at offset " + std::to_string(c.pos) + " of \"" +
                    text + "\"");
    }
    if (!c.done())
        parse_error("trailing input after ring in \"" + text + "\"");
    return out;
}

RElem parse_element(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    Int num = c.integer("ring element");
    if (c.eat('/')) {
        Int den = c.integer("ring element denominator");
        check(c.done(), ErrorKind::Parse, "trailing input after element in \"" + text + "\"");
        return ring->from_rational(num, den);
    }
    check(c.done(), ErrorKind::Parse, "trailing input after element in \"" + text + "\"");
    return ring->from_int(num);
}

LaurentPoly parse_poly(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    LaurentPoly out(ring);
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.eat('-')) {
            neg = true;
        } else if (c.eat('+')) {
            // explicit plus
        } else if (!first) {
            parse_error("expected '+' or '-' between terms at offset " + std::to_string(c.pos) +
                        " of \"" + text + "\"");
        }
        first = false;

        RElem coeff = ring->one();
        bool have_coeff = false;
        char p = c.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            Int num = c.integer("coefficient");
            if (c.eat('/')) {
                Int den = c.integer("coefficient denominator");
                coeff = ring->from_rational(num, den);
            } else {
                coeff = ring->from_int(num);
            }
            have_coeff = true;
        }
        std::int64_t expo = 0;
        bool have_x = false;
        if (have_coeff && c.peek() == '*') {
            c.expect('*', "term");
            if (c.peek() != 'X' && c.peek() != 'x')
                parse_error("expected X after '*' in \"" + text + "\"");
        }
        if (c.peek() == 'X' || c.peek() == 'x') {
            ++c.pos;
            have_x = true;
            expo = 1;
            if (c.eat('^')) {
                Int e = c.integer("exponent");
                check(iabs(e) <= Int(kDegreeWindow), ErrorKind::Parse,
                      "exponent out of range in \"" + text + "\"");
                expo = static_cast<std::int64_t>(e.convert_to<long long>());
            }
        }
        if (!have_coeff && !have_x)
            parse_error("expected a term at offset " + std::to_string(c.pos) + " of \"" + text +
                        "\"");
        if (neg) coeff = -coeff;
        out.set_coeff(expo, out.coeff(expo) + coeff);
    }
    check(!first, ErrorKind::Parse, "empty polynomial text");
    return out;
}

} // namespace laurin
