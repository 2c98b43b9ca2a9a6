#include "lissaknot/phase_parse.hpp"

#include <cctype>
#include <string>

namespace lissaknot {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    static ExactAngle mul(const ExactAngle& a, const ExactAngle& b) {
        if (a.pi_part().is_zero()) return a.unit_part() * b;
        if (b.pi_part().is_zero()) return b.unit_part() * a;
        fail(errc::bad_input, "cannot multiply two pi-carrying factors");
    }

    static ExactAngle div(const ExactAngle& a, const ExactAngle& b) {
        if (!b.pi_part().is_zero()) fail(errc::bad_input, "divisor must be a plain rational");
        if (b.unit_part().is_zero()) fail(errc::bad_input, "division by zero");
        return a / b.unit_part();
    }

    ExactAngle expr() {
        ExactAngle v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    ExactAngle term() {
        ExactAngle v = factor();
        for (;;) {
            if (eat('*'))
                v = mul(v, factor());
            else if (eat('/'))
                v = div(v, factor());
            else
                return v;
        }
    }

    long long digits() {
        const size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > 900'000'000'000'000'000LL) fail(errc::bad_input, "number too large");
            v = 10 * v + (s[i] - '0');
            ++i;
        }
        if (i == start) fail(errc::bad_input, "expected a number, pi, or parenthesis");
        return v;
    }

    ExactAngle factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('(')) {
            ExactAngle v = expr();
            if (!eat(')')) fail(errc::bad_input, "missing closing parenthesis");
            return v;
        }
        skip();
        if (s.compare(i, 2, "pi") == 0) {
            i += 2;
            return ExactAngle::pi_multiple(Rational(1));
        }
        const long long ip = digits();
        Rational r(ip);
        if (i < s.size() && s[i] == '.') {
            ++i;
            const size_t start = i;
            const long long fp = digits();
            const size_t len = i - start;
            if (len > 18) fail(errc::bad_input, "too many decimal digits");
            long long den = 1;
            for (size_t k = 0; k < len; ++k) den *= 10;
            r = r + Rational(fp, den);
        }
        return ExactAngle::number(r);
    }
};

} // namespace

ExactAngle parse_phase(const std::string& text) {
    Parser p{text};
    ExactAngle v = p.expr();
    p.skip();
    if (p.i != text.size()) fail(errc::bad_input, "unexpected trailing characters in phase");
    return v;
}

} // namespace lissaknot
