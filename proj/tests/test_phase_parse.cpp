#include "doctest.h"
#include "lissaknot/phase_parse.hpp"

using namespace lissaknot;

namespace {

ExactAngle angle(Rational pi, Rational unit) {
    return ExactAngle::pi_multiple(pi) + ExactAngle::number(unit);
}

} // namespace

TEST_CASE("phase grammar accepts the documented forms") {
    CHECK(parse_phase("0") == ExactAngle());
    CHECK(parse_phase("1/2") == angle(Rational(0), Rational(1, 2)));
    CHECK(parse_phase("pi/5") == angle(Rational(1, 5), Rational(0)));
    CHECK(parse_phase("(19-3*pi)/10") == angle(Rational(-3, 10), Rational(19, 10)));
    CHECK(parse_phase("pi") == ExactAngle::pi_multiple(Rational(1)));
    CHECK(parse_phase("-pi") == ExactAngle::pi_multiple(Rational(-1)));
    CHECK(parse_phase("2*pi/3") == angle(Rational(2, 3), Rational(0)));
    CHECK(parse_phase("pi*2") == angle(Rational(2), Rational(0)));
    CHECK(parse_phase("pi-pi") == ExactAngle());
    CHECK(parse_phase("1+1/2") == angle(Rational(0), Rational(3, 2)));
    CHECK(parse_phase("  pi / 5  ") == parse_phase("pi/5"));
    CHECK(parse_phase("((pi))") == parse_phase("pi"));
    CHECK(parse_phase("-(pi-1)/2") == angle(Rational(-1, 2), Rational(1, 2)));
}

TEST_CASE("decimals are exact shorthand") {
    CHECK(parse_phase("0.5") == angle(Rational(0), Rational(1, 2)));
    CHECK(parse_phase("0.50") == parse_phase("1/2"));
    CHECK(parse_phase("3.25") == angle(Rational(0), Rational(13, 4)));
    CHECK(parse_phase("-0.125") == angle(Rational(0), Rational(-1, 8)));
    CHECK(parse_phase("0.1") == angle(Rational(0), Rational(1, 10)));
}

TEST_CASE("operators chain left to right") {
    CHECK(parse_phase("1/2/2") == angle(Rational(0), Rational(1, 4)));
    CHECK(parse_phase("2-1-1") == ExactAngle());
    CHECK(parse_phase("3*1/6") == parse_phase("1/2"));
}

TEST_CASE("phase grammar rejections") {
    for (const char* bad : {"", "x", "pi*pi", "1/0", "pi/0", "1/pi", "(1", "1)", "1 2",
                            "pi2", "1.", "1.2.3", "*2", "1/"}) {
        CHECK_THROWS_AS(parse_phase(bad), Error);
    }
}
