#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "lissaknot/rational.hpp"

namespace lissaknot {

inline constexpr long double PI_L = 3.141592653589793238462643383279502884L;

// Exact angle p*pi + u with rational p, u.  Equality is exact; because pi is
// irrational, two angles are equal iff both parts agree.  Numeric evaluation
// uses long double (64-bit mantissa on x86-64).
class ExactAngle {
public:
    ExactAngle() = default;
    ExactAngle(Rational pi_part, Rational unit_part) : pi_(pi_part), unit_(unit_part) {}

    static ExactAngle zero() { return ExactAngle(); }
    static ExactAngle pi_multiple(Rational p) { return ExactAngle(p, Rational(0)); }
    static ExactAngle number(Rational u) { return ExactAngle(Rational(0), u); }

    const Rational& pi_part() const { return pi_; }
    const Rational& unit_part() const { return unit_; }

    bool is_zero() const { return pi_.is_zero() && unit_.is_zero(); }

    friend ExactAngle operator+(const ExactAngle& a, const ExactAngle& b) {
        return ExactAngle(a.pi_ + b.pi_, a.unit_ + b.unit_);
    }
    friend ExactAngle operator-(const ExactAngle& a, const ExactAngle& b) {
        return ExactAngle(a.pi_ - b.pi_, a.unit_ - b.unit_);
    }
    ExactAngle operator-() const { return ExactAngle(-pi_, -unit_); }
    friend ExactAngle operator*(const Rational& c, const ExactAngle& a) {
        return ExactAngle(c * a.pi_, c * a.unit_);
    }
    friend ExactAngle operator*(const ExactAngle& a, const Rational& c) { return c * a; }
    friend ExactAngle operator/(const ExactAngle& a, const Rational& c) {
        return ExactAngle(a.pi_ / c, a.unit_ / c);
    }
    ExactAngle& operator+=(const ExactAngle& o) { return *this = *this + o; }
    ExactAngle& operator-=(const ExactAngle& o) { return *this = *this - o; }

    friend bool operator==(const ExactAngle& a, const ExactAngle& b) {
        return a.pi_ == b.pi_ && a.unit_ == b.unit_;
    }
    friend bool operator!=(const ExactAngle& a, const ExactAngle& b) { return !(a == b); }

    long double value() const { return pi_.value() * PI_L + unit_.value(); }

    // Exact sign.  pi is irrational, so p*pi + u = 0 only when p = u = 0;
    // otherwise the numeric value is bounded away from zero far beyond long
    // double noise for the rational sizes this library produces.
    int sign() const {
        if (is_zero()) return 0;
        if (unit_.is_zero()) return pi_.sign();
        if (pi_.is_zero()) return unit_.sign();
        long double v = value();
        if (std::fabs(v) < 1e-15L)
            fail(errc::numeric_margin, "exact angle sign below numeric margin");
        return v > 0 ? 1 : -1;
    }

    friend bool operator<(const ExactAngle& a, const ExactAngle& b) {
        return (a - b).sign() < 0;
    }

    std::string str() const {
        if (pi_.is_zero()) return unit_.str();
        std::string p = pi_.str() + "*pi";
        if (unit_.is_zero()) return p;
        if (unit_.sign() > 0) return p + " + " + unit_.str();
        return p + " - " + (-unit_).str();
    }
    friend std::ostream& operator<<(std::ostream& os, const ExactAngle& a) {
        return os << a.str();
    }

private:
    Rational pi_;
    Rational unit_;
};

// floor(a / pi) with a tie flag.  When the unit part vanishes the quotient is
// the rational pi part and the floor is exact (tie = the quotient is an
// integer).  Otherwise the quotient is irrational and evaluated numerically;
// landing within 1e-12 of an integer is flagged so callers can reject the
// configuration as degenerate instead of guessing.
inline long long floor_div_pi(const ExactAngle& a, bool& tie) {
    if (a.unit_part().is_zero()) {
        tie = a.pi_part().is_integer();
        return a.pi_part().floor();
    }
    long double q = a.pi_part().value() + a.unit_part().value() / PI_L;
    long double f = std::floor(q);
    tie = std::fabs(q - std::round(q)) < 1e-12L;
    return static_cast<long long>(f);
}

} // namespace lissaknot
