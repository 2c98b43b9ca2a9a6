#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lissaknot/error.hpp"

namespace lissaknot {

// Integer Laurent polynomial in one variable t.  Stored densely as a minimum
// degree plus a coefficient vector with nonzero first and last entries; all
// coefficient arithmetic is overflow-checked int64.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) {
        if (c != 0) {
            min_deg_ = 0;
            coeffs_ = {c};
        }
    }

    static LaurentPoly term(long long c, int deg) {
        LaurentPoly p;
        if (c != 0) {
            p.min_deg_ = deg;
            p.coeffs_ = {c};
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }

    long long coeff(int deg) const {
        if (is_zero() || deg < min_deg_ || deg > max_deg()) return 0;
        return coeffs_[static_cast<size_t>(deg - min_deg_)];
    }

    std::map<int, long long> coefficients() const {
        std::map<int, long long> m;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) m[min_deg_ + static_cast<int>(i)] = coeffs_[i];
        return m;
    }

    LaurentPoly shifted(int by) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.min_deg_ += by;
        return p;
    }

    // t -> 1/t
    LaurentPoly reversed() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact quotient; throws if the division leaves a remainder.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    long long evaluate(long long t) const;

    std::string str() const;

private:
    void trim();

    int min_deg_ = 0;
    std::vector<long long> coeffs_; // empty <=> zero
};

// Alexander polynomial representative normalized to minimum degree 0 with a
// positive constant coefficient (polynomials are otherwise defined only up to
// +-t^k).
class CanonicalAlexander {
public:
    CanonicalAlexander() : poly_(1) {}
    explicit CanonicalAlexander(const LaurentPoly& p);

    const LaurentPoly& poly() const { return poly_; }
    int degree() const { return poly_.is_zero() ? 0 : poly_.max_deg(); }
    bool is_zero() const { return poly_.is_zero(); }
    std::vector<long long> coeffs() const;

    friend bool operator==(const CanonicalAlexander& a, const CanonicalAlexander& b) {
        return a.poly_ == b.poly_;
    }
    friend bool operator!=(const CanonicalAlexander& a, const CanonicalAlexander& b) {
        return !(a == b);
    }

    std::string str() const { return poly_.str(); }

private:
    LaurentPoly poly_;
};

} // namespace lissaknot
