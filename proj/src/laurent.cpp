#include "lissaknot/laurent.hpp"

#include <algorithm>

namespace lissaknot {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "coefficient overflow");
    return r;
}

} // namespace

void LaurentPoly::trim() {
    size_t lo = 0, hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_deg_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<long long>(coeffs_.begin() + static_cast<long>(lo),
                                         coeffs_.begin() + static_cast<long>(hi));
        min_deg_ += static_cast<int>(lo);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.min_deg_, b.min_deg_);
    int hi = std::max(a.max_deg(), b.max_deg());
    LaurentPoly r;
    r.min_deg_ = lo;
    r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        r.coeffs_[static_cast<size_t>(a.min_deg_ - lo) + i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) {
        size_t k = static_cast<size_t>(b.min_deg_ - lo) + i;
        r.coeffs_[k] = checked_add(r.coeffs_[k], b.coeffs_[i]);
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.min_deg_ = a.min_deg_ + b.min_deg_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    if (is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_deg_ = -max_deg();
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) fail(errc::bad_input, "division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quo;
    long long dl = d.coeffs_.back();
    while (!rem.is_zero()) {
        if (rem.coeffs_.size() < d.coeffs_.size())
            fail(errc::internal, "inexact polynomial division");
        long long cl = rem.coeffs_.back();
        if (cl % dl != 0) fail(errc::internal, "inexact polynomial division");
        long long q = cl / dl;
        int qd = rem.max_deg() - d.max_deg();
        quo += LaurentPoly::term(q, qd);
        rem -= LaurentPoly::term(q, qd) * d;
    }
    return quo;
}

long long LaurentPoly::evaluate(long long t) const {
    if (is_zero()) return 0;
    if (min_deg_ < 0) fail(errc::bad_input, "evaluation of a pole at an integer");
    long long acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, t), coeffs_[i]);
    for (int k = 0; k < min_deg_; ++k) acc = checked_mul(acc, t);
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long long c = coeffs_[i];
        if (c == 0) continue;
        int d = min_deg_ + static_cast<int>(i);
        bool first = s.empty();
        if (!first) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c > 0 ? c : -c;
        std::string body;
        if (d == 0) body = std::to_string(a);
        else {
            if (a != 1) body = std::to_string(a) + "*";
            body += "t";
            if (d != 1) body += "^" + std::to_string(d);
        }
        s += body;
    }
    return s;
}

CanonicalAlexander::CanonicalAlexander(const LaurentPoly& p) {
    if (p.is_zero()) {
        poly_ = LaurentPoly();
        return;
    }
    poly_ = p.shifted(-p.min_deg());
    if (poly_.coeff(0) < 0) poly_ = -poly_;
}

std::vector<long long> CanonicalAlexander::coeffs() const {
    std::vector<long long> v;
    if (poly_.is_zero()) return {0};
    for (int d = 0; d <= poly_.max_deg(); ++d) v.push_back(poly_.coeff(d));
    return v;
}

} // namespace lissaknot
