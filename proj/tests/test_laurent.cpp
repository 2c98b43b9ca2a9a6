#include <random>

#include "doctest.h"
#include "lissaknot/invariants.hpp"
#include "lissaknot/laurent.hpp"

using namespace lissaknot;
using invariants::torus_alexander;
using invariants::twist_alexander;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (const auto& [deg, c] : terms) p += LaurentPoly::term(c, deg);
    return p;
}

} // namespace

TEST_CASE("laurent basics") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    LaurentPoly p = poly({{0, 1}, {1, -1}, {2, 1}});
    CHECK(p.min_deg() == 0);
    CHECK(p.max_deg() == 2);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.str() == "1 - t + t^2");
    CHECK(p.shifted(-1).min_deg() == -1);
    CHECK(p.shifted(-1).coeff(0) == -1);
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly a = poly({{-1, 2}, {0, 1}});         // 2/t + 1
    LaurentPoly b = poly({{0, -1}, {1, 3}});         // -1 + 3t
    CHECK((a + b) == poly({{-1, 2}, {1, 3}}));       // the constants cancel
    CHECK((a - b) == poly({{-1, 2}, {0, 2}, {1, -3}}));
    CHECK((a * b) == poly({{-1, -2}, {0, 5}, {1, 3}}));
    CHECK((a * LaurentPoly()) == LaurentPoly());
    CHECK(-b == poly({{0, 1}, {1, -3}}));
    CHECK_THROWS_AS(a.evaluate(2), Error); // 2/t + 1 has a pole at finite t
}

TEST_CASE("laurent reversal and exact division") {
    LaurentPoly p = poly({{0, 1}, {1, -3}, {2, 1}});
    CHECK(p.reversed() == poly({{-2, 1}, {-1, -3}, {0, 1}}));
    LaurentPoly prod = p * poly({{2, 7}, {3, -1}});
    CHECK(prod.divide_exact(p) == poly({{2, 7}, {3, -1}}));
    CHECK_THROWS_AS(poly({{0, 1}, {1, 1}}).divide_exact(poly({{0, 2}})), Error);
}

TEST_CASE("laurent evaluate") {
    LaurentPoly p = poly({{0, 2}, {1, -5}, {2, 2}});
    CHECK(p.evaluate(1) == -1);
    CHECK(p.evaluate(-1) == 9);
}

TEST_CASE("canonical representative") {
    // -t^3 + t^4 - t^5 canonicalizes to 1 - t + t^2
    LaurentPoly p = poly({{3, -1}, {4, 1}, {5, -1}});
    CanonicalAlexander c(p);
    CHECK(c.poly() == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(c.degree() == 2);
    CHECK(c.coeffs() == std::vector<long long>{1, -1, 1});
    CHECK(c.str() == "1 - t + t^2");
    // canonicalization is idempotent and unit-insensitive
    CHECK(CanonicalAlexander(p.shifted(-9)) == c);
    CHECK(CanonicalAlexander(-p) == c);
    CHECK(CanonicalAlexander() == CanonicalAlexander(LaurentPoly(1)));
}

TEST_CASE("twist alexander values") {
    CHECK(twist_alexander(0) == CanonicalAlexander(LaurentPoly(1)));
    CHECK(twist_alexander(1).poly() == poly({{0, 1}, {1, -3}, {2, 1}}));
    CHECK(twist_alexander(2).poly() == poly({{0, 2}, {1, -5}, {2, 2}}));
    // negative n canonicalizes to a positive constant
    CHECK(twist_alexander(-1).poly() == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(twist_alexander(-4).poly() == poly({{0, 4}, {1, -7}, {2, 4}}));
}

TEST_CASE("torus alexander values") {
    CHECK(torus_alexander(2, 3).poly() == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(torus_alexander(2, 5).poly() == poly({{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
    CHECK(torus_alexander(3, 4).poly() ==
          poly({{0, 1}, {1, -1}, {3, 1}, {5, -1}, {6, 1}}));
    CHECK(torus_alexander(3, 5).poly() ==
          poly({{0, 1}, {1, -1}, {3, 1}, {4, -1}, {5, 1}, {7, -1}, {8, 1}}));
    CHECK_THROWS_AS(torus_alexander(2, 4), Error);
    CHECK(torus_alexander(3, 2) == torus_alexander(2, 3)); // formula is symmetric
}

TEST_CASE("alexander symmetry under t -> 1/t") {
    for (long long n : {-8LL, -3LL, -1LL, 1LL, 2LL, 5LL, 8LL}) {
        const CanonicalAlexander a = twist_alexander(n);
        CHECK(CanonicalAlexander(a.poly().reversed()) == a);
    }
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}}) {
        const CanonicalAlexander a = torus_alexander(p, q);
        CHECK(CanonicalAlexander(a.poly().reversed()) == a);
    }
}

TEST_CASE("perfect square detection") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> c(-6, 6);
    std::uniform_int_distribution<int> len(1, 4);
    int found = 0;
    for (int i = 0; i < 100; ++i) {
        LaurentPoly g;
        const int n = len(rng);
        for (int d = 0; d < n; ++d) g += LaurentPoly::term(c(rng), d);
        if (g.is_zero()) continue;
        ++found;
        auto w = invariants::is_perfect_square(CanonicalAlexander(g * g));
        CHECK(w.is_square);
        CHECK(CanonicalAlexander(w.root * w.root) == CanonicalAlexander(g * g));
    }
    CHECK(found > 90);
}

TEST_CASE("twist polynomials are never squares") {
    for (long long n = -8; n <= 8; ++n) {
        if (n == 0) continue;
        CHECK(!invariants::is_perfect_square(twist_alexander(n)).is_square);
    }
}

TEST_CASE("mod-2 squares") {
    // 1 + t^2 = (1 + t)^2 mod 2
    CHECK(invariants::is_square_mod2(CanonicalAlexander(poly({{0, 1}, {2, 1}}))));
    CHECK(invariants::is_square_mod2(CanonicalAlexander(poly({{0, 3}, {2, 5}}))));
    CHECK(!invariants::is_square_mod2(CanonicalAlexander(poly({{0, 1}, {1, 1}}))));
    CHECK(invariants::is_square_mod2(CanonicalAlexander(LaurentPoly(1))));
}
