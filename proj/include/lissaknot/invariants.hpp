#pragma once

#include <string>
#include <vector>

#include "lissaknot/braid_word.hpp"
#include "lissaknot/diagram.hpp"
#include "lissaknot/laurent.hpp"

namespace lissaknot::invariants {

// Alexander polynomial from the arc-labeled crossing matrix: delete one
// row and column, take the determinant over Z[t,1/t] by fraction-free
// elimination, canonicalize. The unknot gives 1.
CanonicalAlexander alexander(const diagram::Diagram& d);

// Arf invariant from |Alexander(-1)| mod 8: residues 1,7 give 0 and 3,5
// give 1. An even determinant means the input was not a knot polynomial
// (bad_determinant).
int arf(const CanonicalAlexander& a);

// n - (2n+1) t + n t^2, the Alexander polynomial of the twist knot with 2n
// signed crossings in the clasp-free band (n may be negative; n = 0 gives 1).
CanonicalAlexander twist_alexander(long long n);

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime 2 <= p < q.
CanonicalAlexander torus_alexander(int p, int q);

struct SquareWitness {
    bool is_square = false;
    LaurentPoly root; // g with g*g == input, when is_square
};

// Exact test whether the canonical polynomial is the square of an integer
// polynomial, with the witness root. Decided by coefficient
// back-substitution from the top degree, then full verification.
SquareWitness is_perfect_square(const CanonicalAlexander& a);

// Square test after reducing coefficients mod 2 and dividing out t^k:
// squares over the two-element field are exactly the polynomials in t^2.
bool is_square_mod2(const CanonicalAlexander& a);

// Identification of an Alexander polynomial within the small catalog used
// here: the unknot, twist knots, and torus knots.
struct KnotId {
    enum class Kind { Unknot, Twist, Torus };
    Kind kind = Kind::Unknot;
    long long m = 0; // Twist: the twist-region crossing count 2n
    int p = 0, q = 0; // Torus
    std::string str() const;
};

std::vector<KnotId> identify(const CanonicalAlexander& a);

// Exact equality of braid words as elements of the braid group, decided by
// comparing the induced automorphisms of the free group.
bool braid_equal(const braids::BraidWord& a, const braids::BraidWord& b);

} // namespace lissaknot::invariants
