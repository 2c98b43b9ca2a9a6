#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "lissaknot/error.hpp"

namespace lissaknot {
namespace braids {

// Word in the braid group B_n.  Letters are nonzero integers: +i is the
// generator sigma_i (string i+1 passes over string i reading down the braid),
// -i its inverse.  Valid letter indices are 1..strands-1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) { validate(); }

    void validate() const {
        if (strands < 2) fail(errc::bad_input, "braid needs at least 2 strands");
        for (int l : letters) {
            int i = std::abs(l);
            if (i < 1 || i >= strands)
                fail(errc::index_out_of_range, "braid letter index out of range");
        }
    }

    BraidWord inverse() const {
        BraidWord w;
        w.strands = strands;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }

    // Flip every crossing (mirror image of the closure).
    BraidWord mirrored() const {
        BraidWord w = *this;
        for (int& l : w.letters) l = -l;
        return w;
    }

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
        BraidWord w;
        w.strands = a.strands > b.strands ? a.strands : b.strands;
        w.letters = a.letters;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    std::string str() const;
};

// Crossing-pattern word: a braid word with the signs forgotten.  Letters are
// positive generator indices s_i.
struct ProjectionWord {
    int strands = 2;
    std::vector<int> letters;

    ProjectionWord() = default;
    ProjectionWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
        validate();
    }

    void validate() const {
        if (strands < 2) fail(errc::bad_input, "projection word needs at least 2 strands");
        for (int l : letters)
            if (l < 1 || l >= strands)
                fail(errc::index_out_of_range, "projection letter index out of range");
    }

    friend bool operator==(const ProjectionWord& a, const ProjectionWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
    friend bool operator!=(const ProjectionWord& a, const ProjectionWord& b) {
        return !(a == b);
    }

    std::string str() const;
};

// Forget the signs.
ProjectionWord projection_of(const BraidWord& w);

} // namespace braids
} // namespace lissaknot
