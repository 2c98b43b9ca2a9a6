#pragma once

#include <optional>
#include <vector>

#include "lissaknot/braid_word.hpp"
#include "lissaknot/diagram.hpp"
#include "lissaknot/error.hpp"

namespace lissaknot::braids {

// Crossing-sequence word of the (nx, ny) Lissajous projection read along the
// ny-strand braid axis. With s_even = s2 s4 ... and s_odd = s1 s3 ... (all
// indices below ny), the word is
//   nx even:           s_even (s_odd s_even)^{nx/2 - 1}
//   nx odd, ny even:  (s_odd s_even)^{(nx-1)/2}
//   nx odd, ny odd:   (s_even s_odd)^{(nx-1)/2}
// Length is always (nx-1)(ny-1)/2.
ProjectionWord lissajous_projection_word(int nx, int ny);

enum class Side { Left, Right };

// Replaces the double letter sigma_i^{e1} sigma_i^{e2} at pos, pos+1 with the
// braid-equal 6-letter word
//   Left:  sigma_{i-1}^{-1} sigma_i^{-1} sigma_{i-1}^{e1} sigma_i sigma_{i-1} sigma_i^{e2}
//   Right: sigma_{i+1}^{-1} sigma_i^{-1} sigma_{i+1}^{e1} sigma_i sigma_{i+1} sigma_i^{e2}
// whose projection is (s_{i-1} s_i)^3 resp. (s_{i+1} s_i)^3.
BraidWord first_replacement(const BraidWord& w, size_t pos, Side side);

// Rewrites a 3-strand word into one whose projection strictly alternates
// s1/s2, braid-equal to the input. Letters are prepended one at a time; a
// front collision is resolved with one first_replacement.
BraidWord alternate_3braid(const BraidWord& w);

// sigma_2 (sigma_4 sigma_3)^q sigma_2^{-1} on 6 strands; the plat closure is
// the (3,q) torus knot. Requires q >= 2 coprime to 3.
BraidWord torus_seed(int q);

// The explicit 6-strand word
//   sigma_2 sigma_4 sigma_1 sigma_3^{-1} sigma_2 sigma_4^{-1}
//   (sigma_3 sigma_2)^{q-1} sigma_4 sigma_3 sigma_1 sigma_2
// with the same plat closure as torus_seed(q).
BraidWord torus_seed_rewrite(int q);

// Signed 20-letter lift of a 6-letter double-double block: given a signed
// word whose projection is (s3 s2)^3 or (s3 s4)^3, searches for a braid-equal
// signed word with projection (s1 s3 s2 s4)^5. Deterministic
// (lexicographically first, + before -) and cached per sign pattern; returns
// nullopt when no template exists for the pattern.
std::optional<BraidWord> lift_template_search(const BraidWord& block);

enum class RewriteRule { Lift3n, ClaspSlide, EndSlide };

struct RewriteResult {
    ProjectionWord word;
    bool closure_modified = false;
};

// Projection-level rewrites used by the torus pipeline.
//   Lift3n: the longest run of (s3 sX)-pairs (X fixed at 2 or 4) contributes
//     n = floor(pairs/3) blocks; its first 6n letters become (s1 s3 s2 s4)^{5n}.
//     n = 0 leaves the word unchanged.
//   ClaspSlide: suffix s3 s4 s3 s2 becomes s1 s3 s2 s4.
//   EndSlide: suffix s4 s3 s1 s2 becomes s1 s3 s2 s4 s1 s3 and marks the
//     bottom closure as modified (rotated plat pairing).
// ClaspSlide/EndSlide throw pattern_not_found when the suffix is absent.
RewriteResult shadow_rewrites(const ProjectionWord& p, RewriteRule rule);

struct TorusResult {
    int fx = 0;          // frequency paired with 5
    int fy = 5;
    ProjectionWord word; // on 5 strands, equals lissajous_projection_word(fx, 5)
    bool closure_modified = false;
};

// Produces the 5-strand Lissajous projection word of the (3,q) torus knot:
// q = 3n+1 routes through torus_seed_rewrite, Lift3n and EndSlide to
// (s2 s4 s1 s3)^{5n+3} with fx = 10n+7; q = 3n+2 routes through the seed,
// Lift3n and ClaspSlide to s2 s4 (s1 s3 s2 s4)^{5n+1} with fx = 10n+4.
TorusResult torus_pipeline(int q);

struct TwoBridgeResult {
    long long k = 0;
    int nx = 0; // 2k + 2
    int ny = 3;
    BraidWord reduced;
    diagram::BandShadow shadow;
};

// Turns a 3-strand plat word into Lissajous-projection data: alternates the
// word, trims leading/trailing sigma_1 letters (cap slides on the 4-plat),
// reads off s2 (s1 s2)^k, and builds the (2k+2, 3) band shadow. Throws
// not_a_knot when the reduction empties or the plat has several components,
// link_not_knot when k = 2 mod 3.
TwoBridgeResult two_bridge_pipeline(const BraidWord& w);

// Whether the first visit of each arc double point of the (nx, ny) arc runs
// over, read from the signed reduced braid word: letter ranks are matched to
// arc double points geometrically, and the steeper branch at a crossing is
// the over strand exactly for a positive letter. Order follows
// curves::arc_double_points.
std::vector<bool> arc_over_flags(const BraidWord& reduced, int nx, int ny);

} // namespace lissaknot::braids
