#include "doctest.h"
#include "lissaknot/braids.hpp"
#include "lissaknot/diagram.hpp"
#include "lissaknot/invariants.hpp"

using namespace lissaknot;
using namespace lissaknot::braids;
using invariants::alexander;
using invariants::torus_alexander;

namespace {

std::vector<int> repeat(std::vector<int> block, int times) {
    std::vector<int> out;
    for (int r = 0; r < times; ++r) out.insert(out.end(), block.begin(), block.end());
    return out;
}

} // namespace

TEST_CASE("two-bridge pipeline on the smallest trefoil word") {
    const TwoBridgeResult r = two_bridge_pipeline(BraidWord{3, {2, -1, 2}});
    CHECK(r.k == 1);
    CHECK(r.nx == 4);
    CHECK(r.ny == 3);
    CHECK(r.reduced.letters == std::vector<int>{2, -1, 2});
    CHECK(r.shadow.crossings.size() == 17);
}

TEST_CASE("two-bridge pipeline alternates the all-positive trefoil word") {
    const TwoBridgeResult r = two_bridge_pipeline(BraidWord{3, {2, 2, 2}});
    CHECK(r.k == 3);
    CHECK(r.nx == 8);
    CHECK(r.reduced.letters == std::vector<int>{2, -1, -2, 1, 2, 1, 2});
    CHECK(r.shadow.crossings.size() == 2 * 8 * 3 - 8 - 3);
}

TEST_CASE("two-bridge pipeline on the figure-eight word") {
    const TwoBridgeResult r = two_bridge_pipeline(BraidWord{3, {2, -1, 2, 2}});
    CHECK(r.k == 7);
    CHECK(r.nx == 16);
    CHECK(r.reduced.letters ==
          std::vector<int>{-2, 1, 2, 1, -2, -1, -2, 1, 2, -1, -2, 1, 2, 1, 2});
    // the reduction is braid-equal to the input up to the trimmed cap letters
    CHECK(invariants::braid_equal(
        BraidWord{3, {-1}} * r.reduced, alternate_3braid(BraidWord{3, {2, -1, 2, 2}})));
}

TEST_CASE("two-bridge pipeline trims a trailing cap letter") {
    // the closed-braid trefoil word: its plat form loses the last crossing
    const TwoBridgeResult r = two_bridge_pipeline(BraidWord{3, {2, -1, 2, -1}});
    CHECK(r.k == 1);
    CHECK(r.nx == 4);
    CHECK(r.reduced.letters == std::vector<int>{2, -1, 2});
}

TEST_CASE("two-bridge pipeline rejections") {
    CHECK_THROWS_WITH_AS(two_bridge_pipeline(BraidWord{3, {2, 1, 2, 1, 2}}),
                         "k = 2 mod 3 closes to a two-component link", Error);
    CHECK_THROWS_AS(two_bridge_pipeline(BraidWord{3, {}}), Error);
    CHECK_THROWS_AS(two_bridge_pipeline(BraidWord{3, {1}}), Error);
    CHECK_THROWS_AS(two_bridge_pipeline(BraidWord{3, {1, -1}}), Error);
    CHECK_THROWS_AS(two_bridge_pipeline(BraidWord{4, {2, 2, 2}}), Error);
}

TEST_CASE("two-bridge pipeline realizes its own targets") {
    struct Case {
        std::vector<int> word;
        CanonicalAlexander target;
    };
    const std::vector<Case> cases = {
        {{2, -1, 2}, torus_alexander(2, 3)},
        {{2, 2, 2}, torus_alexander(2, 3)},
        {{2, -1, 2, 2}, invariants::twist_alexander(1)},
    };
    for (const auto& c : cases) {
        const TwoBridgeResult r = two_bridge_pipeline(BraidWord{3, c.word});
        const auto target =
            alexander(diagram::diagram_from_plat(diagram::PlatSpec::standard(
                BraidWord{4, r.reduced.letters})));
        CHECK(target == c.target);
        const auto flags = arc_over_flags(r.reduced, r.nx, r.ny);
        CHECK(flags.size() == r.shadow.quad_sites.size());
        const diagram::Diagram d = diagram::assign_twist_crossings(r.shadow, flags, target);
        CHECK(alexander(d) == c.target);
    }
}

TEST_CASE("arc_over_flags") {
    const auto flags = arc_over_flags(BraidWord{3, {2, -1, 2}}, 4, 3);
    REQUIRE(flags.size() == 3);
    // mirroring the word flips every flag
    const auto anti = arc_over_flags(BraidWord{3, {-2, 1, -2}}, 4, 3);
    for (size_t j = 0; j < flags.size(); ++j) CHECK(anti[j] == !flags[j]);
    // word length must match the arc's double point count
    CHECK_THROWS_AS(arc_over_flags(BraidWord{3, {2, -1}}, 4, 3), Error);
    // letter indices must match the crossing geometry (the arc pattern is 2,1,2)
    CHECK_THROWS_AS(arc_over_flags(BraidWord{3, {1, 1, 1}}, 4, 3), Error);
}

TEST_CASE("torus pipeline closed forms") {
    struct Case {
        int q, fx;
        bool modified;
    };
    for (const Case c : {Case{2, 4, false}, Case{4, 17, true}, Case{5, 14, false},
                         Case{7, 27, true}, Case{8, 24, false}, Case{10, 37, true}}) {
        const TorusResult r = torus_pipeline(c.q);
        CHECK(r.fx == c.fx);
        CHECK(r.fy == 5);
        CHECK(r.closure_modified == c.modified);
        CHECK(r.word == lissajous_projection_word(c.fx, 5));
    }
    CHECK(torus_pipeline(2).word == ProjectionWord(5, {2, 4, 1, 3, 2, 4}));
    CHECK(torus_pipeline(4).word == ProjectionWord(5, repeat({2, 4, 1, 3}, 8)));
    CHECK_THROWS_AS(torus_pipeline(3), Error);
    CHECK_THROWS_AS(torus_pipeline(9), Error);
    CHECK_THROWS_AS(torus_pipeline(1), Error);
}

TEST_CASE("seed and rewrite plats close to the torus knots") {
    for (int q : {2, 4, 5}) {
        const auto seed =
            alexander(diagram::diagram_from_plat(diagram::PlatSpec::standard(torus_seed(q))));
        const auto rewrite = alexander(
            diagram::diagram_from_plat(diagram::PlatSpec::standard(torus_seed_rewrite(q))));
        CHECK(seed == torus_alexander(3, q));
        CHECK(rewrite == torus_alexander(3, q));
    }
}
