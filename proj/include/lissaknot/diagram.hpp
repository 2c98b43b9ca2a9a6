#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lissaknot/braid_word.hpp"
#include "lissaknot/curves.hpp"
#include "lissaknot/error.hpp"
#include "lissaknot/laurent.hpp"

namespace lissaknot::diagram {

// One visit in a Gauss sequence. `id` numbers the crossing, `over` says
// whether this visit passes over, `sign` is the crossing sign (+1 or -1).
struct GaussEntry {
    int id = 0;
    bool over = false;
    int sign = 0;

    bool operator==(const GaussEntry&) const = default;
};

// An oriented knot diagram held as a Gauss sequence. Construction validates
// that every crossing id appears exactly twice, once over and once under,
// with a consistent nonzero sign.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<GaussEntry> gauss);

    static Diagram unknot() { return Diagram(); }

    int crossings() const { return crossings_; }
    const std::vector<GaussEntry>& gauss() const { return gauss_; }

    struct PdTuple {
        int a = 0, b = 0, c = 0, d = 0;
        bool operator==(const PdTuple&) const = default;
    };

    // Planar diagram code. Edges are numbered 1..2C along the traversal;
    // each crossing is X(a,b,c,d) listed counterclockwise starting from the
    // incoming under-edge.
    std::vector<PdTuple> pd() const;

    // arcs()[v] is the arc index carried while approaching visit v. Arcs are
    // the traversal segments between consecutive under-passes, numbered by
    // the under-pass that ends them.
    std::vector<int> arcs() const;

    // Same shadow with every crossing sign and over/under flag flipped.
    Diagram mirror() const;

    // {"gauss": [[id, "O"|"U", sign], ...], "pd": [[a,b,c,d], ...]}
    std::string to_json() const;

private:
    std::vector<GaussEntry> gauss_;
    int crossings_ = 0;
};

// Reads the traversal produced by curves::build_crossings into a diagram.
Diagram diagram_from_crossings(const curves::Traversal& tr);

// A braid word together with plat closure data. Pairings list the strand
// pairs joined by caps at the top and cups at the bottom, 1-based.
struct PlatSpec {
    braids::BraidWord word;
    std::vector<std::pair<int, int>> top_pairing;
    std::vector<std::pair<int, int>> bottom_pairing;

    static std::vector<std::pair<int, int>> standard_pairing(int strands);
    // (2,3)(4,5)...(strands,1): the standard pairing rotated by one.
    static std::vector<std::pair<int, int>> rotated_pairing(int strands);

    static PlatSpec standard(braids::BraidWord w);
};

// Number of link components of the plat closure.
int plat_components(const PlatSpec& plat);

// Knot diagram of a one-component plat closure. Throws not_a_knot when the
// closure has several components.
Diagram diagram_from_plat(const PlatSpec& plat);

// A crossing of the doubled band shadow. `members` indexes the four shadow
// crossings that sit around one arc double point; `arc` is that point.
struct QuadSite {
    curves::ArcDoublePoint arc;
    std::array<int, 4> members{};
};

// A shadow crossing where the band folds over itself at a coordinate
// extremum of the arc. These are the free over/under choices.
struct TwistSlot {
    bool x_extremum = false; // else a y extremum
    int index = 0;           // extremum index k, 1..n-1
    int member = -1;         // position in BandShadow::crossings
};

// The projection shadow of the doubled (a,b)-arc: crossings of the perturbed
// Lissajous curve classified into quad sites (four parallel-strand crossings
// around each arc double point) and twist slots (band fold-overs).
struct BandShadow {
    int nx = 0, ny = 0;
    ExactAngle phx, phy;
    std::vector<curves::DoublePoint> crossings;
    std::vector<QuadSite> quad_sites;
    std::vector<TwistSlot> twist_slots;
};

// Builds the doubled-arc shadow for coprime frequencies. Throws on invalid
// frequencies; degenerate perturbations are retried internally.
BandShadow band_shadow(int nx, int ny);

// Completes a band shadow into a diagram. The retraced half of the band lies
// on top wherever it meets the original, so at each quad site only the arc's
// own self-crossing member takes its over/under from `arc_first_over`
// (whether the earlier visit of the matching arc double point runs on top);
// the other three members keep the retrace above. Twist slots are searched:
// the two constant sign patterns first, then all over/under patterns in
// Gray-code order. The first diagram whose Alexander polynomial equals
// `target` wins; otherwise throws no_assignment_found.
Diagram assign_twist_crossings(const BandShadow& shadow,
                               const std::vector<bool>& arc_first_over,
                               const CanonicalAlexander& target);

} // namespace lissaknot::diagram
