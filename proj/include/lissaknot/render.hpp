#pragma once

#include <optional>
#include <string>

#include "lissaknot/curves.hpp"

namespace lissaknot::render {

// Optional second-order height z(t) = cos(n3 t + phi3) + cos(n4 t + phi4),
// used only for sampling and over/under comparison.
struct SecondOrderZ {
    int n3 = 0, n4 = 0;
    long double phi3 = 0, phi4 = 0;
};

struct RenderOptions {
    int nx = 0, ny = 0;
    ExactAngle phx, phy;
    // The zero-phase closed curve retraces itself, so when the caller gave
    // no phases this picks a generic pair with well-separated crossings.
    bool generic_phases = false;
    // Height function: nz/phz when present, else z2, else projection-only
    // (under-strand = second visit).
    std::optional<int> nz;
    ExactAngle phz;
    std::optional<SecondOrderZ> z2;
    bool arc = false; // zero phases, t in [0, pi], no crossing gaps
};

// SVG 1.1 document of the x-y projection, y axis upward, with 2%-of-bbox
// gaps cut into the under strand at each crossing. Deterministic bytes.
std::string render_svg(const RenderOptions& opt);

// CSV with header t,x,y,z; one row per sample (density 2000*max(nx,ny)),
// t_i = range * i / N. z is 0 for projection-only rendering.
std::string render_csv(const RenderOptions& opt);

} // namespace lissaknot::render
