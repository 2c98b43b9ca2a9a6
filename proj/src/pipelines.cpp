#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "lissaknot/braids.hpp"
#include "lissaknot/curves.hpp"
#include "lissaknot/diagram.hpp"

namespace lissaknot::braids {

TwoBridgeResult two_bridge_pipeline(const BraidWord& w) {
    if (w.strands != 3) fail(errc::bad_input, "expected a 3-strand braid");
    w.validate();

    const BraidWord alt = alternate_3braid(w);

    // Cap slides: leading and trailing sigma_1 crossings cancel against the
    // plat caps.
    size_t lo = 0, hi = alt.letters.size();
    while (lo < hi && std::abs(alt.letters[lo]) == 1) ++lo;
    while (hi > lo && std::abs(alt.letters[hi - 1]) == 1) --hi;
    BraidWord red;
    red.strands = 3;
    red.letters.assign(alt.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                       alt.letters.begin() + static_cast<std::ptrdiff_t>(hi));
    if (red.letters.empty())
        fail(errc::not_a_knot, "word reduces away completely; the closure is a trivial split form");

    // The survivor must read s2 (s1 s2)^k.
    const auto& ls = red.letters;
    for (size_t j = 0; j < ls.size(); ++j)
        if (std::abs(ls[j]) != (j % 2 == 0 ? 2 : 1))
            fail(errc::internal, "reduction left an unexpected pattern");
    if (ls.size() % 2 == 0) fail(errc::internal, "reduction left an unexpected pattern");
    const long long k = static_cast<long long>(ls.size() - 1) / 2;

    if (k % 3 == 2)
        fail(errc::link_not_knot, "k = 2 mod 3 closes to a two-component link");

    BraidWord on4;
    on4.strands = 4;
    on4.letters = red.letters;
    if (diagram::plat_components(diagram::PlatSpec::standard(on4)) != 1)
        fail(errc::not_a_knot, "plat closure has more than one component");

    TwoBridgeResult res;
    res.k = k;
    res.nx = static_cast<int>(2 * k + 2);
    res.ny = 3;
    res.reduced = red;
    res.shadow = diagram::band_shadow(res.nx, res.ny);
    return res;
}

std::vector<bool> arc_over_flags(const BraidWord& reduced, int nx, int ny) {
    reduced.validate();
    const auto arc = curves::arc_double_points(nx, ny);
    if (arc.size() != reduced.letters.size())
        fail(errc::bad_input, "word length does not match the arc's double points");

    std::vector<bool> flags(arc.size(), false);
    for (size_t j = 0; j < arc.size(); ++j) {
        const auto& dp = arc[j];
        const long double t1 = dp.t1.value(), t2 = dp.t2.value();
        const long double y0 = std::cos(ny * t1);
        const long double x0 = std::cos(nx * t1);

        // Strand positions of the braid at the crossing's level: all times
        // in [0, pi] where the y coordinate equals y0.
        const long double a = std::acos(y0);
        std::vector<long double> ts;
        for (int r = 0; r <= ny; ++r) {
            for (long double t : {(2 * PI_L * r + a) / ny, (2 * PI_L * r - a) / ny})
                if (t > -1e-12L && t < PI_L + 1e-12L) ts.push_back(t);
        }
        std::sort(ts.begin(), ts.end());
        if (ts.size() != static_cast<size_t>(ny))
            fail(errc::internal, "unexpected strand count at a crossing level");

        int rank = 1, hits = 0;
        for (long double t : ts) {
            if (std::fabs(t - t1) < 1e-9L || std::fabs(t - t2) < 1e-9L) {
                ++hits;
                continue;
            }
            const long double x = std::cos(nx * t);
            if (std::fabs(x - x0) < 1e-9L)
                fail(errc::internal, "stray strand too close to the crossing");
            if (x < x0) ++rank;
        }
        if (hits != 2) fail(errc::internal, "crossing times missing from the strand set");
        if (rank != std::abs(reduced.letters[j]))
            fail(errc::internal, "braid letter does not match the crossing geometry");

        // Reading down the braid, the branch with the larger dx/dy arrives
        // from the right, i.e. it is string i+1, which passes over exactly
        // at a positive letter.
        auto slope = [&](long double t) {
            return (-nx * std::sin(nx * t)) / (-ny * std::sin(ny * t));
        };
        flags[j] = (slope(t1) > slope(t2)) == (reduced.letters[j] > 0);
    }
    return flags;
}

} // namespace lissaknot::braids
