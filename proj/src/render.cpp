#include "lissaknot/render.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace lissaknot::render {

namespace {

std::string fmt(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6Lf", v);
    return buf;
}

struct HeightFn {
    // returns the height used for over/under ordering; flat = projection-only
    bool flat = true;
    int n3 = 0, n4 = 0;
    long double p3 = 0, p4 = 0;
    bool second_order = false;

    long double operator()(long double t) const {
        if (flat) return 0;
        if (second_order) return std::cos(n3 * t + p3) + std::cos(n4 * t + p4);
        return std::cos(n3 * t + p3);
    }
};

HeightFn make_height(const RenderOptions& opt) {
    HeightFn h;
    if (opt.nz) {
        h.flat = false;
        h.n3 = *opt.nz;
        h.p3 = opt.phz.value();
    } else if (opt.z2) {
        h.flat = false;
        h.second_order = true;
        h.n3 = opt.z2->n3;
        h.n4 = opt.z2->n4;
        h.p3 = opt.z2->phi3;
        h.p4 = opt.z2->phi4;
    }
    return h;
}

void check_frequencies(const RenderOptions& opt) {
    if (opt.nx < 1 || opt.ny < 1) fail(errc::bad_frequency, "frequencies must be positive");
    if (std::gcd(opt.nx, opt.ny) != 1)
        fail(errc::non_coprime_frequencies, "frequencies must be coprime");
}

// Default phases for the closed projection: rational (non-pi) offsets never
// hit the double-point boundary ties, so each candidate below is generic;
// pick the one that spreads the crossings furthest apart so the under-strand
// gaps stay separated. Deterministic for fixed frequencies.
std::pair<ExactAngle, ExactAngle> pick_generic_phases(int nx, int ny) {
    static const std::pair<Rational, Rational> candidates[] = {
        {Rational(2, 5), Rational(3, 7)},   {Rational(3, 7), Rational(2, 9)},
        {Rational(5, 11), Rational(3, 8)},  {Rational(4, 9), Rational(5, 13)},
        {Rational(1, 3), Rational(2, 7)},   {Rational(3, 8), Rational(4, 11)},
        {Rational(1, 512), Rational(1, 997)},
    };
    long double best = -1;
    std::pair<ExactAngle, ExactAngle> pick{ExactAngle::number(Rational(1, 512)),
                                           ExactAngle::number(Rational(1, 997))};
    for (const auto& [ax, ay] : candidates) {
        const ExactAngle px = ExactAngle::number(ax), py = ExactAngle::number(ay);
        std::vector<curves::DoublePoint> dps;
        try {
            dps = curves::double_points(nx, ny, px, py);
        } catch (const Error&) {
            continue;
        }
        long double dmin = 4;
        for (size_t a = 0; a < dps.size(); ++a)
            for (size_t b = a + 1; b < dps.size(); ++b)
                dmin = std::min(dmin, (long double)std::hypot(dps[a].x - dps[b].x,
                                                              dps[a].y - dps[b].y));
        if (dmin > best) {
            best = dmin;
            pick = {px, py};
        }
    }
    return pick;
}

std::pair<ExactAngle, ExactAngle> resolve_phases(const RenderOptions& opt) {
    if (opt.arc) return {ExactAngle(), ExactAngle()};
    if (opt.generic_phases) return pick_generic_phases(opt.nx, opt.ny);
    return {opt.phx, opt.phy};
}

} // namespace

std::string render_svg(const RenderOptions& opt) {
    check_frequencies(opt);
    const int density = 2000 * std::max(opt.nx, opt.ny);
    const long double range = opt.arc ? PI_L : 2 * PI_L;
    const auto [exact_phx, exact_phy] = resolve_phases(opt);
    const long double phx = exact_phx.value();
    const long double phy = exact_phy.value();

    std::vector<long double> ts(static_cast<size_t>(density));
    for (int i = 0; i < density; ++i)
        ts[static_cast<size_t>(i)] = range * i / density;

    // Crossing gaps: drop the samples of the under strand near each double
    // point. The time window keeps the cut away from the over strand, which
    // passes the same spot at a far-off parameter.
    std::vector<bool> keep(static_cast<size_t>(density), true);
    if (!opt.arc) {
        const auto dps = curves::double_points(opt.nx, opt.ny, exact_phx, exact_phy);
        const HeightFn height = make_height(opt);
        const long double gap = 0.02L * 2.2L;
        const long double window = PI_L / (2 * std::max(opt.nx, opt.ny));
        struct Cut {
            long double t, x, y;
        };
        std::vector<Cut> cuts;
        for (const auto& dp : dps) {
            const long double t1 = dp.t1.value(), t2 = dp.t2.value();
            long double tu = t2; // projection-only: the retraced visit dips
            if (!height.flat) {
                const long double z1 = height(t1), z2 = height(t2);
                if (std::fabs(z1 - z2) < crossing_margin())
                    fail(errc::singular_crossing, "height difference under the crossing margin");
                tu = z1 < z2 ? t1 : t2;
            }
            cuts.push_back({tu, static_cast<long double>(dp.x), static_cast<long double>(dp.y)});
        }
        for (int i = 0; i < density; ++i) {
            const long double t = ts[static_cast<size_t>(i)];
            const long double x = std::cos(opt.nx * t + phx), y = std::cos(opt.ny * t + phy);
            for (const Cut& c : cuts) {
                long double dt = std::fabs(t - c.t);
                dt = std::min(dt, 2 * PI_L - dt);
                if (dt < window && std::hypot(x - c.x, y - c.y) < gap) {
                    keep[static_cast<size_t>(i)] = false;
                    break;
                }
            }
        }
    }

    auto point = [&](int i) {
        const long double t = ts[static_cast<size_t>(i)];
        return std::pair<long double, long double>(std::cos(opt.nx * t + phx),
                                                   std::cos(opt.ny * t + phy));
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"-1.15 -1.15 2.3 2.3\" width=\"600\" height=\"600\">\n";
    svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.02\" "
           "stroke-linecap=\"round\" transform=\"scale(1,-1)\">\n";

    auto emit_run = [&](const std::vector<int>& run) {
        if (run.size() < 2) return;
        svg += "<polyline points=\"";
        for (size_t j = 0; j < run.size(); ++j) {
            const auto [x, y] = point(run[j]);
            if (j) svg += " ";
            svg += fmt(x) + "," + fmt(y);
        }
        svg += "\"/>\n";
    };

    int start = -1;
    for (int i = 0; i < density && start < 0; ++i)
        if (!keep[static_cast<size_t>(i)]) start = i;

    if (start < 0) {
        // no gaps: one closed run
        std::vector<int> run(static_cast<size_t>(density));
        for (int i = 0; i < density; ++i) run[static_cast<size_t>(i)] = i;
        if (!opt.arc) run.push_back(0);
        emit_run(run);
    } else {
        // scan one full period starting inside a gap so runs never split
        // across the seam
        std::vector<int> run;
        for (int s = 0; s <= density; ++s) {
            const int i = (start + s) % density;
            if (keep[static_cast<size_t>(i)]) {
                run.push_back(i);
            } else {
                emit_run(run);
                run.clear();
            }
        }
        emit_run(run);
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

std::string render_csv(const RenderOptions& opt) {
    check_frequencies(opt);
    const int density = 2000 * std::max(opt.nx, opt.ny);
    const long double range = opt.arc ? PI_L : 2 * PI_L;
    const auto [exact_phx, exact_phy] = resolve_phases(opt);
    const long double phx = exact_phx.value();
    const long double phy = exact_phy.value();
    const HeightFn height = make_height(opt);

    std::string csv = "t,x,y,z\n";
    for (int i = 0; i < density; ++i) {
        const long double t = range * i / density;
        csv += fmt(t) + "," + fmt(std::cos(opt.nx * t + phx)) + "," +
               fmt(std::cos(opt.ny * t + phy)) + "," + fmt(height(t)) + "\n";
    }
    return csv;
}

} // namespace lissaknot::render
