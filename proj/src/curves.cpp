#include "lissaknot/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lissaknot/error.hpp"

namespace lissaknot {
namespace curves {

namespace {

long double coord(int n, const ExactAngle& t, const ExactAngle& ph) {
    return std::cos((Rational(n) * t + ph).value());
}

long double dcoord(int n, const ExactAngle& t, const ExactAngle& ph) {
    return -static_cast<long double>(n) * std::sin((Rational(n) * t + ph).value());
}

// Value rat + over_pi/pi; the index bounds of the double point enumeration
// have this shape.  Ceil/floor are exact when over_pi = 0; a bound landing on
// an integer (or numerically indistinguishable from one) is a boundary tie
// and the projection is rejected as degenerate.
struct PiQuotient {
    Rational rat;
    Rational over_pi;

    long long floor() const {
        if (over_pi.is_zero()) {
            if (rat.is_integer())
                fail(errc::degenerate_projection, "double point index bound tie");
            return rat.floor();
        }
        long double v = rat.value() + over_pi.value() / PI_L;
        if (std::fabs(v - std::round(v)) < 1e-12L)
            fail(errc::degenerate_projection, "double point index bound tie");
        return static_cast<long long>(std::floor(v));
    }
    long long ceil() const { return -PiQuotient{-rat, -over_pi}.floor(); }
};

bool is_integer_multiple_of_pi_over(const ExactAngle& a, int n) {
    return a.unit_part().is_zero() && (a.pi_part() * Rational(n)).is_integer();
}

} // namespace

ValidationResult validate_params(const LissajousParams& p) {
    if (p.nx < 1 || p.ny < 1 || p.nz < 1)
        fail(errc::bad_frequency, "frequencies must be positive");
    if (std::gcd(p.nx, p.ny) != 1 || std::gcd(p.ny, p.nz) != 1 || std::gcd(p.nx, p.nz) != 1)
        fail(errc::non_coprime_frequencies, "frequencies must be pairwise coprime");

    // Shift time by phz/nz so the z phase vanishes.
    ExactAngle px = p.phx - Rational(p.nx, p.nz) * p.phz;
    ExactAngle py = p.phy - Rational(p.ny, p.nz) * p.phz;
    if (is_integer_multiple_of_pi_over(px, p.nz))
        return {false, "singular phase: phi_x = k*pi/nz"};
    if (is_integer_multiple_of_pi_over(py, p.nz))
        return {false, "singular phase: phi_y = k*pi/nz"};
    ExactAngle d = px - Rational(p.nx, p.ny) * py;
    if (is_integer_multiple_of_pi_over(d, p.ny))
        return {false, "singular phase: phi_x = (nx/ny)*phi_y + k*pi/ny"};
    return {true, ""};
}

std::vector<DoublePoint> double_points(int nx, int ny, const ExactAngle& phx,
                                       const ExactAngle& phy) {
    if (nx < 1 || ny < 1) fail(errc::bad_frequency, "frequencies must be positive");
    if (std::gcd(nx, ny) != 1)
        fail(errc::non_coprime_frequencies, "projection frequencies must be coprime");

    std::vector<DoublePoint> out;

    // kind selects which frequency carries the difference condition: na.  The
    // summed coordinate's phase phb enters the times and the index bounds.
    auto emit = [&](PointKind kind, int na, int nb, const ExactAngle& phb) {
        for (long long k = 1; k < na; ++k) {
            PiQuotient lo{Rational(nb * k, na) + phb.pi_part(), phb.unit_part()};
            PiQuotient hi{Rational(2 * nb) - Rational(nb * k, na) + phb.pi_part(),
                          phb.unit_part()};
            long long jlo = lo.ceil(), jhi = hi.floor();
            for (long long j = jlo; j <= jhi; ++j) {
                ExactAngle base = ExactAngle::pi_multiple(Rational(j, nb)) - phb / Rational(nb);
                ExactAngle half = ExactAngle::pi_multiple(Rational(k, na));
                DoublePoint dp;
                dp.kind = kind;
                dp.k = k;
                dp.j = j;
                dp.t1 = base - half;
                dp.t2 = base + half;
                dp.x = static_cast<double>(coord(nx, dp.t1, phx));
                dp.y = static_cast<double>(coord(ny, dp.t1, phy));
                long double x2 = coord(nx, dp.t2, phx);
                long double y2 = coord(ny, dp.t2, phy);
                if (std::fabs(dp.x - x2) > EQ_TOL || std::fabs(dp.y - y2) > EQ_TOL)
                    fail(errc::internal, "double point closed form out of tolerance");
                out.push_back(dp);
            }
        }
    };

    emit(PointKind::TypeI, nx, ny, phy);
    size_t type1 = out.size();
    emit(PointKind::TypeII, ny, nx, phx);

    if (type1 != static_cast<size_t>(ny) * (nx - 1) ||
        out.size() - type1 != static_cast<size_t>(nx) * (ny - 1))
        fail(errc::internal, "double point count mismatch");

    std::sort(out.begin(), out.end(), [](const DoublePoint& a, const DoublePoint& b) {
        return a.t1.value() < b.t1.value();
    });

    // All 2C visit times must be distinct, else some point is a triple point.
    std::vector<long double> times;
    times.reserve(2 * out.size());
    for (const auto& dp : out) {
        times.push_back(dp.t1.value());
        times.push_back(dp.t2.value());
    }
    std::sort(times.begin(), times.end());
    for (size_t i = 1; i < times.size(); ++i)
        if (times[i] - times[i - 1] < 1e-12L)
            fail(errc::degenerate_projection, "coincident double point times");

    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j) {
            long double dx = out[i].x - out[j].x, dy = out[i].y - out[j].y;
            if (dx * dx + dy * dy < 1e-7L * 1e-7L)
                fail(errc::degenerate_projection, "coincident double point positions");
        }

    return out;
}

std::vector<std::pair<long double, long double>>
double_points_oracle(int nx, int ny, long double phx, long double phy, int grid_size) {
    if (nx < 1 || ny < 1) fail(errc::bad_frequency, "frequencies must be positive");
    const int N = std::max(grid_size, 16);
    const long double TWO_PI = 2 * PI_L;
    const long double h = TWO_PI / N;

    auto X = [&](long double t) { return std::cos(nx * t + phx); };
    auto Y = [&](long double t) { return std::cos(ny * t + phy); };
    auto dX = [&](long double t) { return -nx * std::sin(nx * t + phx); };
    auto dY = [&](long double t) { return -ny * std::sin(ny * t + phy); };

    std::vector<long double> xs(N), ys(N);
    for (int i = 0; i < N; ++i) {
        xs[i] = X(i * h);
        ys[i] = Y(i * h);
    }

    const long double speed = std::sqrt(static_cast<long double>(nx) * nx +
                                         static_cast<long double>(ny) * ny);
    const long double thresh2 = 9 * speed * speed * h * h;
    // Genuine double points have circular time separation at least
    // 2 pi / max(nx, ny); stay well inside that to skip the diagonal.
    const long double min_sep = PI_L / std::max(nx, ny);

    auto d2 = [&](int i, int j) {
        i = ((i % N) + N) % N;
        j = ((j % N) + N) % N;
        long double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
        return dx * dx + dy * dy;
    };

    std::vector<std::pair<long double, long double>> found;
    auto record = [&](long double t1, long double t2) {
        t1 = std::fmod(std::fmod(t1, TWO_PI) + TWO_PI, TWO_PI);
        t2 = std::fmod(std::fmod(t2, TWO_PI) + TWO_PI, TWO_PI);
        if (t1 > t2) std::swap(t1, t2);
        for (const auto& f : found)
            if (std::fabs(f.first - t1) < 1e-7L && std::fabs(f.second - t2) < 1e-7L) return;
        found.emplace_back(t1, t2);
    };

    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            long double gap = (j - i) * h;
            long double circ = std::min(gap, TWO_PI - gap);
            if (circ < min_sep) continue;
            if (d2(i, j) > thresh2) continue;
            // keep only local minima of the sampled distance
            if (d2(i, j) > d2(i + 1, j) || d2(i, j) > d2(i - 1, j) || d2(i, j) > d2(i, j + 1) ||
                d2(i, j) > d2(i, j - 1))
                continue;
            // Newton on F(t1,t2) = (X(t1)-X(t2), Y(t1)-Y(t2))
            long double t1 = i * h, t2 = j * h;
            bool ok = false;
            for (int it = 0; it < 60; ++it) {
                long double f1 = X(t1) - X(t2), f2 = Y(t1) - Y(t2);
                if (std::fabs(f1) < 1e-13L && std::fabs(f2) < 1e-13L) {
                    ok = true;
                    break;
                }
                long double a = dX(t1), b = -dX(t2), c = dY(t1), d = -dY(t2);
                long double det = a * d - b * c;
                if (std::fabs(det) < 1e-14L) break;
                long double s1 = (d * f1 - b * f2) / det;
                long double s2 = (-c * f1 + a * f2) / det;
                long double cap = 2 * h;
                s1 = std::clamp(s1, -cap, cap);
                s2 = std::clamp(s2, -cap, cap);
                t1 -= s1;
                t2 -= s2;
            }
            if (!ok) continue;
            long double sep = std::fabs(t1 - t2);
            sep = std::min(std::fmod(sep, TWO_PI), TWO_PI - std::fmod(sep, TWO_PI));
            if (sep < min_sep / 2) continue;
            record(t1, t2);
        }
    }

    std::sort(found.begin(), found.end());
    return found;
}

int crossing_sign(const LissajousParams& p, const DoublePoint& dp) {
    long double cross = dcoord(p.nx, dp.t1, p.phx) * dcoord(p.ny, dp.t2, p.phy) -
                        dcoord(p.nx, dp.t2, p.phx) * dcoord(p.ny, dp.t1, p.phy);
    long double dz = coord(p.nz, dp.t1, p.phz) - coord(p.nz, dp.t2, p.phz);
    long double margin = crossing_margin();
    if (std::fabs(cross) < margin)
        fail(errc::singular_crossing, "tangent factor below margin at a crossing");
    if (std::fabs(dz) < margin)
        fail(errc::singular_crossing, "z-values coincide at a crossing (forbidden phase)");
    return (cross > 0) == (dz > 0) ? 1 : -1;
}

Traversal build_crossings(const LissajousParams& p) {
    ValidationResult v = validate_params(p);
    if (!v.valid) fail(errc::singular_phase, v.reason);

    Traversal tr;
    tr.sites.reserve(16);
    for (const auto& dp : double_points(p.nx, p.ny, p.phx, p.phy)) {
        CrossingSite site;
        site.dp = dp;
        site.sign = crossing_sign(p, dp);
        long double z1 = coord(p.nz, dp.t1, p.phz);
        long double z2 = coord(p.nz, dp.t2, p.phz);
        site.over = z1 > z2 ? OverAt::T1 : OverAt::T2;
        tr.sites.push_back(site);
    }

    struct Stamp {
        long double t;
        Visit v;
    };
    std::vector<Stamp> stamps;
    stamps.reserve(2 * tr.sites.size());
    for (int i = 0; i < static_cast<int>(tr.sites.size()); ++i) {
        stamps.push_back({tr.sites[i].dp.t1.value(), {i, false}});
        stamps.push_back({tr.sites[i].dp.t2.value(), {i, true}});
    }
    std::sort(stamps.begin(), stamps.end(),
              [](const Stamp& a, const Stamp& b) { return a.t < b.t; });
    for (const auto& s : stamps) tr.order.push_back(s.v);
    return tr;
}

LissajousParams twist_params(int m) { return twist_params(m, 6 * m + 7); }

LissajousParams twist_params(int m, int nz) {
    if (m < 0) fail(errc::bad_input, "family index must be nonnegative");
    if (nz < 1 || nz % 2 == 0 || std::gcd(nz, 2 * m + 1) != 1)
        fail(errc::bad_frequency, "nz must be odd and coprime to 2m+1");
    LissajousParams p;
    p.nx = 2;
    p.ny = 2 * m + 1;
    p.nz = nz;
    p.phx = ExactAngle::zero();
    p.phy = ExactAngle::number(Rational(1, 2));
    p.phz = ExactAngle(Rational(-3, 4 * m + 2), Rational(nz, 4 * m + 2));
    return p;
}

FamilyPhases family_singular_phases(int m, int nz) {
    if (m < 0) fail(errc::bad_input, "family index must be nonnegative");
    if (nz < 1 || nz % 2 == 0 || std::gcd(nz, 2 * m + 1) != 1)
        fail(errc::bad_frequency, "nz must be odd and coprime to 2m+1");

    FamilyPhases fp;
    int q = 2 * m + 1;
    // z(t1) + z(t2) degenerates at phz = nz/(2q) - j nz pi/q (mod pi); as j
    // runs over the q TypeI crossings the pi-part sweeps every residue r/q.
    for (int r = 0; r < q; ++r) {
        ExactAngle a(Rational(-r, q), Rational(nz, 2 * q));
        bool tie = false;
        long long fl = floor_div_pi(a, tie);
        if (tie) fail(errc::internal, "singular phase reduction tie");
        ExactAngle reduced = a - ExactAngle::pi_multiple(Rational(fl));
        long double v = reduced.value();
        if (v < 1e-12L || v > PI_L - 1e-12L)
            fail(errc::internal, "singular phase at interval boundary");
        fp.singular.push_back(reduced);
    }
    fp.singular.push_back(ExactAngle::pi_multiple(Rational(1, 2)));
    std::sort(fp.singular.begin(), fp.singular.end(),
              [](const ExactAngle& a, const ExactAngle& b) { return a.value() < b.value(); });
    for (size_t i = 1; i < fp.singular.size(); ++i)
        if (fp.singular[i].value() - fp.singular[i - 1].value() < 1e-9L)
            fail(errc::internal, "singular phases too close to separate");
    return fp;
}

std::vector<PhaseInterval> family_phase_intervals(int m, int nz) {
    FamilyPhases fp = family_singular_phases(m, nz);
    std::vector<ExactAngle> bounds;
    bounds.push_back(ExactAngle::zero());
    bounds.insert(bounds.end(), fp.singular.begin(), fp.singular.end());
    bounds.push_back(ExactAngle::pi_multiple(Rational(1)));
    std::vector<PhaseInterval> out;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        PhaseInterval iv;
        iv.lo = bounds[i];
        iv.hi = bounds[i + 1];
        iv.mid = (bounds[i] + bounds[i + 1]) / Rational(2);
        out.push_back(iv);
    }
    return out;
}

std::vector<std::string> family_claims_check(int m, const Traversal& tr) {
    std::vector<std::string> bad;
    if (m < 2) return bad; // the half-plane rules apply for m >= 2

    std::vector<const CrossingSite*> type1;
    for (const auto& s : tr.sites)
        if (s.dp.kind == PointKind::TypeI) type1.push_back(&s);
    if (type1.size() != static_cast<size_t>(2 * m + 1)) {
        bad.push_back("unexpected TypeI crossing count");
        return bad;
    }

    auto xsign = [&bad](double x) {
        if (std::fabs(x) < 1e-9) bad.push_back("crossing too close to the y-axis to classify");
        return x > 0 ? 1 : -1;
    };

    // The exception is the crossing closest to the y-axis inside one
    // half-plane: the negative one when m is even, the positive one when odd.
    int exc_half = (m % 2 == 0) ? -1 : 1;
    const CrossingSite* exceptional = nullptr;
    for (const auto* s : type1)
        if (xsign(s->dp.x) == exc_half)
            if (!exceptional || std::fabs(s->dp.x) < std::fabs(exceptional->dp.x))
                exceptional = s;
    if (!exceptional) {
        bad.push_back("no TypeI crossing in the exceptional half-plane");
        return bad;
    }

    for (const auto* s : type1) {
        int hs = xsign(s->dp.x);
        int expected;
        if (m % 2 == 0)
            expected = (s == exceptional) ? -1 : (hs > 0 ? -1 : 1);
        else
            expected = (s == exceptional) ? 1 : (hs > 0 ? -1 : 1);
        if (s->sign != expected)
            bad.push_back("TypeI handedness rule fails at k=" + std::to_string(s->dp.k) +
                          ", j=" + std::to_string(s->dp.j));
    }

    for (const auto& s : tr.sites) {
        if (s.dp.kind != PointKind::TypeII) continue;
        int hs = xsign(s.dp.x);
        int expected = (s.dp.j == 2) ? -hs : hs;
        if (s.sign != expected)
            bad.push_back("TypeII handedness rule fails at k=" + std::to_string(s.dp.k) +
                          ", j=" + std::to_string(s.dp.j));
    }
    return bad;
}

SymmetryReport symmetry_check(const LissajousParams& p) {
    ValidationResult v = validate_params(p);
    if (!v.valid) fail(errc::singular_phase, v.reason);

    SymmetryReport rep;
    int freqs[3] = {p.nx, p.ny, p.nz};
    const ExactAngle* phases[3] = {&p.phx, &p.phy, &p.phz};
    int even_count = 0;
    for (int a = 0; a < 3; ++a)
        if (freqs[a] % 2 == 0) {
            ++even_count;
            rep.even_axis = a;
        }
    if (even_count > 1) fail(errc::non_coprime_frequencies, "more than one even frequency");
    rep.all_odd = even_count == 0;

    const int N = 1000;
    long double dev = 0;
    for (int i = 0; i < N; ++i) {
        long double t = 2 * PI_L * i / N;
        for (int a = 0; a < 3; ++a) {
            long double ph = phases[a]->value();
            long double u = std::cos(freqs[a] * t + ph);
            long double w = std::cos(freqs[a] * (t + PI_L) + ph);
            long double d = (freqs[a] % 2 == 0) ? std::fabs(w - u) : std::fabs(w + u);
            dev = std::max(dev, d);
        }
    }
    rep.max_deviation = dev;
    if (rep.all_odd)
        rep.amphicheiral_identity = dev < 1e-9L;
    else
        rep.two_periodic_identity = dev < 1e-9L;

    if (!rep.all_odd) {
        int b = (rep.even_axis + 1) % 3, c = (rep.even_axis + 2) % 3;
        const int M = 2048 * std::max({freqs[0], freqs[1], freqs[2]});
        long double phb = phases[b]->value(), phc = phases[c]->value();
        long double acc = 0;
        long double prev = std::atan2(std::cos(phc), std::cos(phb));
        for (int i = 1; i <= M; ++i) {
            long double t = 2 * PI_L * i / M;
            long double ub = std::cos(freqs[b] * t + phb);
            long double uc = std::cos(freqs[c] * t + phc);
            if (ub * ub + uc * uc < 1e-18L)
                fail(errc::numeric_margin, "curve meets the symmetry axis");
            long double th = std::atan2(uc, ub);
            long double d = th - prev;
            while (d > PI_L) d -= 2 * PI_L;
            while (d < -PI_L) d += 2 * PI_L;
            acc += d;
            prev = th;
        }
        long double w = acc / (2 * PI_L);
        if (std::fabs(w - std::round(w)) > 1e-6L)
            fail(errc::numeric_margin, "axis winding did not close up");
        rep.axis_winding = static_cast<int>(std::llround(w));
    }
    return rep;
}

std::vector<ArcDoublePoint> arc_double_points(int nx, int ny) {
    if (nx < 1 || ny < 1) fail(errc::bad_frequency, "frequencies must be positive");
    if (std::gcd(nx, ny) != 1)
        fail(errc::non_coprime_frequencies, "arc frequencies must be coprime");

    std::vector<ArcDoublePoint> out;
    auto emit = [&](PointKind kind, int na, int nb) {
        // difference condition on frequency na: t2 - t1 = 2k pi/na,
        // sum condition on nb: t1 + t2 = 2j pi/nb, inside 0 < t1 < t2 < pi.
        for (long long k = 1; 2 * k < na; ++k) {
            Rational lo(k * nb, na);
            Rational hi = Rational(nb) - lo;
            long long jlo = lo.floor() + 1;
            long long jhi = hi.is_integer() ? hi.floor() - 1 : hi.floor();
            for (long long j = jlo; j <= jhi; ++j) {
                ArcDoublePoint a;
                a.kind = kind;
                a.k = k;
                a.j = j;
                a.t1 = ExactAngle::pi_multiple(Rational(j, nb) - Rational(k, na));
                a.t2 = ExactAngle::pi_multiple(Rational(j, nb) + Rational(k, na));
                a.x = static_cast<double>(std::cos(nx * a.t1.value()));
                a.y = static_cast<double>(std::cos(ny * a.t1.value()));
                out.push_back(a);
            }
        }
    };
    emit(PointKind::TypeI, nx, ny);
    emit(PointKind::TypeII, ny, nx);

    if (out.size() != static_cast<size_t>(nx - 1) * (ny - 1) / 2)
        fail(errc::internal, "arc double point count mismatch");

    std::sort(out.begin(), out.end(), [](const ArcDoublePoint& a, const ArcDoublePoint& b) {
        if (std::fabs(a.y - b.y) > 1e-9) return a.y > b.y;
        return a.x < b.x;
    });
    return out;
}

} // namespace curves
} // namespace lissaknot
