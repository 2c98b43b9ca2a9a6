#include "lissaknot/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "lissaknot/invariants.hpp"

namespace lissaknot::diagram {

using curves::ArcDoublePoint;
using curves::DoublePoint;
using curves::PointKind;

Diagram::Diagram(std::vector<GaussEntry> gauss) : gauss_(std::move(gauss)) {
    struct Tally {
        int over = 0, under = 0, sign = 0;
    };
    std::map<int, Tally> tally;
    for (const auto& e : gauss_) {
        if (e.sign != 1 && e.sign != -1)
            fail(errc::malformed_traversal, "crossing sign must be +1 or -1");
        Tally& t = tally[e.id];
        (e.over ? t.over : t.under)++;
        if (t.sign == 0)
            t.sign = e.sign;
        else if (t.sign != e.sign)
            fail(errc::malformed_traversal,
                 "inconsistent sign at crossing " + std::to_string(e.id));
    }
    for (const auto& [id, t] : tally)
        if (t.over != 1 || t.under != 1)
            fail(errc::malformed_traversal,
                 "crossing " + std::to_string(id) + " must appear once over, once under");
    crossings_ = static_cast<int>(tally.size());
}

std::vector<Diagram::PdTuple> Diagram::pd() const {
    const int n = static_cast<int>(gauss_.size()); // 2C edges
    auto in_edge = [n](int v) { return v == 0 ? n : v; };
    auto out_edge = [](int v) { return v + 1; };

    struct Pos {
        int under = -1, over = -1, sign = 0;
    };
    std::map<int, Pos> pos;
    for (int v = 0; v < n; ++v) {
        const GaussEntry& e = gauss_[static_cast<size_t>(v)];
        Pos& p = pos[e.id];
        (e.over ? p.over : p.under) = v;
        p.sign = e.sign;
    }

    // Crossings listed in the order their under-passes occur.
    std::vector<const Pos*> order;
    for (const auto& [id, p] : pos) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const Pos* a, const Pos* b) { return a->under < b->under; });

    std::vector<PdTuple> out;
    out.reserve(order.size());
    for (const Pos* p : order) {
        // X(a,b,c,d) counterclockwise from the incoming under-edge a.
        if (p->sign > 0)
            out.push_back({in_edge(p->under), out_edge(p->over),
                           out_edge(p->under), in_edge(p->over)});
        else
            out.push_back({in_edge(p->under), in_edge(p->over),
                           out_edge(p->under), out_edge(p->over)});
    }
    return out;
}

std::vector<int> Diagram::arcs() const {
    // Arc index carried while approaching each visit; the arc advances after
    // every under-pass.
    std::vector<int> out(gauss_.size(), 0);
    if (crossings_ == 0) return out;
    int unders = 0;
    for (size_t v = 0; v < gauss_.size(); ++v) {
        out[v] = unders % crossings_;
        if (!gauss_[v].over) ++unders;
    }
    return out;
}

Diagram Diagram::mirror() const {
    std::vector<GaussEntry> g = gauss_;
    for (GaussEntry& e : g) {
        e.over = !e.over;
        e.sign = -e.sign;
    }
    return Diagram(std::move(g));
}

std::string Diagram::to_json() const {
    std::ostringstream os;
    os << "{\"gauss\":[";
    for (size_t v = 0; v < gauss_.size(); ++v) {
        if (v) os << ",";
        os << "[" << gauss_[v].id << ",\"" << (gauss_[v].over ? "O" : "U") << "\","
           << gauss_[v].sign << "]";
    }
    os << "],\"pd\":[";
    const auto tuples = pd();
    for (size_t i = 0; i < tuples.size(); ++i) {
        if (i) os << ",";
        os << "[" << tuples[i].a << "," << tuples[i].b << "," << tuples[i].c << ","
           << tuples[i].d << "]";
    }
    os << "]}";
    return os.str();
}

Diagram diagram_from_crossings(const curves::Traversal& tr) {
    if (tr.order.empty())
        fail(errc::malformed_traversal,
             "empty traversal; build the 0-crossing unknot explicitly");
    std::vector<GaussEntry> g;
    g.reserve(tr.order.size());
    for (const curves::Visit& vis : tr.order) {
        const curves::CrossingSite& site = tr.sites[static_cast<size_t>(vis.site)];
        const bool first = !vis.second;
        const bool over = (site.over == curves::OverAt::T1) == first;
        g.push_back({vis.site + 1, over, site.sign});
    }
    return Diagram(std::move(g));
}

// ---- plats ----

std::vector<std::pair<int, int>> PlatSpec::standard_pairing(int strands) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i < strands; i += 2) p.push_back({i, i + 1});
    return p;
}

std::vector<std::pair<int, int>> PlatSpec::rotated_pairing(int strands) {
    std::vector<std::pair<int, int>> p;
    for (int i = 2; i < strands; i += 2) p.push_back({i, i + 1});
    p.push_back({strands, 1});
    return p;
}

PlatSpec PlatSpec::standard(braids::BraidWord w) {
    PlatSpec s;
    s.top_pairing = standard_pairing(w.strands);
    s.bottom_pairing = standard_pairing(w.strands);
    s.word = std::move(w);
    return s;
}

namespace {

void validate_plat(const PlatSpec& plat) {
    const int n = plat.word.strands;
    if (n < 2 || n % 2 != 0) fail(errc::bad_input, "plat closures need an even strand count");
    plat.word.validate();
    if (plat.top_pairing != PlatSpec::standard_pairing(n))
        fail(errc::bad_input, "unsupported top pairing");
    if (plat.bottom_pairing != PlatSpec::standard_pairing(n) &&
        plat.bottom_pairing != PlatSpec::rotated_pairing(n))
        fail(errc::bad_input, "unsupported bottom pairing");
}

// pairing as a fixed-point-free involution on 0-based positions
std::vector<int> involution(const std::vector<std::pair<int, int>>& pairing, int n) {
    std::vector<int> m(static_cast<size_t>(n), -1);
    for (const auto& [a, b] : pairing) {
        m[static_cast<size_t>(a - 1)] = b - 1;
        m[static_cast<size_t>(b - 1)] = a - 1;
    }
    return m;
}

} // namespace

int plat_components(const PlatSpec& plat) {
    validate_plat(plat);
    const int n = plat.word.strands;

    std::vector<int> at(static_cast<size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    for (int letter : plat.word.letters) {
        const int i = std::abs(letter);
        std::swap(at[static_cast<size_t>(i - 1)], at[static_cast<size_t>(i)]);
    }
    std::vector<int> pi(static_cast<size_t>(n)), pi_inv(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) pi[static_cast<size_t>(at[static_cast<size_t>(j)])] = j;
    for (int p = 0; p < n; ++p) pi_inv[static_cast<size_t>(pi[static_cast<size_t>(p)])] = p;

    const std::vector<int> top = involution(plat.top_pairing, n);
    const std::vector<int> bot = involution(plat.bottom_pairing, n);

    // Orbits of the two cap involutions acting through the braid; the
    // down-across-up-across map splits every component into two cycles.
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int cycles = 0;
    for (int p = 0; p < n; ++p) {
        if (seen[static_cast<size_t>(p)]) continue;
        ++cycles;
        int q = p;
        while (!seen[static_cast<size_t>(q)]) {
            seen[static_cast<size_t>(q)] = true;
            q = top[static_cast<size_t>(
                pi_inv[static_cast<size_t>(bot[static_cast<size_t>(pi[static_cast<size_t>(q)])])])];
        }
    }
    return cycles / 2;
}

Diagram diagram_from_plat(const PlatSpec& plat) {
    validate_plat(plat);
    if (plat_components(plat) != 1)
        fail(errc::not_a_knot, "plat closure has more than one component");

    const braids::BraidWord& w = plat.word;
    const int n = w.strands;
    const int len = static_cast<int>(w.letters.size());
    const std::vector<int> top = involution(plat.top_pairing, n);
    const std::vector<int> bot = involution(plat.bottom_pairing, n);

    struct PassVisit {
        int letter;   // 0-based position in the word
        bool over;
        int tx, ty;   // traversal tangent at the crossing
    };
    std::vector<PassVisit> visits;
    visits.reserve(2 * static_cast<size_t>(len));

    int p = 0;
    bool down = true;
    int guard = 0;
    do {
        if (++guard > n) fail(errc::internal, "plat walk failed to close");
        if (down) {
            for (int l = 0; l < len; ++l) {
                const int letter = w.letters[static_cast<size_t>(l)];
                const int i = std::abs(letter) - 1;
                if (p != i && p != i + 1) continue;
                const bool over = (p == i + 1) == (letter > 0);
                const int exit = (p == i) ? i + 1 : i;
                visits.push_back({l, over, exit - p, -1});
                p = exit;
            }
            p = bot[static_cast<size_t>(p)];
            down = false;
        } else {
            for (int l = len - 1; l >= 0; --l) {
                const int letter = w.letters[static_cast<size_t>(l)];
                const int i = std::abs(letter) - 1;
                if (p != i && p != i + 1) continue;
                const bool over = (p == i) == (letter > 0);
                const int exit = (p == i) ? i + 1 : i;
                visits.push_back({l, over, exit - p, +1});
                p = exit;
            }
            p = top[static_cast<size_t>(p)];
            down = true;
        }
    } while (!(p == 0 && down));

    if (visits.size() != 2 * static_cast<size_t>(len))
        fail(errc::internal, "plat walk missed crossings");

    // sign = sgn(x_over * y_under - y_over * x_under) at each crossing
    std::vector<int> sign(static_cast<size_t>(len), 0);
    std::vector<const PassVisit*> first(static_cast<size_t>(len), nullptr);
    for (const PassVisit& v : visits) {
        const PassVisit*& f = first[static_cast<size_t>(v.letter)];
        if (!f) {
            f = &v;
            continue;
        }
        if (f->over == v.over) fail(errc::internal, "plat crossing lacks an over/under pair");
        const PassVisit& o = f->over ? *f : v;
        const PassVisit& u = f->over ? v : *f;
        const int det = o.tx * u.ty - o.ty * u.tx;
        sign[static_cast<size_t>(v.letter)] = det > 0 ? 1 : -1;
    }

    std::vector<GaussEntry> g;
    g.reserve(visits.size());
    for (const PassVisit& v : visits)
        g.push_back({v.letter + 1, v.over, sign[static_cast<size_t>(v.letter)]});
    return Diagram(std::move(g));
}

// ---- the doubled-arc band shadow ----

namespace {

// Position along the arc, folding the retraced half back: the band runs the
// arc forward on branch (0,1) and backward on (1,2).
Rational fold_branch(const Rational& p) {
    return p < Rational(1) ? p : Rational(2) - p;
}

BandShadow try_band_shadow(int nx, int ny, const Rational& dx, const Rational& dy) {
    BandShadow sh;
    sh.nx = nx;
    sh.ny = ny;
    sh.phx = ExactAngle::number(dx);
    sh.phy = ExactAngle::number(dy);
    sh.crossings = curves::double_points(nx, ny, sh.phx, sh.phy);

    const std::vector<ArcDoublePoint> arc = curves::arc_double_points(nx, ny);
    std::map<std::pair<Rational, Rational>, size_t> arc_by_key;
    for (size_t q = 0; q < arc.size(); ++q) {
        sh.quad_sites.push_back({arc[q], {-1, -1, -1, -1}});
        arc_by_key[{arc[q].t1.pi_part(), arc[q].t2.pi_part()}] = q;
    }
    std::vector<int> filled(arc.size(), 0);

    for (size_t c = 0; c < sh.crossings.size(); ++c) {
        const DoublePoint& dp = sh.crossings[c];
        // Twist slots are the crossings the doubled band picks up where the
        // arc turns around at an interior coordinate extremum.
        const bool x_slot = dp.kind == PointKind::TypeI && dp.j == ny;
        const bool y_slot = dp.kind == PointKind::TypeII && dp.j == nx;
        if (x_slot || y_slot) {
            const int idx = static_cast<int>((x_slot ? nx : ny) - dp.k);
            sh.twist_slots.push_back({x_slot, idx, static_cast<int>(c)});
            continue;
        }
        Rational f1 = fold_branch(dp.t1.pi_part());
        Rational f2 = fold_branch(dp.t2.pi_part());
        if (f2 < f1) std::swap(f1, f2);
        auto it = arc_by_key.find({f1, f2});
        if (it == arc_by_key.end())
            fail(errc::internal, "band crossing matches no arc double point");
        QuadSite& site = sh.quad_sites[it->second];
        if (filled[it->second] >= 4) fail(errc::internal, "band quad overfilled");
        site.members[static_cast<size_t>(filled[it->second]++)] = static_cast<int>(c);
    }

    for (int f : filled)
        if (f != 4) fail(errc::internal, "band quad underfilled");
    if (sh.twist_slots.size() != static_cast<size_t>(nx + ny - 2))
        fail(errc::internal, "unexpected twist slot count");

    std::sort(sh.twist_slots.begin(), sh.twist_slots.end(),
              [](const TwistSlot& a, const TwistSlot& b) {
                  if (a.x_extremum != b.x_extremum) return a.x_extremum;
                  return a.index < b.index;
              });
    return sh;
}

} // namespace

BandShadow band_shadow(int nx, int ny) {
    if (nx < 1 || ny < 1) fail(errc::bad_frequency, "frequencies must be positive");
    if (std::gcd(nx, ny) != 1) fail(errc::non_coprime_frequencies, "frequencies must be coprime");

    // Tiny rational phase perturbations separate the doubled strands; the
    // crossing windows are stable for any choice this small, but keep
    // fallbacks in case a pair degenerates.
    static const std::pair<Rational, Rational> deltas[] = {
        {Rational(1, 512), Rational(1, 997)},
        {Rational(1, 641), Rational(1, 1009)},
        {Rational(1, 743), Rational(1, 887)},
    };
    for (const auto& [dx, dy] : deltas) {
        try {
            return try_band_shadow(nx, ny, dx, dy);
        } catch (const Error& e) {
            if (e.code() != errc::degenerate_projection) throw;
        }
    }
    fail(errc::internal, "all band perturbations degenerate");
}

Diagram assign_twist_crossings(const BandShadow& shadow,
                               const std::vector<bool>& arc_first_over,
                               const CanonicalAlexander& target) {
    if (arc_first_over.size() != shadow.quad_sites.size())
        fail(errc::bad_input, "need one over/under choice per arc double point");

    const size_t total = shadow.crossings.size();
    const long double phx = shadow.phx.value(), phy = shadow.phy.value();

    // Tangent cross product between the two visits; independent of the
    // over/under assignment. The twist-slot values are small (the strands
    // are nearly parallel) but bounded well above this margin for the
    // perturbations band_shadow uses, so this is exact in practice.
    std::vector<int> s12(total, 0);
    for (size_t c = 0; c < total; ++c) {
        const DoublePoint& dp = shadow.crossings[c];
        const long double t1 = dp.t1.value(), t2 = dp.t2.value();
        auto dx = [&](long double t) { return -shadow.nx * std::sin(shadow.nx * t + phx); };
        auto dy = [&](long double t) { return -shadow.ny * std::sin(shadow.ny * t + phy); };
        const long double cross = dx(t1) * dy(t2) - dx(t2) * dy(t1);
        if (std::fabs(cross) < 1e-12L)
            fail(errc::internal, "band tangents too close to parallel");
        s12[c] = cross > 0 ? 1 : -1;
    }

    // Visits in time order, shared by every candidate diagram.
    std::vector<std::pair<int, bool>> order; // (crossing, is second visit)
    order.reserve(2 * total);
    for (size_t c = 0; c < total; ++c) {
        order.push_back({static_cast<int>(c), false});
        order.push_back({static_cast<int>(c), true});
    }
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const ExactAngle& ta = a.second ? shadow.crossings[static_cast<size_t>(a.first)].t2
                                        : shadow.crossings[static_cast<size_t>(a.first)].t1;
        const ExactAngle& tb = b.second ? shadow.crossings[static_cast<size_t>(b.first)].t2
                                        : shadow.crossings[static_cast<size_t>(b.first)].t1;
        return ta < tb;
    });

    // The retraced copy of the arc lies on top of everything it recrosses:
    // its visits are exactly the ones with pi part above 1, and at a mixed
    // crossing the retrace is always the later visit, so "second visit over"
    // (first_over = false) is the resting state of every quad member. Only
    // the member where the arc crosses itself (both visits on the original
    // branch) carries the braid's own over/under choice.
    std::vector<bool> first_over(total, false);
    for (size_t q = 0; q < shadow.quad_sites.size(); ++q) {
        const QuadSite& site = shadow.quad_sites[q];
        int self = -1;
        for (int m : site.members) {
            const DoublePoint& dp = shadow.crossings[static_cast<size_t>(m)];
            if (dp.t1.pi_part() < Rational(1) && dp.t2.pi_part() < Rational(1)) self = m;
        }
        if (self < 0) fail(errc::internal, "quad site has no arc self-crossing member");
        first_over[static_cast<size_t>(self)] = arc_first_over[q];
    }

    auto build = [&](const std::vector<bool>& fo) {
        std::vector<GaussEntry> g;
        g.reserve(order.size());
        for (const auto& [c, second] : order) {
            const bool over = fo[static_cast<size_t>(c)] != second;
            const int sign = fo[static_cast<size_t>(c)] ? s12[static_cast<size_t>(c)]
                                                        : -s12[static_cast<size_t>(c)];
            g.push_back({c + 1, over, sign});
        }
        return Diagram(std::move(g));
    };

    const size_t slots = shadow.twist_slots.size();
    std::vector<std::vector<bool>> tried;
    auto attempt = [&](std::vector<bool>& fo,
                       const std::vector<bool>& slot_bits) -> std::optional<Diagram> {
        for (size_t s = 0; s < slots; ++s)
            fo[static_cast<size_t>(shadow.twist_slots[s].member)] = slot_bits[s];
        Diagram d = build(fo);
        if (invariants::alexander(d) == target) return d;
        return std::nullopt;
    };

    std::vector<bool> fo = first_over;
    // Coherently twisted bands first: all twist crossings of one sign.
    for (int want : {1, -1}) {
        std::vector<bool> bits(slots);
        for (size_t s = 0; s < slots; ++s)
            bits[s] = s12[static_cast<size_t>(shadow.twist_slots[s].member)] == want;
        if (auto d = attempt(fo, bits)) return *d;
        tried.push_back(bits);
    }
    for (unsigned long long m = 0; m < (1ull << slots); ++m) {
        const unsigned long long gray = m ^ (m >> 1);
        std::vector<bool> bits(slots);
        for (size_t s = 0; s < slots; ++s) bits[s] = (gray >> s) & 1ull;
        if (bits == tried[0] || bits == tried[1]) continue;
        if (auto d = attempt(fo, bits)) return *d;
    }
    fail(errc::no_assignment_found, "no twist assignment reaches the target polynomial");
}

} // namespace lissaknot::diagram
