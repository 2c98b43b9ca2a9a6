#include "lissaknot/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace lissaknot::invariants {

using diagram::Diagram;
using diagram::GaussEntry;

namespace {

// Full pivoting keeps Bareiss intermediates small: prefer entries with few
// terms and small coefficients.
std::pair<long long, long long> pivot_weight(const LaurentPoly& p) {
    long long terms = 0, maxc = 0;
    for (const auto& [deg, c] : p.coefficients()) {
        ++terms;
        maxc = std::max(maxc, std::llabs(c));
    }
    return {terms, maxc};
}

// Fraction-free determinant of a matrix of integer Laurent polynomials.
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    int flip = 1;
    LaurentPoly prev(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pr = n, pc = n;
        std::pair<long long, long long> best{0, 0};
        for (size_t r = k; r < n; ++r)
            for (size_t c = k; c < n; ++c) {
                if (m[r][c].is_zero()) continue;
                auto w = pivot_weight(m[r][c]);
                if (pr == n || w < best) {
                    best = w;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == n) return LaurentPoly(); // singular
        if (pr != k) {
            std::swap(m[pr], m[k]);
            flip = -flip;
        }
        if (pc != k) {
            for (size_t r = 0; r < n; ++r) std::swap(m[r][pc], m[r][k]);
            flip = -flip;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    return flip > 0 ? det : -det;
}

} // namespace

CanonicalAlexander alexander(const Diagram& d) {
    const int cc = d.crossings();
    if (cc == 0) return CanonicalAlexander();

    const auto& gauss = d.gauss();
    const auto arcs = d.arcs();

    // One relation per crossing: t*x_in - x_out + (1-t)*x_over for positive
    // crossings, x_in - t*x_out + (t-1)*x_over for negative ones. Arcs and
    // crossings both number C; one row and column are dropped.
    struct Site {
        int in_arc = -1, out_arc = -1, over_arc = -1, sign = 0;
    };
    std::map<int, Site> sites;
    for (size_t v = 0; v < gauss.size(); ++v) {
        const GaussEntry& e = gauss[v];
        Site& s = sites[e.id];
        s.sign = e.sign;
        if (e.over) {
            s.over_arc = arcs[v];
        } else {
            s.in_arc = arcs[v];
            s.out_arc = (arcs[v] + 1) % cc;
        }
    }

    const LaurentPoly one(1), t = LaurentPoly::term(1, 1);
    std::vector<std::vector<LaurentPoly>> m(static_cast<size_t>(cc),
                                            std::vector<LaurentPoly>(static_cast<size_t>(cc)));
    size_t row = 0;
    for (const auto& [id, s] : sites) {
        auto& r = m[row++];
        if (s.sign > 0) {
            r[static_cast<size_t>(s.in_arc)] += t;
            r[static_cast<size_t>(s.out_arc)] -= one;
            r[static_cast<size_t>(s.over_arc)] += one - t;
        } else {
            r[static_cast<size_t>(s.in_arc)] += one;
            r[static_cast<size_t>(s.out_arc)] -= t;
            r[static_cast<size_t>(s.over_arc)] += t - one;
        }
    }

    // Minor with the last row and column removed.
    std::vector<std::vector<LaurentPoly>> minor;
    for (int r = 0; r + 1 < cc; ++r)
        minor.emplace_back(m[static_cast<size_t>(r)].begin(),
                           m[static_cast<size_t>(r)].end() - 1);
    LaurentPoly det = bareiss_det(std::move(minor));
    if (det.is_zero())
        fail(errc::not_a_knot, "vanishing Alexander determinant; not a knot diagram");
    return CanonicalAlexander(det);
}

int arf(const CanonicalAlexander& a) {
    const long long v = a.poly().evaluate(-1);
    const long long r = ((v % 8) + 8) % 8;
    if (r % 2 == 0)
        fail(errc::bad_determinant, "knot determinant must be odd");
    return (r == 1 || r == 7) ? 0 : 1;
}

CanonicalAlexander twist_alexander(long long n) {
    LaurentPoly p = LaurentPoly(n) + LaurentPoly::term(-(2 * n + 1), 1) +
                    LaurentPoly::term(n, 2);
    return CanonicalAlexander(p);
}

CanonicalAlexander torus_alexander(int p, int q) {
    if (p < 2 || q < 2) fail(errc::bad_input, "torus indices must be at least 2");
    if (std::gcd(p, q) != 1) fail(errc::not_coprime, "torus indices must be coprime");
    auto cyc = [](int n) { return LaurentPoly::term(1, n) - LaurentPoly(1); };
    const LaurentPoly a = cyc(p * q).divide_exact(cyc(p));
    const LaurentPoly b = a * cyc(1);
    return CanonicalAlexander(b.divide_exact(cyc(q)));
}

SquareWitness is_perfect_square(const CanonicalAlexander& a) {
    const LaurentPoly& p = a.poly();
    if (p.is_zero()) return {true, LaurentPoly()};
    const int d = p.max_deg(); // canonical: min_deg = 0
    if (d % 2 != 0) return {false, LaurentPoly()};
    const long long lc = p.coeff(d);
    if (lc <= 0) return {false, LaurentPoly()};
    const long long s = std::llround(std::sqrt(static_cast<long double>(lc)));
    if (s * s != lc) return {false, LaurentPoly()};

    // g has degree d/2 and leading coefficient s; each next coefficient of
    // p pins the next coefficient of g from the top down.
    const int h = d / 2;
    std::vector<long long> g(static_cast<size_t>(h) + 1, 0);
    g[static_cast<size_t>(h)] = s;
    for (int k = 1; k <= h; ++k) {
        // coefficient of t^{d-k} in g*g
        long long known = 0;
        for (int i = 1; i < k; ++i) {
            const int jj = h - (k - i);
            known += g[static_cast<size_t>(h - i)] * g[static_cast<size_t>(jj)];
        }
        const long long rhs = p.coeff(d - k) - known;
        if (rhs % (2 * s) != 0) return {false, LaurentPoly()};
        g[static_cast<size_t>(h - k)] = rhs / (2 * s);
    }
    LaurentPoly root;
    for (int i = 0; i <= h; ++i) root += LaurentPoly::term(g[static_cast<size_t>(i)], i);
    if (root * root != p) return {false, LaurentPoly()};
    return {true, root};
}

bool is_square_mod2(const CanonicalAlexander& a) {
    std::vector<int> odd_degrees;
    for (const auto& [deg, c] : a.poly().coefficients())
        if (c % 2 != 0) odd_degrees.push_back(deg);
    if (odd_degrees.empty()) return true;
    const int base = odd_degrees.front();
    for (int deg : odd_degrees)
        if ((deg - base) % 2 != 0) return false;
    return true;
}

std::string KnotId::str() const {
    switch (kind) {
    case Kind::Twist:
        return "Twist(" + std::to_string(m) + ")";
    case Kind::Torus:
        return "Torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
    default:
        return "Unknot";
    }
}

std::vector<KnotId> identify(const CanonicalAlexander& a) {
    std::vector<KnotId> out;
    if (a == CanonicalAlexander()) out.push_back({KnotId::Kind::Unknot, 0, 0, 0});
    for (long long n = -64; n <= 64; ++n) {
        if (n == 0) continue;
        if (twist_alexander(n) == a) out.push_back({KnotId::Kind::Twist, 2 * n, 0, 0});
    }
    for (int pq = 6; pq <= 64; ++pq)
        for (int p = 2; p * p < pq; ++p) {
            if (pq % p != 0) continue;
            const int q = pq / p;
            if (std::gcd(p, q) != 1) continue;
            if (torus_alexander(p, q) == a) out.push_back({KnotId::Kind::Torus, 0, p, q});
        }
    return out;
}

// ---- braid equality via the free-group action ----

namespace {

using Word = std::vector<int>; // letters +-g, freely reduced

void push_letter(Word& w, int letter) {
    if (!w.empty() && w.back() == -letter)
        w.pop_back();
    else
        w.push_back(letter);
}

void push_word(Word& w, const Word& v) {
    for (int l : v) push_letter(w, l);
}

void push_inverse(Word& w, const Word& v) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) push_letter(w, -*it);
}

std::vector<Word> artin_images(const braids::BraidWord& w, int strands) {
    std::vector<Word> img(static_cast<size_t>(strands));
    for (int i = 0; i < strands; ++i) img[static_cast<size_t>(i)] = {i + 1};
    size_t total = static_cast<size_t>(strands);
    for (int letter : w.letters) {
        const size_t a = static_cast<size_t>(std::abs(letter) - 1), b = a + 1;
        Word na, nb;
        if (letter > 0) {
            // x_a -> x_a x_b x_a^{-1},  x_b -> x_a
            push_word(na, img[a]);
            push_word(na, img[b]);
            push_inverse(na, img[a]);
            nb = img[a];
        } else {
            // x_a -> x_b,  x_b -> x_b^{-1} x_a x_b
            na = img[b];
            push_inverse(nb, img[b]);
            push_word(nb, img[a]);
            push_word(nb, img[b]);
        }
        total -= img[a].size() + img[b].size();
        img[a] = std::move(na);
        img[b] = std::move(nb);
        total += img[a].size() + img[b].size();
        if (total > 20'000'000)
            fail(errc::overflow, "free-group images grew too large");
    }
    return img;
}

} // namespace

bool braid_equal(const braids::BraidWord& a, const braids::BraidWord& b) {
    a.validate();
    b.validate();
    const int strands = std::max(a.strands, b.strands);
    return artin_images(a, strands) == artin_images(b, strands);
}

} // namespace lissaknot::invariants
