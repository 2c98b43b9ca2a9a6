#include "lissaknot/braids.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>

#include "lissaknot/invariants.hpp"

namespace lissaknot::braids {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace

std::string BraidWord::str() const { return int_list(letters); }
std::string ProjectionWord::str() const { return int_list(letters); }

ProjectionWord projection_of(const BraidWord& w) {
    w.validate();
    ProjectionWord p;
    p.strands = w.strands;
    p.letters.reserve(w.letters.size());
    for (int l : w.letters) p.letters.push_back(std::abs(l));
    return p;
}

ProjectionWord lissajous_projection_word(int nx, int ny) {
    if (nx < 1 || ny < 2) fail(errc::bad_input, "frequencies must satisfy nx >= 1, ny >= 2");
    if (std::gcd(nx, ny) != 1) fail(errc::not_coprime, "frequencies must be coprime");

    std::vector<int> even, odd;
    for (int i = 2; i < ny; i += 2) even.push_back(i);
    for (int i = 1; i < ny; i += 2) odd.push_back(i);

    std::vector<int> out;
    auto app = [&out](const std::vector<int>& blk) {
        out.insert(out.end(), blk.begin(), blk.end());
    };
    if (nx % 2 == 0) {
        app(even);
        for (int r = 0; r < nx / 2 - 1; ++r) {
            app(odd);
            app(even);
        }
    } else if (ny % 2 == 0) {
        for (int r = 0; r < (nx - 1) / 2; ++r) {
            app(odd);
            app(even);
        }
    } else {
        for (int r = 0; r < (nx - 1) / 2; ++r) {
            app(even);
            app(odd);
        }
    }
    if (out.size() != static_cast<size_t>((nx - 1) * (ny - 1) / 2))
        fail(errc::internal, "projection word length mismatch");
    return ProjectionWord(ny, std::move(out));
}

BraidWord first_replacement(const BraidWord& w, size_t pos, Side side) {
    w.validate();
    if (pos + 1 >= w.letters.size())
        fail(errc::bad_input, "replacement position needs two letters");
    const int l1 = w.letters[pos], l2 = w.letters[pos + 1];
    const int i = std::abs(l1);
    if (std::abs(l2) != i)
        fail(errc::not_a_double_letter, "letters at the position differ in index");
    const int e1 = l1 > 0 ? 1 : -1, e2 = l2 > 0 ? 1 : -1;

    int o = 0;
    if (side == Side::Left) {
        if (i < 2) fail(errc::index_out_of_range, "no generator below index 1");
        o = i - 1;
    } else {
        if (i > w.strands - 2) fail(errc::index_out_of_range, "no generator above the top index");
        o = i + 1;
    }

    BraidWord out;
    out.strands = w.strands;
    const auto at = w.letters.begin() + static_cast<std::ptrdiff_t>(pos);
    out.letters.assign(w.letters.begin(), at);
    for (int l : {-o, -i, e1 * o, i, o, e2 * i}) out.letters.push_back(l);
    out.letters.insert(out.letters.end(), at + 2, w.letters.end());
    return out;
}

BraidWord alternate_3braid(const BraidWord& w) {
    if (w.strands != 3) fail(errc::bad_input, "expected a 3-strand braid");
    w.validate();
    BraidWord cur;
    cur.strands = 3;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        cur.letters.insert(cur.letters.begin(), *it);
        if (cur.letters.size() >= 2 && std::abs(cur.letters[0]) == std::abs(cur.letters[1])) {
            // a front collision always resolves in one replacement: the
            // 6-letter block alternates and ends compatibly with the rest
            cur = first_replacement(cur, 0, std::abs(*it) == 1 ? Side::Right : Side::Left);
        }
    }
    return cur;
}

namespace {

void check_torus_q(int q) {
    if (q < 2) fail(errc::bad_input, "q must be at least 2");
    if (q % 3 == 0) fail(errc::not_coprime, "q must be coprime to 3");
}

} // namespace

BraidWord torus_seed(int q) {
    check_torus_q(q);
    BraidWord w;
    w.strands = 6;
    w.letters.push_back(2);
    for (int r = 0; r < q; ++r) {
        w.letters.push_back(4);
        w.letters.push_back(3);
    }
    w.letters.push_back(-2);
    return w;
}

// Pulls the straight left string of the seed across to the right.  The sign
// of the opening letter is forced by requiring the plat closure to stay the
// (3,q)-torus knot, checked for q up to 10 in the tests.
BraidWord torus_seed_rewrite(int q) {
    check_torus_q(q);
    BraidWord w;
    w.strands = 6;
    w.letters = {2, 4, 1, -3, 2, -4};
    for (int r = 0; r < q - 1; ++r) {
        w.letters.push_back(3);
        w.letters.push_back(2);
    }
    for (int l : {4, 3, 1, 2}) w.letters.push_back(l);
    return w;
}

RewriteResult shadow_rewrites(const ProjectionWord& p, RewriteRule rule) {
    p.validate();
    if (p.strands != 5) fail(errc::bad_input, "rewrites act on 5-strand projection words");
    std::vector<int> ls = p.letters;
    RewriteResult res;

    if (rule == RewriteRule::Lift3n) {
        // longest run of (s3 sX) pairs, X fixed within the run, earliest on a tie
        size_t best_start = 0, best_pairs = 0;
        for (size_t s = 0; s + 1 < ls.size(); ++s) {
            if (ls[s] != 3) continue;
            const int x = ls[s + 1];
            if (x != 2 && x != 4) continue;
            size_t pairs = 0, t = s;
            while (t + 1 < ls.size() && ls[t] == 3 && ls[t + 1] == x) {
                ++pairs;
                t += 2;
            }
            if (pairs > best_pairs) {
                best_pairs = pairs;
                best_start = s;
            }
        }
        const size_t n = best_pairs / 3;
        if (n == 0) {
            res.word = p;
            return res;
        }
        std::vector<int> out(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(best_start));
        for (size_t r = 0; r < 5 * n; ++r)
            for (int l : {1, 3, 2, 4}) out.push_back(l);
        out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(best_start + 6 * n),
                   ls.end());
        res.word = ProjectionWord(5, std::move(out));
        return res;
    }

    const std::vector<int> pat =
        rule == RewriteRule::ClaspSlide ? std::vector<int>{3, 4, 3, 2} : std::vector<int>{4, 3, 1, 2};
    if (ls.size() < 4 || !std::equal(pat.begin(), pat.end(), ls.end() - 4))
        fail(errc::pattern_not_found, "required suffix not present");
    ls.erase(ls.end() - 4, ls.end());
    if (rule == RewriteRule::ClaspSlide) {
        for (int l : {1, 3, 2, 4}) ls.push_back(l);
    } else {
        for (int l : {1, 3, 2, 4, 1, 3}) ls.push_back(l);
        res.closure_modified = true;
    }
    res.word = ProjectionWord(5, std::move(ls));
    return res;
}

TorusResult torus_pipeline(int q) {
    check_torus_q(q);
    TorusResult res;

    auto as_5strand = [](const BraidWord& w) {
        std::vector<int> ls;
        ls.reserve(w.letters.size());
        for (int l : w.letters) ls.push_back(std::abs(l));
        return ProjectionWord(5, std::move(ls));
    };

    if (q % 3 == 1) {
        const int n = (q - 1) / 3;
        const RewriteResult lifted =
            shadow_rewrites(as_5strand(torus_seed_rewrite(q)), RewriteRule::Lift3n);
        const RewriteResult fin = shadow_rewrites(lifted.word, RewriteRule::EndSlide);
        res.fx = 10 * n + 7;
        res.word = fin.word;
        res.closure_modified = fin.closure_modified;
    } else {
        const int n = (q - 2) / 3;
        const RewriteResult lifted =
            shadow_rewrites(as_5strand(torus_seed(q)), RewriteRule::Lift3n);
        const RewriteResult fin = shadow_rewrites(lifted.word, RewriteRule::ClaspSlide);
        res.fx = 10 * n + 4;
        res.word = fin.word;
        res.closure_modified = fin.closure_modified;
    }

    if (std::gcd(res.fx, 5) != 1 || res.word != lissajous_projection_word(res.fx, 5))
        fail(errc::internal, "rewritten word does not match the closed form");
    return res;
}

// ---- signed template search ----

namespace {

using Mat = std::vector<long long>; // n*n, row-major

Mat identity_mat(int n) {
    Mat m(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i * n + i)] = 1;
    return m;
}

// unreduced Burau at t = -1: sigma_i acts on coordinates (i-1, i) by
// [[2,-1],[1,0]], its inverse by [[0,1],[-1,2]].
void apply_letter(Mat& m, int n, int letter) {
    const int a = std::abs(letter) - 1, b = a + 1;
    long long p00, p01, p10, p11;
    if (letter > 0) {
        p00 = 2, p01 = -1, p10 = 1, p11 = 0;
    } else {
        p00 = 0, p01 = 1, p10 = -1, p11 = 2;
    }
    // m <- m * P where P differs from identity in columns a,b
    for (int r = 0; r < n; ++r) {
        long long& ma = m[static_cast<size_t>(r * n + a)];
        long long& mb = m[static_cast<size_t>(r * n + b)];
        const long long va = ma, vb = mb;
        ma = va * p00 + vb * p10;
        mb = va * p01 + vb * p11;
    }
}

Mat word_matrix(const std::vector<int>& letters, int n) {
    Mat m = identity_mat(n);
    for (int l : letters) apply_letter(m, n, l);
    return m;
}

} // namespace

std::optional<BraidWord> lift_template_search(const BraidWord& block) {
    block.validate();
    if (block.letters.size() != 6) fail(errc::bad_input, "block must have six letters");
    int x = 0;
    for (size_t j = 0; j < 6; ++j) {
        const int idx = std::abs(block.letters[j]);
        if (j % 2 == 0) {
            if (idx != 3) fail(errc::bad_input, "block projection must be (s3 sX)^3");
        } else {
            if (x == 0 && (idx == 2 || idx == 4)) x = idx;
            if (idx != x) fail(errc::bad_input, "block projection must be (s3 sX)^3");
        }
    }
    const int n = std::max(block.strands, 5);

    // cache key: strand count, companion index, the six signs
    int key = n * 1024 + x * 128;
    for (size_t j = 0; j < 6; ++j)
        if (block.letters[j] < 0) key |= 1 << j;
    static std::map<int, std::optional<BraidWord>> cache;
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<int> target; // projection (s1 s3 s2 s4)^5
    for (int r = 0; r < 5; ++r)
        for (int l : {1, 3, 2, 4}) target.push_back(l);

    auto signed_letters = [&target](unsigned prefix_bits, unsigned suffix_bits) {
        // bit 9-j of prefix_bits is the sign of letter j, so ascending
        // integers enumerate sign patterns lexicographically (+ first)
        std::vector<int> ls(20);
        for (int j = 0; j < 10; ++j)
            ls[static_cast<size_t>(j)] =
                (prefix_bits >> (9 - j)) & 1u ? -target[static_cast<size_t>(j)]
                                              : target[static_cast<size_t>(j)];
        for (int j = 0; j < 10; ++j)
            ls[static_cast<size_t>(10 + j)] =
                (suffix_bits >> (9 - j)) & 1u ? -target[static_cast<size_t>(10 + j)]
                                              : target[static_cast<size_t>(10 + j)];
        return ls;
    };

    // meet in the middle: suffix products by matrix, then scan prefixes
    std::map<Mat, std::vector<unsigned>> by_suffix;
    for (unsigned s = 0; s < 1u << 10; ++s) {
        std::vector<int> ls = signed_letters(0, s);
        ls.erase(ls.begin(), ls.begin() + 10);
        by_suffix[word_matrix(ls, n)].push_back(s);
    }

    const Mat m_block = word_matrix(block.letters, n);
    std::optional<BraidWord> found;
    for (unsigned p = 0; p < 1u << 10 && !found; ++p) {
        std::vector<int> ls = signed_letters(p, 0);
        ls.resize(10);
        // needed suffix matrix: prefix^{-1} * m_block
        Mat inv = identity_mat(n);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) apply_letter(inv, n, -*it);
        Mat need = identity_mat(n);
        // need = inv * m_block
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                long long acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += inv[static_cast<size_t>(r * n + k)] *
                           m_block[static_cast<size_t>(k * n + c)];
                need[static_cast<size_t>(r * n + c)] = acc;
            }
        auto it = by_suffix.find(need);
        if (it == by_suffix.end()) continue;
        for (unsigned s : it->second) {
            BraidWord cand;
            cand.strands = n;
            cand.letters = signed_letters(p, s);
            if (invariants::braid_equal(cand, block)) {
                found = std::move(cand);
                break;
            }
        }
    }
    cache[key] = found;
    return found;
}

} // namespace lissaknot::braids
