#include "lissaknot/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lissaknot/braids.hpp"
#include "lissaknot/curves.hpp"
#include "lissaknot/diagram.hpp"
#include "lissaknot/invariants.hpp"
#include "lissaknot/phase_parse.hpp"
#include "lissaknot/render.hpp"

namespace lissaknot::cli {

namespace {

using nlohmann::ordered_json;

ordered_json alex_json(const CanonicalAlexander& a) {
    ordered_json j;
    j["min_deg"] = 0;
    j["coeffs"] = a.coeffs();
    return j;
}

std::string fmt_dev(long double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.3Le", v);
    return b;
}

ordered_json sym_json(const curves::SymmetryReport& r) {
    ordered_json j;
    j["all_odd"] = r.all_odd;
    j["even_axis"] = r.even_axis;
    j["amphicheiral_identity"] = r.amphicheiral_identity;
    j["two_periodic_identity"] = r.two_periodic_identity;
    j["max_deviation"] = fmt_dev(r.max_deviation);
    if (r.axis_winding)
        j["axis_winding"] = *r.axis_winding;
    else
        j["axis_winding"] = nullptr;
    return j;
}

std::string sym_text(const curves::SymmetryReport& r) {
    std::string s;
    if (r.all_odd)
        s = std::string("all-odd point symmetry: ") +
            (r.amphicheiral_identity ? "holds" : "FAILS");
    else
        s = std::string("two-periodic symmetry about axis ") + "xyz"[r.even_axis] +
            std::string(": ") + (r.two_periodic_identity ? "holds" : "FAILS");
    s += " (max deviation " + fmt_dev(r.max_deviation) + ")";
    if (r.axis_winding) s += ", axis winding " + std::to_string(*r.axis_winding);
    return s;
}

std::vector<std::string> id_names(const CanonicalAlexander& a) {
    std::vector<std::string> v;
    for (const auto& k : invariants::identify(a)) v.push_back(k.str());
    return v;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

diagram::Diagram diagram_of(const curves::Traversal& tr) {
    return tr.order.empty() ? diagram::Diagram::unknot()
                            : diagram::diagram_from_crossings(tr);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    size_t i = 0;
    while (i <= text.size()) {
        const size_t j = std::min(text.find(',', i), text.size());
        try {
            size_t used = 0;
            const std::string item = text.substr(i, j - i);
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(errc::bad_input, "expected a comma-separated integer list");
        }
        i = j + 1;
    }
    return out;
}

struct AnalyzeArgs {
    int nx = 0, ny = 0, nz = 0;
    std::string phx = "0", phy = "0", phz = "0";
    bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    curves::LissajousParams p;
    p.nx = a.nx;
    p.ny = a.ny;
    p.nz = a.nz;
    p.phx = parse_phase(a.phx);
    p.phy = parse_phase(a.phy);
    p.phz = parse_phase(a.phz);

    const curves::Traversal tr = curves::build_crossings(p);
    const diagram::Diagram d = diagram_of(tr);
    const CanonicalAlexander delta = invariants::alexander(d);
    const int arf = invariants::arf(delta);
    const curves::SymmetryReport sym = curves::symmetry_check(p);

    if (a.json) {
        ordered_json j;
        j["params"] = {{"nx", p.nx},       {"ny", p.ny},       {"nz", p.nz},
                       {"phx", p.phx.str()}, {"phy", p.phy.str()}, {"phz", p.phz.str()}};
        j["crossings"] = d.crossings();
        j["diagram"] = ordered_json::parse(d.to_json());
        j["alexander"] = alex_json(delta);
        j["arf"] = arf;
        j["symmetry"] = sym_json(sym);
        j["identify"] = id_names(delta);
        out << j.dump(2) << "\n";
    } else {
        out << "nx=" << p.nx << " ny=" << p.ny << " nz=" << p.nz << "\n";
        out << "phx=" << p.phx.str() << " phy=" << p.phy.str() << " phz=" << p.phz.str()
            << "\n";
        out << "crossings: " << d.crossings() << "\n";
        out << "alexander: " << delta.str() << "\n";
        out << "arf: " << arf << "\n";
        out << "symmetry: " << sym_text(sym) << "\n";
        out << "identify: " << join(id_names(delta), ", ") << "\n";
        out << "gauss: " << d.to_json() << "\n";
    }
    return 0;
}

struct TwistArgs {
    int m = 0;
    std::optional<int> nz;
    bool json = false;
};

int cmd_twist(const TwistArgs& a, std::ostream& out) {
    const curves::LissajousParams p =
        a.nz ? curves::twist_params(a.m, *a.nz) : curves::twist_params(a.m);
    const curves::Traversal tr = curves::build_crossings(p);
    const diagram::Diagram d = diagram_of(tr);
    const CanonicalAlexander delta = invariants::alexander(d);
    const CanonicalAlexander expected = a.m % 2 == 0
                                            ? invariants::twist_alexander(a.m)
                                            : invariants::twist_alexander(-(a.m + 1));
    const std::vector<std::string> violations = curves::family_claims_check(a.m, tr);
    const int arf = invariants::arf(delta);
    const bool ok = delta == expected && violations.empty() && arf == 0;

    if (a.json) {
        ordered_json j;
        j["params"] = {{"nx", p.nx},       {"ny", p.ny},       {"nz", p.nz},
                       {"phx", p.phx.str()}, {"phy", p.phy.str()}, {"phz", p.phz.str()}};
        j["crossings"] = d.crossings();
        j["alexander"] = alex_json(delta);
        j["expected_alexander"] = alex_json(expected);
        j["alexander_matches"] = (delta == expected);
        j["claims_violations"] = violations;
        j["arf"] = arf;
        j["verified"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "m=" << a.m << " nx=" << p.nx << " ny=" << p.ny << " nz=" << p.nz
            << " phz=" << p.phz.str() << "\n";
        out << "crossings: " << d.crossings() << "\n";
        out << "alexander: " << delta.str() << "\n";
        out << "expected:  " << expected.str() << "\n";
        out << "claims: " << (violations.empty() ? "ok" : join(violations, "; ")) << "\n";
        out << "arf: " << arf << "\n";
        out << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

struct FamilyArgs {
    int m = 0, nz = 0;
    bool json = false;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
    const auto intervals = curves::family_phase_intervals(a.m, a.nz);
    ordered_json rows = ordered_json::array();
    std::string text;
    for (size_t i = 0; i < intervals.size(); ++i) {
        curves::LissajousParams p = curves::twist_params(a.m, a.nz);
        p.phz = intervals[i].mid;
        const curves::Traversal tr = curves::build_crossings(p);
        const diagram::Diagram d = diagram_of(tr);
        const CanonicalAlexander delta = invariants::alexander(d);
        const int arf = invariants::arf(delta);
        const auto names = id_names(delta);
        if (a.json) {
            ordered_json row;
            row["interval"] = {intervals[i].lo.str(), intervals[i].mid.str(),
                               intervals[i].hi.str()};
            row["gauss"] = ordered_json::parse(d.to_json())["gauss"];
            row["alexander"] = alex_json(delta);
            row["arf"] = arf;
            row["identify"] = names;
            rows.push_back(row);
        } else {
            text += "interval " + std::to_string(i) + ": phz in (" + intervals[i].lo.str() +
                    ", " + intervals[i].hi.str() + "), sampled at " + intervals[i].mid.str() +
                    "\n";
            text += "  alexander: " + delta.str() + "  arf: " + std::to_string(arf) +
                    "  identify: " + join(names, ", ") + "\n";
            text += "  gauss: " + d.to_json() + "\n";
        }
    }
    if (a.json) {
        ordered_json j;
        j["m"] = a.m;
        j["nz"] = a.nz;
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    } else {
        out << "m=" << a.m << " nz=" << a.nz << ": " << intervals.size()
            << " safe phase intervals\n"
            << text;
    }
    return 0;
}

struct TwoBridgeArgs {
    std::string word;
    bool json = false;
};

int cmd_two_bridge(const TwoBridgeArgs& a, std::ostream& out) {
    const std::vector<int> letters = parse_int_list(a.word);
    const braids::BraidWord input(3, letters);
    const braids::TwoBridgeResult res = braids::two_bridge_pipeline(input);

    // The target polynomial comes from the input's own plat diagram.
    braids::BraidWord on4;
    on4.strands = 4;
    on4.letters = letters;
    const CanonicalAlexander target =
        invariants::alexander(diagram::diagram_from_plat(diagram::PlatSpec::standard(on4)));

    const std::vector<bool> flags = braids::arc_over_flags(res.reduced, res.nx, res.ny);
    const diagram::Diagram final_diag =
        diagram::assign_twist_crossings(res.shadow, flags, target);
    const bool ok = invariants::alexander(final_diag) == target;

    if (a.json) {
        ordered_json j;
        j["input"] = letters;
        j["k"] = res.k;
        j["frequencies"] = {res.nx, res.ny};
        j["reduced"] = res.reduced.letters;
        j["shadow_crossings"] = res.shadow.crossings.size();
        j["alexander"] = alex_json(target);
        j["verified"] = ok;
        j["diagram"] = ordered_json::parse(final_diag.to_json());
        out << j.dump(2) << "\n";
    } else {
        out << "input: " << input.str() << "\n";
        out << "k: " << res.k << "\n";
        out << "frequencies: (" << res.nx << ", " << res.ny << ")\n";
        out << "reduced word: " << res.reduced.str() << "\n";
        out << "shadow crossings: " << res.shadow.crossings.size() << "\n";
        out << "alexander: " << target.str() << "\n";
        out << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

struct TorusArgs {
    int q = 0;
    bool json = false;
};

int cmd_torus(const TorusArgs& a, std::ostream& out) {
    const braids::TorusResult res = braids::torus_pipeline(a.q);
    const bool word_identity =
        res.word == braids::lissajous_projection_word(res.fx, 5);

    const CanonicalAlexander closed_form = invariants::torus_alexander(3, a.q);
    const CanonicalAlexander seed_delta = invariants::alexander(
        diagram::diagram_from_plat(diagram::PlatSpec::standard(braids::torus_seed(a.q))));
    const CanonicalAlexander rewrite_delta = invariants::alexander(diagram::diagram_from_plat(
        diagram::PlatSpec::standard(braids::torus_seed_rewrite(a.q))));
    const bool plat_check = seed_delta == closed_form && rewrite_delta == closed_form;
    const bool ok = word_identity && plat_check;

    if (a.json) {
        ordered_json j;
        j["q"] = a.q;
        j["frequencies"] = {res.fx, res.fy};
        j["word"] = res.word.letters;
        j["closure_modified"] = res.closure_modified;
        j["word_form_identity"] = word_identity;
        j["alexander"] = alex_json(closed_form);
        j["seed_rewrite_alexander_check"] = plat_check;
        j["verified"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "q: " << a.q << "\n";
        out << "frequencies: (" << res.fx << ", " << res.fy << ")\n";
        out << "word: " << res.word.str() << "\n";
        out << "closure modified: " << (res.closure_modified ? "true" : "false") << "\n";
        out << "word-form identity: " << (word_identity ? "true" : "false") << "\n";
        out << "alexander: " << closed_form.str() << "\n";
        out << "seed/rewrite plat alexander check: " << (plat_check ? "pass" : "fail")
            << "\n";
        out << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

struct RenderArgs {
    int nx = 0, ny = 0;
    std::string phx = "0", phy = "0", phz = "0";
    bool phases_given = false;
    std::optional<int> nz;
    std::string z2;
    bool arc = false;
    std::string svg_path, csv_path;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
    if (a.svg_path.empty() == a.csv_path.empty())
        fail(errc::bad_input, "choose exactly one of --svg or --csv");

    render::RenderOptions opt;
    opt.nx = a.nx;
    opt.ny = a.ny;
    opt.phx = parse_phase(a.phx);
    opt.phy = parse_phase(a.phy);
    opt.arc = a.arc;
    opt.generic_phases = !a.arc && !a.phases_given;
    if (a.nz) {
        opt.nz = *a.nz;
        opt.phz = parse_phase(a.phz);
        curves::LissajousParams p;
        p.nx = a.nx;
        p.ny = a.ny;
        p.nz = *a.nz;
        p.phx = opt.phx;
        p.phy = opt.phy;
        p.phz = opt.phz;
        const auto v = curves::validate_params(p);
        if (!v.valid) fail(errc::singular_phase, v.reason);
    } else if (!a.z2.empty()) {
        const size_t c1 = a.z2.find(',');
        const size_t c2 = c1 == std::string::npos ? c1 : a.z2.find(',', c1 + 1);
        const size_t c3 = c2 == std::string::npos ? c2 : a.z2.find(',', c2 + 1);
        if (c3 == std::string::npos || a.z2.find(',', c3 + 1) != std::string::npos)
            fail(errc::bad_input, "--z2 expects n3,phi3,n4,phi4");
        render::SecondOrderZ z;
        try {
            z.n3 = std::stoi(a.z2.substr(0, c1));
            z.n4 = std::stoi(a.z2.substr(c2 + 1, c3 - c2 - 1));
        } catch (const std::exception&) {
            fail(errc::bad_input, "--z2 expects integer frequencies");
        }
        z.phi3 = parse_phase(a.z2.substr(c1 + 1, c2 - c1 - 1)).value();
        z.phi4 = parse_phase(a.z2.substr(c3 + 1)).value();
        opt.z2 = z;
    }

    const std::string path = a.svg_path.empty() ? a.csv_path : a.svg_path;
    const std::string body =
        a.svg_path.empty() ? render::render_csv(opt) : render::render_svg(opt);
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(errc::bad_input, "cannot open output path " + path);
    f << body;
    f.close();
    if (!f) fail(errc::bad_input, "failed writing " + path);
    out << "wrote " << path << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lissajous knot projections, invariants, and constructions"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze = app.add_subcommand("analyze", "invariants of a Lissajous knot");
    analyze->add_option("--nx", aa.nx, "x frequency")->required();
    analyze->add_option("--ny", aa.ny, "y frequency")->required();
    analyze->add_option("--nz", aa.nz, "z frequency")->required();
    analyze->add_option("--phx", aa.phx, "x phase, e.g. 0, 1/2, (19-3*pi)/10");
    analyze->add_option("--phy", aa.phy, "y phase");
    analyze->add_option("--phz", aa.phz, "z phase");
    analyze->add_flag("--json", aa.json, "JSON output");

    TwistArgs ta;
    CLI::App* twist = app.add_subcommand("twist", "twist-knot family member and checks");
    twist->add_option("--m", ta.m, "family index, m >= 0")->required();
    int twist_nz = 0;
    CLI::Option* twist_nz_opt = twist->add_option("--nz", twist_nz, "z frequency override");
    twist->add_flag("--json", ta.json, "JSON output");

    FamilyArgs fa;
    CLI::App* family = app.add_subcommand("family", "safe z-phase intervals and invariants");
    family->add_option("--m", fa.m, "family index")->required();
    family->add_option("--nz", fa.nz, "z frequency")->required();
    family->add_flag("--json", fa.json, "JSON output");

    CLI::App* construct = app.add_subcommand("construct", "projection construction pipelines");
    construct->require_subcommand(1);
    TwoBridgeArgs ba;
    CLI::App* twob = construct->add_subcommand("two-bridge",
                                               "3-strand plat word to Lissajous projection");
    twob->add_option("--word", ba.word, "signed letters, e.g. 2,2,2")->required();
    twob->add_flag("--json", ba.json, "JSON output");
    TorusArgs oa;
    CLI::App* torus = construct->add_subcommand("torus", "(3,q) torus knot projection");
    torus->add_option("--q", oa.q, "torus parameter, coprime to 3")->required();
    torus->add_flag("--json", oa.json, "JSON output");

    RenderArgs ra;
    CLI::App* rend = app.add_subcommand("render", "SVG or CSV of the x-y projection");
    rend->add_option("--nx", ra.nx, "x frequency")->required();
    rend->add_option("--ny", ra.ny, "y frequency")->required();
    CLI::Option* rend_phx = rend->add_option("--phx", ra.phx, "x phase");
    CLI::Option* rend_phy = rend->add_option("--phy", ra.phy, "y phase");
    int render_nz = 0;
    CLI::Option* render_nz_opt = rend->add_option("--nz", render_nz, "z frequency");
    rend->add_option("--phz", ra.phz, "z phase");
    rend->add_option("--z2", ra.z2, "second-order height n3,phi3,n4,phi4");
    rend->add_flag("--arc", ra.arc, "zero-phase half-period arc");
    rend->add_option("--svg", ra.svg_path, "SVG output path");
    rend->add_option("--csv", ra.csv_path, "CSV output path");

    std::vector<const char*> argv;
    argv.push_back("lissaknot");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    if (twist_nz_opt->count()) ta.nz = twist_nz;
    if (render_nz_opt->count()) ra.nz = render_nz;

    try {
        if (analyze->parsed()) return cmd_analyze(aa, out);
        if (twist->parsed()) return cmd_twist(ta, out);
        if (family->parsed()) return cmd_family(fa, out);
        if (construct->parsed()) {
            if (twob->parsed()) return cmd_two_bridge(ba, out);
            if (torus->parsed()) return cmd_torus(oa, out);
        }
        if (rend->parsed()) {
            ra.phases_given = rend_phx->count() > 0 || rend_phy->count() > 0;
            return cmd_render(ra, out);
        }
        err << "error: no command selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.category() == err_category::invalid_input ? 2 : 1;
    }
}

} // namespace lissaknot::cli
