#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lissaknot/cli.hpp"

using lissaknot::cli::run_cli;
using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("analyze text output for a twist family member") {
    const RunResult r = run(
        {"analyze", "--nx", "2", "--ny", "5", "--nz", "19", "--phy", "1/2", "--phz",
         "(19-3*pi)/10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "crossings: 13"));
    CHECK(contains(r.out, "alexander: 2 - 5*t + 2*t^2"));
    CHECK(contains(r.out, "arf: 0"));
    CHECK(contains(r.out, "Twist(4)"));
    CHECK(r.err.empty());
}

TEST_CASE("analyze json output") {
    const RunResult r = run(
        {"analyze", "--nx", "2", "--ny", "5", "--nz", "19", "--phy", "1/2", "--phz",
         "(19-3*pi)/10", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["params"]["nx"] == 2);
    CHECK(j["crossings"] == 13);
    CHECK(j["alexander"]["min_deg"] == 0);
    CHECK(j["alexander"]["coeffs"] == json::array({2, -5, 2}));
    CHECK(j["arf"] == 0);
    CHECK(j["symmetry"]["even_axis"] == 0);
    CHECK(j["symmetry"]["two_periodic_identity"] == true);
    bool twist4 = false;
    for (const auto& name : j["identify"]) twist4 |= (name == "Twist(4)");
    CHECK(twist4);
    CHECK(j["diagram"].contains("gauss"));
}

TEST_CASE("analyze rejects singular phases with exit 2") {
    const RunResult r = run({"analyze", "--nx", "2", "--ny", "3", "--nz", "5", "--phx", "pi/5"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "singular phase"));
    const RunResult c = run({"analyze", "--nx", "2", "--ny", "4", "--nz", "5"});
    CHECK(c.code == 2);
    CHECK(contains(c.err, "coprime"));
}

TEST_CASE("twist subcommand verifies its members") {
    const RunResult m0 = run({"twist", "--m", "0"});
    CHECK(m0.code == 0);
    CHECK(contains(m0.out, "crossings: 1"));
    CHECK(contains(m0.out, "verified: true"));

    const RunResult m2 = run({"twist", "--m", "2", "--json"});
    REQUIRE(m2.code == 0);
    const json j = json::parse(m2.out);
    CHECK(j["crossings"] == 13);
    CHECK(j["alexander_matches"] == true);
    CHECK(j["claims_violations"].empty());
    CHECK(j["arf"] == 0);
    CHECK(j["verified"] == true);

    // odd member: expected polynomial flips to the negative parameter
    const RunResult m3 = run({"twist", "--m", "3"});
    CHECK(m3.code == 0);
    CHECK(contains(m3.out, "alexander: 4 - 7*t + 4*t^2"));
    CHECK(contains(m3.out, "verified: true"));

    // explicit default nz gives the identical result
    const RunResult m1a = run({"twist", "--m", "1"});
    const RunResult m1b = run({"twist", "--m", "1", "--nz", "13"});
    CHECK(m1a.out == m1b.out);
}

TEST_CASE("family subcommand lists safe intervals") {
    const RunResult r = run({"family", "--m", "1", "--nz", "13"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "5 safe phase intervals"));

    const RunResult j = run({"family", "--m", "1", "--nz", "13", "--json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["m"] == 1);
    CHECK(doc["rows"].size() == 5);
    for (const auto& row : doc["rows"]) {
        CHECK(row.contains("interval"));
        CHECK(row.contains("gauss"));
        CHECK(row.contains("alexander"));
    }
}

TEST_CASE("construct two-bridge verifies the trefoil word") {
    const RunResult r = run({"construct", "two-bridge", "--word", "2,2,2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "k: 3"));
    CHECK(contains(r.out, "frequencies: (8, 3)"));
    CHECK(contains(r.out, "alexander: 1 - t + t^2"));
    CHECK(contains(r.out, "verified: true"));

    const RunResult j = run({"construct", "two-bridge", "--word", "2,-1,2,2", "--json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["k"] == 7);
    CHECK(doc["frequencies"] == json::array({16, 3}));
    CHECK(doc["alexander"]["coeffs"] == json::array({1, -3, 1}));
    CHECK(doc["shadow_crossings"] == 2 * 16 * 3 - 16 - 3);
    CHECK(doc["verified"] == true);
}

TEST_CASE("construct two-bridge rejects the link word") {
    const RunResult r = run({"construct", "two-bridge", "--word", "2,1,2,1,2"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "two-component link"));
    const RunResult bad = run({"construct", "two-bridge", "--word", "2,x"});
    CHECK(bad.code == 2);
}

TEST_CASE("construct torus verifies and rejects") {
    const RunResult r = run({"construct", "torus", "--q", "2", "--json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["frequencies"] == json::array({4, 5}));
    CHECK(doc["word"] == json::array({2, 4, 1, 3, 2, 4}));
    CHECK(doc["closure_modified"] == false);
    CHECK(doc["word_form_identity"] == true);
    CHECK(doc["seed_rewrite_alexander_check"] == true);
    CHECK(doc["verified"] == true);

    const RunResult q4 = run({"construct", "torus", "--q", "4"});
    CHECK(q4.code == 0);
    CHECK(contains(q4.out, "frequencies: (17, 5)"));
    CHECK(contains(q4.out, "closure modified: true"));

    const RunResult q3 = run({"construct", "torus", "--q", "3"});
    CHECK(q3.code == 2);
    CHECK(contains(q3.err, "coprime"));
}

TEST_CASE("render writes csv and svg") {
    const std::string csv_path = temp_path("lissaknot_test_render.csv");
    const RunResult c = run({"render", "--nx", "4", "--ny", "3", "--csv", csv_path});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "wrote "));
    std::ifstream f(csv_path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "t,x,y,z");
    int rows = 0;
    for (std::string line; std::getline(f, line);) ++rows;
    CHECK(rows == 2000 * 4);
    std::remove(csv_path.c_str());

    const std::string svg_path = temp_path("lissaknot_test_render.svg");
    const RunResult s = run({"render", "--nx", "4", "--ny", "3", "--svg", svg_path});
    CHECK(s.code == 0);
    std::ifstream g(svg_path);
    REQUIRE(g.good());
    std::stringstream body;
    body << g.rdbuf();
    CHECK(contains(body.str(), "<svg xmlns"));
    CHECK(contains(body.str(), "polyline"));
    std::remove(svg_path.c_str());
}

TEST_CASE("render option validation") {
    CHECK(run({"render", "--nx", "4", "--ny", "3"}).code == 2); // no output chosen
    const std::string p = temp_path("lissaknot_test_render2.csv");
    CHECK(run({"render", "--nx", "2", "--ny", "3", "--nz", "5", "--phx", "pi/5", "--csv", p})
              .code == 2);
    CHECK(run({"render", "--nx", "4", "--ny", "3", "--z2", "5,0", "--csv", p}).code == 2);
    CHECK(run({"render", "--nx", "4", "--ny", "6", "--csv", p}).code == 2);
}

TEST_CASE("cli output is byte deterministic") {
    const std::vector<std::string> args = {"analyze", "--nx", "3",  "--ny",   "4",
                                           "--nz",    "7",  "--phx", "1/3",    "--phy",
                                           "1/5",     "--phz", "1/7", "--json"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("help and parse errors") {
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "analyze"));
    CHECK(contains(help.out, "construct"));

    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"analyze"}).code == 2);            // missing required options
    CHECK(run({"analyze", "--bogus"}).code == 2); // unknown flag
    CHECK(run({"construct"}).code == 2);          // missing sub-subcommand
    CHECK(run({"twist", "--m", "x"}).code == 2);  // non-integer value
}
