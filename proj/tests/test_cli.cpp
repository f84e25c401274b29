#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef GKM_CLI_PATH
#error "GKM_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    std::string cmd = std::string(GKM_CLI_PATH) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// The documented two-point example graph, vertices "0" and "inf".
void write_p1(const std::string& path) {
    write_file(path, R"({
      "torus_rank": 1,
      "vertices": ["0", "inf"],
      "edges": [{"ends": ["0", "inf"], "character": [1]}],
      "loops": [],
      "surface_relations": [],
      "weyl": null
    })");
}

} // namespace

TEST_CASE("catalog emit plus hilbert prints the ruled-surface table") {
    RunResult emit = run("catalog hirzebruch --n 2 --emit cli_fn.json");
    REQUIRE(emit.code == 0);
    CHECK(!slurp("cli_fn.json").empty());
    CHECK(!slurp("cli_fn.golden.json").empty()); // sibling golden data

    RunResult h = run("hilbert cli_fn.json --max-degree 3");
    REQUIRE(h.code == 0);
    CHECK(first_line(h.out) == "1 3 4 4");
    CHECK(contains(h.out, "max degree: 3"));
}

TEST_CASE("missing input file exits 1 with a diagnostic") {
    RunResult r = run("hilbert cli_missing_file.json");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "file not found"));
    CHECK(r.out.empty());
}

TEST_CASE("malformed and invalid graphs exit 1") {
    write_file("cli_bad.json", "{ not json");
    CHECK(run("hilbert cli_bad.json").code == 1);
    write_file("cli_invalid.json", R"({"torus_rank": 1, "vertices": ["a","b"],
        "edges": [{"ends": ["a","b"], "character": [0]}],
        "loops": [], "surface_relations": [], "weyl": null})");
    RunResult r = run("hilbert cli_invalid.json");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "ZeroCharacter"));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("no-such-verb").code == 1);
    CHECK(run("hilbert").code == 1);            // missing positional
    CHECK(run("catalog no_such_entry").code == 1);
    CHECK(run("catalog projective_space").code == 1); // needs --n
    CHECK(run("--help").code == 0);
}

TEST_CASE("json output is canonical and machine readable") {
    run("catalog hirzebruch --n 1 --emit cli_fn1.json");
    RunResult j = run("hilbert cli_fn1.json --max-degree 3 --format json");
    REQUIRE(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["max_degree"] == 3);
    CHECK(parsed["dims"] == nlohmann::json::array({1, 3, 4, 4}));

    RunResult g = run("generators cli_fn1.json --max-degree 4 --format json");
    REQUIRE(g.code == 0);
    auto pres = nlohmann::json::parse(g.out);
    CHECK(pres["generator_degrees"] == nlohmann::json::array({0, 1, 1, 2}));
    CHECK(pres["free"] == "certified");
    CHECK(pres["rank_equals_fixed_points"] == true);
}

TEST_CASE("freeness and mod-delta verbs") {
    run("catalog weighted_plane --n 2 --emit cli_wp.json");
    RunResult f = run("freeness cli_wp.json --max-degree 5");
    REQUIRE(f.code == 0);
    CHECK(contains(f.out, "certified"));
    RunResult m = run("mod-delta cli_wp.json --max-degree 4");
    REQUIRE(m.code == 0);
    CHECK(first_line(m.out) == "1 1 1 0 0");
}

TEST_CASE("symmetry invariants verb") {
    run("catalog flag_sl3 --emit cli_flag.json");
    RunResult r = run("invariants cli_flag.json --max-degree 3");
    REQUIRE(r.code == 0);
    CHECK(first_line(r.out) == "1 0 1 1");

    run("catalog p2 --emit cli_p2.json");
    RunResult no = run("invariants cli_p2.json --max-degree 2");
    CHECK(no.code == 1);
    CHECK(contains(no.err, "NoWeylData"));
}

TEST_CASE("membership verdicts exit 0 either way") {
    write_p1("cli_p1.json");
    run("catalog hirzebruch --n 2 --emit cli_fn.json");
    write_file("cli_member.json", R"({"0": 0, "inf": [{"exp":[1],"num":"1","den":"1"}]})");
    RunResult yes = run("membership cli_p1.json --class cli_member.json");
    CHECK(yes.code == 0);
    CHECK(contains(yes.out, "member"));
    CHECK_FALSE(contains(yes.out, "not a member"));

    write_file("cli_nonmember.json", R"({"0": 1, "inf": 0})");
    RunResult no = run("membership cli_p1.json --class cli_nonmember.json");
    CHECK(no.code == 0);
    CHECK(contains(no.out, "not a member"));
    CHECK(contains(no.out, "edge"));

    // Violating only the four-point surface relation names it.
    write_file("cli_quad.json",
               R"({"x": [{"exp":[1],"num":"1","den":"1"}],
                   "y": [{"exp":[1],"num":"1","den":"1"}],
                   "z": [{"exp":[1],"num":"1","den":"1"}],
                   "t": 0})");
    RunResult rel = run("membership cli_fn.json --class cli_quad.json");
    CHECK(rel.code == 0);
    CHECK(contains(rel.out, "not a member"));
    CHECK(contains(rel.out, "quad_ruled"));
}

TEST_CASE("cup multiplies class literals") {
    write_p1("cli_p1.json");
    write_file("cli_nonmember.json", R"({"0": 1, "inf": 0})");
    write_file("cli_a.json", R"({"0": 0, "inf": [{"exp":[1],"num":"1","den":"1"}]})");
    RunResult table = run("cup cli_p1.json --class cli_a.json --class cli_a.json");
    REQUIRE(table.code == 0);
    CHECK(contains(table.out, "degree: 2"));

    RunResult r = run("cup cli_p1.json --class cli_a.json --class cli_a.json --format json");
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["0"] == nlohmann::json::array());
    REQUIRE(parsed["inf"].size() == 1);
    CHECK(parsed["inf"][0]["exp"] == nlohmann::json::array({2}));
    CHECK(parsed["inf"][0]["num"] == "1");

    // A non-member operand is rejected.
    RunResult bad = run("cup cli_p1.json --class cli_nonmember.json --class cli_a.json");
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "NotMember"));
}

TEST_CASE("product verb composes graphs") {
    run("catalog p1 --emit cli_p1.json");
    RunResult r = run("product cli_p1.json cli_p1.json --emit cli_p1p1.json");
    REQUIRE(r.code == 0);
    RunResult h = run("hilbert cli_p1p1.json --max-degree 3");
    CHECK(first_line(h.out) == "1 4 8 12");
}

TEST_CASE("strata verb lists directions") {
    run("catalog p1 --emit cli_p1.json");
    run("product cli_p1.json cli_p1.json --emit cli_p1p1.json");
    RunResult r = run("strata cli_p1p1.json");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "(1,0)"));
    CHECK(contains(r.out, "(0,1)"));
}

TEST_CASE("catalog listing names every entry") {
    RunResult r = run("catalog");
    REQUIRE(r.code == 0);
    for (const char* name : {"p1", "p2", "p3", "hirzebruch1", "weighted_plane1", "plane_sl2",
                             "toric_p2", "toric_p1xp1", "flag_sl3", "spherical_demo"})
        CHECK(contains(r.out, name));
}

TEST_CASE("default degree bound is echoed") {
    run("catalog hirzebruch --n 2 --emit cli_fn.json");
    RunResult r = run("hilbert cli_fn.json");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "max degree: 7")); // 2*2 + 1 + 2
}

TEST_CASE("verify is deterministic and passes") {
    RunResult a = run("verify");
    REQUIRE(a.code == 0);
    CHECK(contains(a.out, "verify passed"));
    RunResult b = run("verify");
    CHECK(b.out == a.out);
    CHECK(b.err == a.err);
}

TEST_CASE("verify --all runs the extended property suite") {
    RunResult r = run("verify --all");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "verify passed"));
}
