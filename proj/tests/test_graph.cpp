#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph.hpp"
#include "gkm/ppring.hpp"

#include <algorithm>
#include <set>

using namespace gkm;

namespace {

GkmGraph p1_graph() {
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"0", "inf"};
    g.edges = {Edge::two_ended("0", "inf", Character::from_ints({1}))};
    return g;
}

GkmGraph point_graph() {
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"pt"};
    return g;
}

bool has_code(const ValidationReport& r, const std::string& code, bool warning = false) {
    return std::any_of(r.items.begin(), r.items.end(), [&](const ValidationIssue& i) {
        return i.code == code && i.warning == warning;
    });
}

} // namespace

TEST_CASE("validate accepts the two-point rank-1 graph") {
    auto report = validate(p1_graph());
    CHECK(report.ok());
    CHECK(report.items.empty());
}

TEST_CASE("validate flags structural violations") {
    GkmGraph g = p1_graph();
    g.edges[0].character = Character::from_ints({0});
    CHECK(has_code(validate(g), "ZeroCharacter"));

    g = p1_graph();
    g.surface_relations.push_back(
        {SurfaceKind::TriplePlane, {"0", "inf", "w"}, Character::from_ints({1})});
    CHECK(has_code(validate(g), "UnknownVertex"));

    g = p1_graph();
    g.vertices.push_back("0");
    CHECK_FALSE(validate(g).ok());

    g = p1_graph();
    g.edges[0].character = Character::from_ints({1, 0}); // wrong length
    CHECK_FALSE(validate(g).ok());

    g = p1_graph();
    g.edges[0].y = "0"; // two-ended with equal endpoints
    CHECK_FALSE(validate(g).ok());

    g = p1_graph();
    g.surface_relations.push_back(
        {SurfaceKind::QuadRuled, {"0", "inf", "0", "inf"}, Character::from_ints({1})});
    CHECK_FALSE(validate(g).ok()); // repeated points
}

TEST_CASE("loops are legal and disconnection is only a warning") {
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"a", "b"};
    g.edges = {Edge::loop("a", Character::from_ints({1}))};
    auto report = validate(g);
    CHECK(report.ok()); // warnings do not fail validation
    CHECK(has_code(report, "Disconnected", /*warning=*/true));
    CHECK(hilbert(g, 1).dims[0] == 2); // two components, two constants
}

TEST_CASE("validate checks symmetry data") {
    GkmGraph g = p1_graph();
    WeylGenerator w;
    w.vertex_perm = {{"0", "inf"}}; // not a bijection on all vertices
    w.char_matrix = IntMatrix::identity(1);
    g.weyl = WeylAction{{w}};
    CHECK_FALSE(validate(g).ok());

    g = p1_graph();
    w.vertex_perm = {{"0", "inf"}, {"inf", "0"}};
    w.char_matrix = IntMatrix(1); // zero matrix, singular
    g.weyl = WeylAction{{w}};
    CHECK_FALSE(validate(g).ok());

    // An infinite-order generator trips the closure bound.
    GkmGraph h;
    h.torus_rank = 2;
    h.vertices = {"a", "b"};
    h.edges = {Edge::two_ended("a", "b", Character::from_ints({1, 0}))};
    WeylGenerator shear;
    shear.vertex_perm = {{"a", "a"}, {"b", "b"}};
    shear.char_matrix = IntMatrix::identity(2);
    shear.char_matrix.at(0, 1) = 1;
    h.weyl = WeylAction{{shear}};
    CHECK(weyl_closure_size(h, 50) == -1);
    CHECK_FALSE(validate(h, 50).ok());
}

TEST_CASE("weyl closure sizes") {
    GkmGraph g = p1_graph();
    CHECK(weyl_closure_size(g) == 1); // no generators
    WeylGenerator w;
    w.vertex_perm = {{"0", "inf"}, {"inf", "0"}};
    w.char_matrix = IntMatrix::identity(1);
    w.char_matrix.at(0, 0) = -1;
    g.weyl = WeylAction{{w}};
    CHECK(weyl_closure_size(g) == 2);
    CHECK(weyl_closure_size(flag_sl3().graph) == 6);
}

TEST_CASE("product of two projective lines") {
    GkmGraph g = product(p1_graph(), p1_graph());
    CHECK(g.torus_rank == 2);
    CHECK(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 4);
    int first = 0, second = 0;
    for (const auto& e : g.edges) {
        Character c = canonical_direction(e.character);
        if (c == Character::from_ints({1, 0})) ++first;
        if (c == Character::from_ints({0, 1})) ++second;
    }
    CHECK(first == 2);
    CHECK(second == 2);
    CHECK(validate(g).ok());
}

TEST_CASE("product with a point only raises the rank") {
    GkmGraph g = product(p1_graph(), point_graph());
    CHECK(g.torus_rank == 2);
    CHECK(g.vertices.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].character == Character::from_ints({1, 0}));
}

TEST_CASE("product counts multiply correctly") {
    GkmGraph p2 = projective_space(2).graph;
    GkmGraph g = product(p2, p1_graph());
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 9); // 3*2 + 3*1
    CHECK(validate(g).ok());

    // Loops propagate like edges.
    GkmGraph looped = p1_graph();
    looped.edges.push_back(Edge::loop("0", Character::from_ints({1})));
    GkmGraph gl = product(looped, p1_graph());
    int loops = 0;
    for (const auto& e : gl.edges) loops += e.kind == EdgeKind::Loop ? 1 : 0;
    CHECK(loops == 2); // one per vertex of the second factor
}

TEST_CASE("product rejects surface relations") {
    CHECK_THROWS_AS(product(hirzebruch(1).graph, p1_graph()), GkmError);
    try {
        product(p1_graph(), hirzebruch(1).graph);
        FAIL("expected an error");
    } catch (const GkmError& e) {
        CHECK(e.code() == Errc::UnsupportedSurfaceRelations);
    }
}

TEST_CASE("product hilbert data is symmetric in the factors") {
    GkmGraph p2 = projective_space(2).graph;
    auto ab = hilbert(product(p2, p1_graph()), 4);
    auto ba = hilbert(product(p1_graph(), p2), 4);
    CHECK(ab.dims == ba.dims);
}

TEST_CASE("strata group constraints by direction") {
    auto r = strata_by_subtorus(product(p1_graph(), p1_graph()));
    REQUIRE(r.strata.size() == 2);
    CHECK(r.strata[0].direction == Character::from_ints({0, 1}));
    CHECK(r.strata[1].direction == Character::from_ints({1, 0}));
    CHECK(r.strata[0].member_edges.size() == 2);
    CHECK(r.strata[1].member_edges.size() == 2);

    auto p2 = strata_by_subtorus(toric_p2().graph);
    CHECK(p2.strata.size() == 3);
    for (const auto& s : p2.strata) CHECK(s.member_edges.size() == 1);

    auto fn = strata_by_subtorus(hirzebruch(2).graph);
    REQUIRE(fn.strata.size() == 1);
    CHECK(fn.strata[0].member_relations.size() == 1);
}

TEST_CASE("strata partition the full constraint set") {
    for (const auto& entry : all_entries()) {
        auto r = strata_by_subtorus(entry.graph);
        std::set<int> edges_seen, rels_seen;
        for (const auto& s : r.strata) {
            for (int i : s.member_edges) CHECK(edges_seen.insert(i).second);
            for (int i : s.member_relations) CHECK(rels_seen.insert(i).second);
            // Directions are canonical: primitive, positive leading entry.
            CHECK(s.direction == canonical_direction(s.direction));
        }
        CHECK(edges_seen.size() == entry.graph.edges.size());
        CHECK(rels_seen.size() == entry.graph.surface_relations.size());
    }
}

TEST_CASE("canonical direction normalizes sign and scale") {
    CHECK(canonical_direction(Character::from_ints({-2, 4})) == Character::from_ints({1, -2}));
    CHECK(canonical_direction(Character::from_ints({0, -3})) == Character::from_ints({0, 1}));
    CHECK(canonical_direction(Character::from_ints({3})) == Character::from_ints({1}));
}

TEST_CASE("parse reads the documented two-point example") {
    std::string doc = R"({
      "torus_rank": 1,
      "vertices": ["0", "inf"],
      "edges": [{"ends": ["0", "inf"], "character": [1]}],
      "loops": [],
      "surface_relations": [],
      "weyl": null
    })";
    GkmGraph g = parse_graph(doc);
    CHECK(g.torus_rank == 1);
    CHECK(g.vertices == std::vector<std::string>{"0", "inf"});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].character == Character::from_ints({1}));
    CHECK(graphs_equal(g, p1_graph()));
}

TEST_CASE("parse rejects malformed documents") {
    // Rank/character length mismatch.
    std::string bad_len = R"({"torus_rank": 2, "vertices": ["a","b"],
        "edges": [{"ends": ["a","b"], "character": [1]}],
        "loops": [], "surface_relations": [], "weyl": null})";
    CHECK_THROWS_AS(parse_graph(bad_len), GkmError);
    try {
        parse_graph(bad_len);
    } catch (const GkmError& e) {
        CHECK(e.code() == Errc::SchemaError);
    }

    CHECK_THROWS_AS(parse_graph("not json"), GkmError);
    CHECK_THROWS_AS(parse_graph("{}"), GkmError);
    CHECK_THROWS_AS(parse_graph(R"({"torus_rank": 0, "vertices": [], "edges": [],
        "loops": [], "surface_relations": [], "weyl": null})"),
                    GkmError);
    // Unknown surface kind.
    CHECK_THROWS_AS(parse_graph(R"({"torus_rank": 1, "vertices": ["a","b","c"], "edges": [],
        "loops": [],
        "surface_relations": [{"kind": "pentagon", "points": ["a","b","c"], "root": [1]}],
        "weyl": null})"),
                    GkmError);

    // Well-formed shape, invalid content: zero character.
    std::string invalid = R"({"torus_rank": 1, "vertices": ["a","b"],
        "edges": [{"ends": ["a","b"], "character": [0]}],
        "loops": [], "surface_relations": [], "weyl": null})";
    try {
        parse_graph(invalid);
        FAIL("expected an error");
    } catch (const GkmError& e) {
        CHECK(e.code() == Errc::ValidationError);
    }
}

TEST_CASE("serialize and parse round trip every catalog graph") {
    for (const auto& entry : all_entries()) {
        std::string text = serialize_graph(entry.graph);
        GkmGraph back = parse_graph(text);
        CHECK(graphs_equal(back, entry.graph));
        CHECK(serialize_graph(back) == text); // canonical form is a fixed point
    }
}

TEST_CASE("weyl data survives the round trip") {
    const GkmGraph& g = flag_sl3().graph;
    REQUIRE(g.weyl.has_value());
    GkmGraph back = parse_graph(serialize_graph(g));
    REQUIRE(back.weyl.has_value());
    CHECK(back.weyl->generators.size() == g.weyl->generators.size());
    CHECK(graphs_equal(back, g));
    CHECK(weyl_invariants(back, 3).dims == weyl_invariants(g, 3).dims);
}

TEST_CASE("constraint labels name their sources") {
    GkmGraph g = p1_graph();
    std::string label = constraint_label_edge(g, 0);
    CHECK(label.find("0") != std::string::npos);
    CHECK(label.find("inf") != std::string::npos);
    GkmGraph h = hirzebruch(1).graph;
    std::string rel = constraint_label_relation(h, 0);
    CHECK(rel.find("quad_ruled") != std::string::npos);
}
