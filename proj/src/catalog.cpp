#include "gkm/catalog.hpp"

#include "gkm/errors.hpp"

#include <json.hpp>

namespace gkm {

using OJson = nlohmann::ordered_json;

namespace {

Character ch(std::vector<long> v) { return Character::from_ints(v); }

const char* kTwoPath =
    "confirmed by the main solver and the slow-path oracle (seed 0x5eed5eed)";

std::string closed_form_note(int n) {
    return "closed form for a free module with one generator in each degree 0.." +
           std::to_string(n) + "; " + kTwoPath;
}

GoldenData weighted_plane_golden() {
    GoldenData gd;
    gd.hilbert_dims = std::vector<long>{1, 2, 3, 3, 3, 3, 3};
    gd.generator_degrees = std::vector<int>{0, 1, 2};
    gd.mod_delta = std::vector<int>{1, 1, 1, 0, 0, 0, 0};
    gd.provenance["hilbert_dims"] =
        std::string("hand linear algebra on the three-point plane relation; ") + kTwoPath;
    gd.provenance["generator_degrees"] = "one generator per fixed point, degrees 0,1,2; " +
                                         std::string(kTwoPath);
    gd.provenance["mod_delta"] = std::string("new-generator counts of the extraction; ") + kTwoPath;
    return gd;
}

} // namespace

CatalogEntry projective_space(int n) {
    if (n < 1) throw GkmError(Errc::BadArgument, "projective_space requires n >= 1");
    GkmGraph g;
    g.torus_rank = n;
    for (int i = 1; i <= n + 1; ++i) g.vertices.push_back("e" + std::to_string(i));
    // Character of the orbit joining e_i and e_j: eps_i - eps_j with
    // eps_{n+1} = 0 in the rank-n lattice.
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            std::vector<long> c(static_cast<size_t>(n), 0);
            if (i <= n) c[static_cast<size_t>(i - 1)] += 1;
            if (j <= n) c[static_cast<size_t>(j - 1)] -= 1;
            g.edges.push_back(Edge::two_ended("e" + std::to_string(i), "e" + std::to_string(j), ch(c)));
        }
    }
    CatalogEntry e;
    e.name = "p" + std::to_string(n);
    e.summary = std::to_string(n) + "-dimensional projective space, rank-" + std::to_string(n) +
                " torus, " + std::to_string(n + 1) + " fixed points";
    e.graph = std::move(g);
    if (n == 1) {
        e.expected.hilbert_dims = std::vector<long>{1, 2, 2, 2, 2, 2, 2};
        e.expected.generator_degrees = std::vector<int>{0, 1};
        e.expected.mod_delta = std::vector<int>{1, 1, 0, 0, 0, 0, 0};
    } else if (n == 2) {
        e.expected.hilbert_dims = std::vector<long>{1, 3, 6, 9, 12, 15, 18};
        e.expected.generator_degrees = std::vector<int>{0, 1, 2};
        e.expected.mod_delta = std::vector<int>{1, 1, 1, 0, 0, 0, 0};
    } else if (n == 3) {
        e.expected.hilbert_dims = std::vector<long>{1, 4, 10, 20, 34, 52, 74};
        e.expected.generator_degrees = std::vector<int>{0, 1, 2, 3};
        e.expected.mod_delta = std::vector<int>{1, 1, 1, 1, 0, 0, 0};
    }
    if (n <= 3) {
        e.expected.provenance["hilbert_dims"] = closed_form_note(n);
        e.expected.provenance["generator_degrees"] = closed_form_note(n);
        e.expected.provenance["mod_delta"] =
            std::string("one-dimensional ordinary piece per cell degree; ") + kTwoPath;
    }
    return e;
}

CatalogEntry hirzebruch(int n) {
    if (n < 0) throw GkmError(Errc::BadArgument, "hirzebruch requires n >= 0");
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"x", "y", "z", "t"};
    // x and z lie on one invariant section, y and t on the other; the
    // four-point ruled relation carries all of the gluing data, so the
    // skeleton needs no separate edge entries.
    g.surface_relations.push_back({SurfaceKind::QuadRuled, {"x", "y", "z", "t"}, ch({1})});
    CatalogEntry e;
    e.name = "hirzebruch" + std::to_string(n);
    e.summary = "rational ruled surface (index " + std::to_string(n) +
                "), rank-1 skeleton with one four-point ruled relation";
    e.graph = std::move(g);
    e.expected.hilbert_dims = std::vector<long>{1, 3, 4, 4, 4, 4, 4};
    e.expected.generator_degrees = std::vector<int>{0, 1, 1, 2};
    e.expected.mod_delta = std::vector<int>{1, 2, 1, 0, 0, 0, 0};
    e.expected.provenance["hilbert_dims"] =
        std::string("hand linear algebra on the four-point ruled relation; ") + kTwoPath;
    e.expected.provenance["generator_degrees"] =
        std::string("four generators, one per fixed point, degrees 0,1,1,2; ") + kTwoPath;
    e.expected.provenance["mod_delta"] =
        std::string("cell counts of a rational ruled surface, 1+2+1; ") + kTwoPath;
    return e;
}

CatalogEntry weighted_plane(int n) {
    if (n < 1) throw GkmError(Errc::BadArgument, "weighted_plane requires n >= 1");
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"x", "y", "z"};
    g.surface_relations.push_back({SurfaceKind::TriplePlane, {"x", "y", "z"}, ch({1})});
    CatalogEntry e;
    e.name = "weighted_plane" + std::to_string(n);
    e.summary = "weighted projective plane (weight " + std::to_string(n) +
                "), rank-1 skeleton with one three-point plane relation";
    e.graph = std::move(g);
    e.expected = weighted_plane_golden();
    return e;
}

CatalogEntry plane_sl2() {
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"x", "y", "z"};
    g.surface_relations.push_back({SurfaceKind::TriplePlane, {"x", "y", "z"}, ch({1})});
    CatalogEntry e;
    e.name = "plane_sl2";
    e.summary = "projectivized three-dimensional representation, rank-1 skeleton; "
                "same constraint data as the weighted planes";
    e.graph = std::move(g);
    e.expected = weighted_plane_golden();
    return e;
}

CatalogEntry toric_from_fan_2d(const std::vector<Character>& rays,
                               const std::vector<std::pair<int, int>>& max_cones) {
    const int m = static_cast<int>(max_cones.size());
    if (rays.empty() || max_cones.empty())
        throw GkmError(Errc::BadArgument, "fan needs rays and maximal cones");
    for (size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].rank() != 2)
            throw GkmError(Errc::BadArgument, "ray " + std::to_string(i) + " is not a 2-vector");
        if (rays[i].is_zero())
            throw GkmError(Errc::BadArgument, "ray " + std::to_string(i) + " is zero");
        mpz_class g0;
        mpz_gcd(g0.get_mpz_t(), rays[i].coords[0].get_mpz_t(), rays[i].coords[1].get_mpz_t());
        if (g0 != 1)
            throw GkmError(Errc::BadArgument, "ray " + std::to_string(i) + " is not primitive");
        for (size_t j = 0; j < i; ++j)
            if (rays[j] == rays[i])
                throw GkmError(Errc::BadArgument, "ray " + std::to_string(i) + " repeats ray " +
                                                      std::to_string(j));
    }

    auto cross = [](const Character& a, const Character& b) -> mpz_class {
        return a.coords[0] * b.coords[1] - a.coords[1] * b.coords[0];
    };

    std::vector<int> uses(rays.size(), 0);
    for (int k = 0; k < m; ++k) {
        auto [a, b] = max_cones[static_cast<size_t>(k)];
        if (a < 0 || b < 0 || a >= static_cast<int>(rays.size()) || b >= static_cast<int>(rays.size()))
            throw GkmError(Errc::BadArgument, "cone " + std::to_string(k) + " references a missing ray");
        mpz_class det = cross(rays[static_cast<size_t>(a)], rays[static_cast<size_t>(b)]);
        if (det == 0)
            throw GkmError(Errc::NonSimplicial,
                           "cone " + std::to_string(k) + " is spanned by parallel rays");
        if (det < 0)
            throw GkmError(Errc::IncompleteFan,
                           "cone " + std::to_string(k) + " is listed clockwise");
        uses[static_cast<size_t>(a)] += 1;
        uses[static_cast<size_t>(b)] += 1;
    }
    for (int k = 0; k < m; ++k) {
        int next = (k + 1) % m;
        if (max_cones[static_cast<size_t>(k)].second != max_cones[static_cast<size_t>(next)].first)
            throw GkmError(Errc::IncompleteFan,
                           "cones " + std::to_string(k) + " and " + std::to_string(next) +
                               " do not share a wall");
    }
    for (size_t i = 0; i < rays.size(); ++i)
        if (uses[i] != 2)
            throw GkmError(Errc::IncompleteFan,
                           "ray " + std::to_string(i) + " does not border exactly two cones");
    // Exact coverage test: the half-open cones [a, b) must contain the
    // direction (1,0) exactly once; a chained fan that winds around the
    // origin twice would contain it twice.
    Character probe = ch({1, 0});
    int hits = 0;
    for (int k = 0; k < m; ++k) {
        const Character& a = rays[static_cast<size_t>(max_cones[static_cast<size_t>(k)].first)];
        const Character& b = rays[static_cast<size_t>(max_cones[static_cast<size_t>(k)].second)];
        if (cross(a, probe) >= 0 && cross(probe, b) > 0) ++hits;
    }
    if (hits != 1)
        throw GkmError(Errc::IncompleteFan, hits == 0 ? "fan does not cover the plane"
                                                      : "fan covers a direction more than once");

    GkmGraph g;
    g.torus_rank = 2;
    for (int k = 0; k < m; ++k) g.vertices.push_back("cone" + std::to_string(k));
    for (int k = 0; k < m; ++k) {
        int next = (k + 1) % m;
        const Character& wall = rays[static_cast<size_t>(max_cones[static_cast<size_t>(k)].second)];
        // Primitive annihilator of the shared wall.
        Character normal(std::vector<mpz_class>{wall.coords[1], -wall.coords[0]});
        g.edges.push_back(
            Edge::two_ended("cone" + std::to_string(k), "cone" + std::to_string(next), normal));
    }
    CatalogEntry e;
    e.name = "toric_surface";
    e.summary = "smooth complete toric surface from a 2d fan with " + std::to_string(m) +
                " maximal cones";
    e.graph = std::move(g);
    return e;
}

CatalogEntry toric_p2() {
    CatalogEntry e = toric_from_fan_2d({ch({1, 0}), ch({0, 1}), ch({-1, -1})},
                                       {{0, 1}, {1, 2}, {2, 0}});
    e.name = "toric_p2";
    e.summary = "projective plane from its standard fan";
    e.expected.hilbert_dims = std::vector<long>{1, 3, 6, 9, 12, 15, 18};
    e.expected.generator_degrees = std::vector<int>{0, 1, 2};
    e.expected.mod_delta = std::vector<int>{1, 1, 1, 0, 0, 0, 0};
    e.expected.provenance["hilbert_dims"] =
        "must agree with p2, which is the same variety presented on fixed-point names; " +
        std::string(kTwoPath);
    e.expected.provenance["generator_degrees"] = closed_form_note(2);
    e.expected.provenance["mod_delta"] = closed_form_note(2);
    return e;
}

CatalogEntry toric_p1xp1() {
    CatalogEntry e = toric_from_fan_2d({ch({1, 0}), ch({0, 1}), ch({-1, 0}), ch({0, -1})},
                                       {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    e.name = "toric_p1xp1";
    e.summary = "product of two projective lines from its standard fan";
    e.expected.hilbert_dims = std::vector<long>{1, 4, 8, 12, 16, 20, 24};
    e.expected.generator_degrees = std::vector<int>{0, 1, 1, 2};
    e.expected.mod_delta = std::vector<int>{1, 2, 1, 0, 0, 0, 0};
    e.expected.provenance["hilbert_dims"] =
        std::string("expansion of (1+t)^2/(1-t)^2 for a rank-4 free module; ") + kTwoPath;
    e.expected.provenance["generator_degrees"] =
        std::string("product of two degree-[0,1] generator sets; ") + kTwoPath;
    e.expected.provenance["mod_delta"] =
        std::string("cell counts of a product of two lines, 1+2+1; ") + kTwoPath;
    return e;
}

CatalogEntry flag_sl3() {
    GkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};
    // Positive roots in simple-root coordinates: (1,0), (0,1), (1,1).
    // An edge joins w and (reflection in the root) * w.
    auto edge = [&](const char* a, const char* b, std::vector<long> root) {
        g.edges.push_back(Edge::two_ended(a, b, ch(std::move(root))));
    };
    edge("e", "s1", {1, 0});
    edge("s2", "s1s2", {1, 0});
    edge("s2s1", "s1s2s1", {1, 0});
    edge("e", "s2", {0, 1});
    edge("s1", "s2s1", {0, 1});
    edge("s1s2", "s1s2s1", {0, 1});
    edge("e", "s1s2s1", {1, 1});
    edge("s1", "s1s2", {1, 1});
    edge("s2", "s2s1", {1, 1});

    WeylAction w;
    WeylGenerator g1;
    g1.vertex_perm = {{"e", "s1"},     {"s1", "e"},     {"s2", "s1s2"},
                      {"s1s2", "s2"},  {"s2s1", "s1s2s1"}, {"s1s2s1", "s2s1"}};
    g1.char_matrix = IntMatrix(2);
    g1.char_matrix.at(0, 0) = -1;
    g1.char_matrix.at(0, 1) = 1;
    g1.char_matrix.at(1, 0) = 0;
    g1.char_matrix.at(1, 1) = 1;
    WeylGenerator g2;
    g2.vertex_perm = {{"e", "s2"},     {"s2", "e"},     {"s1", "s2s1"},
                      {"s2s1", "s1"},  {"s1s2", "s1s2s1"}, {"s1s2s1", "s1s2"}};
    g2.char_matrix = IntMatrix(2);
    g2.char_matrix.at(0, 0) = 1;
    g2.char_matrix.at(0, 1) = 0;
    g2.char_matrix.at(1, 0) = 1;
    g2.char_matrix.at(1, 1) = -1;
    w.generators = {std::move(g1), std::move(g2)};
    g.weyl = std::move(w);

    CatalogEntry e;
    e.name = "flag_sl3";
    e.summary = "full flag variety of SL3: six fixed points indexed by S3, nine edges "
                "labeled by the positive roots, with both simple reflections attached";
    e.graph = std::move(g);
    e.expected.hilbert_dims = std::vector<long>{1, 4, 9, 15, 21, 27, 33};
    e.expected.generator_degrees = std::vector<int>{0, 1, 1, 2, 2, 3};
    e.expected.mod_delta = std::vector<int>{1, 2, 2, 1, 0, 0, 0};
    e.expected.weyl_invariant_dims = std::vector<long>{1, 0, 1, 1, 3, 3, 5};
    e.expected.provenance["hilbert_dims"] =
        std::string("free module with generator degrees 0,1,1,2,2,3 (cell count by word "
                     "length); ") + kTwoPath;
    e.expected.provenance["generator_degrees"] =
        std::string("one generator per group element, degree = word length; ") + kTwoPath;
    e.expected.provenance["mod_delta"] =
        std::string("word-length counts of S3, 1+2+2+1; ") + kTwoPath;
    e.expected.provenance["weyl_invariant_dims"] =
        std::string("pinned from the slow-path oracle run; low degrees match the "
                     "invariants of the rank-2 reflection action (fundamental degrees "
                     "2 and 3); ") + kTwoPath;
    return e;
}

CatalogEntry spherical_demo() {
    GkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"v1", "v2", "v3", "v4", "v5", "v6"};
    g.edges.push_back(Edge::two_ended("v1", "v4", ch({1, 1})));
    g.surface_relations.push_back({SurfaceKind::TriplePlane, {"v1", "v2", "v3"}, ch({1, 0})});
    g.surface_relations.push_back({SurfaceKind::QuadRuled, {"v3", "v4", "v5", "v6"}, ch({0, 1})});
    CatalogEntry e;
    e.name = "spherical_demo";
    e.summary = "synthetic mixed skeleton: one plain edge, one three-point plane relation, "
                "one four-point ruled relation sharing a vertex (a solver exercise, not a "
                "claimed variety)";
    e.graph = std::move(g);
    e.expected.hilbert_dims = std::vector<long>{1, 4, 10, 16, 22, 28, 34};
    e.expected.generator_degrees = std::vector<int>{0, 1, 1, 2, 2, 2};
    e.expected.mod_delta = std::vector<int>{1, 2, 3, 0, 0, 0, 0};
    e.expected.provenance["hilbert_dims"] =
        std::string("pinned from cross-checked runs; hand-checked in degrees 0..2 (the "
                     "eight constraint rows are independent from degree 2 on); ") + kTwoPath;
    e.expected.provenance["generator_degrees"] =
        std::string("pinned from cross-checked runs; no closed form claimed; ") + kTwoPath;
    e.expected.provenance["mod_delta"] =
        std::string("pinned from cross-checked runs; no closed form claimed; ") + kTwoPath;
    return e;
}

std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(projective_space(1));
    out.push_back(projective_space(2));
    out.push_back(projective_space(3));
    out.push_back(hirzebruch(0));
    out.push_back(hirzebruch(1));
    out.push_back(hirzebruch(2));
    out.push_back(hirzebruch(5));
    out.push_back(weighted_plane(1));
    out.push_back(weighted_plane(2));
    out.push_back(plane_sl2());
    out.push_back(toric_p2());
    out.push_back(toric_p1xp1());
    out.push_back(flag_sl3());
    out.push_back(spherical_demo());
    return out;
}

CatalogEntry entry_by_name(const std::string& name) {
    for (auto& e : all_entries())
        if (e.name == name) return e;
    throw GkmError(Errc::BadArgument, "no catalog entry named '" + name + "'");
}

std::string golden_to_json(const GoldenData& g) {
    OJson j = OJson::object();
    if (g.hilbert_dims) j["hilbert_dims"] = *g.hilbert_dims;
    if (g.generator_degrees) j["generator_degrees"] = *g.generator_degrees;
    if (g.mod_delta) j["mod_delta"] = *g.mod_delta;
    if (g.weyl_invariant_dims) j["weyl_invariant_dims"] = *g.weyl_invariant_dims;
    OJson prov = OJson::object();
    for (const auto& [k, v] : g.provenance) prov[k] = v;
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

std::string catalog_entry_to_json(const CatalogEntry& e) {
    OJson j = OJson::object();
    j["name"] = e.name;
    j["summary"] = e.summary;
    j["graph"] = OJson::parse(serialize_graph(e.graph));
    j["expected"] = OJson::parse(golden_to_json(e.expected));
    return j.dump(2) + "\n";
}

} // namespace gkm
