#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/oracle.hpp"
#include "gkm/ppring.hpp"

using namespace gkm;

namespace {
constexpr int kDepth = 3;

std::vector<long> to_longs(const std::vector<int>& v) {
    return std::vector<long>(v.begin(), v.end());
}
} // namespace

TEST_CASE("slow-path graded dimensions match the solver on the catalog") {
    for (const char* name : {"p1", "p2", "hirzebruch1", "weighted_plane2", "toric_p1xp1",
                             "flag_sl3", "spherical_demo"}) {
        CatalogEntry entry = entry_by_name(name);
        CAPTURE(entry.name);
        CHECK(oracle::hilbert_dims(entry.graph, kDepth) == hilbert(entry.graph, kDepth).dims);
    }
}

TEST_CASE("slow-path quotient dimensions match the solver") {
    for (const char* name : {"p2", "hirzebruch1", "plane_sl2", "spherical_demo"}) {
        CatalogEntry entry = entry_by_name(name);
        CAPTURE(entry.name);
        auto main_dims = mod_delta_dims(entry.graph, kDepth);
        CHECK(to_longs(oracle::mod_delta_dims(entry.graph, kDepth)) == to_longs(main_dims));
    }
}

TEST_CASE("slow-path symmetry invariants match the solver") {
    GkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"0", "inf"};
    g.edges = {Edge::two_ended("0", "inf", Character::from_ints({1}))};
    WeylGenerator w;
    w.vertex_perm = {{"0", "inf"}, {"inf", "0"}};
    w.char_matrix = IntMatrix(1);
    w.char_matrix.at(0, 0) = -1;
    g.weyl = WeylAction{{w}};
    CHECK(oracle::weyl_invariant_dims(g, 3) == weyl_invariants(g, 3).dims);

    auto flag = flag_sl3();
    CHECK(oracle::weyl_invariant_dims(flag.graph, kDepth) ==
          weyl_invariants(flag.graph, kDepth).dims);

    CHECK_THROWS_AS(oracle::weyl_invariant_dims(entry_by_name("p1").graph, 2), GkmError);
}

TEST_CASE("dimensions do not depend on the shuffle seed") {
    GkmGraph g = entry_by_name("spherical_demo").graph;
    for (int d = 0; d <= 3; ++d) {
        long base = oracle::graded_dimension(g, d, 1);
        CHECK(oracle::graded_dimension(g, d, 2) == base);
        CHECK(oracle::graded_dimension(g, d, 0xabcdef) == base);
    }
    GkmGraph fn = entry_by_name("hirzebruch1").graph;
    CHECK(oracle::hilbert_dims(fn, 3, 7) == oracle::hilbert_dims(fn, 3, 8));
}

TEST_CASE("division rejects the zero direction") {
    Polynomial p(2);
    p.set_coeff(Exponents{1, 0}, Rational(1));
    CHECK_THROWS_AS(oracle::divide_by_linear(p, Character::from_ints({0, 0})), GkmError);
}

TEST_CASE("empty graph has zero dimensions") {
    GkmGraph empty;
    empty.torus_rank = 2;
    CHECK(oracle::graded_dimension(empty, 0) == 0);
    CHECK(oracle::hilbert_dims(empty, 2) == std::vector<long>{0, 0, 0});
}
