#pragma once

#include "gkm/lattice.hpp"
#include "gkm/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// One-dimensional orbit closure: either a curve joining two distinct fixed
// points, or a curve with a single fixed point (a loop, which imposes no
// gluing condition on piecewise polynomials).
enum class EdgeKind { TwoEnded, Loop };

struct Edge {
    EdgeKind kind = EdgeKind::TwoEnded;
    std::string x, y; // loop: y == x
    Character character;

    static Edge two_ended(std::string a, std::string b, Character chi) {
        return Edge{EdgeKind::TwoEnded, std::move(a), std::move(b), std::move(chi)};
    }
    static Edge loop(std::string a, Character chi) {
        Edge e{EdgeKind::Loop, a, std::move(a), std::move(chi)};
        e.y = e.x;
        return e;
    }
};

// Singular-surface gluing data. The point order is semantically meaningful:
// TriplePlane(x, y, z) imposes f_x ≡ f_y ≡ f_z mod α and
// f_x − 2·f_y + f_z ≡ 0 mod α²; QuadRuled(x, y, z, t) — with x, z on one
// invariant section and y, t on the other — imposes the four cyclic mod-α
// congruences and f_x − f_y + f_z − f_t ≡ 0 mod α².
enum class SurfaceKind { TriplePlane, QuadRuled };

struct SurfaceRelation {
    SurfaceKind kind = SurfaceKind::TriplePlane;
    std::vector<std::string> points; // 3 or 4, ordered
    Character root;
};

struct WeylGenerator {
    std::map<std::string, std::string> vertex_perm;
    IntMatrix char_matrix; // acts on the character lattice; invertible over Q
};

struct WeylAction {
    std::vector<WeylGenerator> generators;
};

struct GkmGraph {
    int torus_rank = 1;
    std::vector<std::string> vertices;
    std::vector<Edge> edges; // two-ended entries first, then loops
    std::vector<SurfaceRelation> surface_relations;
    std::optional<WeylAction> weyl;

    int vertex_index(const std::string& name) const; // -1 when absent
    int two_ended_count() const;
};

struct ValidationIssue {
    std::string code;    // e.g. "ZeroCharacter", "UnknownVertex"
    std::string message;
    bool warning = false;
};

struct ValidationReport {
    std::vector<ValidationIssue> items;
    bool ok() const {
        for (const auto& i : items)
            if (!i.warning) return false;
        return true;
    }
    std::string str() const;
};

inline constexpr int kDefaultWeylClosureBound = 10000;

// Checks every structural invariant; violations are collected, not thrown.
// A disconnected gluing graph is reported as a warning (the degree-zero
// piece then has dimension > 1).
ValidationReport validate(const GkmGraph& g, int weyl_closure_bound = kDefaultWeylClosureBound);

// Product of fixed-point sets and one-dimensional orbits; characters are
// padded with zeros into the joint lattice. Weyl data does not propagate.
GkmGraph product(const GkmGraph& g1, const GkmGraph& g2);

// Constraints grouped by the rational line spanned by their character/root.
struct Stratum {
    Character direction;            // primitive, first nonzero coordinate > 0
    std::vector<int> member_edges;      // indices into edges (loops included)
    std::vector<int> member_relations;  // indices into surface_relations
};

struct StrataReport {
    std::vector<Stratum> strata; // sorted by direction
};

// Primitive representative with positive leading coordinate.
Character canonical_direction(const Character& chi);

StrataReport strata_by_subtorus(const GkmGraph& g);

// Number of distinct group elements generated by the Weyl generators, or -1
// when closure exceeds the bound. 1 for an empty generator list.
int weyl_closure_size(const GkmGraph& g, int bound = kDefaultWeylClosureBound);

// JSON round trip. parse throws SchemaError (shape) or ValidationError
// (invariants, carrying the report); serialize emits the canonical form:
// fixed key order, two-space indent, trailing newline.
GkmGraph parse_graph(const std::string& text);
std::string serialize_graph(const GkmGraph& g);

bool graphs_equal(const GkmGraph& a, const GkmGraph& b);

// Human-readable name of a constraint, used by membership diagnostics and
// strata listings: edges "edge[i] {x,y} chi=(...)", loops "loop[j] at x",
// relations "surface_relation[k] triple_plane(x,y,z) root=(...)".
std::string constraint_label_edge(const GkmGraph& g, int edge_index);
std::string constraint_label_relation(const GkmGraph& g, int relation_index);

std::string strata_to_json(const GkmGraph& g, const StrataReport& r);

} // namespace gkm
