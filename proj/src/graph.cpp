#include "gkm/graph.hpp"

#include "gkm/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace gkm {

int GkmGraph::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int GkmGraph::two_ended_count() const {
    int n = 0;
    for (const auto& e : edges)
        if (e.kind == EdgeKind::TwoEnded) ++n;
    return n;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (const auto& i : items)
        os << (i.warning ? "warning" : "violation") << " " << i.code << ": " << i.message << "\n";
    return os.str();
}

namespace {

// Union-find over vertex indices, used for the connectivity warning.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

std::string mat_str(const IntMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.n; ++i) {
        if (i) s += ";";
        for (int j = 0; j < m.n; ++j) {
            if (j) s += ",";
            s += m.at(i, j).get_str();
        }
    }
    return s + "]";
}

} // namespace

ValidationReport validate(const GkmGraph& g, int weyl_closure_bound) {
    ValidationReport rep;
    auto add = [&rep](const std::string& code, const std::string& msg, bool warn = false) {
        rep.items.push_back({code, msg, warn});
    };
    if (g.torus_rank < 1) add("InvalidRank", "torus_rank must be a positive integer");
    {
        std::set<std::string> seen;
        for (const auto& v : g.vertices)
            if (!seen.insert(v).second) add("DuplicateVertex", "vertex '" + v + "' listed twice");
    }
    auto check_char = [&](const Character& chi, const std::string& where) {
        if (chi.rank() != g.torus_rank)
            add("CharacterLength", where + ": character " + chi.str() + " has length " +
                                       std::to_string(chi.rank()) + ", expected " +
                                       std::to_string(g.torus_rank));
        else if (chi.is_zero())
            add("ZeroCharacter", where + ": character is the zero vector");
    };
    bool loops_started = false;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        std::string where = "edge " + std::to_string(i);
        if (e.kind == EdgeKind::Loop) {
            loops_started = true;
            if (e.y != e.x) add("MalformedLoop", where + ": loop endpoints differ");
            if (g.vertex_index(e.x) < 0) add("UnknownVertex", where + ": vertex '" + e.x + "'");
        } else {
            if (loops_started) add("EdgeOrder", where + ": two-ended edge listed after a loop");
            if (e.x == e.y) add("DistinctEndpoints", where + ": endpoints must differ (use a loop)");
            if (g.vertex_index(e.x) < 0) add("UnknownVertex", where + ": vertex '" + e.x + "'");
            if (g.vertex_index(e.y) < 0) add("UnknownVertex", where + ": vertex '" + e.y + "'");
        }
        check_char(e.character, where);
    }
    for (size_t i = 0; i < g.surface_relations.size(); ++i) {
        const SurfaceRelation& s = g.surface_relations[i];
        std::string where = "surface_relation " + std::to_string(i);
        size_t want = s.kind == SurfaceKind::TriplePlane ? 3 : 4;
        if (s.points.size() != want)
            add("RelationPoints", where + ": expected " + std::to_string(want) + " points, got " +
                                      std::to_string(s.points.size()));
        std::set<std::string> seen;
        for (const auto& p : s.points) {
            if (g.vertex_index(p) < 0) add("UnknownVertex", where + ": vertex '" + p + "'");
            if (!seen.insert(p).second) add("RelationPoints", where + ": point '" + p + "' repeated");
        }
        check_char(s.root, where);
    }
    if (g.weyl) {
        for (size_t k = 0; k < g.weyl->generators.size(); ++k) {
            const WeylGenerator& w = g.weyl->generators[k];
            std::string where = "weyl generator " + std::to_string(k);
            if (w.char_matrix.n != g.torus_rank)
                add("WeylMatrix", where + ": char_matrix is " + std::to_string(w.char_matrix.n) +
                                      "x" + std::to_string(w.char_matrix.n) + ", expected rank " +
                                      std::to_string(g.torus_rank));
            else if (int_det(w.char_matrix) == 0)
                add("WeylMatrixSingular", where + ": char_matrix " + mat_str(w.char_matrix) +
                                              " is singular");
            std::set<std::string> images;
            if (w.vertex_perm.size() != g.vertices.size())
                add("WeylPermutation", where + ": permutation must cover all vertices");
            for (const auto& [from, to] : w.vertex_perm) {
                if (g.vertex_index(from) < 0) add("UnknownVertex", where + ": vertex '" + from + "'");
                if (g.vertex_index(to) < 0) add("UnknownVertex", where + ": vertex '" + to + "'");
                if (!images.insert(to).second)
                    add("WeylPermutation", where + ": image '" + to + "' repeated");
            }
        }
        if (rep.ok()) {
            int n = weyl_closure_size(g, weyl_closure_bound);
            if (n < 0)
                add("WeylClosureExceeded", "generated symmetry group exceeds the closure bound " +
                                               std::to_string(weyl_closure_bound));
        }
    }
    // Connectivity warning: two-ended edges and surface relations glue their
    // points; each connected component contributes one independent constant.
    if (rep.ok() && g.vertices.size() > 1) {
        Dsu dsu(static_cast<int>(g.vertices.size()));
        for (const auto& e : g.edges)
            if (e.kind == EdgeKind::TwoEnded) dsu.join(g.vertex_index(e.x), g.vertex_index(e.y));
        for (const auto& s : g.surface_relations)
            for (size_t i = 1; i < s.points.size(); ++i)
                dsu.join(g.vertex_index(s.points[0]), g.vertex_index(s.points[i]));
        std::set<int> roots;
        for (size_t i = 0; i < g.vertices.size(); ++i) roots.insert(dsu.find(static_cast<int>(i)));
        if (roots.size() > 1)
            add("Disconnected",
                "gluing graph has " + std::to_string(roots.size()) +
                    " connected components; the degree-0 piece has that dimension",
                true);
    }
    return rep;
}

namespace {

Character pad_character(const Character& chi, int left_zeros, int total) {
    Character out;
    out.coords.assign(total, 0);
    for (int i = 0; i < chi.rank(); ++i) out.coords[left_zeros + i] = chi.coords[i];
    return out;
}

std::string pair_name(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

} // namespace

GkmGraph product(const GkmGraph& g1, const GkmGraph& g2) {
    if (!g1.surface_relations.empty() || !g2.surface_relations.empty())
        throw GkmError(Errc::UnsupportedSurfaceRelations,
                       "products are defined for graphs without surface relations");
    GkmGraph out;
    out.torus_rank = g1.torus_rank + g2.torus_rank;
    for (const auto& a : g1.vertices)
        for (const auto& b : g2.vertices) out.vertices.push_back(pair_name(a, b));
    auto add_edges = [&out](const GkmGraph& ga, const GkmGraph& gb, bool a_side, EdgeKind kind) {
        // Edges of one factor, copied over every vertex of the other factor.
        for (const auto& e : ga.edges) {
            if (e.kind != kind) continue;
            for (const auto& v : gb.vertices) {
                Character chi = a_side ? pad_character(e.character, 0, out.torus_rank)
                                       : pad_character(e.character, gb.torus_rank, out.torus_rank);
                std::string x = a_side ? pair_name(e.x, v) : pair_name(v, e.x);
                if (kind == EdgeKind::Loop) {
                    out.edges.push_back(Edge::loop(x, chi));
                } else {
                    std::string y = a_side ? pair_name(e.y, v) : pair_name(v, e.y);
                    out.edges.push_back(Edge::two_ended(x, y, chi));
                }
            }
        }
    };
    add_edges(g1, g2, true, EdgeKind::TwoEnded);
    add_edges(g2, g1, false, EdgeKind::TwoEnded);
    add_edges(g1, g2, true, EdgeKind::Loop);
    add_edges(g2, g1, false, EdgeKind::Loop);
    return out;
}

Character canonical_direction(const Character& chi) {
    Character c = primitive_part(chi);
    for (const auto& x : c.coords) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : c.coords) y = -y;
        break;
    }
    return c;
}

StrataReport strata_by_subtorus(const GkmGraph& g) {
    std::map<Character, Stratum> by_dir;
    auto stratum_for = [&by_dir](const Character& chi) -> Stratum& {
        Character dir = canonical_direction(chi);
        auto it = by_dir.find(dir);
        if (it == by_dir.end()) it = by_dir.emplace(dir, Stratum{dir, {}, {}}).first;
        return it->second;
    };
    for (size_t i = 0; i < g.edges.size(); ++i)
        stratum_for(g.edges[i].character).member_edges.push_back(static_cast<int>(i));
    for (size_t i = 0; i < g.surface_relations.size(); ++i)
        stratum_for(g.surface_relations[i].root).member_relations.push_back(static_cast<int>(i));
    StrataReport rep;
    for (auto& [dir, s] : by_dir) rep.strata.push_back(std::move(s));
    return rep;
}

int weyl_closure_size(const GkmGraph& g, int bound) {
    if (!g.weyl) return 1;
    using Element = std::pair<std::vector<int>, IntMatrix>;
    int n = static_cast<int>(g.vertices.size());
    std::vector<Element> gens;
    for (const auto& w : g.weyl->generators) {
        std::vector<int> perm(n, -1);
        for (const auto& [from, to] : w.vertex_perm) {
            int i = g.vertex_index(from), j = g.vertex_index(to);
            if (i < 0 || j < 0) throw GkmError(Errc::BadArgument, "weyl permutation names unknown vertex");
            perm[i] = j;
        }
        for (int i = 0; i < n; ++i)
            if (perm[i] < 0) throw GkmError(Errc::BadArgument, "weyl permutation misses a vertex");
        gens.push_back({perm, w.char_matrix});
    }
    Element id{std::vector<int>(n), IntMatrix::identity(g.torus_rank)};
    for (int i = 0; i < n; ++i) id.first[i] = i;
    std::set<Element> seen{id};
    std::vector<Element> frontier{id};
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& e : frontier) {
            for (const auto& w : gens) {
                Element f;
                f.first.resize(n);
                for (int i = 0; i < n; ++i) f.first[i] = w.first[e.first[i]];
                f.second = w.second.times(e.second);
                if (seen.insert(f).second) {
                    if (static_cast<int>(seen.size()) > bound) return -1;
                    next.push_back(std::move(f));
                }
            }
        }
        frontier = std::move(next);
    }
    return static_cast<int>(seen.size());
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

long checked_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw GkmError(Errc::SchemaError, path + ": expected an integer");
    return j.get<long>();
}

std::string checked_string(const Json& j, const std::string& path) {
    if (!j.is_string())
        throw GkmError(Errc::SchemaError, path + ": expected a string");
    return j.get<std::string>();
}

Character parse_character(const Json& j, const std::string& path) {
    if (!j.is_array()) throw GkmError(Errc::SchemaError, path + ": expected an integer array");
    Character chi;
    for (size_t i = 0; i < j.size(); ++i)
        chi.coords.emplace_back(checked_int(j[i], path + "/" + std::to_string(i)));
    return chi;
}

long mpz_to_long(const mpz_class& z) {
    if (!z.fits_slong_p())
        throw GkmError(Errc::BadArgument, "integer " + z.get_str() + " too large for JSON output");
    return z.get_si();
}

OJson character_json(const Character& chi) {
    OJson arr = OJson::array();
    for (const auto& c : chi.coords) arr.push_back(mpz_to_long(c));
    return arr;
}

void expect_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw GkmError(Errc::SchemaError, path + ": unknown key '" + it.key() + "'");
}

} // namespace

GkmGraph parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw GkmError(Errc::SchemaError, ex.what());
    }
    if (!j.is_object()) throw GkmError(Errc::SchemaError, "/: expected an object");
    expect_keys(j, "/", {"torus_rank", "vertices", "edges", "loops", "surface_relations", "weyl"});
    if (!j.contains("torus_rank") || !j.contains("vertices") || !j.contains("edges"))
        throw GkmError(Errc::SchemaError, "/: torus_rank, vertices and edges are required");

    GkmGraph g;
    g.torus_rank = static_cast<int>(checked_int(j["torus_rank"], "/torus_rank"));
    if (!j["vertices"].is_array()) throw GkmError(Errc::SchemaError, "/vertices: expected an array");
    for (size_t i = 0; i < j["vertices"].size(); ++i)
        g.vertices.push_back(checked_string(j["vertices"][i], "/vertices/" + std::to_string(i)));

    if (!j["edges"].is_array()) throw GkmError(Errc::SchemaError, "/edges: expected an array");
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        std::string path = "/edges/" + std::to_string(i);
        if (!e.is_object()) throw GkmError(Errc::SchemaError, path + ": expected an object");
        expect_keys(e, path, {"ends", "character"});
        if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2)
            throw GkmError(Errc::SchemaError, path + "/ends: expected a pair of vertex names");
        if (!e.contains("character"))
            throw GkmError(Errc::SchemaError, path + ": character is required");
        Character chi = parse_character(e["character"], path + "/character");
        if (chi.rank() != g.torus_rank)
            throw GkmError(Errc::SchemaError, path + "/character: length " +
                                                  std::to_string(chi.rank()) + " != torus_rank " +
                                                  std::to_string(g.torus_rank));
        g.edges.push_back(Edge::two_ended(checked_string(e["ends"][0], path + "/ends/0"),
                                          checked_string(e["ends"][1], path + "/ends/1"),
                                          std::move(chi)));
    }
    if (j.contains("loops")) {
        if (!j["loops"].is_array()) throw GkmError(Errc::SchemaError, "/loops: expected an array");
        for (size_t i = 0; i < j["loops"].size(); ++i) {
            const auto& e = j["loops"][i];
            std::string path = "/loops/" + std::to_string(i);
            if (!e.is_object()) throw GkmError(Errc::SchemaError, path + ": expected an object");
            expect_keys(e, path, {"at", "character"});
            if (!e.contains("at") || !e.contains("character"))
                throw GkmError(Errc::SchemaError, path + ": at and character are required");
            Character chi = parse_character(e["character"], path + "/character");
            if (chi.rank() != g.torus_rank)
                throw GkmError(Errc::SchemaError, path + "/character: length " +
                                                      std::to_string(chi.rank()) +
                                                      " != torus_rank " +
                                                      std::to_string(g.torus_rank));
            g.edges.push_back(Edge::loop(checked_string(e["at"], path + "/at"), std::move(chi)));
        }
    }
    if (j.contains("surface_relations")) {
        if (!j["surface_relations"].is_array())
            throw GkmError(Errc::SchemaError, "/surface_relations: expected an array");
        for (size_t i = 0; i < j["surface_relations"].size(); ++i) {
            const auto& s = j["surface_relations"][i];
            std::string path = "/surface_relations/" + std::to_string(i);
            if (!s.is_object()) throw GkmError(Errc::SchemaError, path + ": expected an object");
            expect_keys(s, path, {"kind", "points", "root"});
            if (!s.contains("kind") || !s.contains("points") || !s.contains("root"))
                throw GkmError(Errc::SchemaError, path + ": kind, points and root are required");
            std::string kind = checked_string(s["kind"], path + "/kind");
            SurfaceRelation rel;
            if (kind == "triple_plane")
                rel.kind = SurfaceKind::TriplePlane;
            else if (kind == "quad_ruled")
                rel.kind = SurfaceKind::QuadRuled;
            else
                throw GkmError(Errc::SchemaError,
                               path + "/kind: expected 'triple_plane' or 'quad_ruled'");
            if (!s["points"].is_array())
                throw GkmError(Errc::SchemaError, path + "/points: expected an array");
            for (size_t k = 0; k < s["points"].size(); ++k)
                rel.points.push_back(
                    checked_string(s["points"][k], path + "/points/" + std::to_string(k)));
            rel.root = parse_character(s["root"], path + "/root");
            if (rel.root.rank() != g.torus_rank)
                throw GkmError(Errc::SchemaError, path + "/root: length " +
                                                      std::to_string(rel.root.rank()) +
                                                      " != torus_rank " +
                                                      std::to_string(g.torus_rank));
            g.surface_relations.push_back(std::move(rel));
        }
    }
    if (j.contains("weyl") && !j["weyl"].is_null()) {
        const auto& w = j["weyl"];
        if (!w.is_object()) throw GkmError(Errc::SchemaError, "/weyl: expected an object or null");
        expect_keys(w, "/weyl", {"generators"});
        if (!w.contains("generators") || !w["generators"].is_array())
            throw GkmError(Errc::SchemaError, "/weyl/generators: expected an array");
        WeylAction act;
        for (size_t i = 0; i < w["generators"].size(); ++i) {
            const auto& gen = w["generators"][i];
            std::string path = "/weyl/generators/" + std::to_string(i);
            if (!gen.is_object()) throw GkmError(Errc::SchemaError, path + ": expected an object");
            expect_keys(gen, path, {"vertex_perm", "char_matrix"});
            if (!gen.contains("vertex_perm") || !gen["vertex_perm"].is_object())
                throw GkmError(Errc::SchemaError, path + "/vertex_perm: expected an object");
            if (!gen.contains("char_matrix") || !gen["char_matrix"].is_array())
                throw GkmError(Errc::SchemaError, path + "/char_matrix: expected an array");
            WeylGenerator wg;
            for (auto it = gen["vertex_perm"].begin(); it != gen["vertex_perm"].end(); ++it)
                wg.vertex_perm[it.key()] =
                    checked_string(it.value(), path + "/vertex_perm/" + it.key());
            const auto& m = gen["char_matrix"];
            if (static_cast<int>(m.size()) != g.torus_rank)
                throw GkmError(Errc::SchemaError, path + "/char_matrix: expected " +
                                                      std::to_string(g.torus_rank) + " rows");
            wg.char_matrix = IntMatrix(g.torus_rank);
            for (int r = 0; r < g.torus_rank; ++r) {
                if (!m[r].is_array() || static_cast<int>(m[r].size()) != g.torus_rank)
                    throw GkmError(Errc::SchemaError, path + "/char_matrix/" + std::to_string(r) +
                                                          ": expected " +
                                                          std::to_string(g.torus_rank) + " entries");
                for (int c = 0; c < g.torus_rank; ++c)
                    wg.char_matrix.at(r, c) = checked_int(
                        m[r][c], path + "/char_matrix/" + std::to_string(r) + "/" + std::to_string(c));
            }
            act.generators.push_back(std::move(wg));
        }
        g.weyl = std::move(act);
    }
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw GkmError(Errc::ValidationError, "\n" + rep.str());
    return g;
}

std::string serialize_graph(const GkmGraph& g) {
    OJson j;
    j["torus_rank"] = g.torus_rank;
    j["vertices"] = g.vertices;
    OJson edges = OJson::array(), loops = OJson::array();
    for (const auto& e : g.edges) {
        if (e.kind == EdgeKind::TwoEnded) {
            OJson o;
            o["ends"] = {e.x, e.y};
            o["character"] = character_json(e.character);
            edges.push_back(o);
        } else {
            OJson o;
            o["at"] = e.x;
            o["character"] = character_json(e.character);
            loops.push_back(o);
        }
    }
    j["edges"] = edges;
    j["loops"] = loops;
    OJson rels = OJson::array();
    for (const auto& s : g.surface_relations) {
        OJson o;
        o["kind"] = s.kind == SurfaceKind::TriplePlane ? "triple_plane" : "quad_ruled";
        o["points"] = s.points;
        o["root"] = character_json(s.root);
        rels.push_back(o);
    }
    j["surface_relations"] = rels;
    if (g.weyl) {
        OJson gens = OJson::array();
        for (const auto& w : g.weyl->generators) {
            OJson o;
            OJson perm;
            // Canonical key order: the graph's vertex order.
            for (const auto& v : g.vertices) {
                auto it = w.vertex_perm.find(v);
                if (it != w.vertex_perm.end()) perm[v] = it->second;
            }
            for (const auto& [k, v] : w.vertex_perm)
                if (!perm.contains(k)) perm[k] = v;
            o["vertex_perm"] = perm;
            OJson mat = OJson::array();
            for (int r = 0; r < w.char_matrix.n; ++r) {
                OJson row = OJson::array();
                for (int c = 0; c < w.char_matrix.n; ++c)
                    row.push_back(mpz_to_long(w.char_matrix.at(r, c)));
                mat.push_back(row);
            }
            o["char_matrix"] = mat;
            gens.push_back(o);
        }
        j["weyl"] = OJson{{"generators", gens}};
    } else {
        j["weyl"] = nullptr;
    }
    return j.dump(2) + "\n";
}

bool graphs_equal(const GkmGraph& a, const GkmGraph& b) {
    return serialize_graph(a) == serialize_graph(b);
}

std::string constraint_label_edge(const GkmGraph& g, int edge_index) {
    const Edge& e = g.edges.at(edge_index);
    if (e.kind == EdgeKind::Loop) {
        int j = 0;
        for (int i = 0; i < edge_index; ++i)
            if (g.edges[i].kind == EdgeKind::Loop) ++j;
        return "loop[" + std::to_string(j) + "] at " + e.x + " chi=" + e.character.str();
    }
    int j = 0;
    for (int i = 0; i < edge_index; ++i)
        if (g.edges[i].kind == EdgeKind::TwoEnded) ++j;
    return "edge[" + std::to_string(j) + "] {" + e.x + "," + e.y + "} chi=" + e.character.str();
}

std::string constraint_label_relation(const GkmGraph& g, int relation_index) {
    const SurfaceRelation& s = g.surface_relations.at(relation_index);
    std::string pts;
    for (size_t i = 0; i < s.points.size(); ++i) {
        if (i) pts += ",";
        pts += s.points[i];
    }
    return "surface_relation[" + std::to_string(relation_index) + "] " +
           (s.kind == SurfaceKind::TriplePlane ? std::string("triple_plane(") : std::string("quad_ruled(")) +
           pts + ") root=" + s.root.str();
}

std::string strata_to_json(const GkmGraph& g, const StrataReport& r) {
    OJson arr = OJson::array();
    for (const auto& s : r.strata) {
        OJson o;
        o["direction"] = character_json(s.direction);
        OJson edges = OJson::array();
        for (int i : s.member_edges) edges.push_back(constraint_label_edge(g, i));
        o["edges"] = edges;
        OJson rels = OJson::array();
        for (int i : s.member_relations) rels.push_back(constraint_label_relation(g, i));
        o["relations"] = rels;
        arr.push_back(o);
    }
    OJson out;
    out["strata"] = arr;
    return out.dump(2) + "\n";
}

} // namespace gkm
