#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph.hpp"
#include "gkm/oracle.hpp"
#include "gkm/ppring.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gkm;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GkmError(Errc::BadArgument, "file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw GkmError(Errc::BadArgument, "cannot write: " + path);
    out << text;
}

GkmGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

template <typename T>
std::string dims_line(const std::vector<T>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string freeness_word(Freeness f, int witness) {
    switch (f) {
        case Freeness::Certified: return "certified";
        case Freeness::Witness: return "witness at degree " + std::to_string(witness);
        default: return "unknown";
    }
}

struct CommonOpts {
    std::string graph_path;
    int max_degree = -1;
    std::string format = "table";
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_degree = true) {
    sub->add_option("graph", o.graph_path, "graph JSON file")->required();
    if (with_degree) sub->add_option("--max-degree", o.max_degree, "truncation degree (default: solver formula)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
}

int resolve_degree(const GkmGraph& g, int requested) {
    return requested >= 0 ? requested : default_max_degree(g);
}

void cmd_hilbert(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    int D = resolve_degree(g, o.max_degree);
    HilbertTable t = Solver(g).hilbert(D);
    if (o.format == "json") {
        std::cout << hilbert_to_json(t);
    } else {
        std::cout << dims_line(t.dims) << "\n" << "max degree: " << D << "\n";
    }
}

void cmd_generators(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    int D = resolve_degree(g, o.max_degree);
    ModulePresentation p = Solver(g).generators(D);
    if (o.format == "json") {
        std::cout << presentation_to_json(p);
        return;
    }
    std::cout << "generator degrees: " << dims_line(p.generator_degrees()) << "\n";
    std::cout << "freeness: " << freeness_word(p.free, p.witness_degree) << "\n";
    std::cout << "rank equals fixed points: " << (p.rank_equals_fixed_points ? "yes" : "no") << "\n";
    for (size_t i = 0; i < p.generators.size(); ++i) {
        std::cout << "generator " << i << " (degree " << p.generators[i].degree << "):\n";
        for (size_t v = 0; v < g.vertices.size(); ++v)
            std::cout << "  " << g.vertices[v] << ": " << p.generators[i].components[v].str() << "\n";
    }
    std::cout << "max degree: " << D << "\n";
}

void cmd_freeness(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    int D = resolve_degree(g, o.max_degree);
    FreenessInfo f = Solver(g).freeness_certificate(D);
    if (o.format == "json") {
        std::cout << freeness_to_json(f);
        return;
    }
    std::cout << "freeness: " << freeness_word(f.status, f.witness_degree) << "\n";
    std::cout << "generator degrees: " << dims_line(f.generator_degrees) << "\n";
    std::cout << "rank equals fixed points: " << (f.rank_equals_fixed_points ? "yes" : "no") << "\n";
    std::cout << "max degree: " << f.certified_to << "\n";
}

void cmd_mod_delta(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    int D = resolve_degree(g, o.max_degree);
    std::vector<int> dims = Solver(g).mod_delta_dims(D);
    if (o.format == "json") {
        HilbertTable t;
        t.max_degree = D;
        t.dims.assign(dims.begin(), dims.end());
        std::cout << hilbert_to_json(t);
    } else {
        std::cout << dims_line(dims) << "\n" << "max degree: " << D << "\n";
    }
}

void cmd_invariants(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    int D = resolve_degree(g, o.max_degree);
    HilbertTable t = Solver(g).weyl_invariants(D);
    if (o.format == "json") {
        std::cout << hilbert_to_json(t);
    } else {
        std::cout << dims_line(t.dims) << "\n" << "max degree: " << D << "\n";
    }
}

void cmd_cup(const CommonOpts& o, const std::vector<std::string>& class_paths) {
    if (class_paths.size() != 2)
        throw GkmError(Errc::BadArgument, "cup needs exactly two --class operands");
    GkmGraph g = load_graph(o.graph_path);
    PPClass a = parse_class_literal(read_file(class_paths[0]), g);
    PPClass b = parse_class_literal(read_file(class_paths[1]), g);
    PPClass c = cup(a, b);
    if (o.format == "json") {
        std::cout << class_to_json(c);
        return;
    }
    std::cout << "degree: " << c.degree << "\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        std::cout << g.vertices[v] << ": " << c.components[v].str() << "\n";
}

void cmd_membership(const CommonOpts& o, const std::string& class_path) {
    GkmGraph g = load_graph(o.graph_path);
    auto comps = parse_class_components(read_file(class_path), g);
    MembershipReport rep = Solver(g).membership_report(comps);
    if (rep.member)
        std::cout << "member\n";
    else
        std::cout << "not a member: violates " << rep.first_violation << "\n";
}

void cmd_product(const std::string& p1, const std::string& p2, const std::string& emit) {
    GkmGraph g = product(load_graph(p1), load_graph(p2));
    std::string text = serialize_graph(g);
    if (emit.empty())
        std::cout << text;
    else
        write_file(emit, text);
}

void cmd_strata(const CommonOpts& o) {
    GkmGraph g = load_graph(o.graph_path);
    StrataReport r = strata_by_subtorus(g);
    if (o.format == "json") {
        std::cout << strata_to_json(g, r);
        return;
    }
    for (const auto& s : r.strata) {
        std::cout << "direction " << s.direction.str() << ":\n";
        for (int ei : s.member_edges) std::cout << "  " << constraint_label_edge(g, ei) << "\n";
        for (int ri : s.member_relations)
            std::cout << "  " << constraint_label_relation(g, ri) << "\n";
    }
}

// Catalog families reachable by base name + --n; fixed entries by full name.
CatalogEntry catalog_lookup(const std::string& name, int n, bool n_given) {
    if (name == "projective_space" || name == "p") {
        if (!n_given) throw GkmError(Errc::BadArgument, "projective_space needs --n");
        return projective_space(n);
    }
    if (name == "hirzebruch") return hirzebruch(n_given ? n : 1);
    if (name == "weighted_plane") return weighted_plane(n_given ? n : 1);
    if (n_given) throw GkmError(Errc::BadArgument, "--n does not apply to '" + name + "'");
    return entry_by_name(name);
}

void cmd_catalog(const std::string& name, int n, bool n_given, const std::string& emit) {
    if (name.empty()) {
        for (const auto& e : all_entries())
            std::cout << e.name << " — " << e.summary << "\n";
        return;
    }
    CatalogEntry e = catalog_lookup(name, n, n_given);
    if (!emit.empty()) {
        write_file(emit, serialize_graph(e.graph));
        std::string golden = emit;
        std::string suffix = ".json";
        if (golden.size() >= suffix.size() &&
            golden.compare(golden.size() - suffix.size(), suffix.size(), suffix) == 0)
            golden = golden.substr(0, golden.size() - suffix.size());
        write_file(golden + ".golden.json", golden_to_json(e.expected));
        return;
    }
    std::cout << catalog_entry_to_json(e);
}

// Deterministic self-check: recompute every golden through the main solver,
// cross-check low degrees through the slow-path oracle, and (with --all)
// run the invariance and stratification properties. Output is stable across
// runs: fixed seeds, fixed iteration order, no timestamps.
int cmd_verify(bool all) {
    int failures = 0;
    auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok" : "FAIL") << ": " << what << "\n";
        if (!ok) ++failures;
    };
    for (const auto& e : all_entries()) {
        Solver solver(e.graph);
        const int D = 6;
        HilbertTable ht = solver.hilbert(D);
        if (e.expected.hilbert_dims)
            report(ht.dims == *e.expected.hilbert_dims, e.name + " hilbert " + dims_line(ht.dims));
        ModulePresentation pres = solver.generators(D);
        if (e.expected.generator_degrees)
            report(pres.generator_degrees() == *e.expected.generator_degrees,
                   e.name + " generator degrees " + dims_line(pres.generator_degrees()));
        if (e.expected.mod_delta)
            report(solver.mod_delta_dims(D) == *e.expected.mod_delta,
                   e.name + " mod-delta " + dims_line(*e.expected.mod_delta));
        if (e.expected.weyl_invariant_dims)
            report(solver.weyl_invariants(D).dims == *e.expected.weyl_invariant_dims,
                   e.name + " invariants " + dims_line(*e.expected.weyl_invariant_dims));
        std::vector<long> main3(ht.dims.begin(), ht.dims.begin() + 4);
        report(oracle::hilbert_dims(e.graph, 3) == main3, e.name + " oracle agreement (deg <= 3)");
    }
    if (all) {
        for (const auto& e : all_entries()) {
            // Character sign flip and scale by 3 leave every table unchanged.
            GkmGraph flipped = e.graph;
            for (auto& ed : flipped.edges) ed.character = ed.character.negated();
            for (auto& s : flipped.surface_relations) s.root = s.root.negated();
            GkmGraph scaled = e.graph;
            for (auto& ed : scaled.edges) ed.character = ed.character.scaled(3);
            for (auto& s : scaled.surface_relations) s.root = s.root.scaled(3);
            HilbertTable base = Solver(e.graph).hilbert(4);
            report(Solver(flipped).hilbert(4).dims == base.dims, e.name + " sign-flip invariance");
            report(Solver(scaled).hilbert(4).dims == base.dims, e.name + " scale invariance");
            // Strata solution spaces intersect to the full ring.
            Solver solver(e.graph);
            StrataReport strata = strata_by_subtorus(e.graph);
            bool strata_ok = true;
            for (int d = 0; d <= 3; ++d) {
                std::vector<std::vector<Rational>> inter;
                bool first = true;
                for (const auto& s : strata.strata) {
                    auto basis = solver.stratum_solution_basis(s, d);
                    inter = first ? basis : intersect_spans(inter, basis);
                    first = false;
                }
                long got = first ? solver.ambient_dim(d) : static_cast<long>(inter.size());
                if (got != base.dims[static_cast<size_t>(d)]) strata_ok = false;
            }
            report(strata_ok, e.name + " strata intersection identity (deg <= 3)");
        }
    }
    std::cout << (failures == 0 ? "verify passed" : "verify FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on GKM graphs: piecewise-polynomial rings, "
                 "Hilbert tables, generators, cup products, invariants"};
    app.require_subcommand(1);

    CommonOpts hil, gen, fre, mod, inv, cupo, memo, stro;
    std::vector<std::string> cup_classes;
    std::string member_class;
    std::string prod_a, prod_b, prod_emit;
    std::string cat_name, cat_emit;
    int cat_n = 0;
    bool verify_all = false;
    int exit_code = 0;

    auto* c_hil = app.add_subcommand("hilbert", "per-degree dimensions");
    add_common(c_hil, hil);
    c_hil->callback([&] { cmd_hilbert(hil); });

    auto* c_gen = app.add_subcommand("generators", "module generators by degree");
    add_common(c_gen, gen);
    c_gen->callback([&] { cmd_generators(gen); });

    auto* c_fre = app.add_subcommand("freeness", "truncated freeness certificate");
    add_common(c_fre, fre);
    c_fre->callback([&] { cmd_freeness(fre); });

    auto* c_mod = app.add_subcommand("mod-delta", "ordinary quotient dimensions");
    add_common(c_mod, mod);
    c_mod->callback([&] { cmd_mod_delta(mod); });

    auto* c_inv = app.add_subcommand("invariants", "symmetry-invariant dimensions");
    add_common(c_inv, inv);
    c_inv->callback([&] { cmd_invariants(inv); });

    auto* c_cup = app.add_subcommand("cup", "product of two classes");
    add_common(c_cup, cupo, false);
    c_cup->add_option("--class", cup_classes, "class literal JSON file (twice)")->expected(1, 2);
    c_cup->callback([&] { cmd_cup(cupo, cup_classes); });

    auto* c_mem = app.add_subcommand("membership", "check a candidate family");
    add_common(c_mem, memo, false);
    c_mem->add_option("--class", member_class, "class literal JSON file")->required();
    c_mem->callback([&] { cmd_membership(memo, member_class); });

    auto* c_pro = app.add_subcommand("product", "product of two graphs");
    c_pro->add_option("graph1", prod_a, "first graph JSON")->required();
    c_pro->add_option("graph2", prod_b, "second graph JSON")->required();
    c_pro->add_option("--emit", prod_emit, "write result here instead of stdout");
    c_pro->callback([&] { cmd_product(prod_a, prod_b, prod_emit); });

    auto* c_str = app.add_subcommand("strata", "constraints grouped by direction");
    add_common(c_str, stro, false);
    c_str->callback([&] { cmd_strata(stro); });

    auto* c_cat = app.add_subcommand("catalog", "named example graphs");
    c_cat->add_option("name", cat_name, "entry or family name (empty: list)");
    auto* nopt = c_cat->add_option("--n", cat_n, "family parameter");
    c_cat->add_option("--emit", cat_emit, "write the graph JSON here (plus a sibling .golden.json)");
    c_cat->callback([&] { cmd_catalog(cat_name, cat_n, nopt->count() > 0, cat_emit); });

    auto* c_ver = app.add_subcommand("verify", "recompute all pinned tables");
    c_ver->add_flag("--all", verify_all, "also run invariance and strata properties");
    c_ver->callback([&] { exit_code = cmd_verify(verify_all); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const GkmError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
