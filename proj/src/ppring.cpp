#include "gkm/ppring.hpp"

#include "gkm/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gkm {

namespace {

using OJson = nlohmann::ordered_json;

std::vector<Rational> ambient_coeffs(const std::vector<Polynomial>& comps,
                                     const std::vector<Exponents>& mons) {
    std::vector<Rational> out;
    out.reserve(comps.size() * mons.size());
    for (const auto& p : comps)
        for (const auto& m : mons) out.push_back(p.coeff(m));
    return out;
}

} // namespace

std::vector<int> ModulePresentation::generator_degrees() const {
    std::vector<int> out;
    out.reserve(generators.size());
    for (const auto& c : generators) out.push_back(c.degree);
    return out;
}

Solver::Solver(const GkmGraph& g) : g_(g) {
    ValidationReport rep = validate(g);
    if (!rep.ok()) throw GkmError(Errc::ValidationError, "\n" + rep.str());
    auto vx = [this](const std::string& name) { return g_.vertex_index(name); };
    for (size_t i = 0; i < g_.edges.size(); ++i) {
        const Edge& e = g_.edges[i];
        if (e.kind == EdgeKind::Loop) continue; // a single fixed point glues nothing
        patterns_.push_back(Pattern{{{vx(e.x), 1}, {vx(e.y), -1}},
                                    e.character,
                                    1,
                                    false,
                                    static_cast<int>(i)});
    }
    for (size_t i = 0; i < g_.surface_relations.size(); ++i) {
        const SurfaceRelation& s = g_.surface_relations[i];
        int idx = static_cast<int>(i);
        std::vector<int> p;
        for (const auto& name : s.points) p.push_back(vx(name));
        if (s.kind == SurfaceKind::TriplePlane) {
            patterns_.push_back(Pattern{{{p[0], 1}, {p[1], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[1], 1}, {p[2], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[0], 1}, {p[2], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[0], 1}, {p[1], -2}, {p[2], 1}}, s.root, 2, true, idx});
        } else {
            // Cyclic congruences imply equality mod the root for all pairs.
            patterns_.push_back(Pattern{{{p[0], 1}, {p[1], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[1], 1}, {p[2], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[2], 1}, {p[3], -1}}, s.root, 1, true, idx});
            patterns_.push_back(Pattern{{{p[3], 1}, {p[0], -1}}, s.root, 1, true, idx});
            patterns_.push_back(
                Pattern{{{p[0], 1}, {p[1], -1}, {p[2], 1}, {p[3], -1}}, s.root, 2, true, idx});
        }
    }
    for (const auto& pat : patterns_) {
        Character dir = canonical_direction(pat.direction);
        if (directions_.count(dir)) continue;
        DirectionData dd;
        dd.images = adapted_images(unimodular_change(dir));
        directions_.emplace(std::move(dir), std::move(dd));
    }
}

long Solver::ambient_dim(int d) const {
    return static_cast<long>(g_.vertices.size()) * monomial_count(g_.torus_rank, d);
}

const Solver::DirectionData& Solver::direction_data(const Character& chi) const {
    return directions_.at(canonical_direction(chi));
}

Solver::SubTable Solver::sub_table(const DirectionData& dir, int d,
                                   const std::vector<Exponents>& mons) const {
    int r = g_.torus_rank;
    SubTable tab;
    // Low target monomials: first-variable exponent 0, then 1, each group in
    // ascending grlex order of the remaining variables.
    std::map<Exponents, int, GrlexLess> row_of;
    auto add_targets = [&](int e1, int degree_rest) {
        for (const auto& tail : monomials_of_degree(r - 1, degree_rest)) {
            Exponents full(r);
            full[0] = e1;
            std::copy(tail.begin(), tail.end(), full.begin() + 1);
            int row = static_cast<int>(row_of.size());
            row_of.emplace(std::move(full), row);
        }
    };
    add_targets(0, d);
    tab.n0 = static_cast<int>(row_of.size());
    add_targets(1, d - 1);
    tab.n1 = static_cast<int>(row_of.size()) - tab.n0;
    tab.coeffs = QMatrix(tab.n0 + tab.n1, static_cast<int>(mons.size()));
    for (size_t j = 0; j < mons.size(); ++j) {
        Polynomial image = Polynomial(r);
        {
            Polynomial m(r);
            m.set_coeff(mons[j], Rational(1));
            image = m.substitute_linear(dir.images);
        }
        for (const auto& [e, c] : image.terms()) {
            auto it = row_of.find(e);
            if (it == row_of.end()) continue; // first-variable exponent >= 2
            tab.coeffs.at(it->second, static_cast<int>(j)) = c;
        }
    }
    return tab;
}

void Solver::append_pattern_rows(QMatrix& m, const Pattern& p, const SubTable& tab,
                                 long block_size) const {
    int nrows = p.order >= 2 ? tab.n0 + tab.n1 : tab.n0;
    for (int t = 0; t < nrows; ++t) {
        std::vector<Rational> row(static_cast<size_t>(m.cols()), Rational(0));
        for (const auto& [v, coeff] : p.parts) {
            for (int j = 0; j < tab.coeffs.cols(); ++j) {
                const Rational& val = tab.coeffs.at(t, j);
                if (val.is_zero()) continue;
                row[static_cast<size_t>(v) * block_size + j] += val * Rational(coeff);
            }
        }
        m.append_row(row);
    }
}

QMatrix Solver::assemble(const std::vector<const Pattern*>& patterns, int d,
                         const std::vector<Exponents>& mons) const {
    long block = static_cast<long>(mons.size());
    QMatrix m(0, static_cast<int>(g_.vertices.size() * block));
    std::map<Character, SubTable> tables;
    for (const Pattern* p : patterns) {
        Character dir = canonical_direction(p->direction);
        auto it = tables.find(dir);
        if (it == tables.end())
            it = tables.emplace(dir, sub_table(directions_.at(dir), d, mons)).first;
        append_pattern_rows(m, *p, it->second, block);
    }
    return m;
}

QMatrix Solver::constraint_matrix(int d) const {
    std::vector<Exponents> mons = monomials_of_degree(g_.torus_rank, d);
    std::vector<const Pattern*> ptrs;
    for (const auto& p : patterns_) ptrs.push_back(&p);
    return assemble(ptrs, d, mons);
}

Solver::Piece Solver::solve_degree(int d) const {
    std::vector<Exponents> mons = monomials_of_degree(g_.torus_rank, d);
    QMatrix m = constraint_matrix(d);
    RrefResult rr = rref(m);
    auto kernel = kernel_basis_from(rr, m.cols());
    Piece piece;
    piece.free_cols = free_columns(rr, m.cols());
    long block = static_cast<long>(mons.size());
    for (auto& v : kernel) {
        PPClass c;
        c.graph = &g_;
        c.degree = d;
        for (size_t vi = 0; vi < g_.vertices.size(); ++vi) {
            Polynomial p(g_.torus_rank);
            for (long j = 0; j < block; ++j) {
                const Rational& val = v[vi * block + j];
                if (!val.is_zero()) p.set_coeff(mons[j], val);
            }
            c.components.push_back(std::move(p));
        }
        piece.basis.push_back(std::move(c));
    }
    return piece;
}

std::vector<PPClass> Solver::graded_piece(int d) const {
    if (d < 0) throw GkmError(Errc::BadArgument, "degree must be nonnegative");
    return solve_degree(d).basis;
}

HilbertTable Solver::hilbert(int D) const {
    HilbertTable t;
    t.max_degree = D;
    for (int d = 0; d <= D; ++d) {
        QMatrix m = constraint_matrix(d);
        RrefResult rr = rref(m);
        t.dims.push_back(static_cast<long>(m.cols()) - rr.rank);
    }
    return t;
}

ModulePresentation Solver::generators(int D) const {
    ModulePresentation pres;
    pres.graph = &g_;
    pres.certified_to = D;
    int r = g_.torus_rank;
    std::vector<long> dims;
    std::vector<PPClass> prev_basis;
    for (int d = 0; d <= D; ++d) {
        std::vector<Exponents> mons = monomials_of_degree(r, d);
        Piece piece = solve_degree(d);
        long dim = static_cast<long>(piece.basis.size());
        dims.push_back(dim);
        long block = static_cast<long>(mons.size());
        // Span of variable-times-lower-degree-basis inside this degree,
        // in coordinates given by the free columns (every solution vector is
        // determined by its free-column entries).
        RowSpan span;
        int new_count = 0;
        for (int i = 0; i < r && span.rank() < dim; ++i) {
            for (const auto& b : prev_basis) {
                if (span.rank() >= dim) break;
                std::vector<Rational> proj;
                proj.reserve(piece.free_cols.size());
                bool nonzero = false;
                for (int fc : piece.free_cols) {
                    long v = fc / block, j = fc % block;
                    Exponents e = mons[j];
                    if (e[static_cast<size_t>(i)] == 0) {
                        proj.push_back(Rational(0));
                        continue;
                    }
                    --e[static_cast<size_t>(i)];
                    Rational c = b.components[v].coeff(e);
                    if (!c.is_zero()) nonzero = true;
                    proj.push_back(std::move(c));
                }
                if (nonzero) span.insert(std::move(proj));
            }
        }
        // Extend to a full basis; ties broken by kernel-basis order. The
        // k-th basis vector projects to the k-th coordinate vector.
        for (long k = 0; k < dim; ++k) {
            std::vector<Rational> unit(static_cast<size_t>(dim), Rational(0));
            unit[k] = Rational(1);
            if (span.insert(std::move(unit))) {
                pres.generators.push_back(piece.basis[k]);
                ++new_count;
            }
        }
        pres.new_generator_counts.push_back(new_count);
        prev_basis = std::move(piece.basis);
    }
    // Freeness bookkeeping: compare dimensions against the free prediction
    // and require a quiet top window of ceil(r/2)+1 degrees.
    pres.free = Freeness::Certified;
    pres.witness_degree = -1;
    for (int d = 0; d <= D; ++d) {
        long pred = 0;
        for (const auto& gen : pres.generators)
            if (gen.degree <= d) pred += monomial_count(r, d - gen.degree);
        if (dims[d] != pred) {
            pres.free = Freeness::Witness;
            pres.witness_degree = d;
            break;
        }
    }
    if (pres.free == Freeness::Certified) {
        int window = (r + 1) / 2 + 1;
        for (const auto& gen : pres.generators)
            if (gen.degree > D - window) pres.free = Freeness::Unknown;
    }
    pres.rank_equals_fixed_points = pres.generators.size() == g_.vertices.size();
    return pres;
}

FreenessInfo Solver::freeness_certificate(int D) const {
    ModulePresentation pres = generators(D);
    FreenessInfo info;
    info.status = pres.free;
    info.witness_degree = pres.witness_degree;
    info.certified_to = D;
    info.generator_degrees = pres.generator_degrees();
    info.rank_equals_fixed_points = pres.rank_equals_fixed_points;
    return info;
}

std::vector<int> Solver::mod_delta_dims(int D) const {
    return generators(D).new_generator_counts;
}

HilbertTable Solver::weyl_invariants(int D) const {
    if (!g_.weyl) throw GkmError(Errc::NoWeylData, "graph carries no symmetry data");
    int r = g_.torus_rank;
    size_t nv = g_.vertices.size();
    struct ResolvedGen {
        std::vector<int> inv_perm;          // x -> sigma^{-1}(x)
        std::vector<Polynomial> images;     // variable substitution by M^{-1}
    };
    std::vector<ResolvedGen> gens;
    for (const auto& w : g_.weyl->generators) {
        ResolvedGen rg;
        rg.inv_perm.assign(nv, -1);
        for (const auto& [from, to] : w.vertex_perm)
            rg.inv_perm[g_.vertex_index(to)] = g_.vertex_index(from);
        // Rational inverse of the lattice action.
        QMatrix aug(r, 2 * r);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) aug.at(i, j) = Rational(w.char_matrix.at(i, j));
            aug.at(i, r + i) = Rational(1);
        }
        RrefResult rr = rref(aug);
        if (rr.rank < r) throw GkmError(Errc::ValidationError, "singular symmetry matrix");
        for (int i = 0; i < r; ++i) {
            Polynomial img(r);
            for (int j = 0; j < r; ++j) {
                const Rational& c = rr.matrix.at(i, r + j);
                if (c.is_zero()) continue;
                Exponents e(r, 0);
                e[j] = 1;
                img.set_coeff(e, c);
            }
            rg.images.push_back(std::move(img));
        }
        gens.push_back(std::move(rg));
    }
    HilbertTable t;
    t.max_degree = D;
    for (int d = 0; d <= D; ++d) {
        std::vector<Exponents> mons = monomials_of_degree(r, d);
        std::vector<PPClass> basis = graded_piece(d);
        long dim = static_cast<long>(basis.size());
        if (dim == 0) {
            t.dims.push_back(0);
            continue;
        }
        long ambient = static_cast<long>(nv) * static_cast<long>(mons.size());
        QMatrix m(static_cast<int>(ambient * static_cast<long>(gens.size())),
                  static_cast<int>(dim));
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            for (long k = 0; k < dim; ++k) {
                // Column block: ambient vector of (moved class) - (class).
                std::vector<Polynomial> moved;
                moved.reserve(nv);
                for (size_t x = 0; x < nv; ++x)
                    moved.push_back(
                        basis[k].components[gens[gi].inv_perm[x]].substitute_linear(gens[gi].images));
                long row0 = static_cast<long>(gi) * ambient;
                for (size_t x = 0; x < nv; ++x)
                    for (size_t j = 0; j < mons.size(); ++j) {
                        Rational delta = moved[x].coeff(mons[j]) - basis[k].components[x].coeff(mons[j]);
                        if (!delta.is_zero())
                            m.at(static_cast<int>(row0 + x * mons.size() + j), static_cast<int>(k)) =
                                std::move(delta);
                    }
            }
        }
        t.dims.push_back(static_cast<long>(kernel_basis(m).size()));
    }
    return t;
}

MembershipReport Solver::membership_report(const std::vector<Polynomial>& comps) const {
    if (comps.size() != g_.vertices.size())
        throw GkmError(Errc::BadArgument, "expected one component per vertex");
    int degree = -1;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (!comps[i].is_homogeneous())
            throw GkmError(Errc::DegreeMismatch,
                           "component at vertex '" + g_.vertices[i] + "' is not homogeneous");
        if (comps[i].is_zero()) continue;
        if (degree >= 0 && comps[i].degree() != degree)
            throw GkmError(Errc::DegreeMismatch, "components have different degrees");
        degree = comps[i].degree();
    }
    for (const auto& p : patterns_) {
        Polynomial combo(g_.torus_rank);
        for (const auto& [v, coeff] : p.parts)
            combo += comps[v].scaled(Rational(coeff));
        if (vanishing_order(combo, p.direction) < p.order) {
            std::string label = p.from_relation ? constraint_label_relation(g_, p.source_index)
                                                : constraint_label_edge(g_, p.source_index);
            return {false, label};
        }
    }
    return {true, ""};
}

bool Solver::membership(const std::vector<Polynomial>& comps) const {
    return membership_report(comps).member;
}

PPClass Solver::make_class(std::vector<Polynomial> comps) const {
    MembershipReport rep = membership_report(comps);
    if (!rep.member)
        throw GkmError(Errc::NotMember, "violates " + rep.first_violation);
    PPClass c;
    c.graph = &g_;
    c.degree = 0;
    for (const auto& p : comps)
        if (!p.is_zero()) c.degree = p.degree();
    c.components = std::move(comps);
    return c;
}

std::vector<std::vector<Rational>> Solver::stratum_solution_basis(const Stratum& s, int d) const {
    std::vector<Exponents> mons = monomials_of_degree(g_.torus_rank, d);
    std::vector<const Pattern*> ptrs;
    for (const auto& p : patterns_) {
        bool in_stratum = false;
        if (p.from_relation) {
            for (int i : s.member_relations)
                if (i == p.source_index) in_stratum = true;
        } else {
            for (int i : s.member_edges)
                if (i == p.source_index) in_stratum = true;
        }
        if (in_stratum) ptrs.push_back(&p);
    }
    QMatrix m = assemble(ptrs, d, mons);
    return kernel_basis(m);
}

std::vector<Rational> Solver::ambient_vector(const std::vector<Polynomial>& comps, int d) const {
    if (comps.size() != g_.vertices.size())
        throw GkmError(Errc::BadArgument, "expected one component per vertex");
    return ambient_coeffs(comps, monomials_of_degree(g_.torus_rank, d));
}

// ---------------------------------------------------------------------------
// Operation-level wrappers

std::vector<PPClass> graded_piece(const GkmGraph& g, int d) { return Solver(g).graded_piece(d); }
HilbertTable hilbert(const GkmGraph& g, int D) { return Solver(g).hilbert(D); }
ModulePresentation generators(const GkmGraph& g, int D) { return Solver(g).generators(D); }
FreenessInfo freeness_certificate(const GkmGraph& g, int D) {
    return Solver(g).freeness_certificate(D);
}
std::vector<int> mod_delta_dims(const GkmGraph& g, int D) { return Solver(g).mod_delta_dims(D); }
HilbertTable weyl_invariants(const GkmGraph& g, int D) { return Solver(g).weyl_invariants(D); }
bool membership(const GkmGraph& g, const std::vector<Polynomial>& comps) {
    return Solver(g).membership(comps);
}

PPClass cup(const PPClass& a, const PPClass& b) {
    if (a.graph == nullptr || b.graph == nullptr)
        throw GkmError(Errc::GraphMismatch, "class without a graph");
    if (a.graph != b.graph && !graphs_equal(*a.graph, *b.graph))
        throw GkmError(Errc::GraphMismatch, "operands live over different graphs");
    PPClass out;
    out.graph = a.graph;
    out.degree = a.degree + b.degree;
    for (size_t i = 0; i < a.components.size(); ++i)
        out.components.push_back(multiply(a.components[i], b.components[i]));
    // Closure under products is a theorem about the congruence system; a
    // failure here is an internal fault.
    if (!Solver(*a.graph).membership(out.components))
        throw std::logic_error("product of members failed a congruence");
    return out;
}

std::vector<Polynomial> express_in_basis(const PPClass& c, const ModulePresentation& pres) {
    if (c.graph == nullptr || pres.graph == nullptr)
        throw GkmError(Errc::GraphMismatch, "class or presentation without a graph");
    if (c.graph != pres.graph && !graphs_equal(*c.graph, *pres.graph))
        throw GkmError(Errc::GraphMismatch, "class and presentation live over different graphs");
    const GkmGraph& g = *pres.graph;
    int d = c.degree;
    if (pres.certified_to < d)
        throw GkmError(Errc::NotInSpan,
                       "presentation truncated below degree " + std::to_string(d));
    if (pres.free != Freeness::Certified)
        throw GkmError(Errc::NonUniqueSolution,
                       "presentation is not certified free; coefficients would not be unique");
    int r = g.torus_rank;
    std::vector<Exponents> mons = monomials_of_degree(r, d);
    long ambient = static_cast<long>(g.vertices.size()) * static_cast<long>(mons.size());
    // One column per (generator, coefficient monomial) pair.
    struct Col {
        size_t gen;
        Exponents mon;
    };
    std::vector<Col> cols;
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        int dg = pres.generators[i].degree;
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(r, d - dg)) cols.push_back({i, m});
    }
    QMatrix m(static_cast<int>(ambient), static_cast<int>(cols.size()));
    for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
        const PPClass& gen = pres.generators[cols[cidx].gen];
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            Polynomial shifted = gen.components[v].shifted(cols[cidx].mon, Rational(1));
            for (const auto& [e, val] : shifted.terms()) {
                auto pos = std::lower_bound(mons.begin(), mons.end(), e, GrlexLess{});
                long j = pos - mons.begin();
                m.at(static_cast<int>(v * mons.size() + j), static_cast<int>(cidx)) = val;
            }
        }
    }
    std::vector<Rational> rhs = ambient_coeffs(c.components, mons);
    std::vector<Rational> x;
    SolveOutcome outcome = solve(m, rhs, x);
    if (outcome == SolveOutcome::NoSolution)
        throw GkmError(Errc::NotInSpan, "class is not an S-combination of the generators");
    if (outcome == SolveOutcome::Underdetermined)
        throw GkmError(Errc::NonUniqueSolution, "generators are dependent at this degree");
    std::vector<Polynomial> out(pres.generators.size(), Polynomial(r));
    for (size_t cidx = 0; cidx < cols.size(); ++cidx)
        if (!x[cidx].is_zero()) out[cols[cidx].gen].add_to_coeff(cols[cidx].mon, x[cidx]);
    return out;
}

int default_max_degree(const GkmGraph& g) {
    int max_order = g.surface_relations.empty() ? 1 : 2;
    return 2 * max_order + g.torus_rank + 2;
}

// ---------------------------------------------------------------------------
// JSON

std::string hilbert_to_json(const HilbertTable& t) {
    OJson j;
    j["max_degree"] = t.max_degree;
    j["dims"] = t.dims;
    return j.dump(2) + "\n";
}

namespace {

std::string freeness_string(Freeness f, int witness) {
    switch (f) {
        case Freeness::Certified: return "certified";
        case Freeness::Witness: return "witness:" + std::to_string(witness);
        case Freeness::Unknown: return "unknown";
    }
    return "unknown";
}

OJson poly_json(const Polynomial& p) { return OJson::parse(polynomial_to_json(p)); }

} // namespace

std::string presentation_to_json(const ModulePresentation& p) {
    OJson j;
    j["generator_degrees"] = p.generator_degrees();
    OJson gens = OJson::array();
    for (const auto& g : p.generators) {
        OJson comps = OJson::array();
        for (const auto& poly : g.components) comps.push_back(poly_json(poly));
        gens.push_back(comps);
    }
    j["generators"] = gens;
    j["free"] = freeness_string(p.free, p.witness_degree);
    j["rank_equals_fixed_points"] = p.rank_equals_fixed_points;
    return j.dump(2) + "\n";
}

std::string freeness_to_json(const FreenessInfo& f) {
    OJson j;
    j["free"] = freeness_string(f.status, f.witness_degree);
    j["certified_to"] = f.certified_to;
    j["generator_degrees"] = f.generator_degrees;
    j["generator_count"] = f.generator_degrees.size();
    j["rank_equals_fixed_points"] = f.rank_equals_fixed_points;
    return j.dump(2) + "\n";
}

std::string class_to_json(const PPClass& c) {
    OJson j;
    for (size_t i = 0; i < c.components.size(); ++i)
        j[c.graph->vertices[i]] = poly_json(c.components[i]);
    return j.dump(2) + "\n";
}

std::vector<Polynomial> parse_class_components(const std::string& text, const GkmGraph& g) {
    OJson j;
    try {
        j = OJson::parse(text);
    } catch (const OJson::exception& ex) {
        throw GkmError(Errc::SchemaError, std::string("class literal: ") + ex.what());
    }
    if (!j.is_object()) throw GkmError(Errc::SchemaError, "class literal: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (g.vertex_index(it.key()) < 0)
            throw GkmError(Errc::SchemaError, "class literal: unknown vertex '" + it.key() + "'");
    std::vector<Polynomial> comps;
    for (const auto& v : g.vertices) {
        if (!j.contains(v))
            throw GkmError(Errc::SchemaError, "class literal: missing vertex '" + v + "'");
        const auto& val = j[v];
        if (val.is_number_integer()) {
            comps.push_back(Polynomial::constant(g.torus_rank, Rational(val.get<long>())));
        } else if (val.is_array()) {
            comps.push_back(polynomial_from_json(val.dump(), g.torus_rank));
        } else {
            throw GkmError(Errc::SchemaError, "class literal: vertex '" + v +
                                                  "': expected a term array or an integer");
        }
    }
    return comps;
}

PPClass parse_class_literal(const std::string& text, const GkmGraph& g) {
    return Solver(g).make_class(parse_class_components(text, g));
}

} // namespace gkm
