#pragma once

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

#include <string>
#include <vector>

namespace gkm {

// One element of the ring of piecewise polynomials: a homogeneous polynomial
// per fixed point, satisfying every edge and surface congruence. The graph
// pointer is non-owning; keep the graph alive while classes reference it.
struct PPClass {
    const GkmGraph* graph = nullptr;
    int degree = 0;
    std::vector<Polynomial> components; // one per vertex, in graph vertex order
};

struct HilbertTable {
    int max_degree = -1;
    std::vector<long> dims; // index d = dimension of the degree-d piece
};

enum class Freeness { Certified, Witness, Unknown };

struct FreenessInfo {
    Freeness status = Freeness::Unknown;
    int witness_degree = -1; // first degree where dims contradict freeness
    int certified_to = -1;
    std::vector<int> generator_degrees;
    bool rank_equals_fixed_points = false;
};

struct ModulePresentation {
    const GkmGraph* graph = nullptr;
    int certified_to = -1;
    std::vector<PPClass> generators; // nondecreasing degrees
    Freeness free = Freeness::Unknown;
    int witness_degree = -1;
    bool rank_equals_fixed_points = false;
    std::vector<int> new_generator_counts; // per degree 0..certified_to

    std::vector<int> generator_degrees() const;
};

struct MembershipReport {
    bool member = false;
    std::string first_violation; // empty when member
};

// Per-graph computation context. The constructor validates the graph and
// caches one unimodular coordinate change per distinct constraint direction;
// afterwards every method is const and thread-safe (calls for distinct
// degrees share no mutable state).
class Solver {
public:
    explicit Solver(const GkmGraph& g); // throws ValidationError when invalid

    const GkmGraph& graph() const { return g_; }
    long ambient_dim(int d) const;

    // Deterministic basis of the degree-d piece: the standard free-variable
    // kernel basis of the stacked congruence system on coefficient vectors.
    std::vector<PPClass> graded_piece(int d) const;
    HilbertTable hilbert(int D) const;

    // Degree-by-degree generator extraction: at each degree d the span of
    // {x_i * b : b basis of degree d-1} is extended to a full basis by
    // kernel-basis vectors; the extensions are the degree-d generators.
    ModulePresentation generators(int D) const;
    FreenessInfo freeness_certificate(int D) const;
    std::vector<int> mod_delta_dims(int D) const;
    HilbertTable weyl_invariants(int D) const;

    bool membership(const std::vector<Polynomial>& components) const;
    MembershipReport membership_report(const std::vector<Polynomial>& components) const;
    PPClass make_class(std::vector<Polynomial> components) const; // membership-enforced

    // Full stacked congruence system in degree d (columns vertex-major,
    // monomials ascending grlex within each vertex block).
    QMatrix constraint_matrix(int d) const;
    // Solution basis of a single stratum's constraints in the ambient space,
    // for the stratified evaluation path.
    std::vector<std::vector<Rational>> stratum_solution_basis(const Stratum& s, int d) const;

    std::vector<Rational> ambient_vector(const std::vector<Polynomial>& components, int d) const;

private:
    // A congruence constraint: the signed combination of components must
    // vanish to the given order along the direction.
    struct Pattern {
        std::vector<std::pair<int, long>> parts; // (vertex index, coefficient)
        Character direction;
        int order;        // 1 or 2
        bool from_relation;
        int source_index; // edge index or relation index, for labels
    };
    struct DirectionData {
        std::vector<Polynomial> images; // adapted substitution
    };

    // Substituted-coefficient table for one direction and degree: entry
    // (t, j) = coefficient of the t-th low target monomial (first-variable
    // exponent 0, then 1) in the image of the j-th degree-d monomial.
    struct SubTable {
        int n0 = 0; // rows with first-variable exponent 0
        int n1 = 0;
        QMatrix coeffs;
    };

    const DirectionData& direction_data(const Character& chi) const;
    SubTable sub_table(const DirectionData& dir, int d,
                       const std::vector<Exponents>& mons) const;
    void append_pattern_rows(QMatrix& m, const Pattern& p, const SubTable& tab,
                             long block_size) const;
    QMatrix assemble(const std::vector<const Pattern*>& patterns, int d,
                     const std::vector<Exponents>& mons) const;

    struct Piece {
        std::vector<PPClass> basis;
        std::vector<int> free_cols;
    };
    Piece solve_degree(int d) const;

    const GkmGraph& g_;
    std::vector<Pattern> patterns_;
    std::map<Character, DirectionData> directions_;
};

// Operation-level surface; each call builds a Solver internally.
std::vector<PPClass> graded_piece(const GkmGraph& g, int d);
HilbertTable hilbert(const GkmGraph& g, int D);
ModulePresentation generators(const GkmGraph& g, int D);
FreenessInfo freeness_certificate(const GkmGraph& g, int D);
std::vector<int> mod_delta_dims(const GkmGraph& g, int D);
HilbertTable weyl_invariants(const GkmGraph& g, int D);
bool membership(const GkmGraph& g, const std::vector<Polynomial>& components);

// Componentwise product; degrees add. Both operands must live over equal
// graphs. The result is re-checked against every congruence (ring closure
// is a theorem; a failure indicates an internal fault, not bad input).
PPClass cup(const PPClass& a, const PPClass& b);

// Coefficients (p_1, ..., p_k) with c = sum p_i * gen_i, each p_i
// homogeneous of degree deg(c) - deg(gen_i); unique when the presentation
// is certified free through deg(c).
std::vector<Polynomial> express_in_basis(const PPClass& c, const ModulePresentation& pres);

// Truncation bound used when the caller does not pick one:
// 2 * (max constraint order) + torus_rank + 2.
int default_max_degree(const GkmGraph& g);

std::string hilbert_to_json(const HilbertTable& t);
std::string presentation_to_json(const ModulePresentation& p);
std::string freeness_to_json(const FreenessInfo& f);
std::string class_to_json(const PPClass& c);

// Class literal: JSON object vertex -> polynomial (term array, or an
// integer shorthand for constants).
PPClass parse_class_literal(const std::string& text, const GkmGraph& g);
std::vector<Polynomial> parse_class_components(const std::string& text, const GkmGraph& g);

} // namespace gkm
