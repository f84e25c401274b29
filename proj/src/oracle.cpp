#include "gkm/oracle.hpp"

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace gkm::oracle {

namespace {

int pivot_index(const Character& chi) {
    for (size_t i = 0; i < chi.coords.size(); ++i)
        if (chi.coords[i] != 0) return static_cast<int>(i);
    throw GkmError(Errc::ZeroCharacter, "division by the zero linear form");
}

// Monomial enumeration used by this path: descending graded-lex.
std::vector<Exponents> oracle_monomials(int nvars, int d) {
    auto mons = monomials_of_degree(nvars, d);
    std::reverse(mons.begin(), mons.end());
    return mons;
}

std::vector<Exponents> pivot_free_monomials(int nvars, int d, int pivot) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    for (const auto& e : oracle_monomials(nvars, d))
        if (e[pivot] == 0) out.push_back(e);
    return out;
}

// One signed combination of vertex components required to vanish to the
// given order along a direction. Recompiled here from the graph, separately
// from the main solver.
struct Condition {
    std::vector<std::pair<int, long>> parts; // (vertex index, coefficient)
    Character direction;
    int order; // 1 or 2
};

std::vector<Condition> compile_conditions(const GkmGraph& g) {
    std::vector<Condition> out;
    auto idx = [&](const std::string& name) { return g.vertex_index(name); };
    for (const auto& e : g.edges) {
        if (e.kind != EdgeKind::TwoEnded) continue; // loops constrain nothing
        out.push_back({{{idx(e.x), 1}, {idx(e.y), -1}}, e.character, 1});
    }
    for (const auto& rel : g.surface_relations) {
        if (rel.kind == SurfaceKind::TriplePlane) {
            int x = idx(rel.points[0]), y = idx(rel.points[1]), z = idx(rel.points[2]);
            out.push_back({{{x, 1}, {y, -1}}, rel.root, 1});
            out.push_back({{{y, 1}, {z, -1}}, rel.root, 1});
            out.push_back({{{x, 1}, {z, -1}}, rel.root, 1});
            out.push_back({{{x, 1}, {y, -2}, {z, 1}}, rel.root, 2});
        } else {
            int x = idx(rel.points[0]), y = idx(rel.points[1]);
            int z = idx(rel.points[2]), t = idx(rel.points[3]);
            out.push_back({{{x, 1}, {y, -1}}, rel.root, 1});
            out.push_back({{{y, 1}, {z, -1}}, rel.root, 1});
            out.push_back({{{z, 1}, {t, -1}}, rel.root, 1});
            out.push_back({{{t, 1}, {x, -1}}, rel.root, 1});
            out.push_back({{{x, 1}, {y, -1}, {z, 1}, {t, -1}}, rel.root, 2});
        }
    }
    return out;
}

// Remainders of every degree-d monomial modulo the linear form, plus the
// remainders of the quotients (for order-two conditions). Index j matches
// oracle_monomials(nvars, d).
struct RemainderTable {
    std::vector<Polynomial> rem;  // degree d, pivot-free
    std::vector<Polynomial> rem1; // degree d-1, pivot-free (quotient remainder)
};

RemainderTable remainder_table(const Character& chi, int nvars, int d) {
    RemainderTable tab;
    for (const auto& e : oracle_monomials(nvars, d)) {
        Polynomial mono(nvars);
        mono.set_coeff(e, Rational(1));
        auto div = divide_by_linear(mono, chi);
        tab.rem.push_back(div.remainder);
        tab.rem1.push_back(divide_by_linear(div.quotient, chi).remainder);
    }
    return tab;
}

// Appends the rows expressing one condition on the stacked coefficient
// vector (vertex-major blocks, descending graded-lex inside each block).
void append_condition_rows(std::vector<std::vector<Rational>>& rows, const GkmGraph& g,
                           const Condition& c, const RemainderTable& tab, int d) {
    const int nvars = g.torus_rank;
    const int piv = pivot_index(c.direction);
    const long block = monomial_count(nvars, d);
    const long total = block * static_cast<long>(g.vertices.size());

    auto emit = [&](const std::vector<Polynomial>& values, const std::vector<Exponents>& targets) {
        for (const auto& t : targets) {
            std::vector<Rational> row(static_cast<size_t>(total));
            bool nonzero = false;
            for (long j = 0; j < block; ++j) {
                Rational coeff = values[static_cast<size_t>(j)].coeff(t);
                if (coeff.is_zero()) continue;
                for (const auto& [v, sign] : c.parts) {
                    row[static_cast<size_t>(v) * block + j] += coeff * Rational(sign);
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    };

    emit(tab.rem, pivot_free_monomials(nvars, d, piv));
    if (c.order >= 2) emit(tab.rem1, pivot_free_monomials(nvars, d - 1, piv));
}

std::vector<std::vector<Rational>> congruence_rows(const GkmGraph& g, int d) {
    std::vector<std::vector<Rational>> rows;
    std::map<Character, RemainderTable> tables;
    for (const auto& c : compile_conditions(g)) {
        auto it = tables.find(c.direction);
        if (it == tables.end())
            it = tables.emplace(c.direction, remainder_table(c.direction, g.torus_rank, d)).first;
        append_condition_rows(rows, g, c, it->second, d);
    }
    return rows;
}

QMatrix stack_shuffled(std::vector<std::vector<Rational>> rows, long cols, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::shuffle(rows.begin(), rows.end(), rng);
    QMatrix m(0, static_cast<int>(cols));
    for (auto& r : rows) m.append_row(r);
    return m;
}

long oracle_ambient(const GkmGraph& g, int d) {
    return monomial_count(g.torus_rank, d) * static_cast<long>(g.vertices.size());
}

std::vector<std::vector<Rational>> solution_basis(const GkmGraph& g, int d, unsigned long seed) {
    return kernel_basis(stack_shuffled(congruence_rows(g, d), oracle_ambient(g, d), seed));
}

std::vector<Polynomial> decode(const GkmGraph& g, const std::vector<Rational>& vec, int d) {
    const auto mons = oracle_monomials(g.torus_rank, d);
    const long block = static_cast<long>(mons.size());
    std::vector<Polynomial> comps;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        Polynomial p(g.torus_rank);
        for (long j = 0; j < block; ++j) {
            const Rational& c = vec[v * static_cast<size_t>(block) + static_cast<size_t>(j)];
            if (!c.is_zero()) p.set_coeff(mons[static_cast<size_t>(j)], c);
        }
        comps.push_back(std::move(p));
    }
    return comps;
}

std::vector<Rational> encode(const GkmGraph& g, const std::vector<Polynomial>& comps, int d) {
    const auto mons = oracle_monomials(g.torus_rank, d);
    const long block = static_cast<long>(mons.size());
    std::vector<Rational> vec(static_cast<size_t>(block) * g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (long j = 0; j < block; ++j)
            vec[v * static_cast<size_t>(block) + static_cast<size_t>(j)] =
                comps[v].coeff(mons[static_cast<size_t>(j)]);
    return vec;
}

// Rows of the rational inverse of an integer matrix, as substitution images.
std::vector<Polynomial> inverse_images(const IntMatrix& m) {
    const int n = m.n;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = Rational(m.at(i, j));
        aug.at(i, n + i) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank != n)
        throw GkmError(Errc::ValidationError, "symmetry matrix is singular over Q");
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i) {
        Polynomial form(n);
        for (int j = 0; j < n; ++j) {
            const Rational& c = rr.matrix.at(i, n + j);
            if (!c.is_zero()) form.set_coeff(unit_exponents(n, j), c);
        }
        images.push_back(std::move(form));
    }
    return images;
}

} // namespace

LinearDivision divide_by_linear(const Polynomial& p, const Character& chi) {
    const int nvars = p.nvars();
    const int piv = pivot_index(chi);
    const Rational lead(chi.coords[static_cast<size_t>(piv)]);
    const Polynomial form = Polynomial::linear_form(chi);

    LinearDivision out{Polynomial(nvars), p};
    for (;;) {
        int top = 0;
        for (const auto& [e, c] : out.remainder.terms()) top = std::max(top, e[piv]);
        if (top == 0) break;
        // Peel the top pivot-degree layer in one step; subtracting
        // (layer / (lead * x_piv)) * form cancels it exactly and only
        // produces terms of strictly smaller pivot degree.
        Polynomial qpart(nvars);
        for (const auto& [e, c] : out.remainder.terms()) {
            if (e[piv] != top) continue;
            Exponents shifted = e;
            shifted[piv] -= 1;
            qpart.set_coeff(shifted, c / lead);
        }
        out.quotient += qpart;
        out.remainder -= multiply(qpart, form);
    }
    return out;
}

long graded_dimension(const GkmGraph& g, int d, unsigned long seed) {
    const long cols = oracle_ambient(g, d);
    QMatrix m = stack_shuffled(congruence_rows(g, d), cols, seed);
    return cols - rref(m).rank;
}

std::vector<long> hilbert_dims(const GkmGraph& g, int D, unsigned long seed) {
    std::vector<long> dims;
    for (int d = 0; d <= D; ++d) dims.push_back(graded_dimension(g, d, seed + static_cast<unsigned long>(d)));
    return dims;
}

std::vector<int> mod_delta_dims(const GkmGraph& g, int D, unsigned long seed) {
    const int r = g.torus_rank;
    std::vector<int> out;
    std::vector<std::vector<Rational>> prev; // solution basis one degree down
    for (int d = 0; d <= D; ++d) {
        auto basis = solution_basis(g, d, seed + static_cast<unsigned long>(d));
        long span = 0;
        if (d > 0 && !prev.empty()) {
            QMatrix products(0, static_cast<int>(oracle_ambient(g, d)));
            for (const auto& b : prev) {
                auto comps = decode(g, b, d - 1);
                for (int i = 0; i < r; ++i) {
                    std::vector<Polynomial> shifted;
                    for (const auto& c : comps)
                        shifted.push_back(c.shifted(unit_exponents(r, i), Rational(1)));
                    products.append_row(encode(g, shifted, d));
                }
            }
            span = rref(products).rank;
        }
        out.push_back(static_cast<int>(static_cast<long>(basis.size()) - span));
        prev = std::move(basis);
    }
    return out;
}

std::vector<long> weyl_invariant_dims(const GkmGraph& g, int D, unsigned long seed) {
    if (!g.weyl || g.weyl->generators.empty())
        throw GkmError(Errc::NoWeylData, "graph carries no symmetry data");

    struct Action {
        std::vector<int> source;         // source[x] = index of sigma^{-1}(x)
        std::vector<Polynomial> images;  // substitution by the inverse matrix
    };
    std::vector<Action> actions;
    for (const auto& gen : g.weyl->generators) {
        Action a;
        a.source.assign(g.vertices.size(), -1);
        for (const auto& [from, to] : gen.vertex_perm) {
            int fi = g.vertex_index(from), ti = g.vertex_index(to);
            a.source[static_cast<size_t>(ti)] = fi;
        }
        for (int x = 0; x < static_cast<int>(g.vertices.size()); ++x)
            if (a.source[static_cast<size_t>(x)] < 0)
                throw GkmError(Errc::ValidationError, "vertex permutation is not a bijection");
        a.images = inverse_images(gen.char_matrix);
        actions.push_back(std::move(a));
    }

    std::vector<long> dims;
    for (int d = 0; d <= D; ++d) {
        const auto mons = oracle_monomials(g.torus_rank, d);
        const long block = static_cast<long>(mons.size());
        const long cols = oracle_ambient(g, d);
        auto rows = congruence_rows(g, d);
        for (const auto& a : actions) {
            // Substituted images of every source monomial, shared across vertices.
            std::vector<Polynomial> sub;
            for (const auto& m : mons) {
                Polynomial mono(g.torus_rank);
                mono.set_coeff(m, Rational(1));
                sub.push_back(mono.substitute_linear(a.images));
            }
            for (size_t x = 0; x < g.vertices.size(); ++x) {
                const size_t y = static_cast<size_t>(a.source[x]);
                for (long t = 0; t < block; ++t) {
                    std::vector<Rational> row(static_cast<size_t>(cols));
                    for (long j = 0; j < block; ++j) {
                        Rational c = sub[static_cast<size_t>(j)].coeff(mons[static_cast<size_t>(t)]);
                        if (!c.is_zero()) row[y * static_cast<size_t>(block) + static_cast<size_t>(j)] += c;
                    }
                    row[x * static_cast<size_t>(block) + static_cast<size_t>(t)] -= Rational(1);
                    rows.push_back(std::move(row));
                }
            }
        }
        QMatrix m = stack_shuffled(std::move(rows), cols, seed + static_cast<unsigned long>(d));
        dims.push_back(cols - rref(m).rank);
    }
    return dims;
}

} // namespace gkm::oracle
