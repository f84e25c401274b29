#include "gkm/lattice.hpp"

#include "gkm/errors.hpp"

namespace gkm {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Character IntMatrix::apply(const Character& v) const {
    if (v.rank() != n) throw GkmError(Errc::BadArgument, "matrix/vector size mismatch");
    Character out;
    out.coords.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.coords[i] += at(i, j) * v.coords[j];
    return out;
}

IntMatrix IntMatrix::times(const IntMatrix& o) const {
    if (o.n != n) throw GkmError(Errc::BadArgument, "matrix size mismatch");
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

mpz_class int_det(const IntMatrix& m) {
    int n = m.n;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    mpz_class d = 0;
    for (int k = 0; k < n; ++k) {
        if (m.at(0, k) == 0) continue;
        IntMatrix sub(n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        mpz_class term = m.at(0, k) * int_det(sub);
        d += (k % 2 == 0) ? term : -term;
    }
    return d;
}

Character primitive_part(const Character& chi) {
    if (chi.is_zero()) throw GkmError(Errc::ZeroCharacter, "character is zero");
    mpz_class g = 0;
    for (const auto& c : chi.coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    Character out = chi;
    for (auto& c : out.coords) c /= g;
    return out;
}

UnimodularChange unimodular_change(const Character& chi) {
    if (chi.is_zero()) throw GkmError(Errc::ZeroCharacter, "character is zero");
    int r = chi.rank();
    {
        mpz_class g = 0;
        for (const auto& c : chi.coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g != 1) throw GkmError(Errc::NotPrimitive, "character " + chi.str() + " has gcd " + g.get_str());
    }
    UnimodularChange ch{IntMatrix::identity(r), IntMatrix::identity(r)};
    if (r == 1) {
        // chi = (±1); the 1×1 matrix (±1) is its own inverse.
        ch.u.at(0, 0) = chi.coords[0];
        ch.u_inv.at(0, 0) = chi.coords[0];
        return ch;
    }
    // Reduce c = chi to e1 by extended-gcd row combinations on u_inv, applying
    // the inverse column operations to u, with a fixed pivot order for
    // determinism. Invariants kept: u * u_inv = I and u_inv * chi = c.
    std::vector<mpz_class> c = chi.coords;
    for (int i = 1; i < r; ++i) {
        if (c[i] == 0) continue; // gcd unchanged; a unit block would do nothing useful
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c[0].get_mpz_t(), c[i].get_mpz_t());
        mpz_class p = c[0] / g, q = c[i] / g;
        // Rows (0, i) of u_inv get [[s, t], [-q, p]] (det 1, since s*p + t*q = 1);
        // columns (0, i) of u get the inverse block [[p, -t], [q, s]].
        for (int j = 0; j < r; ++j) {
            mpz_class r0 = s * ch.u_inv.at(0, j) + t * ch.u_inv.at(i, j);
            mpz_class ri = -q * ch.u_inv.at(0, j) + p * ch.u_inv.at(i, j);
            ch.u_inv.at(0, j) = r0;
            ch.u_inv.at(i, j) = ri;
        }
        for (int j = 0; j < r; ++j) {
            mpz_class col0 = ch.u.at(j, 0) * p + ch.u.at(j, i) * q;
            mpz_class coli = ch.u.at(j, 0) * (-t) + ch.u.at(j, i) * s;
            ch.u.at(j, 0) = col0;
            ch.u.at(j, i) = coli;
        }
        c[0] = g;
        c[i] = 0;
    }
    // Primitivity makes the final c[0] equal 1 (gcd of all coordinates),
    // except when it never entered a gcd step; then c = (-1, 0, ..., 0).
    if (c[0] == -1) {
        for (int j = 0; j < r; ++j) {
            ch.u_inv.at(0, j) = -ch.u_inv.at(0, j);
            ch.u.at(j, 0) = -ch.u.at(j, 0);
        }
        c[0] = 1;
    }
    return ch;
}

IntMatrix unimodular_completion(const Character& chi) {
    return unimodular_change(chi).u;
}

std::vector<Polynomial> adapted_images(const UnimodularChange& ch) {
    int r = ch.u.n;
    std::vector<Polynomial> images;
    images.reserve(r);
    for (int i = 0; i < r; ++i) {
        Character col;
        col.coords.resize(r);
        for (int j = 0; j < r; ++j) col.coords[j] = ch.u_inv.at(j, i);
        images.push_back(Polynomial::linear_form(col));
    }
    return images;
}

int vanishing_order(const Polynomial& p, const Character& chi) {
    if (chi.is_zero()) throw GkmError(Errc::ZeroCharacter, "character is zero");
    if (p.is_zero()) return kInfiniteOrder;
    UnimodularChange ch = unimodular_change(primitive_part(chi));
    Polynomial q = p.substitute_linear(adapted_images(ch));
    int best = kInfiniteOrder;
    for (const auto& [e, c] : q.terms()) best = std::min(best, e[0]);
    return best;
}

} // namespace gkm
