#pragma once

#include "gkm/polynomial.hpp"

#include <limits>
#include <vector>

namespace gkm {

// Small dense integer matrix (row-major), used for lattice coordinate
// changes and for symmetry data acting on characters.
struct IntMatrix {
    int n = 0;
    std::vector<mpz_class> a; // n*n entries

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}
    static IntMatrix identity(int n);

    mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    Character apply(const Character& v) const;         // matrix * column vector
    IntMatrix times(const IntMatrix& o) const;

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator<(const IntMatrix& x, const IntMatrix& y) {
        return x.n != y.n ? x.n < y.n : x.a < y.a;
    }
};

// Exact determinant (Laplace expansion; matrices here are tiny).
mpz_class int_det(const IntMatrix& m);

// chi divided by the gcd of its coordinates, sign preserved.
// (gcd taken positive; throws ZeroCharacter on the zero vector.)
Character primitive_part(const Character& chi);

// Unimodular coordinate change adapted to a primitive character: u has
// det ±1 with first column chi, and u_inv = u^{-1} exactly, so rewriting a
// linear form through u_inv sends chi to the first coordinate function.
struct UnimodularChange {
    IntMatrix u;
    IntMatrix u_inv;
};
UnimodularChange unimodular_change(const Character& chi);

// The adapted matrix itself. Requires chi nonzero and primitive.
IntMatrix unimodular_completion(const Character& chi);

// Substitution images realizing the change: variable i maps to the linear
// form with coefficients u_inv(·, i), which sends chi to y1 exactly.
std::vector<Polynomial> adapted_images(const UnimodularChange& ch);

// vanishing_order(p, chi) can be infinite (p = 0).
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// Largest k with chi^k dividing p over the rationals; non-primitive chi is
// reduced to its primitive part first (the ideals agree over Q).
int vanishing_order(const Polynomial& p, const Character& chi);

} // namespace gkm
