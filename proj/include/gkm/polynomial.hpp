#pragma once

#include "gkm/errors.hpp"
#include "gkm/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gkm {

// Exponent vector of a monomial; length = number of variables.
using Exponents = std::vector<int>;

// Graded lexicographic order, variable order x1 < ... < xr:
// compare total degree first, then the exponent vectors lexicographically.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

// Exponent vector of the single variable x_{i+1} (all zeros, 1 at slot i).
Exponents unit_exponents(int nvars, int i);

// Number of monomials of total degree d in r variables: C(d+r-1, r-1).
long monomial_count(int nvars, int d);

// All exponent vectors of total degree d in ascending grlex order.
std::vector<Exponents> monomials_of_degree(int nvars, int d);

// Integer vector in the character lattice; doubles as an integer linear form.
struct Character {
    std::vector<mpz_class> coords;

    Character() = default;
    explicit Character(std::vector<mpz_class> c) : coords(std::move(c)) {}
    static Character from_ints(const std::vector<long>& v) {
        Character c;
        c.coords.assign(v.begin(), v.end());
        return c;
    }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    Character negated() const;
    Character scaled(const mpz_class& c) const;

    friend bool operator==(const Character& a, const Character& b) { return a.coords == b.coords; }
    friend bool operator<(const Character& a, const Character& b) { return a.coords < b.coords; }

    std::string str() const; // "(1,-1)"
};

// Exact multivariate polynomial with rational coefficients.
// Invariant: no explicit zero coefficients are stored.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);
    // The linear form with the character's coordinates as coefficients.
    static Polynomial linear_form(const Character& chi);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // Maximum total degree of a term; -1 for the zero polynomial.
    int degree() const;
    // True when all terms share one total degree (the zero polynomial is
    // homogeneous of every degree).
    bool is_homogeneous() const;

    const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const Rational& c);
    void add_to_coeff(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    Polynomial scaled(const Rational& c) const;
    // Multiply by a single monomial (exponent shift) times a scalar.
    Polynomial shifted(const Exponents& e, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Substitute variable i by images[i]; images share a common variable count.
    Polynomial substitute_linear(const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const; // human-readable, terms in ascending grlex order

private:
    int nvars_;
    std::map<Exponents, Rational, GrlexLess> terms_;
};

// Exact product; grading is additive on homogeneous pieces.
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, int k);

// JSON term-array serialization: [{"exp":[e1,...,er],"num":"...","den":"..."}]
// with integers as decimal strings, terms in ascending grlex order.
std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text, int nvars);

} // namespace gkm
