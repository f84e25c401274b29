#pragma once

#include "gkm/graph.hpp"
#include "gkm/polynomial.hpp"

#include <vector>

namespace gkm::oracle {

// Slow-path second opinion for the main solver. The congruence conditions
// are compiled without any lattice coordinate change: divisibility by a
// linear form is expressed through exact polynomial division (remainder and
// quotient against the form's pivot variable), rows are enumerated over a
// reversed monomial order and shuffled by a seeded generator before the
// generic elimination. Dimensions are invariant under all of that, so any
// disagreement with the main path indicates a real defect.

inline constexpr unsigned long kDefaultSeed = 0x5eed5eedUL;

// Exact division p = chi * q + r where r has no pivot-variable occurrences;
// the pivot variable is the first with a nonzero coefficient in chi.
struct LinearDivision {
    Polynomial quotient;
    Polynomial remainder;
};
LinearDivision divide_by_linear(const Polynomial& p, const Character& chi);

long graded_dimension(const GkmGraph& g, int d, unsigned long seed = kDefaultSeed);
std::vector<long> hilbert_dims(const GkmGraph& g, int D, unsigned long seed = kDefaultSeed);
std::vector<int> mod_delta_dims(const GkmGraph& g, int D, unsigned long seed = kDefaultSeed);
std::vector<long> weyl_invariant_dims(const GkmGraph& g, int D, unsigned long seed = kDefaultSeed);

} // namespace gkm::oracle
