#pragma once

#include "gkm/rational.hpp"

#include <vector>

namespace gkm {

// Dense row-major matrix over the rationals.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void append_row(const std::vector<Rational>& row);
    std::vector<Rational> row(int i) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    QMatrix matrix;
    std::vector<int> pivot_cols; // strictly increasing
    int rank = 0;
};

// Reduced row echelon form over the rationals. Pivots are chosen left to
// right, first nonzero row (no magnitude pivoting), so the computation is
// deterministic; the RREF itself is unique for any given matrix.
RrefResult rref(const QMatrix& m);

// Standard free-variable kernel basis read off the RREF: for each free
// column j (ascending), the vector with 1 at j, the negated pivot-row
// entries at the pivot columns, and 0 at the other free columns.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Same basis, from an already-computed RREF of a matrix with `cols` columns.
// Basis vector k corresponds to the k-th free (non-pivot) column: every
// kernel vector v satisfies v = sum_k v[free_k] * basis_k, so coordinates in
// this basis can be read off at the free columns.
std::vector<std::vector<Rational>> kernel_basis_from(const RrefResult& rr, int cols);
std::vector<int> free_columns(const RrefResult& rr, int cols);

// Matrix-vector product, for kernel soundness checks.
std::vector<Rational> apply(const QMatrix& m, const std::vector<Rational>& v);

// Solve m x = rhs exactly. Outcome distinguishes no solution from
// non-uniqueness; x is populated for any consistent system (free
// variables set to 0).
enum class SolveOutcome { Unique, NoSolution, Underdetermined };
SolveOutcome solve(const QMatrix& m, const std::vector<Rational>& rhs, std::vector<Rational>& x);

// Intersection of column spans: given two lists of linearly independent
// columns, returns a basis (as columns) of span(A) ∩ span(B).
std::vector<std::vector<Rational>> intersect_spans(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<std::vector<Rational>>& b);

// Rank of a set of vectors, via incremental elimination against a growing
// pivot set. Cheaper than a full RREF when only the rank is needed.
class RowSpan {
public:
    // Returns true when v was independent of the rows inserted so far.
    bool insert(std::vector<Rational> v);
    int rank() const { return static_cast<int>(rows_.size()); }
    // Reduces v against the stored rows; the residue is zero iff v lies in
    // the span.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    std::vector<std::vector<Rational>> rows_; // normalized, pivot 1
    std::vector<int> pivots_;                 // pivot column per stored row
};

} // namespace gkm
