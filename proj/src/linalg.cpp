#include "gkm/linalg.hpp"

#include "gkm/errors.hpp"

#include <algorithm>

namespace gkm {

void QMatrix::append_row(const std::vector<Rational>& row) {
    if (static_cast<int>(row.size()) != cols_) {
        if (rows_ == 0 && cols_ == 0)
            cols_ = static_cast<int>(row.size());
        else
            throw GkmError(Errc::BadArgument, "row length does not match column count");
    }
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rational> QMatrix::row(int i) const {
    return std::vector<Rational>(a_.begin() + static_cast<size_t>(i) * cols_,
                                 a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

RrefResult rref(const QMatrix& m) {
    RrefResult res;
    res.matrix = m;
    QMatrix& a = res.matrix;
    int nr = a.rows(), nc = a.cols();
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i) {
            if (!a.at(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < nc; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rational inv = Rational(1) / a.at(r, c);
        for (int j = c; j < nc; ++j)
            if (!a.at(r, j).is_zero()) a.at(r, j) *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r) continue;
            const Rational f = a.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < nc; ++j) {
                if (a.at(r, j).is_zero()) continue;
                a.at(i, j).submul(f, a.at(r, j));
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<std::vector<Rational>> kernel_basis_from(const RrefResult& rr, int nc) {
    std::vector<int> pivot_row_of(nc, -1);
    for (int i = 0; i < rr.rank; ++i) pivot_row_of[rr.pivot_cols[i]] = i;
    std::vector<std::vector<Rational>> basis;
    for (int j = 0; j < nc; ++j) {
        if (pivot_row_of[j] >= 0) continue; // pivot column
        std::vector<Rational> v(nc, Rational(0));
        v[j] = Rational(1);
        for (int i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = -rr.matrix.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> free_columns(const RrefResult& rr, int nc) {
    std::vector<int> out;
    size_t p = 0;
    for (int j = 0; j < nc; ++j) {
        if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == j)
            ++p;
        else
            out.push_back(j);
    }
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    return kernel_basis_from(rref(m), m.cols());
}

std::vector<Rational> apply(const QMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw GkmError(Errc::BadArgument, "vector length does not match column count");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    return out;
}

SolveOutcome solve(const QMatrix& m, const std::vector<Rational>& rhs, std::vector<Rational>& x) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw GkmError(Errc::BadArgument, "right-hand side length does not match row count");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    RrefResult rr = rref(aug);
    // Inconsistent iff some pivot lands in the rhs column.
    for (int c : rr.pivot_cols)
        if (c == m.cols()) return SolveOutcome::NoSolution;
    x.assign(m.cols(), Rational(0));
    for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.matrix.at(i, m.cols());
    return rr.rank == m.cols() ? SolveOutcome::Unique : SolveOutcome::Underdetermined;
}

std::vector<std::vector<Rational>> intersect_spans(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<std::vector<Rational>>& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a[0].size();
    QMatrix m(static_cast<int>(n), static_cast<int>(a.size() + b.size()));
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < n; ++i)
            m.at(static_cast<int>(i), static_cast<int>(a.size() + j)) = b[j][i];
    // For w in the kernel of [A B], the A-part combination lies in both spans;
    // when the inputs are bases, w -> A·w_a is injective on the kernel.
    std::vector<std::vector<Rational>> out;
    for (const auto& w : kernel_basis(m)) {
        std::vector<Rational> v(n, Rational(0));
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t i = 0; i < n; ++i)
                if (!w[j].is_zero() && !a[j][i].is_zero()) v[i] += w[j] * a[j][i];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rational> RowSpan::reduce(std::vector<Rational> v) const {
    // Rows are swept in insertion order: each stored row was reduced against
    // all earlier-inserted rows, so once a pivot position is cleared no later
    // row can reintroduce it. The residue is zero iff v lies in the span.
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational c = v[pivots_[k]];
        if (c.is_zero()) continue;
        const auto& row = rows_[k];
        for (size_t j = pivots_[k]; j < v.size(); ++j) {
            if (row[j].is_zero()) continue;
            v[j].submul(c, row[j]);
        }
    }
    return v;
}

bool RowSpan::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
            pivot = static_cast<int>(j);
            break;
        }
    }
    if (pivot < 0) return false;
    Rational inv = Rational(1) / v[pivot];
    for (size_t j = pivot; j < v.size(); ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

} // namespace gkm
