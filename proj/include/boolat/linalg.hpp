#ifndef BOOLAT_LINALG_HPP
#define BOOLAT_LINALG_HPP

#include <vector>

#include "boolat/rat.hpp"

namespace boolat::linalg {

using polycore::Rat;
using QVec = std::vector<Rat>;

// Dense rational matrix, row major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    QVec row(size_t i) const { return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    void append_row(const QVec& r);
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    static QMatrix from_rows(const std::vector<QVec>& rows, size_t cols);

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Canonical reduced row echelon form with zero rows dropped: a unique
// representative of the row space, usable as a subspace identity.
QMatrix rref(const QMatrix& m);

size_t rank(const QMatrix& m);

// Basis of the right kernel {x : M x = 0}, returned as rows, canonicalized.
QMatrix kernel_basis(const QMatrix& m);

// Membership of v in the row space of an already-reduced matrix.
bool in_row_space(const QMatrix& rref_m, const QVec& v);

// Solves M x = b; returns false when inconsistent.  x gets one solution.
bool solve(const QMatrix& m, const QVec& b, QVec& x);

// Intersection of two row spaces over Q^n, canonicalized.
QMatrix intersect_row_spaces(const QMatrix& a, const QMatrix& b, size_t n);

// Lexicographic comparison of canonical forms (rows, then entries).
int qmatrix_cmp(const QMatrix& a, const QMatrix& b);

} // namespace boolat::linalg

#endif
