#include "boolat/linalg.hpp"

#include "boolat/error.hpp"

namespace boolat::linalg {

void QMatrix::append_row(const QVec& r) {
    if (cols_ == 0 && rows_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail(errc::invalid_argument, "row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, size_t cols) {
    QMatrix m(0, 0);
    m.cols_ = cols;
    for (const QVec& r : rows) m.append_row(r);
    return m;
}

QMatrix rref(const QMatrix& m) {
    QMatrix w = m;
    size_t rows = w.rows(), cols = w.cols();
    size_t lead = 0;
    std::vector<size_t> pivot_cols;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        size_t i = r;
        while (i < rows && w.at(i, lead) == 0) ++i;
        if (i == rows) {
            --r;
            ++lead;
            continue;
        }
        if (i != r)
            for (size_t j = 0; j < cols; ++j) std::swap(w.at(i, j), w.at(r, j));
        Rat inv = Rat(1) / w.at(r, lead);
        for (size_t j = 0; j < cols; ++j) w.at(r, j) *= inv;
        for (size_t k = 0; k < rows; ++k) {
            if (k == r) continue;
            Rat f = w.at(k, lead);
            if (f == 0) continue;
            for (size_t j = 0; j < cols; ++j) w.at(k, j) -= f * w.at(r, j);
        }
        pivot_cols.push_back(lead);
        ++lead;
    }
    QMatrix out(0, 0);
    out = QMatrix(pivot_cols.size(), cols);
    for (size_t r = 0; r < pivot_cols.size(); ++r)
        for (size_t j = 0; j < cols; ++j) out.at(r, j) = w.at(r, j);
    return out;
}

size_t rank(const QMatrix& m) { return rref(m).rows(); }

QMatrix kernel_basis(const QMatrix& m) {
    QMatrix r = rref(m);
    size_t cols = m.cols();
    std::vector<long> pivot_of_col(cols, -1);
    for (size_t i = 0; i < r.rows(); ++i) {
        for (size_t j = 0; j < cols; ++j) {
            if (r.at(i, j) != 0) {
                pivot_of_col[j] = static_cast<long>(i);
                break;
            }
        }
    }
    QMatrix out(0, 0);
    std::vector<QVec> rows;
    for (size_t j = 0; j < cols; ++j) {
        if (pivot_of_col[j] >= 0) continue;  // pivot column
        QVec v(cols, Rat(0));
        v[j] = 1;
        for (size_t jj = 0; jj < cols; ++jj) {
            if (pivot_of_col[jj] >= 0) v[jj] = -r.at(static_cast<size_t>(pivot_of_col[jj]), j);
        }
        rows.push_back(std::move(v));
    }
    return rref(QMatrix::from_rows(rows, cols));
}

bool in_row_space(const QMatrix& rref_m, const QVec& v) {
    QVec w = v;
    size_t cols = rref_m.cols();
    if (w.size() != cols) fail(errc::invalid_argument, "vector length mismatch");
    for (size_t i = 0; i < rref_m.rows(); ++i) {
        size_t p = 0;
        while (p < cols && rref_m.at(i, p) == 0) ++p;
        if (p == cols) continue;
        if (w[p] != 0) {
            Rat f = w[p];
            for (size_t j = 0; j < cols; ++j) w[j] -= f * rref_m.at(i, j);
        }
    }
    for (const Rat& q : w)
        if (q != 0) return false;
    return true;
}

bool solve(const QMatrix& m, const QVec& b, QVec& x) {
    size_t rows = m.rows(), cols = m.cols();
    if (b.size() != rows) fail(errc::invalid_argument, "rhs length mismatch");
    QMatrix aug(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    QMatrix r = rref(aug);
    x.assign(cols, Rat(0));
    for (size_t i = 0; i < r.rows(); ++i) {
        size_t p = 0;
        while (p <= cols && r.at(i, p) == 0) ++p;
        if (p > cols) continue;      // all-zero row (cannot occur after rref)
        if (p == cols) return false; // 0 = 1 row
        x[p] = r.at(i, cols);
    }
    return true;
}

QMatrix intersect_row_spaces(const QMatrix& a, const QMatrix& b, size_t n) {
    // Row(A) = Null(kernel_basis(A)) as row spaces over Q with the standard
    // pairing; the intersection is the kernel of the stacked annihilators.
    QMatrix na = kernel_basis(a);
    QMatrix nb = kernel_basis(b);
    QMatrix stacked(0, 0);
    std::vector<QVec> rows;
    for (size_t i = 0; i < na.rows(); ++i) rows.push_back(na.row(i));
    for (size_t i = 0; i < nb.rows(); ++i) rows.push_back(nb.row(i));
    if (rows.empty()) {
        // both spaces are the whole Q^n
        QMatrix id(n, n);
        for (size_t i = 0; i < n; ++i) id.at(i, i) = 1;
        return id;
    }
    return kernel_basis(QMatrix::from_rows(rows, n));
}

int qmatrix_cmp(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            int c = cmp(a.at(i, j), b.at(i, j));
            if (c != 0) return c;
        }
    return 0;
}

} // namespace boolat::linalg
