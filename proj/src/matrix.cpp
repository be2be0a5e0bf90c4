#include "qms/matrix.hpp"

#include <string>

#include "qms/error.hpp"

namespace qms {

int QMatrix::check_dim(int d) {
    if (d < 0) throw DimensionError("negative matrix dimension " + std::to_string(d));
    return d;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw DimensionError("ragged initializer list");
        for (const auto& q : row) data_.push_back(q);
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& q : data_)
        if (!q.is_zero()) return false;
    return true;
}

QMatrix QMatrix::operator-() const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw DimensionError("matrix addition shape mismatch");
    QMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] + y.data_[i];
    return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw DimensionError("matrix subtraction shape mismatch");
    QMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] - y.data_[i];
    return r;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols_ != y.rows_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(x.rows_) +
                             "x" + std::to_string(x.cols_) + " * " + std::to_string(y.rows_) +
                             "x" + std::to_string(y.cols_));
    QMatrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Quaternion& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) {
                const Quaternion& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                r.at(i, j) += xik * ykj;
            }
        }
    return r;
}

QMatrix operator*(const Quaternion& s, const QMatrix& x) {
    QMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = s * x.data_[i];
    return r;
}

QMatrix mat_mul(const QMatrix& x, const QMatrix& y) { return x * y; }

QMatrix QMatrix::sub(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw IndexError("submatrix out of range");
    QMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void QMatrix::paste(int r0, int c0, const QMatrix& block) {
    if (r0 < 0 || c0 < 0 || r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw IndexError("paste out of range");
    for (int i = 0; i < block.rows_; ++i)
        for (int j = 0; j < block.cols_; ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

QMatrix conj_transpose(const QMatrix& a) {
    QMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = q_conj(a.at(i, j));
    return r;
}

QMatrix hcat(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) return QMatrix();
    const int rows = blocks.front().rows();
    int cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw DimensionError("hcat row mismatch");
        cols += b.cols();
    }
    QMatrix r(rows, cols);
    int c0 = 0;
    for (const auto& b : blocks) {
        r.paste(0, c0, b);
        c0 += b.cols();
    }
    return r;
}

QMatrix vcat(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) return QMatrix();
    const int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionError("vcat column mismatch");
        rows += b.rows();
    }
    QMatrix r(rows, cols);
    int r0 = 0;
    for (const auto& b : blocks) {
        r.paste(r0, 0, b);
        r0 += b.rows();
    }
    return r;
}

namespace {

// In-place elimination core. Row operations use left coefficients
// (row_j -= q * row_r), matching right linear independence of columns.
// Pivot choice is the first nonzero entry scanning top-to-bottom within a
// column, columns left-to-right; deterministic by construction.

void swap_rows(QMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

// row_i -= q * row_j
void row_axpy(QMatrix& m, int i, const Quaternion& q, int j) {
    if (q.is_zero()) return;
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}

// row_i = q * row_i
void row_scale(QMatrix& m, int i, const Quaternion& q) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = q * m.at(i, c);
}

// Reduces `work` to reduced row echelon form (unit pivots, pivot columns
// cleared above and below), mirroring every operation onto `left` when
// present. Returns the pivot columns in order.
std::vector<int> rref(QMatrix& work, QMatrix* left) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < work.cols() && r < work.rows(); ++c) {
        int p = -1;
        for (int i = r; i < work.rows(); ++i)
            if (!work.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        swap_rows(work, r, p);
        if (left) swap_rows(*left, r, p);
        const Quaternion inv = q_inv(work.at(r, c));
        row_scale(work, r, inv);
        if (left) row_scale(*left, r, inv);
        for (int i = 0; i < work.rows(); ++i) {
            if (i == r) continue;
            const Quaternion q = work.at(i, c);
            if (q.is_zero()) continue;
            row_axpy(work, i, q, r);
            if (left) row_axpy(*left, i, q, r);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const QMatrix& a) {
    QMatrix work = a;
    return static_cast<int>(rref(work, nullptr).size());
}

QMatrix inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    QMatrix work = a;
    QMatrix left = QMatrix::identity(a.rows());
    const auto pivots = rref(work, &left);
    if (static_cast<int>(pivots.size()) != a.rows()) throw SingularError();
    return left;
}

bool is_invertible(const QMatrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

QMatrix rank_normal_form(int rows, int cols, int r) {
    QMatrix m(rows, cols);
    for (int i = 0; i < r; ++i) m.at(i, i) = Quaternion::one();
    return m;
}

CanonicalForm canonical_form(const QMatrix& a) {
    QMatrix work = a;
    QMatrix P = QMatrix::identity(a.rows());
    const auto pivots = rref(work, &P);
    const int r = static_cast<int>(pivots.size());
    // After rref, row i < r is zero except a leading 1 at pivots[i] plus
    // entries in non-pivot columns. Column operations move each pivot to the
    // diagonal and clear the rest of its row.
    QMatrix Q = QMatrix::identity(a.cols());
    // Clear non-pivot entries of pivot rows: col_j -= col_{pivot} * work(i, j).
    for (int i = 0; i < r; ++i) {
        const int pc = pivots[i];
        for (int j = 0; j < work.cols(); ++j) {
            if (j == pc) continue;
            const Quaternion q = work.at(i, j);
            if (q.is_zero()) continue;
            for (int rr = 0; rr < work.rows(); ++rr) work.at(rr, j) -= work.at(rr, pc) * q;
            for (int rr = 0; rr < Q.rows(); ++rr) Q.at(rr, j) -= Q.at(rr, pc) * q;
        }
    }
    // Swap pivot columns into leading positions.
    for (int i = 0; i < r; ++i) {
        int pc = -1;
        for (int j = i; j < work.cols(); ++j)
            if (!work.at(i, j).is_zero()) {
                pc = j;
                break;
            }
        if (pc != i) {
            for (int rr = 0; rr < work.rows(); ++rr) std::swap(work.at(rr, i), work.at(rr, pc));
            for (int rr = 0; rr < Q.rows(); ++rr) std::swap(Q.at(rr, i), Q.at(rr, pc));
        }
    }
    return CanonicalForm{std::move(P), std::move(Q), r};
}

QMatrix g_inverse(const QMatrix& a) {
    const CanonicalForm cf = canonical_form(a);
    return cf.Q * rank_normal_form(a.cols(), a.rows(), cf.r) * cf.P;
}

}  // namespace qms
