#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qms/quaternion.hpp"

namespace qms {

/// Dense row-major matrix over the rational quaternions. Degenerate shapes
/// (0 x n, m x 0) are legal everywhere; block formulas routinely produce
/// empty blocks. Value semantics, no shared state.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(check_dim(rows)), cols_(check_dim(cols)),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> init);

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Quaternion& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Quaternion& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

    QMatrix operator-() const;
    friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator*(const Quaternion& s, const QMatrix& x);

    /// Copies [r0, r0+nr) x [c0, c0+nc) out of the matrix.
    QMatrix sub(int r0, int c0, int nr, int nc) const;
    void paste(int r0, int c0, const QMatrix& block);

  private:
    static int check_dim(int d);
    int rows_, cols_;
    std::vector<Quaternion> data_;
};

QMatrix mat_mul(const QMatrix& x, const QMatrix& y);
QMatrix conj_transpose(const QMatrix& a);

/// Horizontal / vertical concatenation. Blocks must agree on the shared
/// dimension; an empty list yields the 0 x 0 matrix.
QMatrix hcat(const std::vector<QMatrix>& blocks);
QMatrix vcat(const std::vector<QMatrix>& blocks);

/// Rank = maximum number of right linearly independent columns, computed by
/// noncommutative Gaussian elimination with left row coefficients.
int rank(const QMatrix& a);

/// Exact inverse; throws SingularError when rank < n.
QMatrix inverse(const QMatrix& a);

bool is_invertible(const QMatrix& a);

/// P * A * Q = [[I_r, 0], [0, 0]] with P, Q invertible.
struct CanonicalForm {
    QMatrix P, Q;
    int r = 0;
};

CanonicalForm canonical_form(const QMatrix& a);

/// The canonical 0/I pattern of a given shape and rank.
QMatrix rank_normal_form(int rows, int cols, int r);

/// Inner generalized inverse: A * g_inverse(A) * A = A.
QMatrix g_inverse(const QMatrix& a);

}  // namespace qms
