#pragma once

#include <utility>

#include "qms/matrix.hpp"

namespace qms {

struct RankRange {
    int min = 0;
    int max = 0;
    bool operator==(const RankRange& o) const { return min == o.min && max == o.max; }
};

/// M(X, Y) = [[A1, X], [Y, B1]] with X (m x q) and Y (p x n) free.
struct TwoCornerInstance {
    QMatrix A1;  // m x n
    QMatrix B1;  // p x q
};

/// M2(Y) = [[Y, D1], [B1, A1]] with Y (n_y x m_y) free; shapes tied by
/// rows(D1) = n_y, cols(B1) = m_y.
struct LShapeInstance {
    QMatrix A1, B1, D1;
};

/// H(X, Y) = [[A1, B1, C1], [D1, X, E1], [F1, G1, Y]]. The unknowns' sizes
/// are pinned by the given blocks: X is rows(D1) x cols(B1) and Y is
/// rows(F1) x cols(C1).
struct HShapeInstance {
    QMatrix A1, B1, C1, D1, E1, F1, G1;
};

/// min = max{r(A1), r(B1)};
/// max = min{m + p, n + q, r(A1) + p + q, r(B1) + m + n}.
RankRange two_corner_rank_range(const TwoCornerInstance& inst);

/// (X, Y) with rank M(X, Y) = max{r(A1), r(B1)}: the smaller-rank corner is
/// rewritten as U * A1 * V (or symmetrically), which collapses the Schur
/// complement.
std::pair<QMatrix, QMatrix> two_corner_min_achiever(const TwoCornerInstance& inst);

QMatrix two_corner_assemble(const TwoCornerInstance& inst, const QMatrix& X, const QMatrix& Y);

/// min = r(A1, B1) + r(A1; D1) - r(A1); max = min{n_y + r(A1, B1), m_y + r(A1; D1)}.
RankRange l_shape_rank_range(const LShapeInstance& inst);

/// Y = D1 * g_inverse(A1) * B1 attains the minimum.
QMatrix l_shape_min_achiever(const LShapeInstance& inst);

QMatrix l_shape_assemble(const LShapeInstance& inst, const QMatrix& Y);

RankRange h_shape_rank_range(const HShapeInstance& inst);

QMatrix h_shape_assemble(const HShapeInstance& inst, const QMatrix& X, const QMatrix& Y);

}  // namespace qms
