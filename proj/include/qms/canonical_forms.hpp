#pragma once

#include <vector>

#include "qms/matrix.hpp"

namespace qms {

/// Identity-block sizes of the triple equivalence canonical form. For a
/// row-sharing triple (B, C, D) the ten block rows have heights
/// (m1, m2, m3, m4, m5, m4, m6, m7, m8, tail) with tail = m - r_bcd; note m4
/// appears twice. The same struct carries the n-sizes of the column-sharing
/// dual.
struct RowBlockSizes {
    int m1 = 0, m2 = 0, m3 = 0, m4 = 0, m5 = 0, m6 = 0, m7 = 0, m8 = 0;
    int tail = 0;

    int rank_b() const { return m1 + m2 + m3 + m4 + m5; }
    int rank_c() const { return m1 + m2 + m4 + m6 + m7; }
    int rank_d() const { return m1 + m3 + m4 + m6 + m8; }
    int rank_bcd() const { return m1 + m2 + m3 + 2 * m4 + m5 + m6 + m7 + m8; }
    int total_rows() const { return rank_bcd() + tail; }

    /// Heights of the ten block rows in pattern order.
    std::vector<int> layout() const {
        return {m1, m2, m3, m4, m5, m4, m6, m7, m8, tail};
    }

    bool operator==(const RowBlockSizes& o) const {
        return m1 == o.m1 && m2 == o.m2 && m3 == o.m3 && m4 == o.m4 && m5 == o.m5 &&
               m6 == o.m6 && m7 == o.m7 && m8 == o.m8 && tail == o.tail;
    }
    bool operator!=(const RowBlockSizes& o) const { return !(*this == o); }
};

/// Simultaneous equivalence canonical form of a row-sharing triple:
/// B = P * S_B * T1, C = P * S_C * T2, D = P * S_D * T3 with the 0/I
/// patterns produced by triple_pattern_B/C/D. The inverse transforms are
/// kept alongside since both directions are needed downstream.
struct TripleDecomposition {
    QMatrix P, T1, T2, T3;
    QMatrix P_inv, T1_inv, T2_inv, T3_inv;
    RowBlockSizes sizes;
};

/// Column-sharing dual for (E; F; G): E = V1 * S_E * Q and so on, obtained
/// from the row decomposition of the conjugate transposes. sizes holds
/// n1..n8 and tail = n - r_{e|f|g}.
struct ColTripleDecomposition {
    QMatrix Q, V1, V2, V3;
    QMatrix Q_inv, V1_inv, V2_inv, V3_inv;
    RowBlockSizes sizes;
};

/// Canonical 0/I patterns of the triple form. `cols` is the full column
/// count of the respective matrix (p1, p2 or p3).
QMatrix triple_pattern_B(const RowBlockSizes& s, int cols);
QMatrix triple_pattern_C(const RowBlockSizes& s, int cols);
QMatrix triple_pattern_D(const RowBlockSizes& s, int cols);

/// Block sizes evaluated from the rank formulas
///   m1 = r_b + r_c + r_d - r_{db0|d0c},          m2 = r_{db0|d0c} - r_bc - r_d,
///   m3 = r_{db0|d0c} - r_bd - r_c,               m4 = r_bc + r_cd + r_bd - r_bcd - r_{db0|d0c},
///   m5 = r_bcd - r_cd,  m6 = r_{db0|d0c} - r_cd - r_b,  m7 = r_bcd - r_bd,  m8 = r_bcd - r_bc.
/// A negative value signals an elimination bug upstream, not a user error.
RowBlockSizes row_block_sizes_from_ranks(const QMatrix& B, const QMatrix& C, const QMatrix& D);

/// n-side sizes via duality: the m-formulas applied to (E*, F*, G*).
RowBlockSizes col_block_sizes_from_ranks(const QMatrix& E, const QMatrix& F, const QMatrix& G);

/// The n3 value as printed in the source formulas, r_{gg|e0|0f} - r_{e|f} - r_f.
/// Duality with the m-side gives r_{gg|e0|0f} - r_{e|g} - r_f instead; the
/// construction-observed size arbitrates (see tests). Kept so the discrepancy
/// can be reported.
int col_n3_printed_variant(const QMatrix& E, const QMatrix& F, const QMatrix& G);

/// Decomposes a row-sharing triple. Always succeeds on compatible shapes;
/// the result is verified cell-for-cell against the patterns and against the
/// rank formulas before returning (InternalInconsistency otherwise).
TripleDecomposition triple_row_decompose(const QMatrix& B, const QMatrix& C, const QMatrix& D);

/// Decomposes a column-sharing triple via conjugate transposition.
ColTripleDecomposition triple_col_decompose(const QMatrix& E, const QMatrix& F,
                                            const QMatrix& G);

}  // namespace qms
