#pragma once

#include <string>
#include <vector>

#include "qms/canonical_forms.hpp"
#include "qms/pattern.hpp"

namespace qms {

/// Block grid of the simultaneous decomposition. S_A is partitioned into an
/// 11 x 11 grid; block rows have heights
///   (m1, m2, m3, m4, m5, m4, m6, m7, m8, m - r_bcd - t, t)
/// and block columns
///   (n1, n2, n3, n4, n5, n4, n6, n7, n8, n - r_efg - t, t).
/// m4 and n4 each appear twice in their layouts.
struct BlockPartition {
    RowBlockSizes row;  // m1..m8; row.tail = m - r_bcd
    RowBlockSizes col;  // n1..n8; col.tail = n - r_efg
    int t = 0;

    std::vector<int> row_layout() const;
    std::vector<int> col_layout() const;
    int rows() const { return row.total_rows(); }
    int cols() const { return col.total_rows(); }
    /// Offset of 1-based block index in the row/column layout.
    int row_offset(int block) const;
    int col_offset(int block) const;
    int row_size(int block) const { return row_layout()[block - 1]; }
    int col_size(int block) const { return col_layout()[block - 1]; }
};

/// Addresses one cell of the S_A grid.
struct BlockIndex {
    int block_row = 1;  // 1..11
    int block_col = 1;  // 1..11
};

/// The simultaneous decomposition of (A; B, C, D; E, F, G):
///   A = P S_A Q,  B = P S_B T1,  C = P S_C T2,  D = P S_D T3,
///   E = V1 S_E Q, F = V2 S_F Q,  G = V3 S_G Q,
/// all exact, with the canonical 0/I patterns for S_B..S_G and S_A carrying
/// arbitrary blocks except for its forced zero 10th/11th block row/column
/// structure and the I_t corner. Inverse transforms are cached because the
/// solvers map through them constantly.
struct SevenDecomposition {
    QMatrix P, Q, T1, T2, T3, V1, V2, V3;
    QMatrix P_inv, Q_inv, T1_inv, T2_inv, T3_inv, V1_inv, V2_inv, V3_inv;
    QMatrix SA;
    BlockPartition partition;
};

/// The canonical S-patterns implied by a partition.
QMatrix pattern_SB(const BlockPartition& p, int cols);
QMatrix pattern_SC(const BlockPartition& p, int cols);
QMatrix pattern_SD(const BlockPartition& p, int cols);
QMatrix pattern_SE(const BlockPartition& p, int rows);
QMatrix pattern_SF(const BlockPartition& p, int rows);
QMatrix pattern_SG(const BlockPartition& p, int rows);

/// Runs the constructive decomposition. Dimension compatibility: B, C, D
/// share A's row count and E, F, G share A's column count.
SevenDecomposition decompose_seven(const SevenInput& in);

/// Submatrix of S_A at the partition cell (1..11, 1..11); may be empty.
QMatrix extract_block(const SevenDecomposition& d, const BlockIndex& idx);
QMatrix extract_block(const SevenDecomposition& d, int block_row, int block_col);

/// One named check of verify_decomposition.
struct VerifyItem {
    std::string name;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// Checks the seven reconstruction identities, the S-patterns, the partition
/// arithmetic and rank formulas, and invertibility of the transforms.
/// Failures are reported, not thrown.
VerifyReport verify_decomposition(const SevenDecomposition& d, const SevenInput& in);

}  // namespace qms
