#include "qms/seven_decomp.hpp"

#include <numeric>

#include "qms/error.hpp"

namespace qms {

std::vector<int> BlockPartition::row_layout() const {
    return {row.m1, row.m2, row.m3, row.m4, row.m5, row.m4,
            row.m6, row.m7, row.m8, row.tail - t, t};
}

std::vector<int> BlockPartition::col_layout() const {
    return {col.m1, col.m2, col.m3, col.m4, col.m5, col.m4,
            col.m6, col.m7, col.m8, col.tail - t, t};
}

int BlockPartition::row_offset(int block) const {
    if (block < 1 || block > 11) throw IndexError("block row out of range");
    const auto lay = row_layout();
    return std::accumulate(lay.begin(), lay.begin() + (block - 1), 0);
}

int BlockPartition::col_offset(int block) const {
    if (block < 1 || block > 11) throw IndexError("block column out of range");
    const auto lay = col_layout();
    return std::accumulate(lay.begin(), lay.begin() + (block - 1), 0);
}

QMatrix pattern_SB(const BlockPartition& p, int cols) { return triple_pattern_B(p.row, cols); }
QMatrix pattern_SC(const BlockPartition& p, int cols) { return triple_pattern_C(p.row, cols); }
QMatrix pattern_SD(const BlockPartition& p, int cols) { return triple_pattern_D(p.row, cols); }
QMatrix pattern_SE(const BlockPartition& p, int rows) {
    return conj_transpose(triple_pattern_B(p.col, rows));
}
QMatrix pattern_SF(const BlockPartition& p, int rows) {
    return conj_transpose(triple_pattern_C(p.col, rows));
}
QMatrix pattern_SG(const BlockPartition& p, int rows) {
    return conj_transpose(triple_pattern_D(p.col, rows));
}

namespace {

// Permutation moving the first t rows to the bottom (for flipping the
// canonical [[I,0],[0,0]] corner into [[0,0],[0,I_t]]).
QMatrix rotate_rows_down(int size, int t) {
    QMatrix perm(size, size);
    for (int i = 0; i < size - t; ++i) perm.at(i, i + t) = Quaternion::one();
    for (int i = size - t; i < size; ++i) perm.at(i, i - (size - t)) = Quaternion::one();
    return perm;
}

QMatrix block_diag(const QMatrix& top, const QMatrix& bottom) {
    QMatrix out(top.rows() + bottom.rows(), top.cols() + bottom.cols());
    out.paste(0, 0, top);
    out.paste(top.rows(), top.cols(), bottom);
    return out;
}

}  // namespace

SevenDecomposition decompose_seven(const SevenInput& in) {
    const int m = in.A.rows(), n = in.A.cols();
    if (in.B.rows() != m || in.C.rows() != m || in.D.rows() != m)
        throw DimensionError("B, C, D must share A's row count");
    if (in.E.cols() != n || in.F.cols() != n || in.G.cols() != n)
        throw DimensionError("E, F, G must share A's column count");

    // Step 1: triple canonical forms of (B, C, D) and (E; F; G).
    const TripleDecomposition rowT = triple_row_decompose(in.B, in.C, in.D);
    const ColTripleDecomposition colT = triple_col_decompose(in.E, in.F, in.G);
    const int r_bcd = rowT.sizes.rank_bcd();
    const int r_efg = colT.sizes.rank_bcd();

    const QMatrix A1 = rowT.P_inv * in.A * colT.Q_inv;

    // Step 2: canonicalize the trailing corner of A1, placing I_t at the
    // bottom-right so the t block lands at position (11, 11).
    const QMatrix corner = A1.sub(r_bcd, r_efg, m - r_bcd, n - r_efg);
    const CanonicalForm cf = canonical_form(corner);
    const int t = cf.r;
    const QMatrix P2 = rotate_rows_down(m - r_bcd, t) * cf.P;
    const QMatrix Q2 = cf.Q * conj_transpose(rotate_rows_down(n - r_efg, t));

    const QMatrix A2 =
        block_diag(QMatrix::identity(r_bcd), P2) * A1 * block_diag(QMatrix::identity(r_efg), Q2);

    // Step 3: clear the blocks flanking I_t. P3 subtracts A2's last t columns
    // against the identity; Q3 does the same for the last t rows.
    QMatrix P3 = QMatrix::identity(m);
    if (t > 0 && r_bcd > 0) P3.paste(0, m - t, -A2.sub(0, n - t, r_bcd, t));

    QMatrix Q3 = QMatrix::identity(n);
    if (t > 0 && r_efg > 0) Q3.paste(n - t, 0, -A2.sub(m - t, 0, t, r_efg));

    SevenDecomposition d;
    d.SA = P3 * A2 * Q3;
    d.partition.row = rowT.sizes;
    d.partition.col = colT.sizes;
    d.partition.t = t;

    const QMatrix P_elim = P3 * block_diag(QMatrix::identity(r_bcd), P2) * rowT.P_inv;
    const QMatrix Q_elim = colT.Q_inv * block_diag(QMatrix::identity(r_efg), Q2) * Q3;
    d.P = inverse(P_elim);
    d.Q = inverse(Q_elim);
    d.P_inv = P_elim;
    d.Q_inv = Q_elim;
    d.T1 = rowT.T1;
    d.T2 = rowT.T2;
    d.T3 = rowT.T3;
    d.T1_inv = rowT.T1_inv;
    d.T2_inv = rowT.T2_inv;
    d.T3_inv = rowT.T3_inv;
    d.V1 = colT.V1;
    d.V2 = colT.V2;
    d.V3 = colT.V3;
    d.V1_inv = colT.V1_inv;
    d.V2_inv = colT.V2_inv;
    d.V3_inv = colT.V3_inv;
    return d;
}

QMatrix extract_block(const SevenDecomposition& d, const BlockIndex& idx) {
    return extract_block(d, idx.block_row, idx.block_col);
}

QMatrix extract_block(const SevenDecomposition& d, int block_row, int block_col) {
    if (block_row < 1 || block_row > 11 || block_col < 1 || block_col > 11)
        throw IndexError("block index out of range");
    const BlockPartition& p = d.partition;
    return d.SA.sub(p.row_offset(block_row), p.col_offset(block_col), p.row_size(block_row),
                    p.col_size(block_col));
}

VerifyReport verify_decomposition(const SevenDecomposition& d, const SevenInput& in) {
    VerifyReport rep;
    auto check = [&rep](const std::string& name, bool pass) {
        rep.items.push_back({name, pass});
    };
    const BlockPartition& p = d.partition;
    const int m = in.A.rows(), n = in.A.cols();

    const auto rlay = p.row_layout();
    const auto clay = p.col_layout();
    bool nonneg = p.t >= 0;
    for (int v : rlay) nonneg = nonneg && v >= 0;
    for (int v : clay) nonneg = nonneg && v >= 0;
    check("partition sizes nonnegative", nonneg);
    check("row layout sums to m",
          std::accumulate(rlay.begin(), rlay.end(), 0) == m && d.SA.rows() == m);
    check("column layout sums to n",
          std::accumulate(clay.begin(), clay.end(), 0) == n && d.SA.cols() == n);

    check("reconstruction A", d.P * d.SA * d.Q == in.A);
    check("reconstruction B", d.P * pattern_SB(p, in.B.cols()) * d.T1 == in.B);
    check("reconstruction C", d.P * pattern_SC(p, in.C.cols()) * d.T2 == in.C);
    check("reconstruction D", d.P * pattern_SD(p, in.D.cols()) * d.T3 == in.D);
    check("reconstruction E", d.V1 * pattern_SE(p, in.E.rows()) * d.Q == in.E);
    check("reconstruction F", d.V2 * pattern_SF(p, in.F.rows()) * d.Q == in.F);
    check("reconstruction G", d.V3 * pattern_SG(p, in.G.rows()) * d.Q == in.G);

    // S_A shape: 10th/11th block row and column are zero apart from the
    // identity corner.
    bool shape = extract_block(d, 10, 10).is_zero() && extract_block(d, 10, 11).is_zero() &&
                 extract_block(d, 11, 10).is_zero() &&
                 extract_block(d, 11, 11) == QMatrix::identity(p.t);
    for (int i = 1; i <= 9; ++i)
        shape = shape && extract_block(d, i, 11).is_zero() && extract_block(d, 11, i).is_zero();
    check("S_A zero/identity structure", shape);

    auto inv_ok = [](const QMatrix& x, const QMatrix& xi) {
        return x.rows() == x.cols() && x * xi == QMatrix::identity(x.rows());
    };
    check("P invertible", inv_ok(d.P, d.P_inv));
    check("Q invertible", inv_ok(d.Q, d.Q_inv));
    check("T1 invertible", inv_ok(d.T1, d.T1_inv));
    check("T2 invertible", inv_ok(d.T2, d.T2_inv));
    check("T3 invertible", inv_ok(d.T3, d.T3_inv));
    check("V1 invertible", inv_ok(d.V1, d.V1_inv));
    check("V2 invertible", inv_ok(d.V2, d.V2_inv));
    check("V3 invertible", inv_ok(d.V3, d.V3_inv));

    // Partition against the rank formulas, recomputed from the inputs.
    check("m sizes match rank formulas",
          row_block_sizes_from_ranks(in.B, in.C, in.D) == p.row);
    check("n sizes match rank formulas",
          col_block_sizes_from_ranks(in.E, in.F, in.G) == p.col);
    using T = Tok;
    RankPattern tpat{{{T::A, T::B, T::C, T::D},
                      {T::E, T::O, T::O, T::O},
                      {T::F, T::O, T::O, T::O},
                      {T::G, T::O, T::O, T::O}}};
    check("t matches its rank formula",
          p.t == pattern_rank(tpat, in) - p.row.rank_bcd() - p.col.rank_bcd());
    return rep;
}

}  // namespace qms
