#include "qms/canonical_forms.hpp"

#include <string>
#include <utility>

#include "qms/error.hpp"
#include "qms/pattern.hpp"

namespace qms {

namespace {

// Row operations applied simultaneously to the working copies of B, C, D and
// to the accumulator R, so that at any point (Bw, Cw, Dw) = R * (B, C, D).
struct RowOps {
    std::vector<QMatrix*> mats;

    void swap(int i, int j) {
        if (i == j) return;
        for (QMatrix* m : mats)
            for (int c = 0; c < m->cols(); ++c) std::swap(m->at(i, c), m->at(j, c));
    }
    // row_i -= q * row_j. The coefficient is taken by value: callers pass
    // entries of the very rows being mutated.
    void axpy(int i, Quaternion q, int j) {
        if (q.is_zero()) return;
        for (QMatrix* m : mats)
            for (int c = 0; c < m->cols(); ++c) m->at(i, c) -= q * m->at(j, c);
    }
    // row_i = q * row_i, q invertible
    void scale(int i, Quaternion q) {
        for (QMatrix* m : mats)
            for (int c = 0; c < m->cols(); ++c) m->at(i, c) = q * m->at(i, c);
    }
    // rows [lo, lo+k) = L * rows [lo, lo+k), L invertible k x k
    void block_transform(int lo, const QMatrix& L) {
        const int k = L.rows();
        if (k == 0) return;
        for (QMatrix* m : mats) {
            QMatrix window = m->sub(lo, 0, k, m->cols());
            m->paste(lo, 0, L * window);
        }
    }
};

struct Pivot {
    int row, col;
};

// Reduced row echelon form of `driver` restricted to rows [lo, hi): pivot
// rows end up at the top of the window with unit pivots, pivot columns
// cleared throughout the window. Returns the pivots found.
std::vector<Pivot> compress_window(RowOps& ops, QMatrix& driver, int lo, int hi) {
    std::vector<Pivot> pivots;
    int r = lo;
    for (int c = 0; c < driver.cols() && r < hi; ++c) {
        int p = -1;
        for (int i = r; i < hi; ++i)
            if (!driver.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        ops.swap(r, p);
        ops.scale(r, q_inv(driver.at(r, c)));
        for (int i = lo; i < hi; ++i) {
            if (i == r) continue;
            ops.axpy(i, driver.at(i, c), r);
        }
        pivots.push_back({r, c});
        ++r;
    }
    return pivots;
}

// row_t -= sum over pivots of driver(t, pivot.col) * row_{pivot.row}.
// With the pivot rows in RREF this removes the component of each target row
// lying in the pivot rows' span.
void clear_rows_against(RowOps& ops, QMatrix& driver, int tlo, int thi,
                        const std::vector<Pivot>& pivots) {
    for (int t = tlo; t < thi; ++t)
        for (const Pivot& pv : pivots) ops.axpy(t, driver.at(t, pv.col), pv.row);
}

// Out-of-place RREF with a left accumulator: returns (E, L, pivot cols) with
// E = L * M in reduced echelon form.
struct TrackedEchelon {
    QMatrix E, L;
    std::vector<int> pivot_cols;
};

TrackedEchelon tracked_rref(const QMatrix& m) {
    TrackedEchelon out{m, QMatrix::identity(m.rows()), {}};
    RowOps ops{{&out.E, &out.L}};
    const auto pivots = compress_window(ops, out.E, 0, m.rows());
    out.pivot_cols.reserve(pivots.size());
    for (const auto& pv : pivots) out.pivot_cols.push_back(pv.col);
    return out;
}

// Reduces `row` (1 x p) against an RREF basis; returns the coefficients and
// leaves the residual in `row`.
std::vector<Quaternion> reduce_row_mod(QMatrix& row, const QMatrix& ech,
                                       const std::vector<int>& pivot_cols) {
    std::vector<Quaternion> coeffs(pivot_cols.size());
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
        const Quaternion q = row.at(0, pivot_cols[k]);
        coeffs[k] = q;
        if (q.is_zero()) continue;
        for (int c = 0; c < row.cols(); ++c)
            row.at(0, c) -= q * ech.at(static_cast<int>(k), c);
    }
    return coeffs;
}

// Extends the full-row-rank matrix `top` (s x n) to an invertible n-ish
// square: returns the completing rows (unit vectors at the non-pivot columns
// of top's RREF).
QMatrix completion_rows(const QMatrix& top) {
    const int n = top.cols();
    TrackedEchelon te = tracked_rref(top);
    if (static_cast<int>(te.pivot_cols.size()) != top.rows())
        throw InternalInconsistency("completion of a rank-deficient block");
    std::vector<bool> is_pivot(n, false);
    for (int c : te.pivot_cols) is_pivot[c] = true;
    QMatrix rest(n - top.rows(), n);
    int r = 0;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) rest.at(r++, c) = Quaternion::one();
    return rest;
}

// Invertible K with S * K = [I_r | 0], S of full row rank r.
QMatrix columns_to_identity(const QMatrix& s_in) {
    const int r = s_in.rows(), p = s_in.cols();
    QMatrix work = s_in;
    QMatrix K = QMatrix::identity(p);
    std::vector<int> chosen(r, -1);
    std::vector<bool> used(p, false);
    for (int i = 0; i < r; ++i) {
        int c = -1;
        for (int j = 0; j < p; ++j)
            if (!used[j] && !work.at(i, j).is_zero()) {
                c = j;
                break;
            }
        if (c < 0) throw InternalInconsistency("column fix on rank-deficient rows");
        used[c] = true;
        chosen[i] = c;
        const Quaternion inv = q_inv(work.at(i, c));
        for (int rr = 0; rr < r; ++rr) work.at(rr, c) = work.at(rr, c) * inv;
        for (int rr = 0; rr < p; ++rr) K.at(rr, c) = K.at(rr, c) * inv;
        for (int j = 0; j < p; ++j) {
            if (j == c) continue;
            const Quaternion coef = work.at(i, j);
            if (coef.is_zero()) continue;
            for (int rr = 0; rr < r; ++rr) work.at(rr, j) -= work.at(rr, c) * coef;
            for (int rr = 0; rr < p; ++rr) K.at(rr, j) -= K.at(rr, c) * coef;
        }
    }
    // Permute the chosen columns into leading position.
    QMatrix perm(p, p);
    std::vector<bool> taken(p, false);
    for (int i = 0; i < r; ++i) {
        perm.at(chosen[i], i) = Quaternion::one();
        taken[chosen[i]] = true;
    }
    int next = r;
    for (int c = 0; c < p; ++c)
        if (!taken[c]) perm.at(c, next++) = Quaternion::one();
    return K * perm;
}

RankPattern pat(std::initializer_list<std::initializer_list<Tok>> grid) {
    RankPattern p;
    for (const auto& row : grid) p.grid.emplace_back(row);
    return p;
}

int checked(long v, const char* name) {
    if (v < 0)
        throw InternalInconsistency(std::string("negative block size ") + name + " = " +
                                    std::to_string(v));
    return static_cast<int>(v);
}

}  // namespace

QMatrix triple_pattern_B(const RowBlockSizes& s, int cols) {
    QMatrix m(s.total_rows(), cols);
    // Identities at block rows 1..5, column blocks (m1, m2, m3, m4, m5).
    const int sizes[5] = {s.m1, s.m2, s.m3, s.m4, s.m5};
    int r0 = 0, c0 = 0;
    for (int b = 0; b < 5; ++b) {
        for (int i = 0; i < sizes[b]; ++i) m.at(r0 + i, c0 + i) = Quaternion::one();
        r0 += sizes[b];
        c0 += sizes[b];
    }
    return m;
}

QMatrix triple_pattern_C(const RowBlockSizes& s, int cols) {
    QMatrix m(s.total_rows(), cols);
    const auto lay = s.layout();
    // (block row, size) per column block: (6, m4), (7, m6), (8, m7), (1, m1), (2, m2).
    const int rows_of[5] = {5, 6, 7, 0, 1};  // 0-based block-row indices
    int c0 = 0;
    for (int b = 0; b < 5; ++b) {
        int r0 = 0;
        for (int k = 0; k < rows_of[b]; ++k) r0 += lay[k];
        for (int i = 0; i < lay[rows_of[b]]; ++i) m.at(r0 + i, c0 + i) = Quaternion::one();
        c0 += lay[rows_of[b]];
    }
    return m;
}

QMatrix triple_pattern_D(const RowBlockSizes& s, int cols) {
    QMatrix m(s.total_rows(), cols);
    const auto lay = s.layout();
    // Column blocks (m8, m4, m6, m3, m1); the m4 column block carries two
    // identities, at block rows 4 and 6.
    struct Put {
        int block_row;
        int col_size_block;
    };
    const std::vector<std::vector<int>> rows_of = {{8}, {3, 5}, {6}, {2}, {0}};
    const int widths[5] = {s.m8, s.m4, s.m6, s.m3, s.m1};
    int c0 = 0;
    for (int b = 0; b < 5; ++b) {
        for (int br : rows_of[b]) {
            int r0 = 0;
            for (int k = 0; k < br; ++k) r0 += lay[k];
            for (int i = 0; i < widths[b]; ++i) m.at(r0 + i, c0 + i) = Quaternion::one();
        }
        c0 += widths[b];
    }
    return m;
}

RowBlockSizes row_block_sizes_from_ranks(const QMatrix& B, const QMatrix& C,
                                         const QMatrix& D) {
    SevenInput in;
    in.B = B;
    in.C = C;
    in.D = D;
    using T = Tok;
    const int rb = rank(B), rc = rank(C), rd = rank(D);
    const int rbc = pattern_rank(pat({{T::B, T::C}}), in);
    const int rbd = pattern_rank(pat({{T::B, T::D}}), in);
    const int rcd = pattern_rank(pat({{T::C, T::D}}), in);
    const int rbcd = pattern_rank(pat({{T::B, T::C, T::D}}), in);
    const int rdb0_d0c =
        pattern_rank(pat({{T::D, T::B, T::O}, {T::D, T::O, T::C}}), in);

    RowBlockSizes s;
    s.m1 = checked(rb + rc + rd - rdb0_d0c, "m1");
    s.m2 = checked(rdb0_d0c - rbc - rd, "m2");
    s.m3 = checked(rdb0_d0c - rbd - rc, "m3");
    s.m4 = checked(rbc + rcd + rbd - rbcd - rdb0_d0c, "m4");
    s.m5 = checked(rbcd - rcd, "m5");
    s.m6 = checked(rdb0_d0c - rcd - rb, "m6");
    s.m7 = checked(rbcd - rbd, "m7");
    s.m8 = checked(rbcd - rbc, "m8");
    s.tail = checked(B.rows() - rbcd, "tail");
    return s;
}

RowBlockSizes col_block_sizes_from_ranks(const QMatrix& E, const QMatrix& F,
                                         const QMatrix& G) {
    return row_block_sizes_from_ranks(conj_transpose(E), conj_transpose(F),
                                      conj_transpose(G));
}

int col_n3_printed_variant(const QMatrix& E, const QMatrix& F, const QMatrix& G) {
    SevenInput in;
    in.E = E;
    in.F = F;
    in.G = G;
    using T = Tok;
    const int rgg_e0_0f =
        pattern_rank(pat({{T::G, T::G}, {T::E, T::O}, {T::O, T::F}}), in);
    const int ref = pattern_rank(pat({{T::E}, {T::F}}), in);
    return rgg_e0_0f - ref - rank(F);
}

TripleDecomposition triple_row_decompose(const QMatrix& B, const QMatrix& C,
                                         const QMatrix& D) {
    const int m = B.rows();
    if (C.rows() != m || D.rows() != m)
        throw DimensionError("triple decomposition requires a shared row count");

    QMatrix Bw = B, Cw = C, Dw = D;
    QMatrix R = QMatrix::identity(m);
    RowOps ops{{&Bw, &Cw, &Dw, &R}};

    // Pair stage: compress B to the top rows, then split C into the part
    // meeting B's row block and the part below it.
    const auto bpiv = compress_window(ops, Bw, 0, m);
    const int rb = static_cast<int>(bpiv.size());

    const auto c_low_piv = compress_window(ops, Cw, rb, m);
    const int h3 = static_cast<int>(c_low_piv.size());
    clear_rows_against(ops, Cw, 0, rb, c_low_piv);
    const auto c_top_piv = compress_window(ops, Cw, 0, rb);
    const int h1 = static_cast<int>(c_top_piv.size());
    const int h2 = rb - h1;

    // Block rows so far: [0,h1) carries B and C, [h1,rb) carries B only,
    // [rb,rb+h3) carries C only, the rest carries neither.

    // D stage. First isolate D's contribution below everything (future m8
    // block), and clear the rest of D against it.
    const auto d_tail_piv = compress_window(ops, Dw, rb + h3, m);
    const int m8 = static_cast<int>(d_tail_piv.size());
    clear_rows_against(ops, Dw, 0, rb + h3, d_tail_piv);

    // Shared-column pair core between the B-only and C-only blocks: their
    // D-parts decompose into an independent part each plus a common part
    // that must come out as the same matrix in both blocks (the doubled m4
    // column of the D-pattern).
    const auto d3piv = compress_window(ops, Dw, rb, rb + h3);
    const int r3 = static_cast<int>(d3piv.size());
    const auto d2piv = compress_window(ops, Dw, h1, rb);
    const int r2 = static_cast<int>(d2piv.size());

    QMatrix D2 = Dw.sub(h1, 0, r2, Dw.cols());
    QMatrix D3 = Dw.sub(rb, 0, r3, Dw.cols());
    std::vector<int> d3cols;
    d3cols.reserve(r3);
    for (const auto& pv : d3piv) d3cols.push_back(pv.col);

    // Residues of D2's rows modulo rowspace(D3), with bookkeeping Gamma0 so
    // that D2 = Res + Gamma0 * D3.
    QMatrix Res(r2, Dw.cols());
    QMatrix Gamma0(r2, r3);
    for (int i = 0; i < r2; ++i) {
        QMatrix row = D2.sub(i, 0, 1, D2.cols());
        const auto coeffs = reduce_row_mod(row, D3, d3cols);
        Res.paste(i, 0, row);
        for (int k = 0; k < r3; ++k) Gamma0.at(i, k) = coeffs[k];
    }
    TrackedEchelon res_ech = tracked_rref(Res);
    const int a2 = static_cast<int>(res_ech.pivot_cols.size());
    const int s = r2 - a2;
    // L * D2 = [independent part (a2 rows); shared part (s rows, in V3)].
    ops.block_transform(h1, res_ech.L);

    // Express the shared part as Gamma * D3 and rebuild the C-only block's
    // D-part as [shared; completion] so both shared copies are equal.
    QMatrix Gamma = (res_ech.L * Gamma0).sub(a2, 0, s, r3);
    const int a3 = r3 - s;
    QMatrix L3(0, 0);
    if (r3 > 0) {
        if (s > 0) {
            L3 = vcat({Gamma, completion_rows(Gamma)});
        } else {
            L3 = QMatrix::identity(r3);
        }
        ops.block_transform(rb, L3);
    }

    // Split the shared B-and-C block against the now-final lower D rows.
    std::vector<int> lower_rows;
    for (int i = h1; i < h1 + r2; ++i) lower_rows.push_back(i);
    for (int i = rb; i < rb + r3; ++i) lower_rows.push_back(i);
    for (int i = rb + h3; i < rb + h3 + m8; ++i) lower_rows.push_back(i);
    if (!lower_rows.empty() && h1 > 0) {
        QMatrix stack(static_cast<int>(lower_rows.size()), Dw.cols());
        for (size_t j = 0; j < lower_rows.size(); ++j)
            stack.paste(static_cast<int>(j), 0, Dw.sub(lower_rows[j], 0, 1, Dw.cols()));
        TrackedEchelon ech = tracked_rref(stack);
        const int e = static_cast<int>(ech.pivot_cols.size());
        for (int t = 0; t < h1; ++t) {
            QMatrix row = Dw.sub(t, 0, 1, Dw.cols());
            const auto gamma = reduce_row_mod(row, ech.E, ech.pivot_cols);
            for (size_t j = 0; j < lower_rows.size(); ++j) {
                Quaternion c;
                for (int k = 0; k < e; ++k)
                    c += gamma[k] * ech.L.at(k, static_cast<int>(j));
                ops.axpy(t, c, lower_rows[j]);
            }
        }
    }
    const auto d1piv = compress_window(ops, Dw, 0, h1);
    const int m1 = static_cast<int>(d1piv.size());

    RowBlockSizes sz;
    sz.m1 = m1;
    sz.m2 = h1 - m1;
    sz.m3 = a2;
    sz.m4 = s;
    sz.m5 = h2 - r2;
    sz.m6 = a3;
    sz.m7 = h3 - r3;
    sz.m8 = m8;
    sz.tail = m - rb - h3 - m8;
    if (sz.m2 < 0 || sz.m5 < 0 || sz.m7 < 0 || sz.tail < 0)
        throw InternalInconsistency("triple elimination produced negative block sizes");

    // Column fixes: each matrix's nonzero rows, stacked in the order of its
    // column blocks, map to [I | 0].
    auto stack_rows = [&](const QMatrix& w, const std::vector<std::pair<int, int>>& spans) {
        std::vector<QMatrix> parts;
        for (auto [lo, n] : spans) parts.push_back(w.sub(lo, 0, n, w.cols()));
        return vcat(parts);
    };
    const QMatrix K1 = columns_to_identity(Bw.sub(0, 0, rb, Bw.cols()));
    const QMatrix K2 =
        columns_to_identity(stack_rows(Cw, {{rb, h3}, {0, h1}}));
    const QMatrix K3 = columns_to_identity(stack_rows(
        Dw,
        {{rb + h3, m8}, {h1 + a2, s}, {rb + s, a3}, {h1, a2}, {0, m1}}));

    const QMatrix SB = Bw * K1;
    const QMatrix SC = Cw * K2;
    const QMatrix SD = Dw * K3;
    if (SB != triple_pattern_B(sz, B.cols()) || SC != triple_pattern_C(sz, C.cols()) ||
        SD != triple_pattern_D(sz, D.cols()))
        throw InternalInconsistency("triple canonical pattern mismatch");
    if (row_block_sizes_from_ranks(B, C, D) != sz)
        throw InternalInconsistency("triple block sizes disagree with rank formulas");

    TripleDecomposition out;
    out.P = inverse(R);
    out.T1 = inverse(K1);
    out.T2 = inverse(K2);
    out.T3 = inverse(K3);
    out.P_inv = std::move(R);
    out.T1_inv = K1;
    out.T2_inv = K2;
    out.T3_inv = K3;
    out.sizes = sz;
    return out;
}

ColTripleDecomposition triple_col_decompose(const QMatrix& E, const QMatrix& F,
                                            const QMatrix& G) {
    const int n = E.cols();
    if (F.cols() != n || G.cols() != n)
        throw DimensionError("column triple requires a shared column count");
    const TripleDecomposition row =
        triple_row_decompose(conj_transpose(E), conj_transpose(F), conj_transpose(G));
    // E* = P S T1  =>  E = T1* S* P*.
    ColTripleDecomposition out;
    out.Q = conj_transpose(row.P);
    out.V1 = conj_transpose(row.T1);
    out.V2 = conj_transpose(row.T2);
    out.V3 = conj_transpose(row.T3);
    out.Q_inv = conj_transpose(row.P_inv);
    out.V1_inv = conj_transpose(row.T1_inv);
    out.V2_inv = conj_transpose(row.T2_inv);
    out.V3_inv = conj_transpose(row.T3_inv);
    out.sizes = row.sizes;
    return out;
}

}  // namespace qms
