#include "qms/solvers.hpp"

#include <utility>

#include "qms/error.hpp"

namespace qms {

namespace {

std::string slot_name(char letter, int i, int j) {
    return std::string(1, letter) + std::to_string(i) + "_" + std::to_string(j);
}

std::string block_name(int i, int j) {
    std::string s = "A" + std::to_string(i);
    if (i >= 10 || j >= 10) s += ",";
    return s + std::to_string(j);
}

Term tb(int i, int j, int sign = 1) {
    Term t;
    t.sign = sign;
    t.is_block = true;
    t.bi = i;
    t.bj = j;
    return t;
}

Term tf(char letter, int i, int j, int sign = 1) {
    Term t;
    t.sign = sign;
    t.free_ref = slot_name(letter, i, j);
    return t;
}

Cell fr(char letter, int i, int j) {
    Cell c;
    c.free_name = slot_name(letter, i, j);
    return c;
}

Cell fx(std::vector<Term> terms) {
    Cell c;
    c.terms = std::move(terms);
    return c;
}

// Grid row/column size vectors, in the hatted matrices' block orders.
struct Layouts {
    std::vector<int> x_rows, x_cols;  // three-term Xhat
    std::vector<int> y_rows, y_cols;
    std::vector<int> z_rows, z_cols;
    std::vector<int> x4_cols;  // four-term Xhat columns (ten blocks, t = 0)
    std::vector<int> w_rows, w_cols;
};

Layouts layouts_of(const SevenDecomposition& d) {
    const RowBlockSizes& M = d.partition.row;
    const RowBlockSizes& N = d.partition.col;
    const int p1 = d.T1.rows(), p2 = d.T2.rows(), p3 = d.T3.rows();
    const int q1 = d.V1.rows(), q2 = d.V2.rows(), q3 = d.V3.rows();
    Layouts L;
    L.x_rows = {M.m1, M.m2, M.m3, M.m4, M.m5, p1 - M.rank_b()};
    L.x_cols = {N.m1, N.m2, N.m3, N.m4, N.m5, q1 - N.rank_b()};
    L.y_rows = {M.m4, M.m6, M.m7, M.m1, M.m2, p2 - M.rank_c()};
    L.y_cols = {N.m4, N.m6, N.m7, N.m1, N.m2, q2 - N.rank_c()};
    L.z_rows = {M.m8, M.m4, M.m6, M.m3, M.m1, p3 - M.rank_d()};
    L.z_cols = {N.m8, N.m4, N.m6, N.m3, N.m1, q3 - N.rank_d()};
    L.x4_cols = {N.m1, N.m2, N.m3, N.m4, N.m5, N.m4, N.m6, N.m7, N.m8, N.tail};
    L.w_rows = {M.m1, M.m2, M.m3, M.m4, M.m5, M.m4, M.m6, M.m7, M.m8, M.tail};
    L.w_cols = {N.m1, N.m2, N.m3, N.m4, N.m5, q1 - N.rank_b()};
    return L;
}

// The hatted grids of the three-term general solution, per the bordered
// layouts of the general solution. Entries the equation ties to several
// unknowns reference the free slots they depend on. The (1,1) cell of S_A
// couples X11, Y44 and Z55; with Y44 and Z55 kept free, Xhat(1,1) is the
// dependent one.
GridSpec three_xhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.x_rows;
    g.col_sizes = L.x_cols;
    g.cells = {
        {fx({tb(1, 1), tf('Y', 4, 4, -1), tf('Z', 5, 5, -1)}), fr('X', 1, 2), fr('X', 1, 3),
         fr('X', 1, 4), fx({tb(1, 5)}), fr('X', 1, 6)},
        {fr('X', 2, 1), fr('X', 2, 2), fx({tb(2, 3)}), fx({tb(2, 4)}), fx({tb(2, 5)}),
         fr('X', 2, 6)},
        {fr('X', 3, 1), fx({tb(3, 2)}), fr('X', 3, 3), fx({tb(3, 4), tb(3, 6, -1)}),
         fx({tb(3, 5)}), fr('X', 3, 6)},
        {fr('X', 4, 1), fx({tb(4, 2)}), fx({tb(4, 3), tb(6, 3, -1)}),
         fx({tb(4, 4), tb(6, 4, -1)}), fx({tb(4, 5)}), fr('X', 4, 6)},
        {fx({tb(5, 1)}), fx({tb(5, 2)}), fx({tb(5, 3)}), fx({tb(5, 4)}), fx({tb(5, 5)}),
         fr('X', 5, 6)},
        {fr('X', 6, 1), fr('X', 6, 2), fr('X', 6, 3), fr('X', 6, 4), fr('X', 6, 5),
         fr('X', 6, 6)},
    };
    return g;
}

GridSpec three_yhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.y_rows;
    g.col_sizes = L.y_cols;
    g.cells = {
        {fx({tb(6, 6), tb(6, 4, -1)}), fx({tb(6, 7), tb(4, 7, -1)}), fx({tb(6, 8)}),
         fx({tb(6, 1), tb(4, 1, -1), tf('X', 4, 1)}), fx({tb(6, 2)}), fr('Y', 1, 6)},
        {fx({tb(7, 6), tb(7, 4, -1)}), fr('Y', 2, 2), fx({tb(7, 8)}), fr('Y', 2, 4),
         fx({tb(7, 2)}), fr('Y', 2, 6)},
        {fx({tb(8, 6)}), fx({tb(8, 7)}), fx({tb(8, 8)}), fx({tb(8, 1)}), fx({tb(8, 2)}),
         fr('Y', 3, 6)},
        {fx({tb(1, 6), tb(1, 4, -1), tf('X', 1, 4)}), fr('Y', 4, 2), fx({tb(1, 8)}),
         fr('Y', 4, 4), fx({tb(1, 2), tf('X', 1, 2, -1)}), fr('Y', 4, 6)},
        {fx({tb(2, 6)}), fx({tb(2, 7)}), fx({tb(2, 8)}), fx({tb(2, 1), tf('X', 2, 1, -1)}),
         fx({tb(2, 2), tf('X', 2, 2, -1)}), fr('Y', 5, 6)},
        {fr('Y', 6, 1), fr('Y', 6, 2), fr('Y', 6, 3), fr('Y', 6, 4), fr('Y', 6, 5),
         fr('Y', 6, 6)},
    };
    return g;
}

GridSpec three_zhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.z_rows;
    g.col_sizes = L.z_cols;
    g.cells = {
        {fx({tb(9, 9)}), fx({tb(9, 6)}), fx({tb(9, 7)}), fx({tb(9, 3)}), fx({tb(9, 1)}),
         fr('Z', 1, 6)},
        {fx({tb(6, 9)}), fx({tb(6, 4)}), fx({tb(4, 7)}), fx({tb(6, 3)}),
         fx({tb(4, 1), tf('X', 4, 1, -1)}), fr('Z', 2, 6)},
        {fx({tb(7, 9)}), fx({tb(7, 4)}), fx({tb(7, 7), tf('Y', 2, 2, -1)}), fx({tb(7, 3)}),
         fx({tb(7, 1), tf('Y', 2, 4, -1)}), fr('Z', 3, 6)},
        {fx({tb(3, 9)}), fx({tb(3, 6)}), fx({tb(3, 7)}), fx({tb(3, 3), tf('X', 3, 3, -1)}),
         fx({tb(3, 1), tf('X', 3, 1, -1)}), fr('Z', 4, 6)},
        {fx({tb(1, 9)}), fx({tb(1, 4), tf('X', 1, 4, -1)}),
         fx({tb(1, 7), tf('Y', 4, 2, -1)}), fx({tb(1, 3), tf('X', 1, 3, -1)}), fr('Z', 5, 5),
         fr('Z', 5, 6)},
        {fr('Z', 6, 1), fr('Z', 6, 2), fr('Z', 6, 3), fr('Z', 6, 4), fr('Z', 6, 5),
         fr('Z', 6, 6)},
    };
    return g;
}

// Four-term grids. Xhat is free everywhere except the forced entries in its
// trailing columns; What absorbs the residue of the i <= 5, j <= 5 cells, so
// much of its interior is dependent.
GridSpec four_xhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.x_rows;
    g.col_sizes = L.x4_cols;
    g.cells.resize(6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 10; ++j) g.cells[i - 1].push_back(fr('X', i, j));
    auto set = [&g](int i, int j, Cell c) { g.cells[i - 1][j - 1] = std::move(c); };
    set(1, 10, fx({tb(1, 10)}));
    set(2, 9, fx({tb(2, 9)}));
    set(2, 10, fx({tb(2, 10)}));
    set(3, 8, fx({tb(3, 8)}));
    set(3, 10, fx({tb(3, 10)}));
    set(4, 8, fx({tb(4, 8)}));
    set(4, 9, fx({tb(4, 9), tb(6, 9, -1)}));
    set(4, 10, fx({tb(4, 10)}));
    set(5, 6, fx({tb(5, 6)}));
    set(5, 7, fx({tb(5, 7)}));
    set(5, 8, fx({tb(5, 8)}));
    set(5, 9, fx({tb(5, 9)}));
    set(5, 10, fx({tb(5, 10)}));
    return g;
}

GridSpec four_what(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.w_rows;
    g.col_sizes = L.w_cols;
    g.cells.resize(10);
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 6; ++j) g.cells[i - 1].push_back(fr('W', i, j));
    auto set = [&g](int i, int j, Cell c) { g.cells[i - 1][j - 1] = std::move(c); };
    set(1, 1, fx({tb(1, 1), tf('X', 1, 1, -1), tf('Y', 4, 4, -1), tf('Z', 5, 5, -1)}));
    set(1, 5, fx({tb(1, 5), tf('X', 1, 5, -1)}));
    set(2, 3, fx({tb(2, 3), tf('X', 2, 3, -1)}));
    set(2, 4, fx({tb(2, 4), tf('X', 2, 4, -1)}));
    set(2, 5, fx({tb(2, 5), tf('X', 2, 5, -1)}));
    set(3, 2, fx({tb(3, 2), tf('X', 3, 2, -1)}));
    set(3, 4, fx({tb(3, 4), tb(3, 6, -1), tf('X', 3, 4, -1), tf('X', 3, 6)}));
    set(3, 5, fx({tb(3, 5), tf('X', 3, 5, -1)}));
    set(4, 2, fx({tb(4, 2), tf('X', 4, 2, -1)}));
    set(4, 3, fx({tb(4, 3), tb(6, 3, -1), tf('W', 6, 3), tf('X', 4, 3, -1)}));
    set(4, 4, fx({tb(4, 4), tb(4, 6, -1), tf('X', 4, 6), tf('X', 4, 4, -1)}));
    set(4, 5, fx({tb(4, 5), tf('X', 4, 5, -1)}));
    for (int j = 1; j <= 5; ++j) set(5, j, fx({tb(5, j), tf('X', 5, j, -1)}));
    set(6, 4, fx({tb(6, 4), tb(4, 6, -1), tf('X', 4, 6)}));
    set(6, 5, fx({tb(6, 5)}));
    set(7, 5, fx({tb(7, 5)}));
    set(8, 3, fx({tb(8, 3)}));
    set(8, 4, fx({tb(8, 4)}));
    set(8, 5, fx({tb(8, 5)}));
    set(9, 2, fx({tb(9, 2)}));
    set(9, 4, fx({tb(9, 4), tb(9, 6, -1)}));
    set(9, 5, fx({tb(9, 5)}));
    for (int j = 1; j <= 5; ++j) set(10, j, fx({tb(10, j)}));
    return g;
}

GridSpec four_yhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.y_rows;
    g.col_sizes = L.y_cols;
    g.cells = {
        {fx({tb(6, 6), tb(4, 6, -1), tf('X', 4, 6)}),
         fx({tb(6, 7), tb(4, 7, -1), tf('X', 4, 7)}), fx({tb(6, 8)}),
         fx({tb(6, 1), tb(4, 1, -1), tf('X', 4, 1), tf('W', 4, 1), tf('W', 6, 1, -1)}),
         fx({tb(6, 2), tf('W', 6, 2, -1)}), fr('Y', 1, 6)},
        {fx({tb(7, 6), tb(7, 4, -1), tf('W', 7, 4)}), fr('Y', 2, 2), fx({tb(7, 8)}),
         fr('Y', 2, 4), fx({tb(7, 2), tf('W', 7, 2, -1)}), fr('Y', 2, 6)},
        {fx({tb(8, 6)}), fx({tb(8, 7)}), fx({tb(8, 8)}), fx({tb(8, 1), tf('W', 8, 1, -1)}),
         fx({tb(8, 2), tf('W', 8, 2, -1)}), fr('Y', 3, 6)},
        {fx({tb(1, 6), tb(1, 4, -1), tf('X', 1, 4), tf('W', 1, 4), tf('X', 1, 6, -1)}),
         fr('Y', 4, 2), fx({tb(1, 8), tf('X', 1, 8, -1)}), fr('Y', 4, 4),
         fx({tb(1, 2), tf('X', 1, 2, -1), tf('W', 1, 2, -1)}), fr('Y', 4, 6)},
        {fx({tb(2, 6), tf('X', 2, 6, -1)}), fx({tb(2, 7), tf('X', 2, 7, -1)}),
         fx({tb(2, 8), tf('X', 2, 8, -1)}),
         fx({tb(2, 1), tf('X', 2, 1, -1), tf('W', 2, 1, -1)}),
         fx({tb(2, 2), tf('X', 2, 2, -1), tf('W', 2, 2, -1)}), fr('Y', 5, 6)},
        {fr('Y', 6, 1), fr('Y', 6, 2), fr('Y', 6, 3), fr('Y', 6, 4), fr('Y', 6, 5),
         fr('Y', 6, 6)},
    };
    return g;
}

GridSpec four_zhat(const Layouts& L) {
    GridSpec g;
    g.row_sizes = L.z_rows;
    g.col_sizes = L.z_cols;
    g.cells = {
        {fx({tb(9, 9)}), fx({tb(9, 6)}), fx({tb(9, 7)}), fx({tb(9, 3), tf('W', 9, 3, -1)}),
         fx({tb(9, 1), tf('W', 9, 1, -1)}), fr('Z', 1, 6)},
        {fx({tb(6, 9)}), fx({tb(4, 6), tf('X', 4, 6, -1)}),
         fx({tb(4, 7), tf('X', 4, 7, -1)}), fx({tb(6, 3), tf('W', 6, 3, -1)}),
         fx({tb(4, 1), tf('X', 4, 1, -1), tf('W', 4, 1, -1)}), fr('Z', 2, 6)},
        {fx({tb(7, 9)}), fx({tb(7, 4), tf('W', 7, 4, -1)}),
         fx({tb(7, 7), tf('Y', 2, 2, -1)}), fx({tb(7, 3), tf('W', 7, 3, -1)}),
         fx({tb(7, 1), tf('Y', 2, 4, -1), tf('W', 7, 1, -1)}), fr('Z', 3, 6)},
        {fx({tb(3, 9), tf('X', 3, 9, -1)}), fx({tb(3, 6), tf('X', 3, 6, -1)}),
         fx({tb(3, 7), tf('X', 3, 7, -1)}),
         fx({tb(3, 3), tf('X', 3, 3, -1), tf('W', 3, 3, -1)}),
         fx({tb(3, 1), tf('X', 3, 1, -1), tf('W', 3, 1, -1)}), fr('Z', 4, 6)},
        {fx({tb(1, 9), tf('X', 1, 9, -1)}),
         fx({tb(1, 4), tf('X', 1, 4, -1), tf('W', 1, 4, -1)}),
         fx({tb(1, 7), tf('X', 1, 7, -1), tf('Y', 4, 2, -1)}),
         fx({tb(1, 3), tf('X', 1, 3, -1), tf('W', 1, 3, -1)}), fr('Z', 5, 5),
         fr('Z', 5, 6)},
        {fr('Z', 6, 1), fr('Z', 6, 2), fr('Z', 6, 3), fr('Z', 6, 4), fr('Z', 6, 5),
         fr('Z', 6, 6)},
    };
    return g;
}

void collect_slots(const GridSpec& g, std::vector<FreeSlot>& out) {
    for (size_t i = 0; i < g.cells.size(); ++i)
        for (size_t j = 0; j < g.cells[i].size(); ++j)
            if (g.cells[i][j].is_free())
                out.push_back({g.cells[i][j].free_name, g.row_sizes[i],
                               g.col_sizes[j]});
}

QMatrix eval_cell(const Cell& cell, int rows, int cols, const SevenDecomposition& d,
                  const ParamAssignment& params) {
    if (cell.is_free()) return params.at(cell.free_name);
    QMatrix v(rows, cols);
    for (const Term& t : cell.terms) {
        const QMatrix part =
            t.is_block ? extract_block(d, t.bi, t.bj) : params.at(t.free_ref);
        v = t.sign >= 0 ? v + part : v - part;
    }
    return v;
}

QMatrix eval_grid(const GridSpec& g, const SevenDecomposition& d,
                  const ParamAssignment& params) {
    std::vector<QMatrix> rows;
    for (size_t i = 0; i < g.cells.size(); ++i) {
        std::vector<QMatrix> row;
        for (size_t j = 0; j < g.cells[i].size(); ++j)
            row.push_back(
                eval_cell(g.cells[i][j], g.row_sizes[i], g.col_sizes[j], d, params));
        rows.push_back(hcat(row));
    }
    return vcat(rows);
}

void validate_params(const std::vector<FreeSlot>& slots, const ParamAssignment& params) {
    if (params.size() != slots.size())
        throw ParameterError("expected " + std::to_string(slots.size()) +
                             " free parameters, got " + std::to_string(params.size()));
    for (const FreeSlot& s : slots) {
        const auto it = params.find(s.name);
        if (it == params.end()) throw ParameterError("missing free parameter " + s.name);
        if (it->second.rows() != s.rows || it->second.cols() != s.cols)
            throw ParameterError("parameter " + s.name + " must be " +
                                 std::to_string(s.rows) + "x" + std::to_string(s.cols));
    }
}

// Slices the free cells of a grid out of a concrete hatted matrix.
void recover_from_grid(const GridSpec& g, const QMatrix& hatted, ParamAssignment& out) {
    int r0 = 0;
    for (size_t i = 0; i < g.cells.size(); ++i) {
        int c0 = 0;
        for (size_t j = 0; j < g.cells[i].size(); ++j) {
            if (g.cells[i][j].is_free())
                out[g.cells[i][j].free_name] =
                    hatted.sub(r0, c0, g.row_sizes[i], g.col_sizes[j]);
            c0 += g.col_sizes[j];
        }
        r0 += g.row_sizes[i];
    }
}

void check_zero(const SevenDecomposition& d, int i, int j, ConsistencyReport& rep) {
    const QMatrix blk = extract_block(d, i, j);
    if (!blk.is_zero()) {
        rep.consistent = false;
        rep.failed_conditions.push_back({block_name(i, j) + "=0", blk});
    }
}

void check_equal(const SevenDecomposition& d, int i1, int j1, int i2, int j2,
                 ConsistencyReport& rep) {
    const QMatrix diff = extract_block(d, i1, j1) - extract_block(d, i2, j2);
    if (!diff.is_zero()) {
        rep.consistent = false;
        rep.failed_conditions.push_back(
            {block_name(i1, j1) + "=" + block_name(i2, j2), diff});
    }
}

void check_rank_condition(const SevenDecomposition& d, ConsistencyReport& rep) {
    if (d.partition.t != 0) {
        rep.consistent = false;
        QMatrix witness(1, 1);
        witness.at(0, 0) = Quaternion(rat(d.partition.t));
        rep.failed_conditions.push_back(
            {"r(A,B,C,D|E,0,0,0|F,0,0,0|G,0,0,0) = r(B,C,D) + r(E|F|G)", witness});
    }
}

}  // namespace

ConsistencyReport check_consistency_three(const SevenDecomposition& d) {
    ConsistencyReport rep;
    check_rank_condition(d, rep);
    check_equal(d, 9, 4, 9, 6, rep);
    check_equal(d, 4, 9, 6, 9, rep);
    check_equal(d, 6, 4, 4, 6, rep);
    for (int i = 1; i <= 9; ++i) check_zero(d, i, 10, rep);
    for (int j = 1; j <= 9; ++j) check_zero(d, 10, j, rep);
    const int zeros[][2] = {{2, 9}, {9, 2}, {3, 8}, {8, 3}, {4, 8}, {8, 4}, {5, 6}, {6, 5},
                            {5, 7}, {7, 5}, {5, 8}, {8, 5}, {5, 9}, {9, 5}, {8, 9}, {9, 8}};
    for (const auto& z : zeros) check_zero(d, z[0], z[1], rep);
    return rep;
}

ConsistencyReport check_consistency_four(const SevenDecomposition& d) {
    ConsistencyReport rep;
    check_rank_condition(d, rep);
    check_zero(d, 8, 9, rep);
    check_zero(d, 9, 8, rep);
    for (int i = 6; i <= 9; ++i) {
        check_zero(d, i, 10, rep);
        check_zero(d, 10, i, rep);
    }
    return rep;
}

SolutionFamilyThree general_solution_three(const SevenDecomposition& d) {
    const ConsistencyReport rep = check_consistency_three(d);
    if (!rep.consistent)
        throw InconsistentSystem("three-term equation is inconsistent (" +
                                 std::to_string(rep.failed_conditions.size()) +
                                 " failed conditions)");
    SolutionFamilyThree fam;
    fam.d = d;
    const Layouts L = layouts_of(d);
    fam.xhat = three_xhat(L);
    fam.yhat = three_yhat(L);
    fam.zhat = three_zhat(L);
    collect_slots(fam.xhat, fam.free_slots);
    collect_slots(fam.yhat, fam.free_slots);
    collect_slots(fam.zhat, fam.free_slots);
    return fam;
}

SolutionFamilyFour general_solution_four(const SevenDecomposition& d) {
    const ConsistencyReport rep = check_consistency_four(d);
    if (!rep.consistent)
        throw InconsistentSystem("four-term equation is inconsistent (" +
                                 std::to_string(rep.failed_conditions.size()) +
                                 " failed conditions)");
    SolutionFamilyFour fam;
    fam.d = d;
    const Layouts L = layouts_of(d);
    fam.xhat = four_xhat(L);
    fam.what = four_what(L);
    fam.yhat = four_yhat(L);
    fam.zhat = four_zhat(L);
    collect_slots(fam.xhat, fam.free_slots);
    collect_slots(fam.what, fam.free_slots);
    collect_slots(fam.yhat, fam.free_slots);
    collect_slots(fam.zhat, fam.free_slots);
    return fam;
}

ThreeSolution assemble_three(const SolutionFamilyThree& fam, const ParamAssignment& params) {
    validate_params(fam.free_slots, params);
    ThreeSolution s;
    s.X = fam.d.T1_inv * eval_grid(fam.xhat, fam.d, params) * fam.d.V1_inv;
    s.Y = fam.d.T2_inv * eval_grid(fam.yhat, fam.d, params) * fam.d.V2_inv;
    s.Z = fam.d.T3_inv * eval_grid(fam.zhat, fam.d, params) * fam.d.V3_inv;
    return s;
}

FourSolution assemble_four(const SolutionFamilyFour& fam, const ParamAssignment& params) {
    validate_params(fam.free_slots, params);
    FourSolution s;
    s.X = fam.d.T1_inv * eval_grid(fam.xhat, fam.d, params) * fam.d.Q;
    s.W = fam.d.P * eval_grid(fam.what, fam.d, params) * fam.d.V1_inv;
    s.Y = fam.d.T2_inv * eval_grid(fam.yhat, fam.d, params) * fam.d.V2_inv;
    s.Z = fam.d.T3_inv * eval_grid(fam.zhat, fam.d, params) * fam.d.V3_inv;
    return s;
}

ParamAssignment recover_params_three(const SolutionFamilyThree& fam, const QMatrix& X0,
                                     const QMatrix& Y0, const QMatrix& Z0) {
    ParamAssignment out;
    recover_from_grid(fam.xhat, fam.d.T1 * X0 * fam.d.V1, out);
    recover_from_grid(fam.yhat, fam.d.T2 * Y0 * fam.d.V2, out);
    recover_from_grid(fam.zhat, fam.d.T3 * Z0 * fam.d.V3, out);
    return out;
}

ParamAssignment recover_params_four(const SolutionFamilyFour& fam, const QMatrix& X0,
                                    const QMatrix& W0, const QMatrix& Y0,
                                    const QMatrix& Z0) {
    ParamAssignment out;
    recover_from_grid(fam.xhat, fam.d.T1 * X0 * fam.d.Q_inv, out);
    recover_from_grid(fam.what, fam.d.P_inv * W0 * fam.d.V1, out);
    recover_from_grid(fam.yhat, fam.d.T2 * Y0 * fam.d.V2, out);
    recover_from_grid(fam.zhat, fam.d.T3 * Z0 * fam.d.V3, out);
    return out;
}

ParamAssignment zero_params(const std::vector<FreeSlot>& slots) {
    ParamAssignment out;
    for (const FreeSlot& s : slots) out[s.name] = QMatrix::zero(s.rows, s.cols);
    return out;
}

ParamAssignment random_params(const std::vector<FreeSlot>& slots, Rng& rng, long lo,
                              long hi) {
    ParamAssignment out;
    for (const FreeSlot& s : slots) out[s.name] = rng.matrix(s.rows, s.cols, lo, hi);
    return out;
}

QMatrix residual_three(const SevenInput& in, const ThreeSolution& s) {
    return in.A - in.B * s.X * in.E - in.C * s.Y * in.F - in.D * s.Z * in.G;
}

QMatrix residual_four(const SevenInput& in, const FourSolution& s) {
    return in.A - in.B * s.X - s.W * in.E - in.C * s.Y * in.F - in.D * s.Z * in.G;
}

}  // namespace qms
