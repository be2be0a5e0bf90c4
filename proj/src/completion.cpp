#include "qms/completion.hpp"

#include <algorithm>

#include "qms/error.hpp"

namespace qms {

namespace {

int min4(int a, int b, int c, int d) { return std::min(std::min(a, b), std::min(c, d)); }

}  // namespace

RankRange two_corner_rank_range(const TwoCornerInstance& inst) {
    const int m = inst.A1.rows(), n = inst.A1.cols();
    const int p = inst.B1.rows(), q = inst.B1.cols();
    const int ra = rank(inst.A1), rb = rank(inst.B1);
    RankRange r;
    r.min = std::max(ra, rb);
    r.max = min4(m + p, n + q, ra + p + q, rb + m + n);
    return r;
}

QMatrix two_corner_assemble(const TwoCornerInstance& inst, const QMatrix& X,
                            const QMatrix& Y) {
    return vcat({hcat({inst.A1, X}), hcat({Y, inst.B1})});
}

std::pair<QMatrix, QMatrix> two_corner_min_achiever(const TwoCornerInstance& inst) {
    const CanonicalForm ca = canonical_form(inst.A1);
    const CanonicalForm cb = canonical_form(inst.B1);
    const int m = inst.A1.rows(), n = inst.A1.cols();
    const int p = inst.B1.rows(), q = inst.B1.cols();
    if (ca.r >= cb.r) {
        // B1 = U A1 V, X = A1 V, Y = U A1, so M = [I; U] A1 [I, V].
        const QMatrix U =
            inverse(cb.P) * rank_normal_form(p, m, cb.r) * ca.P;
        const QMatrix V = ca.Q * rank_normal_form(n, q, cb.r) * inverse(cb.Q);
        return {inst.A1 * V, U * inst.A1};
    }
    // A1 = U B1 V, X = U B1, Y = B1 V, so M = [U; I] B1 [V, I].
    const QMatrix U = inverse(ca.P) * rank_normal_form(m, p, ca.r) * cb.P;
    const QMatrix V = cb.Q * rank_normal_form(q, n, ca.r) * inverse(ca.Q);
    return {U * inst.B1, inst.B1 * V};
}

RankRange l_shape_rank_range(const LShapeInstance& inst) {
    const int ny = inst.D1.rows();
    const int my = inst.B1.cols();
    if (inst.A1.rows() != inst.B1.rows() || inst.A1.cols() != inst.D1.cols())
        throw DimensionError("l-shape blocks are inconsistent");
    const int r_ab = rank(hcat({inst.B1, inst.A1}));
    const int r_ad = rank(vcat({inst.D1, inst.A1}));
    const int r_a = rank(inst.A1);
    RankRange r;
    r.min = r_ab + r_ad - r_a;
    r.max = std::min(ny + r_ab, my + r_ad);
    return r;
}

QMatrix l_shape_min_achiever(const LShapeInstance& inst) {
    return inst.D1 * g_inverse(inst.A1) * inst.B1;
}

QMatrix l_shape_assemble(const LShapeInstance& inst, const QMatrix& Y) {
    return vcat({hcat({Y, inst.D1}), hcat({inst.B1, inst.A1})});
}

RankRange h_shape_rank_range(const HShapeInstance& inst) {
    const int mt = inst.D1.rows(), mc = inst.B1.cols();  // X is mt x mc
    const int pt = inst.F1.rows(), pc = inst.C1.cols();  // Y is pt x pc
    const int r_abc = rank(hcat({inst.A1, inst.B1, inst.C1}));
    const int r_adf = rank(vcat({inst.A1, inst.D1, inst.F1}));
    const int r_ab_fg = rank(vcat({hcat({inst.A1, inst.B1}), hcat({inst.F1, inst.G1})}));
    const int r_ac_de = rank(vcat({hcat({inst.A1, inst.C1}), hcat({inst.D1, inst.E1})}));
    const int r_ac = rank(hcat({inst.A1, inst.C1}));
    const int r_ad = rank(vcat({inst.A1, inst.D1}));
    const int r_ab = rank(hcat({inst.A1, inst.B1}));
    const int r_af = rank(vcat({inst.A1, inst.F1}));
    RankRange r;
    r.max = min4(mt + pt + r_abc, mt + pc + r_ab_fg, mc + pt + r_ac_de, mc + pc + r_adf);
    r.min = r_abc + r_adf + std::max(r_ac_de - r_ac - r_ad, r_ab_fg - r_ab - r_af);
    return r;
}

QMatrix h_shape_assemble(const HShapeInstance& inst, const QMatrix& X, const QMatrix& Y) {
    return vcat({hcat({inst.A1, inst.B1, inst.C1}), hcat({inst.D1, X, inst.E1}),
                 hcat({inst.F1, inst.G1, Y})});
}

}  // namespace qms
