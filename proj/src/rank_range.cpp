#include "qms/rank_range.hpp"

#include <algorithm>
#include <utility>

#include "qms/error.hpp"
#include "qms/solvers.hpp"

namespace qms {

std::string to_string(UnknownId u) {
    switch (u) {
        case UnknownId::X: return "X";
        case UnknownId::W: return "W";
        case UnknownId::Y: return "Y";
        case UnknownId::Z: return "Z";
    }
    return "?";
}

std::string to_string(EquationKind eq) {
    return eq == EquationKind::three_term ? "three" : "four";
}

namespace {

constexpr Tok a = Tok::A, b = Tok::B, c = Tok::C, dd = Tok::D, e = Tok::E, f = Tok::F,
              g = Tok::G, o = Tok::O;

using Grid = std::initializer_list<std::initializer_list<Tok>>;

int rk(const SevenInput& in, Grid grid) {
    RankPattern p;
    for (const auto& row : grid) p.grid.emplace_back(row);
    return pattern_rank(p, in);
}

void require_consistent(const SevenInput& in, EquationKind eq, const SevenDecomposition* d,
                        SevenDecomposition& own) {
    if (!d) {
        own = decompose_seven(in);
        d = &own;
    }
    const ConsistencyReport rep = eq == EquationKind::three_term
                                      ? check_consistency_three(*d)
                                      : check_consistency_four(*d);
    if (!rep.consistent)
        throw InconsistentSystem("rank range requested for an inconsistent system");
}

RankRangeReport finish(EquationKind eq, UnknownId u, std::vector<TermValue> max_terms,
                       std::vector<TermValue> min_branches) {
    RankRangeReport rep;
    rep.eq = eq;
    rep.unknown = u;
    rep.max_terms = std::move(max_terms);
    rep.min_branches = std::move(min_branches);
    rep.range.max = rep.max_terms.front().value;
    for (const auto& t : rep.max_terms) rep.range.max = std::min(rep.range.max, t.value);
    rep.range.min = rep.min_branches.front().value;
    for (const auto& t : rep.min_branches) rep.range.min = std::max(rep.range.min, t.value);
    return rep;
}

// ---- direct formulas, three-term equation ----

RankRangeReport direct_Z_three(const SevenInput& in) {
    const int p3 = in.D.cols(), q3 = in.G.rows();
    const int rd = rank(in.D), rg = rank(in.G);
    const int rbd = rk(in, {{b, dd}});
    const int rcd = rk(in, {{c, dd}});
    const int rbc = rk(in, {{b, c}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int ref = rk(in, {{e}, {f}});
    const int reg = rk(in, {{e}, {g}});
    const int rfg = rk(in, {{f}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int raef = rk(in, {{a}, {e}, {f}});
    const int rabc = rk(in, {{a, b, c}});
    const int race0 = rk(in, {{a, c}, {e, o}});
    const int rabf0 = rk(in, {{a, b}, {f, o}});
    const int rdb0_d0c = rk(in, {{dd, b, o}, {dd, o, c}});
    const int rgg_e0_0f = rk(in, {{g, g}, {e, o}, {o, f}});
    const int big_d =
        rk(in, {{dd, o, a, b, o}, {dd, a, o, o, c}, {o, e, o, o, o}, {o, o, f, o, o}});
    const int big_g =
        rk(in, {{g, g, o, o}, {o, a, b, o}, {a, o, o, c}, {e, o, o, o}, {o, f, o, o}});
    const int big_d6 = rk(in, {{dd, o, a, b, o, o},
                               {dd, a, o, o, c, b},
                               {o, e, o, o, o, o},
                               {o, o, f, o, o, o}});
    const int big_g_e = rk(in, {{g, g, o, o},
                                {o, a, b, o},
                                {a, o, o, c},
                                {e, o, o, o},
                                {o, f, o, o},
                                {o, e, o, o}});
    const int big_d_e = rk(in, {{dd, o, a, b, o},
                                {dd, a, o, o, c},
                                {o, e, o, o, o},
                                {o, o, f, o, o},
                                {o, o, e, o, o}});
    const int big_g5c = rk(in, {{g, g, o, o, o},
                                {o, a, b, o, c},
                                {a, o, o, c, o},
                                {e, o, o, o, o},
                                {o, f, o, o, o}});
    const int big_d_f = rk(in, {{dd, o, a, b, o},
                                {dd, a, o, o, c},
                                {o, e, o, o, o},
                                {o, o, f, o, o},
                                {o, f, o, o, o}});
    const int big_g5b = rk(in, {{g, g, o, o, o},
                                {o, a, b, o, o},
                                {a, o, o, c, b},
                                {e, o, o, o, o},
                                {o, f, o, o, o}});

    std::vector<TermValue> mx = {
        {"p3", p3},
        {"q3", q3},
        {"p3+q3+r[a|e|f]-r[d]-r[e|f|g]", p3 + q3 + raef - rd - refg},
        {"p3+q3+r[abc]-r[g]-r[bcd]", p3 + q3 + rabc - rg - rbcd},
        {"p3+q3+r[d0ab0|da00c|0e000|00f00]-r[gg|e0|0f]-r[bd]-r[cd]",
         p3 + q3 + big_d - rgg_e0_0f - rbd - rcd},
        {"p3+q3+r[ac|e0]-r[cd]-r[e|g]", p3 + q3 + race0 - rcd - reg},
        {"p3+q3+r[ab|f0]-r[f|g]-r[bd]", p3 + q3 + rabf0 - rfg - rbd},
        {"p3+q3+r[gg00|0ab0|a00c|e000|0f00]-r[db0|d0c]-r[e|g]-r[f|g]",
         p3 + q3 + big_g - rdb0_d0c - reg - rfg},
    };
    const int common = big_d + big_g + rabc + raef + rbd + reg + rbc + ref - big_d6 - big_g_e;
    std::vector<TermValue> mn = {
        {"common+r[ac|e0]-r[d0ab0|da00c|0e000|00f00|00e00]-r[gg000|0ab0c|a00c0|e0000|0f000]",
         common + race0 - big_d_e - big_g5c},
        {"common+r[ab|f0]-r[d0ab0|da00c|0e000|00f00|0f000]-r[gg000|0ab00|a00cb|e0000|0f000]",
         common + rabf0 - big_d_f - big_g5b},
    };
    return finish(EquationKind::three_term, UnknownId::Z, std::move(mx), std::move(mn));
}

RankRangeReport direct_X_three(const SevenInput& in) {
    const int p1 = in.B.cols(), q1 = in.E.rows();
    const int rb = rank(in.B), re = rank(in.E);
    const int rbd = rk(in, {{b, dd}});
    const int rbc = rk(in, {{b, c}});
    const int rcd = rk(in, {{c, dd}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int ref = rk(in, {{e}, {f}});
    const int reg = rk(in, {{e}, {g}});
    const int rfg = rk(in, {{f}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int rafg = rk(in, {{a}, {f}, {g}});
    const int racd = rk(in, {{a, c, dd}});
    const int racg0 = rk(in, {{a, c}, {g, o}});
    const int radf0 = rk(in, {{a, dd}, {f, o}});
    const int rdb0_d0c = rk(in, {{dd, b, o}, {dd, o, c}});
    const int rgg_e0_0f = rk(in, {{g, g}, {e, o}, {o, f}});
    const int big_b =
        rk(in, {{b, o, a, dd, o}, {b, a, o, o, c}, {o, g, o, o, o}, {o, o, f, o, o}});
    const int big_e =
        rk(in, {{e, e, o, o}, {o, a, dd, o}, {a, o, o, c}, {g, o, o, o}, {o, f, o, o}});
    const int big_b6 = rk(in, {{b, o, a, dd, o, o},
                               {b, a, o, o, c, dd},
                               {o, g, o, o, o, o},
                               {o, o, f, o, o, o}});
    const int big_e_g = rk(in, {{e, e, o, o},
                                {o, a, dd, o},
                                {a, o, o, c},
                                {g, o, o, o},
                                {o, f, o, o},
                                {o, g, o, o}});
    const int big_b_g = rk(in, {{b, o, a, dd, o},
                                {b, a, o, o, c},
                                {o, g, o, o, o},
                                {o, o, f, o, o},
                                {o, o, g, o, o}});
    const int big_e5c = rk(in, {{e, e, o, o, o},
                                {o, a, dd, o, c},
                                {a, o, o, c, o},
                                {g, o, o, o, o},
                                {o, f, o, o, o}});
    const int big_b_f = rk(in, {{b, o, a, dd, o},
                                {b, a, o, o, c},
                                {o, g, o, o, o},
                                {o, o, f, o, o},
                                {o, f, o, o, o}});
    const int big_e5d = rk(in, {{e, e, o, o, o},
                                {o, a, dd, o, o},
                                {a, o, o, c, dd},
                                {g, o, o, o, o},
                                {o, f, o, o, o}});

    std::vector<TermValue> mx = {
        {"p1", p1},
        {"q1", q1},
        {"p1+q1+r[a|f|g]-r[b]-r[e|f|g]", p1 + q1 + rafg - rb - refg},
        {"p1+q1+r[acd]-r[e]-r[bcd]", p1 + q1 + racd - re - rbcd},
        {"p1+q1+r[b0ad0|ba00c|0g000|00f00]-r[gg|e0|0f]-r[bd]-r[bc]",
         p1 + q1 + big_b - rgg_e0_0f - rbd - rbc},
        {"p1+q1+r[ac|g0]-r[bc]-r[e|g]", p1 + q1 + racg0 - rbc - reg},
        {"p1+q1+r[ad|f0]-r[e|f]-r[bd]", p1 + q1 + radf0 - ref - rbd},
        {"p1+q1+r[ee00|0ad0|a00c|g000|0f00]-r[db0|d0c]-r[e|g]-r[e|f]",
         p1 + q1 + big_e - rdb0_d0c - reg - ref},
    };
    const int common = big_b + big_e + racd + rafg + rbd + reg + rcd + rfg - big_b6 - big_e_g;
    std::vector<TermValue> mn = {
        {"common+r[ac|g0]-r[b0ad0|ba00c|0g000|00f00|00g00]-r[ee000|0ad0c|a00c0|g0000|0f000]",
         common + racg0 - big_b_g - big_e5c},
        {"common+r[ad|f0]-r[b0ad0|ba00c|0g000|00f00|0f000]-r[ee000|0ad00|a00cd|g0000|0f000]",
         common + radf0 - big_b_f - big_e5d},
    };
    return finish(EquationKind::three_term, UnknownId::X, std::move(mx), std::move(mn));
}

RankRangeReport direct_Y_three(const SevenInput& in) {
    const int p2 = in.C.cols(), q2 = in.F.rows();
    const int rc = rank(in.C), rf = rank(in.F);
    const int rbc = rk(in, {{b, c}});
    const int rcd = rk(in, {{c, dd}});
    const int rbd = rk(in, {{b, dd}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int ref = rk(in, {{e}, {f}});
    const int reg = rk(in, {{e}, {g}});
    const int rfg = rk(in, {{f}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int raeg = rk(in, {{a}, {e}, {g}});
    const int rabd = rk(in, {{a, b, dd}});
    const int rade0 = rk(in, {{a, dd}, {e, o}});
    const int rabg0 = rk(in, {{a, b}, {g, o}});
    const int rdb0_d0c = rk(in, {{dd, b, o}, {dd, o, c}});
    const int rgg_e0_0f = rk(in, {{g, g}, {e, o}, {o, f}});
    const int big_c =
        rk(in, {{c, o, a, b, o}, {c, a, o, o, dd}, {o, e, o, o, o}, {o, o, g, o, o}});
    const int big_f =
        rk(in, {{f, f, o, o}, {o, a, b, o}, {a, o, o, dd}, {e, o, o, o}, {o, g, o, o}});
    const int big_c6 = rk(in, {{c, o, a, b, o, o},
                               {c, a, o, o, dd, b},
                               {o, e, o, o, o, o},
                               {o, o, g, o, o, o}});
    const int big_f_e = rk(in, {{f, f, o, o},
                                {o, a, b, o},
                                {a, o, o, dd},
                                {e, o, o, o},
                                {o, g, o, o},
                                {o, e, o, o}});
    const int big_c_e = rk(in, {{c, o, a, b, o},
                                {c, a, o, o, dd},
                                {o, e, o, o, o},
                                {o, o, g, o, o},
                                {o, o, e, o, o}});
    const int big_f5d = rk(in, {{f, f, o, o, o},
                                {o, a, b, o, dd},
                                {a, o, o, dd, o},
                                {e, o, o, o, o},
                                {o, g, o, o, o}});
    const int big_c_g = rk(in, {{c, o, a, b, o},
                                {c, a, o, o, dd},
                                {o, e, o, o, o},
                                {o, o, g, o, o},
                                {o, g, o, o, o}});
    const int big_f5b = rk(in, {{f, f, o, o, o},
                                {o, a, b, o, o},
                                {a, o, o, dd, b},
                                {e, o, o, o, o},
                                {o, g, o, o, o}});

    std::vector<TermValue> mx = {
        {"p2", p2},
        {"q2", q2},
        {"p2+q2+r[a|e|g]-r[c]-r[e|f|g]", p2 + q2 + raeg - rc - refg},
        {"p2+q2+r[abd]-r[f]-r[bcd]", p2 + q2 + rabd - rf - rbcd},
        {"p2+q2+r[c0ab0|ca00d|0e000|00g00]-r[gg|e0|0f]-r[bc]-r[cd]",
         p2 + q2 + big_c - rgg_e0_0f - rbc - rcd},
        {"p2+q2+r[ad|e0]-r[cd]-r[e|f]", p2 + q2 + rade0 - rcd - ref},
        {"p2+q2+r[ab|g0]-r[f|g]-r[bc]", p2 + q2 + rabg0 - rfg - rbc},
        {"p2+q2+r[ff00|0ab0|a00d|e000|0g00]-r[db0|d0c]-r[e|f]-r[f|g]",
         p2 + q2 + big_f - rdb0_d0c - ref - rfg},
    };
    const int common = big_c + big_f + rabd + raeg + rbc + ref + rbd + reg - big_c6 - big_f_e;
    std::vector<TermValue> mn = {
        {"common+r[ad|e0]-r[c0ab0|ca00d|0e000|00g00|00e00]-r[ff000|0ab0d|a00d0|e0000|0g000]",
         common + rade0 - big_c_e - big_f5d},
        {"common+r[ab|g0]-r[c0ab0|ca00d|0e000|00g00|0g000]-r[ff000|0ab00|a00db|e0000|0g000]",
         common + rabg0 - big_c_g - big_f5b},
    };
    return finish(EquationKind::three_term, UnknownId::Y, std::move(mx), std::move(mn));
}

// ---- direct formulas, four-term equation ----

RankRangeReport direct_X_four(const SevenInput& in) {
    const int p1 = in.B.cols(), n = in.A.cols();
    const int rb = rank(in.B), re = rank(in.E);
    const int rbc = rk(in, {{b, c}});
    const int rbd = rk(in, {{b, dd}});
    const int rcd = rk(in, {{c, dd}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int raefg = rk(in, {{a}, {e}, {f}, {g}});
    const int racde = rk(in, {{a, c, dd}, {e, o, o}});
    const int raceg = rk(in, {{a, c}, {e, o}, {g, o}});
    const int radef = rk(in, {{a, dd}, {e, o}, {f, o}});
    const int big6 = rk(in, {{b, o, a, dd, o},
                             {b, a, o, o, c},
                             {o, g, o, o, o},
                             {o, o, f, o, o},
                             {o, e, o, o, o},
                             {o, o, e, o, o}});
    const int big6w = rk(in, {{b, o, a, dd, o, o},
                              {b, a, o, o, c, dd},
                              {o, g, o, o, o, o},
                              {o, o, f, o, o, o},
                              {o, e, o, o, o, o},
                              {o, o, e, o, o, o}});
    const int big7g = rk(in, {{b, o, a, dd, o},
                              {b, a, o, o, c},
                              {o, g, o, o, o},
                              {o, o, f, o, o},
                              {o, o, g, o, o},
                              {o, e, o, o, o},
                              {o, o, e, o, o}});
    const int big7f = rk(in, {{b, o, a, dd, o},
                              {b, a, o, o, c},
                              {o, g, o, o, o},
                              {o, o, f, o, o},
                              {o, e, o, o, o},
                              {o, o, e, o, o},
                              {o, f, o, o, o}});
    const int rad0c =
        rk(in, {{a, dd, o, c}, {a, o, c, o}, {e, o, o, o}, {f, o, o, o}, {g, o, o, o}});
    const int rad00 =
        rk(in, {{a, dd, o, o}, {a, o, c, dd}, {e, o, o, o}, {f, o, o, o}, {g, o, o, o}});

    std::vector<TermValue> mx = {
        {"p1", p1},
        {"n", n},
        {"p1+r[acd|e00]-r[bcd]", p1 + racde - rbcd},
        {"p1+r[a|e|f|g]-r[b]", p1 + raefg - rb},
        {"p1+r[b0ad0|ba00c|0g000|00f00|0e000|00e00]-r[e|f|g]-r[bc]-r[bd]",
         p1 + big6 - refg - rbc - rbd},
        {"p1+r[ac|e0|g0]-r[bc]", p1 + raceg - rbc},
        {"p1+r[ad|e0|f0]-r[bd]", p1 + radef - rbd},
    };
    const int common = raefg + racde - re - big6w + rbd + rcd + big6 + refg;
    std::vector<TermValue> mn = {
        {"common+r[ac|e0|g0]-r[b0ad0|ba00c|0g000|00f00|00g00|0e000|00e00]"
         "-r[ad0c|a0c0|e000|f000|g000]",
         common + raceg - big7g - rad0c},
        {"common+r[ad|e0|f0]-r[b0ad0|ba00c|0g000|00f00|0e000|00e00|0f000]"
         "-r[ad00|a0cd|e000|f000|g000]",
         common + radef - big7f - rad00},
    };
    return finish(EquationKind::four_term, UnknownId::X, std::move(mx), std::move(mn));
}

RankRangeReport direct_W_four(const SevenInput& in) {
    const int q1 = in.E.rows(), m = in.A.rows();
    const int rb = rank(in.B), re = rank(in.E);
    const int ref = rk(in, {{e}, {f}});
    const int reg = rk(in, {{e}, {g}});
    const int rfg = rk(in, {{f}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int rabcd = rk(in, {{a, b, c, dd}});
    const int rabfg = rk(in, {{a, b}, {f, o}, {g, o}});
    const int rabdf = rk(in, {{a, b, dd}, {f, o, o}});
    const int rabcg = rk(in, {{a, b, c}, {g, o, o}});
    const int big5 = rk(in, {{e, e, o, o, o, o},
                             {o, a, dd, o, b, o},
                             {a, o, o, c, o, b},
                             {g, o, o, o, o, o},
                             {o, f, o, o, o, o}});
    const int big6g = rk(in, {{e, e, o, o, o, o},
                              {o, a, dd, o, b, o},
                              {a, o, o, c, o, b},
                              {g, o, o, o, o, o},
                              {o, f, o, o, o, o},
                              {o, g, o, o, o, o}});
    const int big7d = rk(in, {{e, e, o, o, o, o, o},
                              {o, a, dd, o, o, b, o},
                              {a, o, o, c, dd, o, b},
                              {g, o, o, o, o, o, o},
                              {o, f, o, o, o, o, o}});
    const int big7c = rk(in, {{e, e, o, o, o, o, o},
                              {o, a, dd, o, b, o, c},
                              {a, o, o, c, o, b, o},
                              {g, o, o, o, o, o, o},
                              {o, f, o, o, o, o, o}});
    const int raadcb = rk(in, {{a, a, dd, c, b},
                               {g, o, o, o, o},
                               {o, f, o, o, o},
                               {f, o, o, o, o}});
    const int raabcd = rk(in, {{a, a, b, c, dd},
                               {g, o, o, o, o},
                               {o, f, o, o, o},
                               {o, g, o, o, o}});

    std::vector<TermValue> mx = {
        {"q1", q1},
        {"m", m},
        {"q1+r[ab|f0|g0]-r[e|f|g]", q1 + rabfg - refg},
        {"q1+r[abcd]-r[e]", q1 + rabcd - re},
        {"q1+r[ee0000|0ad0b0|a00c0b|g00000|0f0000]-r[bcd]-r[e|f]-r[e|g]",
         q1 + big5 - rbcd - ref - reg},
        {"q1+r[abd|f00]-r[e|f]", q1 + rabdf - ref},
        {"q1+r[abc|g00]-r[e|g]", q1 + rabcg - reg},
    };
    const int common = rabcd + rabfg - rb - big6g + reg + rfg + big5 + rbcd;
    std::vector<TermValue> mn = {
        {"common+r[abd|f00]-r[ee00000|0ad00b0|a00cd0b|g000000|0f00000]"
         "-r[aadcb|g0000|0f000|f0000]",
         common + rabdf - big7d - raadcb},
        {"common+r[abc|g00]-r[ee00000|0ad0b0c|a00c0b0|g000000|0f00000]"
         "-r[aabcd|g0000|0f000|0g000]",
         common + rabcg - big7c - raabcd},
    };
    return finish(EquationKind::four_term, UnknownId::W, std::move(mx), std::move(mn));
}

RankRangeReport direct_Y_four(const SevenInput& in) {
    const int p2 = in.C.cols(), q2 = in.F.rows();
    const int rb = rank(in.B), re = rank(in.E);
    const int rbc = rk(in, {{b, c}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int ref = rk(in, {{e}, {f}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int rabeg = rk(in, {{a, b}, {e, o}, {g, o}});
    const int rabde = rk(in, {{a, b, dd}, {e, o, o}});
    const int rabdeg = rk(in, {{a, b, dd}, {e, o, o}, {g, o, o}});
    std::vector<TermValue> mx = {
        {"p2", p2},
        {"q2", q2},
        {"p2+q2+r[ab|e0|g0]-r[e|f|g]-r[bc]", p2 + q2 + rabeg - refg - rbc},
        {"p2+q2+r[abd|e00]-r[e|f]-r[bcd]", p2 + q2 + rabde - ref - rbcd},
    };
    std::vector<TermValue> mn = {
        {"r[ab|e0|g0]+r[abd|e00]-r[abd|e00|g00]-r[b]-r[e]",
         rabeg + rabde - rabdeg - rb - re},
    };
    return finish(EquationKind::four_term, UnknownId::Y, std::move(mx), std::move(mn));
}

RankRangeReport direct_Z_four(const SevenInput& in) {
    const int p3 = in.D.cols(), q3 = in.G.rows();
    const int rb = rank(in.B), re = rank(in.E);
    const int rbd = rk(in, {{b, dd}});
    const int rbcd = rk(in, {{b, c, dd}});
    const int reg = rk(in, {{e}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});
    const int rabef = rk(in, {{a, b}, {e, o}, {f, o}});
    const int rabce = rk(in, {{a, b, c}, {e, o, o}});
    const int rabcef = rk(in, {{a, b, c}, {e, o, o}, {f, o, o}});
    std::vector<TermValue> mx = {
        {"p3", p3},
        {"q3", q3},
        {"p3+q3+r[ab|e0|f0]-r[e|f|g]-r[bd]", p3 + q3 + rabef - refg - rbd},
        {"p3+q3+r[abc|e00]-r[e|g]-r[bcd]", p3 + q3 + rabce - reg - rbcd},
    };
    std::vector<TermValue> mn = {
        {"r[ab|e0|f0]+r[abc|e00]-r[abc|e00|f00]-r[b]-r[e]",
         rabef + rabce - rabcef - rb - re},
    };
    return finish(EquationKind::four_term, UnknownId::Z, std::move(mx), std::move(mn));
}

// ---- proof-internal path: partial block grids and elimination chains ----

struct PCell {
    bool var = true;
    QMatrix val;
};

struct PartialGrid {
    std::vector<int> rs, cs;
    std::vector<std::vector<PCell>> cells;
};

std::vector<int> complement(int n, const std::vector<int>& idx) {
    std::vector<bool> used(n, false);
    for (int i : idx) used[i] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

int sum_sizes(const std::vector<int>& sizes, const std::vector<int>& idx) {
    int s = 0;
    for (int i : idx) s += sizes[i];
    return s;
}

bool all_var(const PartialGrid& g, const std::vector<int>& rows,
             const std::vector<int>& cols) {
    for (int i : rows)
        for (int j : cols)
            if (!g.cells[i][j].var) return false;
    return true;
}

bool all_fixed(const PartialGrid& g, const std::vector<int>& rows,
               const std::vector<int>& cols) {
    for (int i : rows)
        for (int j : cols)
            if (g.cells[i][j].var) return false;
    return true;
}

QMatrix assemble_fixed(const PartialGrid& g, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    if (!all_fixed(g, rows, cols))
        throw InternalInconsistency("rank chain touched a variable block");
    std::vector<QMatrix> vparts;
    for (int i : rows) {
        std::vector<QMatrix> hparts;
        for (int j : cols) hparts.push_back(g.cells[i][j].val);
        if (hparts.empty()) hparts.push_back(QMatrix(g.rs[i], 0));
        vparts.push_back(hcat(hparts));
    }
    if (vparts.empty()) vparts.push_back(QMatrix(0, sum_sizes(g.cs, cols)));
    return vcat(vparts);
}

PartialGrid subgrid(const PartialGrid& g, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    PartialGrid out;
    for (int i : rows) out.rs.push_back(g.rs[i]);
    for (int j : cols) out.cs.push_back(g.cs[j]);
    out.cells.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j : cols) out.cells[i].push_back(g.cells[rows[i]][j]);
    return out;
}

std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

enum class StepKind { border, strip_recurse_rows, strip_recurse_cols };

struct Step {
    StepKind kind;
    std::vector<int> vr, vc;  // the variable block being eliminated
};

RankRange chain(const PartialGrid& g, const std::vector<Step>& steps, size_t k) {
    const auto rows = all_indices(static_cast<int>(g.rs.size()));
    const auto cols = all_indices(static_cast<int>(g.cs.size()));
    if (k == steps.size()) {
        // Terminal: either fully fixed or the two-interior-unknowns core.
        std::vector<std::pair<int, int>> vars;
        for (int i : rows)
            for (int j : cols)
                if (g.cells[i][j].var) vars.push_back({i, j});
        if (vars.empty()) {
            const int r = rank(assemble_fixed(g, rows, cols));
            return {r, r};
        }
        if (vars.size() != 2 || vars[0].first == vars[1].first ||
            vars[0].second == vars[1].second)
            throw InternalInconsistency("rank chain terminal is not a two-unknown core");
        const auto [i1, j1] = vars[0];
        const auto [i2, j2] = vars[1];
        const auto ra = complement(static_cast<int>(rows.size()), {i1, i2});
        const auto ca = complement(static_cast<int>(cols.size()), {j1, j2});
        HShapeInstance h;
        h.A1 = assemble_fixed(g, ra, ca);
        h.B1 = assemble_fixed(g, ra, {j1});
        h.C1 = assemble_fixed(g, ra, {j2});
        h.D1 = assemble_fixed(g, {i1}, ca);
        h.E1 = assemble_fixed(g, {i1}, {j2});
        h.F1 = assemble_fixed(g, {i2}, ca);
        h.G1 = assemble_fixed(g, {i2}, {j1});
        return h_shape_rank_range(h);
    }

    const Step& st = steps[k];
    const auto orows = complement(static_cast<int>(g.rs.size()), st.vr);
    const auto ocols = complement(static_cast<int>(g.cs.size()), st.vc);
    if (!all_var(g, st.vr, st.vc))
        throw InternalInconsistency("rank chain step expected a variable block");
    const int nv = sum_sizes(g.rs, st.vr);
    const int mv = sum_sizes(g.cs, st.vc);

    if (st.kind == StepKind::border) {
        // Two free corners plus their meeting block; only the anti-corner is
        // recursed. The corner-rank term is dominated and dropped.
        if (!all_var(g, st.vr, ocols) || !all_var(g, orows, st.vc))
            throw InternalInconsistency("border step expected variable flanks");
        const RankRange inner = chain(subgrid(g, orows, ocols), steps, k + 1);
        const int na = sum_sizes(g.rs, orows);
        const int ma = sum_sizes(g.cs, ocols);
        RankRange out;
        out.max = std::min({na + nv, ma + mv, inner.max + nv + mv});
        out.min = inner.min;
        return out;
    }
    if (st.kind == StepKind::strip_recurse_rows) {
        const int rad = rank(assemble_fixed(g, rows, ocols));
        const int ra = rank(assemble_fixed(g, orows, ocols));
        const RankRange inner = chain(subgrid(g, orows, cols), steps, k + 1);
        return {inner.min + rad - ra, std::min(nv + inner.max, mv + rad)};
    }
    const int rab = rank(assemble_fixed(g, orows, cols));
    const int ra = rank(assemble_fixed(g, orows, ocols));
    const RankRange inner = chain(subgrid(g, rows, ocols), steps, k + 1);
    return {inner.min + rab - ra, std::min(mv + inner.max, nv + rab)};
}

// Hatted partial grids: fixed cells are the S_A blocks the solution
// families pin; every cell reachable through some free slot is variable.
struct HattedLayouts {
    std::vector<int> x_rows, x_cols, y_rows, y_cols, z_rows, z_cols, x4_cols, w_rows,
        w_cols;
};

HattedLayouts hatted_layouts(const SevenDecomposition& d) {
    const RowBlockSizes& M = d.partition.row;
    const RowBlockSizes& N = d.partition.col;
    const int p1 = d.T1.rows(), p2 = d.T2.rows(), p3 = d.T3.rows();
    const int q1 = d.V1.rows(), q2 = d.V2.rows(), q3 = d.V3.rows();
    HattedLayouts L;
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

PartialGrid make_grid(std::vector<int> rs, std::vector<int> cs) {
    PartialGrid g;
    g.rs = std::move(rs);
    g.cs = std::move(cs);
    g.cells.assign(g.rs.size(), std::vector<PCell>(g.cs.size()));
    return g;
}

using BlockRef = std::pair<int, int>;

void set_fixed(PartialGrid& g, const SevenDecomposition& d, int i, int j,
               std::initializer_list<std::pair<BlockRef, int>> terms) {
    QMatrix v(g.rs[i - 1], g.cs[j - 1]);
    for (const auto& [ref, sign] : terms) {
        const QMatrix blk = extract_block(d, ref.first, ref.second);
        v = sign >= 0 ? v + blk : v - blk;
    }
    g.cells[i - 1][j - 1] = PCell{false, std::move(v)};
}

PartialGrid xhat3_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.x_rows, L.x_cols);
    set_fixed(g, d, 1, 5, {{{1, 5}, 1}});
    set_fixed(g, d, 2, 3, {{{2, 3}, 1}});
    set_fixed(g, d, 2, 4, {{{2, 4}, 1}});
    set_fixed(g, d, 2, 5, {{{2, 5}, 1}});
    set_fixed(g, d, 3, 2, {{{3, 2}, 1}});
    set_fixed(g, d, 3, 4, {{{3, 4}, 1}, {{3, 6}, -1}});
    set_fixed(g, d, 3, 5, {{{3, 5}, 1}});
    set_fixed(g, d, 4, 2, {{{4, 2}, 1}});
    set_fixed(g, d, 4, 3, {{{4, 3}, 1}, {{6, 3}, -1}});
    set_fixed(g, d, 4, 4, {{{4, 4}, 1}, {{6, 4}, -1}});
    set_fixed(g, d, 4, 5, {{{4, 5}, 1}});
    for (int j = 1; j <= 5; ++j) set_fixed(g, d, 5, j, {{{5, j}, 1}});
    return g;
}

PartialGrid yhat3_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.y_rows, L.y_cols);
    set_fixed(g, d, 1, 1, {{{6, 6}, 1}, {{6, 4}, -1}});
    set_fixed(g, d, 1, 2, {{{6, 7}, 1}, {{4, 7}, -1}});
    set_fixed(g, d, 1, 3, {{{6, 8}, 1}});
    set_fixed(g, d, 1, 5, {{{6, 2}, 1}});
    set_fixed(g, d, 2, 1, {{{7, 6}, 1}, {{7, 4}, -1}});
    set_fixed(g, d, 2, 3, {{{7, 8}, 1}});
    set_fixed(g, d, 2, 5, {{{7, 2}, 1}});
    set_fixed(g, d, 3, 1, {{{8, 6}, 1}});
    set_fixed(g, d, 3, 2, {{{8, 7}, 1}});
    set_fixed(g, d, 3, 3, {{{8, 8}, 1}});
    set_fixed(g, d, 3, 4, {{{8, 1}, 1}});
    set_fixed(g, d, 3, 5, {{{8, 2}, 1}});
    set_fixed(g, d, 4, 3, {{{1, 8}, 1}});
    set_fixed(g, d, 5, 1, {{{2, 6}, 1}});
    set_fixed(g, d, 5, 2, {{{2, 7}, 1}});
    set_fixed(g, d, 5, 3, {{{2, 8}, 1}});
    return g;
}

PartialGrid zhat3_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.z_rows, L.z_cols);
    set_fixed(g, d, 1, 1, {{{9, 9}, 1}});
    set_fixed(g, d, 1, 2, {{{9, 6}, 1}});
    set_fixed(g, d, 1, 3, {{{9, 7}, 1}});
    set_fixed(g, d, 1, 4, {{{9, 3}, 1}});
    set_fixed(g, d, 1, 5, {{{9, 1}, 1}});
    set_fixed(g, d, 2, 1, {{{6, 9}, 1}});
    set_fixed(g, d, 2, 2, {{{6, 4}, 1}});
    set_fixed(g, d, 2, 3, {{{4, 7}, 1}});
    set_fixed(g, d, 2, 4, {{{6, 3}, 1}});
    set_fixed(g, d, 3, 1, {{{7, 9}, 1}});
    set_fixed(g, d, 3, 2, {{{7, 4}, 1}});
    set_fixed(g, d, 3, 4, {{{7, 3}, 1}});
    set_fixed(g, d, 4, 1, {{{3, 9}, 1}});
    set_fixed(g, d, 4, 2, {{{3, 6}, 1}});
    set_fixed(g, d, 4, 3, {{{3, 7}, 1}});
    set_fixed(g, d, 5, 1, {{{1, 9}, 1}});
    return g;
}

PartialGrid xhat4_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.x_rows, L.x4_cols);
    set_fixed(g, d, 1, 10, {{{1, 10}, 1}});
    set_fixed(g, d, 2, 9, {{{2, 9}, 1}});
    set_fixed(g, d, 2, 10, {{{2, 10}, 1}});
    set_fixed(g, d, 3, 8, {{{3, 8}, 1}});
    set_fixed(g, d, 3, 10, {{{3, 10}, 1}});
    set_fixed(g, d, 4, 8, {{{4, 8}, 1}});
    set_fixed(g, d, 4, 9, {{{4, 9}, 1}, {{6, 9}, -1}});
    set_fixed(g, d, 4, 10, {{{4, 10}, 1}});
    for (int j = 6; j <= 10; ++j) set_fixed(g, d, 5, j, {{{5, j}, 1}});
    return g;
}

PartialGrid what4_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.w_rows, L.w_cols);
    set_fixed(g, d, 6, 5, {{{6, 5}, 1}});
    set_fixed(g, d, 7, 5, {{{7, 5}, 1}});
    set_fixed(g, d, 8, 3, {{{8, 3}, 1}});
    set_fixed(g, d, 8, 4, {{{8, 4}, 1}});
    set_fixed(g, d, 8, 5, {{{8, 5}, 1}});
    set_fixed(g, d, 9, 2, {{{9, 2}, 1}});
    set_fixed(g, d, 9, 4, {{{9, 4}, 1}, {{9, 6}, -1}});
    set_fixed(g, d, 9, 5, {{{9, 5}, 1}});
    for (int j = 1; j <= 5; ++j) set_fixed(g, d, 10, j, {{{10, j}, 1}});
    return g;
}

PartialGrid yhat4_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.y_rows, L.y_cols);
    set_fixed(g, d, 1, 3, {{{6, 8}, 1}});
    set_fixed(g, d, 2, 3, {{{7, 8}, 1}});
    set_fixed(g, d, 3, 1, {{{8, 6}, 1}});
    set_fixed(g, d, 3, 2, {{{8, 7}, 1}});
    set_fixed(g, d, 3, 3, {{{8, 8}, 1}});
    return g;
}

PartialGrid zhat4_grid(const SevenDecomposition& d, const HattedLayouts& L) {
    PartialGrid g = make_grid(L.z_rows, L.z_cols);
    set_fixed(g, d, 1, 1, {{{9, 9}, 1}});
    set_fixed(g, d, 1, 2, {{{9, 6}, 1}});
    set_fixed(g, d, 1, 3, {{{9, 7}, 1}});
    set_fixed(g, d, 2, 1, {{{6, 9}, 1}});
    set_fixed(g, d, 3, 1, {{{7, 9}, 1}});
    return g;
}

// Interior elimination orders. The three-term grids share one shape after
// permuting rows and columns; so do the four-term Y and Z grids.
const std::vector<Step> theta_steps = {
    {StepKind::border, {5}, {5}},
    {StepKind::strip_recurse_rows, {4}, {1, 2, 3, 4}},
    {StepKind::strip_recurse_cols, {1, 2, 3}, {4}},
};

const std::vector<Step> corner_steps = {
    {StepKind::border, {5}, {5}},
    {StepKind::border, {3, 4}, {3, 4}},
    {StepKind::strip_recurse_rows, {1, 2}, {1, 2}},
};

const std::vector<Step> x4_steps = {
    {StepKind::border, {5}, {0, 1, 2, 3, 4}},
    {StepKind::strip_recurse_cols, {0, 1, 2, 3}, {0, 1}},
    {StepKind::strip_recurse_rows, {0}, {0, 1}},
};

const std::vector<Step> w4_steps = {
    {StepKind::border, {0, 1, 2, 3, 4}, {5}},
    {StepKind::strip_recurse_rows, {0, 1}, {0, 1, 2, 3}},
    {StepKind::strip_recurse_cols, {0, 1}, {0}},
};

}  // namespace

RankRange rank_range_internal_path(const SevenDecomposition& d, EquationKind eq,
                                   UnknownId which) {
    const ConsistencyReport rep = eq == EquationKind::three_term
                                      ? check_consistency_three(d)
                                      : check_consistency_four(d);
    if (!rep.consistent)
        throw InconsistentSystem("internal rank path requested for an inconsistent system");
    const HattedLayouts L = hatted_layouts(d);
    if (eq == EquationKind::three_term) {
        switch (which) {
            case UnknownId::Z:
                return chain(zhat3_grid(d, L), theta_steps, 0);
            case UnknownId::X:
                return chain(
                    subgrid(xhat3_grid(d, L), {4, 3, 2, 1, 0, 5}, {4, 3, 2, 1, 0, 5}),
                    theta_steps, 0);
            case UnknownId::Y:
                return chain(
                    subgrid(yhat3_grid(d, L), {2, 0, 4, 1, 3, 5}, {2, 0, 4, 1, 3, 5}),
                    theta_steps, 0);
            default:
                throw IndexError("three-term equation has unknowns X, Y, Z");
        }
    }
    switch (which) {
        case UnknownId::X:
            return chain(xhat4_grid(d, L), x4_steps, 0);
        case UnknownId::W:
            return chain(what4_grid(d, L), w4_steps, 0);
        case UnknownId::Y:
            return chain(subgrid(yhat4_grid(d, L), {2, 0, 1, 3, 4, 5}, {2, 0, 1, 3, 4, 5}),
                         corner_steps, 0);
        case UnknownId::Z:
            return chain(zhat4_grid(d, L), corner_steps, 0);
    }
    throw IndexError("unreachable unknown");
}

RankRangeReport rank_range_three(const SevenInput& in, UnknownId which,
                                 const SevenDecomposition* d) {
    SevenDecomposition own;
    require_consistent(in, EquationKind::three_term, d, own);
    switch (which) {
        case UnknownId::X: return direct_X_three(in);
        case UnknownId::Y: return direct_Y_three(in);
        case UnknownId::Z: return direct_Z_three(in);
        default: throw IndexError("three-term equation has unknowns X, Y, Z");
    }
}

RankRangeReport rank_range_four(const SevenInput& in, UnknownId which,
                                const SevenDecomposition* d) {
    SevenDecomposition own;
    require_consistent(in, EquationKind::four_term, d, own);
    switch (which) {
        case UnknownId::X: return direct_X_four(in);
        case UnknownId::W: return direct_W_four(in);
        case UnknownId::Y: return direct_Y_four(in);
        case UnknownId::Z: return direct_Z_four(in);
    }
    throw IndexError("unreachable unknown");
}

RankRangeReport rank_range_X_three(const SevenInput& in) {
    return rank_range_three(in, UnknownId::X);
}
RankRangeReport rank_range_Y_three(const SevenInput& in) {
    return rank_range_three(in, UnknownId::Y);
}
RankRangeReport rank_range_Z_three(const SevenInput& in) {
    return rank_range_three(in, UnknownId::Z);
}
RankRangeReport rank_range_X_four(const SevenInput& in) {
    return rank_range_four(in, UnknownId::X);
}
RankRangeReport rank_range_W_four(const SevenInput& in) {
    return rank_range_four(in, UnknownId::W);
}
std::pair<RankRangeReport, RankRangeReport> rank_range_YZ_four(const SevenInput& in) {
    return {rank_range_four(in, UnknownId::Y), rank_range_four(in, UnknownId::Z)};
}

namespace {

QMatrix blocks(const SevenDecomposition& d,
               std::initializer_list<std::initializer_list<BlockRef>> grid) {
    std::vector<QMatrix> vparts;
    for (const auto& row : grid) {
        std::vector<QMatrix> hparts;
        for (const BlockRef& ref : row)
            hparts.push_back(extract_block(d, ref.first, ref.second));
        vparts.push_back(hcat(hparts));
    }
    return vcat(vparts);
}

void check_identity(IdentityReport& rep, const std::string& name, int lhs, int rhs) {
    rep.items.push_back({name, lhs, rhs, lhs == rhs});
}

}  // namespace

IdentityReport verify_block_rank_identities(const SevenDecomposition& d,
                                            const SevenInput& in) {
    IdentityReport rep;
    if (!check_consistency_four(d).consistent)
        throw InconsistentSystem("identity suite requires a consistent system");
    const RowBlockSizes& M = d.partition.row;
    const RowBlockSizes& N = d.partition.col;
    const int rb = rank(in.B), rc = rank(in.C), rd = rank(in.D);
    const int re = rank(in.E), rf = rank(in.F);
    const int rbc = rk(in, {{b, c}});
    const int rbd = rk(in, {{b, dd}});
    const int rcd = rk(in, {{c, dd}});
    const int ref = rk(in, {{e}, {f}});
    const int reg = rk(in, {{e}, {g}});
    const int refg = rk(in, {{e}, {f}, {g}});

    // Four-term set.
    const QMatrix a49_69 = extract_block(d, 4, 9) - extract_block(d, 6, 9);
    check_identity(rep, "r(A56,A57,A58,A59,A5,10) = r[acd|e00]-r[cd]-r[e]",
                   rank(blocks(d, {{{5, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10}}})),
                   rk(in, {{a, c, dd}, {e, o, o}}) - rcd - re);
    check_identity(rep, "r(A1,10;..;A5,10) = r[a|e|f|g]-r[e|f|g]",
                   rank(blocks(d, {{{1, 10}}, {{2, 10}}, {{3, 10}}, {{4, 10}}, {{5, 10}}})),
                   rk(in, {{a}, {e}, {f}, {g}}) - refg);
    {
        const QMatrix lhs =
            vcat({hcat({extract_block(d, 4, 8), a49_69, extract_block(d, 4, 10)}),
                  hcat({extract_block(d, 5, 8), extract_block(d, 5, 9),
                        extract_block(d, 5, 10)})});
        check_identity(rep,
                       "r(A48,A49-A69,A4,10;A58,A59,A5,10) = "
                       "r[b0ad0|ba00c|0g000|00f00|0e000|00e00]"
                       "-r[c]-r[d]-r[e|f]-r[e|g]-m2-m3-m4-m5",
                       rank(lhs),
                       rk(in, {{b, o, a, dd, o},
                               {b, a, o, o, c},
                               {o, g, o, o, o},
                               {o, o, f, o, o},
                               {o, e, o, o, o},
                               {o, o, e, o, o}}) -
                           rc - rd - ref - reg - M.m2 - M.m3 - M.m4 - M.m5);
    }
    check_identity(rep, "r(A38,A3,10;A48,A4,10;A58,A5,10) = r[ac|e0|g0]-r[e|g]-r[c]",
                   rank(blocks(d, {{{3, 8}, {3, 10}}, {{4, 8}, {4, 10}}, {{5, 8}, {5, 10}}})),
                   rk(in, {{a, c}, {e, o}, {g, o}}) - reg - rc);
    {
        const QMatrix lhs = vcat({hcat({extract_block(d, 2, 9), extract_block(d, 2, 10)}),
                                  hcat({a49_69, extract_block(d, 4, 10)}),
                                  hcat({extract_block(d, 5, 9), extract_block(d, 5, 10)})});
        check_identity(rep, "r(A29,A2,10;A49-A69,A4,10;A59,A5,10) = r[ad|e0|f0]-r[d]-r[e|f]",
                       rank(lhs), rk(in, {{a, dd}, {e, o}, {f, o}}) - rd - ref);
    }
    check_identity(
        rep, "r(A3,10;A4,10;A5,10) = r[ad0c|a0c0|e000|f000|g000]-r[cd]-r[c]-r[e|f|g]",
        rank(blocks(d, {{{3, 10}}, {{4, 10}}, {{5, 10}}})),
        rk(in, {{a, dd, o, c}, {a, o, c, o}, {e, o, o, o}, {f, o, o, o}, {g, o, o, o}}) -
            rcd - rc - refg);
    check_identity(
        rep, "r(A2,10;A4,10;A5,10) = r[ad00|a0cd|e000|f000|g000]-r[cd]-r[d]-r[e|f|g]",
        rank(blocks(d, {{{2, 10}}, {{4, 10}}, {{5, 10}}})),
        rk(in, {{a, dd, o, o}, {a, o, c, dd}, {e, o, o, o}, {f, o, o, o}, {g, o, o, o}}) -
            rcd - rd - refg);
    check_identity(rep,
                   "r(A58,A59,A5,10) = "
                   "r[b0ad00|ba00cd|0g0000|00f000|0e0000|00e000]-r[bd]-r[cd]-r[e|f]-r[e|g]",
                   rank(blocks(d, {{{5, 8}, {5, 9}, {5, 10}}})),
                   rk(in, {{b, o, a, dd, o, o},
                           {b, a, o, o, c, dd},
                           {o, g, o, o, o, o},
                           {o, o, f, o, o, o},
                           {o, e, o, o, o, o},
                           {o, o, e, o, o, o}}) -
                       rbd - rcd - ref - reg);
    {
        const QMatrix lhs = vcat({hcat({a49_69, extract_block(d, 4, 10)}),
                                  hcat({extract_block(d, 5, 9), extract_block(d, 5, 10)})});
        check_identity(rep,
                       "r(A49-A69,A4,10;A59,A5,10) = "
                       "r[b0ad0|ba00c|0g000|00f00|0e000|00e00|0f000]"
                       "-r[c]-r[d]-r[e|f|g]-r[e|f]-m2-m3-m4-m5",
                       rank(lhs),
                       rk(in, {{b, o, a, dd, o},
                               {b, a, o, o, c},
                               {o, g, o, o, o},
                               {o, o, f, o, o},
                               {o, e, o, o, o},
                               {o, o, e, o, o},
                               {o, f, o, o, o}}) -
                           rc - rd - refg - ref - M.m2 - M.m3 - M.m4 - M.m5);
    }
    check_identity(rep,
                   "r(A48,A4,10;A58,A5,10) = "
                   "r[b0ad0|ba00c|0g000|00f00|00g00|0e000|00e00]"
                   "-r[c]-r[d]-r[e|f|g]-r[e|g]-m2-m3-m4-m5",
                   rank(blocks(d, {{{4, 8}, {4, 10}}, {{5, 8}, {5, 10}}})),
                   rk(in, {{b, o, a, dd, o},
                           {b, a, o, o, c},
                           {o, g, o, o, o},
                           {o, o, f, o, o},
                           {o, o, g, o, o},
                           {o, e, o, o, o},
                           {o, o, e, o, o}}) -
                       rc - rd - refg - reg - M.m2 - M.m3 - M.m4 - M.m5);

    // Three-term set; needs the stronger conditions.
    if (!check_consistency_three(d).consistent) return rep;
    check_identity(rep,
                   "r(A99,A96;A69,A64;A79,A74;A39,A36) = "
                   "r[gg00|0ab0|a00c|e000|0f00]-r[e]-r[f]-r[b]-r[c]-n3-n4-n6-n8",
                   rank(blocks(d, {{{9, 9}, {9, 6}},
                                   {{6, 9}, {6, 4}},
                                   {{7, 9}, {7, 4}},
                                   {{3, 9}, {3, 6}}})),
                   rk(in, {{g, g, o, o},
                           {o, a, b, o},
                           {a, o, o, c},
                           {e, o, o, o},
                           {o, f, o, o}}) -
                       re - rf - rb - rc - N.m3 - N.m4 - N.m6 - N.m8);
    check_identity(rep,
                   "r(A99,A96,A97,A93;A69,A64,A47,A63) = "
                   "r[d0ab0|da00c|0e000|00f00]-r[e]-r[f]-r[b]-r[c]-m3-m4-m6-m8",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 7}, {9, 3}},
                                   {{6, 9}, {6, 4}, {4, 7}, {6, 3}}})),
                   rk(in, {{dd, o, a, b, o},
                           {dd, a, o, o, c},
                           {o, e, o, o, o},
                           {o, o, f, o, o}}) -
                       re - rf - rb - rc - M.m3 - M.m4 - M.m6 - M.m8);
    check_identity(rep, "r(A99,A96,A97,A93,A91) = r[abc]-r[bc]",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 7}, {9, 3}, {9, 1}}})),
                   rk(in, {{a, b, c}}) - rbc);
    check_identity(rep, "r(A99;A69;A79;A39;A19) = r[a|e|f]-r[e|f]",
                   rank(blocks(d, {{{9, 9}}, {{6, 9}}, {{7, 9}}, {{3, 9}}, {{1, 9}}})),
                   rk(in, {{a}, {e}, {f}}) - ref);
    check_identity(rep,
                   "r(A99;A69;A79;A39) = "
                   "r[gg00|0ab0|a00c|e000|0f00|0e00]-r[e|f]-r[e]-r[b]-r[c]-n4-n6-n8",
                   rank(blocks(d, {{{9, 9}}, {{6, 9}}, {{7, 9}}, {{3, 9}}})),
                   rk(in, {{g, g, o, o},
                           {o, a, b, o},
                           {a, o, o, c},
                           {e, o, o, o},
                           {o, f, o, o},
                           {o, e, o, o}}) -
                       ref - re - rb - rc - N.m4 - N.m6 - N.m8);
    check_identity(rep,
                   "r(A99,A96,A97,A93) = "
                   "r[d0ab00|da00cb|0e0000|00f000]-r[e]-r[f]-r[b]-r[bc]-m4-m6-m8",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 7}, {9, 3}}})),
                   rk(in, {{dd, o, a, b, o, o},
                           {dd, a, o, o, c, b},
                           {o, e, o, o, o, o},
                           {o, o, f, o, o, o}}) -
                       re - rf - rb - rbc - M.m4 - M.m6 - M.m8);
    check_identity(rep, "r(A99,A96,A93;A69,A64,A63;A79,A74,A73) = r[ab|f0]-r[b]-r[f]",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 3}},
                                   {{6, 9}, {6, 4}, {6, 3}},
                                   {{7, 9}, {7, 4}, {7, 3}}})),
                   rk(in, {{a, b}, {f, o}}) - rb - rf);
    check_identity(rep, "r(A99,A96,A97;A69,A64,A47;A39,A36,A37) = r[ac|e0]-r[e]-r[c]",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 7}},
                                   {{6, 9}, {6, 4}, {4, 7}},
                                   {{3, 9}, {3, 6}, {3, 7}}})),
                   rk(in, {{a, c}, {e, o}}) - re - rc);
    check_identity(rep,
                   "r(A99,A96;A69,A64;A39,A36) = "
                   "r[gg000|0ab0c|a00c0|e0000|0f000]-r[e]-r[f]-r[c]-r[bc]-n3-n4-n6-n8",
                   rank(blocks(d, {{{9, 9}, {9, 6}}, {{6, 9}, {6, 4}}, {{3, 9}, {3, 6}}})),
                   rk(in, {{g, g, o, o, o},
                           {o, a, b, o, c},
                           {a, o, o, c, o},
                           {e, o, o, o, o},
                           {o, f, o, o, o}}) -
                       re - rf - rc - rbc - N.m3 - N.m4 - N.m6 - N.m8);
    check_identity(rep,
                   "r(A99,A96;A69,A64;A79,A74) = "
                   "r[gg000|0ab00|a00cb|e0000|0f000]-r[e]-r[f]-r[b]-r[bc]-n3-n4-n6-n8",
                   rank(blocks(d, {{{9, 9}, {9, 6}}, {{6, 9}, {6, 4}}, {{7, 9}, {7, 4}}})),
                   rk(in, {{g, g, o, o, o},
                           {o, a, b, o, o},
                           {a, o, o, c, b},
                           {e, o, o, o, o},
                           {o, f, o, o, o}}) -
                       re - rf - rb - rbc - N.m3 - N.m4 - N.m6 - N.m8);
    check_identity(rep,
                   "r(A99,A96,A97;A69,A64,A47) = "
                   "r[d0ab0|da00c|0e000|00f00|00e00]-r[b]-r[c]-r[e]-r[e|f]-m3-m4-m6-m8",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 7}}, {{6, 9}, {6, 4}, {4, 7}}})),
                   rk(in, {{dd, o, a, b, o},
                           {dd, a, o, o, c},
                           {o, e, o, o, o},
                           {o, o, f, o, o},
                           {o, o, e, o, o}}) -
                       rb - rc - re - ref - M.m3 - M.m4 - M.m6 - M.m8);
    check_identity(rep,
                   "r(A99,A96,A93;A69,A64,A63) = "
                   "r[d0ab0|da00c|0e000|00f00|0f000]-r[b]-r[c]-r[f]-r[e|f]-m3-m4-m6-m8",
                   rank(blocks(d, {{{9, 9}, {9, 6}, {9, 3}}, {{6, 9}, {6, 4}, {6, 3}}})),
                   rk(in, {{dd, o, a, b, o},
                           {dd, a, o, o, c},
                           {o, e, o, o, o},
                           {o, o, f, o, o},
                           {o, f, o, o, o}}) -
                       rb - rc - rf - ref - M.m3 - M.m4 - M.m6 - M.m8);
    return rep;
}

}  // namespace qms
