// Acceptance suite: every check below is exact (no tolerances). Each
// criterion prints one PASS/FAIL line; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qms/canonical_forms.hpp"
#include "qms/completion.hpp"
#include "qms/instance.hpp"
#include "qms/rank_range.hpp"
#include "qms/solvers.hpp"

using namespace qms;

namespace {

int g_failures = 0;

void run(int idx, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = std::move(d);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", idx,
                name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Dims {
    int m, n, p1, p2, p3, q1, q2, q3;
};

SevenInput random_instance(Rng& rng, const Dims& d, long lo = -2, long hi = 2) {
    SevenInput in;
    in.A = rng.matrix(d.m, d.n, lo, hi);
    in.B = rng.matrix(d.m, d.p1, lo, hi);
    in.C = rng.matrix(d.m, d.p2, lo, hi);
    in.D = rng.matrix(d.m, d.p3, lo, hi);
    in.E = rng.matrix(d.q1, d.n, lo, hi);
    in.F = rng.matrix(d.q2, d.n, lo, hi);
    in.G = rng.matrix(d.q3, d.n, lo, hi);
    return in;
}

// Instance pool for the decomposition criteria: seeded random shapes with
// degenerate cases mixed in (zero matrices, empty dimensions, rank-deficient
// and rank-tied factors).
std::vector<SevenInput> decomposition_pool(int count) {
    Rng rng(20240001);
    std::vector<SevenInput> pool;
    {
        SevenInput z;
        z.A = QMatrix::zero(3, 4);
        z.B = QMatrix::zero(3, 2);
        z.C = QMatrix::zero(3, 1);
        z.D = QMatrix::zero(3, 2);
        z.E = QMatrix::zero(2, 4);
        z.F = QMatrix::zero(1, 4);
        z.G = QMatrix::zero(2, 4);
        pool.push_back(z);

        SevenInput only_a = z;
        only_a.A = rng.of_rank(3, 4, 2);
        pool.push_back(only_a);

        SevenInput empty;
        empty.A = QMatrix::zero(0, 0);
        empty.B = QMatrix::zero(0, 2);
        empty.C = QMatrix::zero(0, 0);
        empty.D = QMatrix::zero(0, 1);
        empty.E = QMatrix::zero(1, 0);
        empty.F = QMatrix::zero(0, 0);
        empty.G = QMatrix::zero(2, 0);
        pool.push_back(empty);

        SevenInput ident;
        ident.A = QMatrix::identity(4);
        ident.B = QMatrix::identity(4);
        ident.C = QMatrix::identity(4);
        ident.D = QMatrix::identity(4);
        ident.E = QMatrix::identity(4);
        ident.F = QMatrix::identity(4);
        ident.G = QMatrix::identity(4);
        pool.push_back(ident);
    }
    while (static_cast<int>(pool.size()) < count) {
        const int k = static_cast<int>(pool.size());
        Dims d;
        d.m = static_cast<int>(rng.uniform(0, 6));
        d.n = static_cast<int>(rng.uniform(0, 6));
        d.p1 = static_cast<int>(rng.uniform(0, 3));
        d.p2 = static_cast<int>(rng.uniform(0, 3));
        d.p3 = static_cast<int>(rng.uniform(0, 3));
        d.q1 = static_cast<int>(rng.uniform(0, 3));
        d.q2 = static_cast<int>(rng.uniform(0, 3));
        d.q3 = static_cast<int>(rng.uniform(0, 3));
        if (k % 11 == 0) {
            d.m = 8;
            d.n = 8;
        }
        SevenInput in = random_instance(rng, d, -1, 1);
        if (k % 5 == 0) in.B = QMatrix::zero(d.m, d.p1);
        if (k % 7 == 0) in.F = QMatrix::zero(d.q2, d.n);
        if (k % 4 == 0 && d.p1 > 0) in.C = in.B * rng.matrix(d.p1, d.p2, -1, 1);
        if (k % 6 == 0 && d.q1 > 0) in.G = rng.matrix(d.q3, d.q1, -1, 1) * in.E;
        if (k % 9 == 0 && d.m > 1 && d.n > 1) in.A = rng.of_rank(d.m, d.n, 1);
        pool.push_back(in);
    }
    return pool;
}

Dims random_solver_dims(Rng& rng) {
    Dims d;
    d.m = static_cast<int>(rng.uniform(2, 4));
    d.n = static_cast<int>(rng.uniform(2, 4));
    d.p1 = static_cast<int>(rng.uniform(1, 2));
    d.p2 = static_cast<int>(rng.uniform(1, 2));
    d.p3 = static_cast<int>(rng.uniform(1, 2));
    d.q1 = static_cast<int>(rng.uniform(1, 2));
    d.q2 = static_cast<int>(rng.uniform(1, 2));
    d.q3 = static_cast<int>(rng.uniform(1, 2));
    return d;
}

SevenInput make_consistent_three(Rng& rng, const Dims& d, ThreeSolution* gen = nullptr) {
    SevenInput in = random_instance(rng, d, -1, 1);
    ThreeSolution s;
    s.X = rng.matrix(d.p1, d.q1, -1, 1);
    s.Y = rng.matrix(d.p2, d.q2, -1, 1);
    s.Z = rng.matrix(d.p3, d.q3, -1, 1);
    in.A = in.B * s.X * in.E + in.C * s.Y * in.F + in.D * s.Z * in.G;
    if (gen) *gen = s;
    return in;
}

SevenInput make_consistent_four(Rng& rng, const Dims& d, FourSolution* gen = nullptr) {
    SevenInput in = random_instance(rng, d, -1, 1);
    FourSolution s;
    s.X = rng.matrix(d.p1, d.n, -1, 1);
    s.W = rng.matrix(d.m, d.q1, -1, 1);
    s.Y = rng.matrix(d.p2, d.q2, -1, 1);
    s.Z = rng.matrix(d.p3, d.q3, -1, 1);
    in.A = in.B * s.X + s.W * in.E + in.C * s.Y * in.F + in.D * s.Z * in.G;
    if (gen) *gen = s;
    return in;
}

std::pair<bool, std::string> criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const auto pool = decomposition_pool(200);
    int ok = 0;
    for (const SevenInput& in : pool) {
        const SevenDecomposition d = decompose_seven(in);
        ok += verify_decomposition(d, in).all_pass();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {ok == 200 && secs < 60.0,
            "all seven reconstructions and S-patterns exact on " + std::to_string(ok) +
                "/200 instances within the 60s budget"};
}

std::pair<bool, std::string> criterion2() {
    const auto pool = decomposition_pool(200);
    int sizes_ok = 0, n3_printed_divergence = 0;
    for (const SevenInput& in : pool) {
        const SevenDecomposition d = decompose_seven(in);
        const bool row_ok = row_block_sizes_from_ranks(in.B, in.C, in.D) == d.partition.row;
        const bool col_ok = col_block_sizes_from_ranks(in.E, in.F, in.G) == d.partition.col;
        using T = Tok;
        RankPattern tpat{{{T::A, T::B, T::C, T::D},
                          {T::E, T::O, T::O, T::O},
                          {T::F, T::O, T::O, T::O},
                          {T::G, T::O, T::O, T::O}}};
        const bool t_ok = d.partition.t == pattern_rank(tpat, in) -
                                               d.partition.row.rank_bcd() -
                                               d.partition.col.rank_bcd();
        sizes_ok += row_ok && col_ok && t_ok;
        if (col_n3_printed_variant(in.E, in.F, in.G) != d.partition.col.m3)
            ++n3_printed_divergence;
    }
    return {sizes_ok == 200,
            "observed sizes = rank formulas on " + std::to_string(sizes_ok) +
                "/200; n3 is pinned to the construction-observed value, and the "
                "printed n3 variant diverges from it on " +
                std::to_string(n3_printed_divergence) + " instances"};
}

std::pair<bool, std::string> criterion3() {
    Rng rng(20240003);
    int particular_ok = 0, draws_ok = 0, witness_ok = 0;
    const int per_eq = 100;
    for (int it = 0; it < per_eq; ++it) {
        const Dims dm = random_solver_dims(rng);
        ThreeSolution gen;
        const SevenInput in = make_consistent_three(rng, dm, &gen);
        const SevenDecomposition d = decompose_seven(in);
        const SolutionFamilyThree fam = general_solution_three(d);
        particular_ok +=
            residual_three(in, assemble_three(fam, zero_params(fam.free_slots))).is_zero();
        bool all_draws = true;
        for (int k = 0; k < 20; ++k)
            all_draws &=
                residual_three(in, assemble_three(fam, random_params(fam.free_slots, rng)))
                    .is_zero();
        draws_ok += all_draws;
        const ThreeSolution back =
            assemble_three(fam, recover_params_three(fam, gen.X, gen.Y, gen.Z));
        witness_ok += back.X == gen.X && back.Y == gen.Y && back.Z == gen.Z;
    }
    for (int it = 0; it < per_eq; ++it) {
        const Dims dm = random_solver_dims(rng);
        FourSolution gen;
        const SevenInput in = make_consistent_four(rng, dm, &gen);
        const SevenDecomposition d = decompose_seven(in);
        const SolutionFamilyFour fam = general_solution_four(d);
        particular_ok +=
            residual_four(in, assemble_four(fam, zero_params(fam.free_slots))).is_zero();
        bool all_draws = true;
        for (int k = 0; k < 20; ++k)
            all_draws &=
                residual_four(in, assemble_four(fam, random_params(fam.free_slots, rng)))
                    .is_zero();
        draws_ok += all_draws;
        const FourSolution back =
            assemble_four(fam, recover_params_four(fam, gen.X, gen.W, gen.Y, gen.Z));
        witness_ok +=
            back.X == gen.X && back.W == gen.W && back.Y == gen.Y && back.Z == gen.Z;
    }
    // Perturbations: bump one entry of A, retried until the equation leaves
    // the solvable set; the check must fail with named conditions and the
    // solver must refuse.
    int detected = 0;
    for (int it = 0; it < 100; ++it) {
        const Dims dm{4, 4, 1, 1, 1, 1, 1, 1};
        const bool three = it % 2 == 0;
        SevenInput in = three ? make_consistent_three(rng, dm) : make_consistent_four(rng, dm);
        for (int attempt = 0; attempt < 20; ++attempt) {
            SevenInput bad = in;
            bad.A.at(static_cast<int>(rng.uniform(0, dm.m - 1)),
                     static_cast<int>(rng.uniform(0, dm.n - 1))) += rng.quaternion(-2, 2);
            const SevenDecomposition d = decompose_seven(bad);
            const ConsistencyReport rep =
                three ? check_consistency_three(d) : check_consistency_four(d);
            if (rep.consistent) continue;
            bool refused = false;
            try {
                if (three)
                    general_solution_three(d);
                else
                    general_solution_four(d);
            } catch (const InconsistentSystem&) {
                refused = true;
            }
            detected += !rep.failed_conditions.empty() && refused;
            break;
        }
    }
    const bool pass =
        particular_ok == 200 && draws_ok == 200 && witness_ok == 200 && detected == 100;
    return {pass, "particular " + std::to_string(particular_ok) + "/200, 20-draw sets " +
                      std::to_string(draws_ok) + "/200, witness recovery " +
                      std::to_string(witness_ok) + "/200, perturbations detected+named " +
                      std::to_string(detected) + "/100"};
}

std::pair<bool, std::string> criterion4() {
    Rng rng(20240004);
    int agree = 0, total = 0;
    for (int it = 0; it < 50; ++it) {
        Dims dm = random_solver_dims(rng);
        SevenInput in = make_consistent_three(rng, dm);
        if (it % 3 == 1 && dm.q1 > 0) {
            // Tie F to E so the stacked pair ranks separate.
            in.F = rng.matrix(dm.q2, dm.q1, -1, 1) * in.E;
            in.A = in.B * rng.matrix(dm.p1, dm.q1, -1, 1) * in.E +
                   in.C * rng.matrix(dm.p2, dm.q2, -1, 1) * in.F +
                   in.D * rng.matrix(dm.p3, dm.q3, -1, 1) * in.G;
        }
        const SevenDecomposition d = decompose_seven(in);
        for (UnknownId u : {UnknownId::X, UnknownId::Y, UnknownId::Z}) {
            const RankRangeReport direct = rank_range_three(in, u, &d);
            const RankRange internal =
                rank_range_internal_path(d, EquationKind::three_term, u);
            agree += direct.range.min == internal.min && direct.range.max == internal.max;
            ++total;
        }
    }
    for (int it = 0; it < 50; ++it) {
        const Dims dm = random_solver_dims(rng);
        const SevenInput in = make_consistent_four(rng, dm);
        const SevenDecomposition d = decompose_seven(in);
        for (UnknownId u : {UnknownId::X, UnknownId::W, UnknownId::Y, UnknownId::Z}) {
            const RankRangeReport direct = rank_range_four(in, u, &d);
            const RankRange internal =
                rank_range_internal_path(d, EquationKind::four_term, u);
            agree += direct.range.min == internal.min && direct.range.max == internal.max;
            ++total;
        }
    }
    return {agree == total, "direct formula = proof-internal path on " +
                                std::to_string(agree) + "/" + std::to_string(total) +
                                " unknown evaluations (50 instances per equation)"};
}

std::pair<bool, std::string> criterion5() {
    Rng rng(20240005);
    const int instances = 12;
    int sandwich_violations = 0;
    int attained = 0, cells = 0;
    for (int it = 0; it < instances; ++it) {
        const Dims dm = random_solver_dims(rng);
        {
            const SevenInput in = make_consistent_three(rng, dm);
            const SevenDecomposition d = decompose_seven(in);
            const SolutionFamilyThree fam = general_solution_three(d);
            const RankRangeReport r[3] = {rank_range_three(in, UnknownId::X, &d),
                                          rank_range_three(in, UnknownId::Y, &d),
                                          rank_range_three(in, UnknownId::Z, &d)};
            bool hit[3] = {false, false, false};
            for (int batch = 0; batch < 3 && !(hit[0] && hit[1] && hit[2]); ++batch) {
                for (int s = 0; s < 30; ++s) {
                    const ThreeSolution sol =
                        assemble_three(fam, random_params(fam.free_slots, rng, -3, 3));
                    const int k[3] = {rank(sol.X), rank(sol.Y), rank(sol.Z)};
                    for (int u = 0; u < 3; ++u) {
                        if (k[u] < r[u].range.min || k[u] > r[u].range.max)
                            ++sandwich_violations;
                        hit[u] = hit[u] || k[u] == r[u].range.max;
                    }
                }
            }
            for (bool h : hit) attained += h;
            cells += 3;
        }
        {
            const SevenInput in = make_consistent_four(rng, dm);
            const SevenDecomposition d = decompose_seven(in);
            const SolutionFamilyFour fam = general_solution_four(d);
            const RankRangeReport r[4] = {rank_range_four(in, UnknownId::X, &d),
                                          rank_range_four(in, UnknownId::W, &d),
                                          rank_range_four(in, UnknownId::Y, &d),
                                          rank_range_four(in, UnknownId::Z, &d)};
            bool hit[4] = {false, false, false, false};
            for (int batch = 0; batch < 3 && !(hit[0] && hit[1] && hit[2] && hit[3]);
                 ++batch) {
                for (int s = 0; s < 30; ++s) {
                    const FourSolution sol =
                        assemble_four(fam, random_params(fam.free_slots, rng, -3, 3));
                    const int k[4] = {rank(sol.X), rank(sol.W), rank(sol.Y), rank(sol.Z)};
                    for (int u = 0; u < 4; ++u) {
                        if (k[u] < r[u].range.min || k[u] > r[u].range.max)
                            ++sandwich_violations;
                        hit[u] = hit[u] || k[u] == r[u].range.max;
                    }
                }
            }
            for (bool h : hit) attained += h;
            cells += 4;
        }
    }
    const bool pass = sandwich_violations == 0 && attained * 100 >= cells * 95;
    return {pass, "sandwich violations " + std::to_string(sandwich_violations) +
                      ", max attained in " + std::to_string(attained) + "/" +
                      std::to_string(cells) + " instance-unknown cells"};
}

std::pair<bool, std::string> criterion6() {
    Rng rng(20240006);
    int l_ok = 0;
    for (int it = 0; it < 100; ++it) {
        LShapeInstance inst;
        const int ar = static_cast<int>(rng.uniform(0, 4));
        const int ac = static_cast<int>(rng.uniform(0, 4));
        inst.A1 = rng.matrix(ar, ac, -2, 2);
        inst.B1 = rng.matrix(ar, static_cast<int>(rng.uniform(0, 4)), -2, 2);
        inst.D1 = rng.matrix(static_cast<int>(rng.uniform(0, 4)), ac, -2, 2);
        const QMatrix Y = l_shape_min_achiever(inst);
        l_ok += rank(l_shape_assemble(inst, Y)) == l_shape_rank_range(inst).min;
    }
    int c_ok = 0;
    for (int it = 0; it < 100; ++it) {
        TwoCornerInstance inst;
        inst.A1 = rng.matrix(static_cast<int>(rng.uniform(0, 4)),
                             static_cast<int>(rng.uniform(0, 4)), -2, 2);
        inst.B1 = rng.matrix(static_cast<int>(rng.uniform(0, 4)),
                             static_cast<int>(rng.uniform(0, 4)), -2, 2);
        const auto [X, Y] = two_corner_min_achiever(inst);
        c_ok += rank(two_corner_assemble(inst, X, Y)) ==
                std::max(rank(inst.A1), rank(inst.B1));
    }
    int h_instances = 0, h_in_range = 0, h_attained = 0;
    for (int it = 0; it < 10; ++it) {
        HShapeInstance inst;
        const int nt = static_cast<int>(rng.uniform(1, 3));
        const int np = static_cast<int>(rng.uniform(1, 3));
        const int mt = static_cast<int>(rng.uniform(1, 2));
        const int mc = static_cast<int>(rng.uniform(1, 2));
        const int pt = static_cast<int>(rng.uniform(1, 2));
        const int pc = static_cast<int>(rng.uniform(1, 2));
        inst.A1 = rng.matrix(nt, np, -2, 2);
        inst.B1 = rng.matrix(nt, mc, -2, 2);
        inst.C1 = rng.matrix(nt, pc, -2, 2);
        inst.D1 = rng.matrix(mt, np, -2, 2);
        inst.E1 = rng.matrix(mt, pc, -2, 2);
        inst.F1 = rng.matrix(pt, np, -2, 2);
        inst.G1 = rng.matrix(pt, mc, -2, 2);
        const RankRange r = h_shape_rank_range(inst);
        ++h_instances;
        bool in_range = true, max_hit = false;
        for (int s = 0; s < 50; ++s) {
            const QMatrix X = rng.matrix(mt, mc, -3, 3);
            const QMatrix Y = rng.matrix(pt, pc, -3, 3);
            const int k = rank(h_shape_assemble(inst, X, Y));
            in_range = in_range && k >= r.min && k <= r.max;
            max_hit = max_hit || k == r.max;
        }
        h_in_range += in_range;
        h_attained += max_hit;
    }
    const bool pass = l_ok == 100 && c_ok == 100 && h_in_range == h_instances &&
                      h_attained == h_instances;
    return {pass, "L-shape achiever " + std::to_string(l_ok) +
                      "/100, two-corner achiever " + std::to_string(c_ok) +
                      "/100, H-shape sweeps in range " + std::to_string(h_in_range) + "/" +
                      std::to_string(h_instances) + " with max attained " +
                      std::to_string(h_attained) + "/" + std::to_string(h_instances)};
}

std::pair<bool, std::string> criterion7() {
    Rng rng(20240007);
    int pass_count = 0;
    size_t identity_count = 0;
    for (int it = 0; it < 50; ++it) {
        const Dims dm = random_solver_dims(rng);
        const SevenInput in = make_consistent_three(rng, dm);
        const SevenDecomposition d = decompose_seven(in);
        const IdentityReport rep = verify_block_rank_identities(d, in);
        identity_count = rep.items.size();
        pass_count += rep.all_pass();
    }
    return {pass_count == 50, "all " + std::to_string(identity_count) +
                                  " block-rank identities exact on " +
                                  std::to_string(pass_count) + "/50 decompositions"};
}

std::pair<bool, std::string> criterion8() {
    Rng rng(20240008);
    const Quaternion one = Quaternion::one();
    const Quaternion qi = Quaternion::i(), qj = Quaternion::j(), qk = Quaternion::k();
    const bool table = qi * qi == -one && qj * qj == -one && qk * qk == -one &&
                       qi * qj * qk == -one && qi * qj == qk && qj * qk == qi &&
                       qk * qi == qj;
    int ok = 0;
    const int rounds = 10000;
    for (int it = 0; it < rounds; ++it) {
        const Quaternion x = rng.quaternion(-8, 8);
        const Quaternion y = rng.quaternion(-8, 8);
        const Quaternion z = rng.quaternion(-8, 8);
        const bool good = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
                          (y + z) * x == y * x + z * x &&
                          q_norm2(x * y) == q_norm2(x) * q_norm2(y);
        ok += good;
    }
    return {table && ok == rounds, "hamilton table exact; " + std::to_string(ok) + "/" +
                                       std::to_string(rounds) +
                                       " randomized ring and norm checks exact"};
}

}  // namespace

int main() {
    run(1, "decomposition soundness on 200 seeded instances", criterion1);
    run(2, "block-size formulas match the observed partition", criterion2);
    run(3, "solver soundness, completeness and refusal", criterion3);
    run(4, "rank-range two-path agreement", criterion4);
    run(5, "sandwich bounds with generic max attainment", criterion5);
    run(6, "completion formula achievers and bounds", criterion6);
    run(7, "block-rank identity suite", criterion7);
    run(8, "scalar algebra, 10000 randomized checks", criterion8);
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
