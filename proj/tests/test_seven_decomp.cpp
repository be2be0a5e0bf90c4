#include <doctest.h>

#include "qms/random.hpp"
#include "qms/seven_decomp.hpp"

using namespace qms;

namespace {

SevenInput random_input(Rng& rng, int m, int n, int p1, int p2, int p3, int q1, int q2,
                        int q3, long lo = -1, long hi = 1) {
    SevenInput in;
    in.A = rng.matrix(m, n, lo, hi);
    in.B = rng.matrix(m, p1, lo, hi);
    in.C = rng.matrix(m, p2, lo, hi);
    in.D = rng.matrix(m, p3, lo, hi);
    in.E = rng.matrix(q1, n, lo, hi);
    in.F = rng.matrix(q2, n, lo, hi);
    in.G = rng.matrix(q3, n, lo, hi);
    return in;
}

}  // namespace

TEST_CASE("zero instance") {
    SevenInput in;
    in.A = QMatrix::zero(3, 4);
    in.B = QMatrix::zero(3, 2);
    in.C = QMatrix::zero(3, 1);
    in.D = QMatrix::zero(3, 2);
    in.E = QMatrix::zero(2, 4);
    in.F = QMatrix::zero(1, 4);
    in.G = QMatrix::zero(2, 4);
    const SevenDecomposition d = decompose_seven(in);
    CHECK(d.partition.t == 0);
    CHECK(d.SA.is_zero());
    CHECK(verify_decomposition(d, in).all_pass());
}

TEST_CASE("only A nonzero: t equals rank A") {
    Rng rng(7);
    const QMatrix A = rng.of_rank(4, 5, 2);
    SevenInput in;
    in.A = A;
    in.B = QMatrix::zero(4, 2);
    in.C = QMatrix::zero(4, 2);
    in.D = QMatrix::zero(4, 1);
    in.E = QMatrix::zero(2, 5);
    in.F = QMatrix::zero(1, 5);
    in.G = QMatrix::zero(2, 5);
    const SevenDecomposition d = decompose_seven(in);
    CHECK(d.partition.t == 2);
    CHECK(d.partition.row.rank_bcd() == 0);
    // S_A = [[0,0],[0,I_t]] up to the layout: only the tail blocks are
    // nonempty, and the identity sits in the (11,11) cell.
    CHECK(extract_block(d, 11, 11) == QMatrix::identity(2));
    CHECK(extract_block(d, 10, 10).is_zero());
    CHECK(verify_decomposition(d, in).all_pass());
}

TEST_CASE("dimension mismatch is rejected") {
    Rng rng(9);
    SevenInput in = random_input(rng, 3, 3, 1, 1, 1, 1, 1, 1);
    in.B = rng.matrix(2, 1);
    CHECK_THROWS_AS(decompose_seven(in), DimensionError);
    in = random_input(rng, 3, 3, 1, 1, 1, 1, 1, 1);
    in.G = rng.matrix(1, 4);
    CHECK_THROWS_AS(decompose_seven(in), DimensionError);
}

TEST_CASE("seeded instances reconstruct exactly") {
    Rng rng(1234);
    for (int it = 0; it < 10; ++it) {
        const int m = static_cast<int>(rng.uniform(1, 6));
        const int n = static_cast<int>(rng.uniform(1, 6));
        const SevenInput in = random_input(
            rng, m, n, static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)),
            static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)),
            static_cast<int>(rng.uniform(0, 3)), static_cast<int>(rng.uniform(0, 3)));
        const SevenDecomposition d = decompose_seven(in);
        const VerifyReport rep = verify_decomposition(d, in);
        for (const auto& item : rep.items) {
            INFO(item.name);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("extract_block agrees with direct index arithmetic") {
    Rng rng(77);
    const SevenInput in = random_input(rng, 6, 6, 3, 3, 3, 3, 3, 3);
    const SevenDecomposition d = decompose_seven(in);
    const BlockPartition& p = d.partition;
    const QMatrix blk = extract_block(d, 9, 9);
    int r0 = 0, c0 = 0;
    const auto rlay = p.row_layout(), clay = p.col_layout();
    for (int k = 0; k < 8; ++k) r0 += rlay[k];
    for (int k = 0; k < 8; ++k) c0 += clay[k];
    CHECK(blk == d.SA.sub(r0, c0, rlay[8], clay[8]));
    CHECK_THROWS_AS(extract_block(d, 0, 1), IndexError);
    CHECK_THROWS_AS(extract_block(d, 1, 12), IndexError);
}

TEST_CASE("verification notices a corrupted transform") {
    Rng rng(88);
    const SevenInput in = random_input(rng, 4, 4, 2, 2, 2, 2, 2, 2);
    SevenDecomposition d = decompose_seven(in);
    REQUIRE(verify_decomposition(d, in).all_pass());
    d.P.at(0, 0) += Quaternion::one();
    const VerifyReport rep = verify_decomposition(d, in);
    CHECK_FALSE(rep.all_pass());
    bool a_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "reconstruction A" && !item.pass) a_failed = true;
    CHECK(a_failed);
}

TEST_CASE("partition is invariant under a left equivalence of the row side") {
    Rng rng(99);
    const SevenInput in = random_input(rng, 5, 4, 2, 2, 2, 2, 2, 2);
    const SevenDecomposition d1 = decompose_seven(in);
    const QMatrix M = rng.invertible(5);
    SevenInput in2 = in;
    in2.A = M * in.A;
    in2.B = M * in.B;
    in2.C = M * in.C;
    in2.D = M * in.D;
    const SevenDecomposition d2 = decompose_seven(in2);
    CHECK(d1.partition.row == d2.partition.row);
    CHECK(d1.partition.col == d2.partition.col);
    CHECK(d1.partition.t == d2.partition.t);
    CHECK(verify_decomposition(d2, in2).all_pass());
}
