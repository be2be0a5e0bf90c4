#include <doctest.h>

#include "qms/pattern.hpp"
#include "qms/random.hpp"

using namespace qms;
using T = Tok;

namespace {

SevenInput seeded_input(uint64_t seed, int m, int n, int p1, int p2, int p3, int q1, int q2,
                        int q3) {
    Rng rng(seed);
    SevenInput in;
    in.A = rng.matrix(m, n);
    in.B = rng.matrix(m, p1);
    in.C = rng.matrix(m, p2);
    in.D = rng.matrix(m, p3);
    in.E = rng.matrix(q1, n);
    in.F = rng.matrix(q2, n);
    in.G = rng.matrix(q3, n);
    return in;
}

}  // namespace

TEST_CASE("row and column patterns") {
    const SevenInput in = seeded_input(3, 4, 4, 2, 3, 2, 2, 3, 2);
    const QMatrix bcd = assemble(RankPattern{{{T::B, T::C, T::D}}}, in);
    CHECK(bcd == hcat({in.B, in.C, in.D}));
    CHECK(pattern_rank(RankPattern{{{T::B, T::C, T::D}}}, in) == rank(bcd));

    const QMatrix efg = assemble(RankPattern{{{T::E}, {T::F}, {T::G}}}, in);
    CHECK(efg == vcat({in.E, in.F, in.G}));
}

TEST_CASE("five by five block example") {
    const SevenInput in = seeded_input(4, 3, 4, 2, 3, 2, 4, 3, 2);
    const RankPattern p{{{T::D, T::O, T::A, T::B, T::O},
                         {T::D, T::A, T::O, T::O, T::C},
                         {T::O, T::E, T::O, T::O, T::O},
                         {T::O, T::O, T::F, T::O, T::O},
                         {T::O, T::F, T::O, T::O, T::O}}};
    const QMatrix big = assemble(p, in);
    CHECK(big.rows() == 3 + 3 + 4 + 3 + 3);
    CHECK(big.cols() == 2 + 4 + 4 + 2 + 3);
    // Spot-check a few placements: A sits at grid (1,3) and (2,2), F at
    // (4,3) and (5,2); grid row offsets are (0,3,6,10,13), columns
    // (0,2,6,10,12).
    CHECK(big.sub(0, 6, 3, 4) == in.A);
    CHECK(big.sub(3, 2, 3, 4) == in.A);
    CHECK(big.sub(0, 2, 3, 4) == QMatrix::zero(3, 4));
    CHECK(big.sub(13, 2, 3, 4) == in.F);
    CHECK(big.sub(10, 6, 3, 4) == in.F);
}

TEST_CASE("pattern validation") {
    const SevenInput in = seeded_input(5, 3, 4, 2, 3, 2, 4, 3, 2);
    // Column of only zeros cannot be sized.
    CHECK_THROWS_AS(assemble(RankPattern{{{T::A, T::O}}}, in), PatternError);
    // Row of only zeros cannot be sized.
    CHECK_THROWS_AS(assemble(RankPattern{{{T::A}, {T::O}}}, in), PatternError);
    // A (3x4) and E (4x4) disagree on rows in one grid row.
    CHECK_THROWS_AS(assemble(RankPattern{{{T::A, T::E}}}, in), PatternError);
    // Empty and ragged grids.
    CHECK_THROWS_AS(assemble(RankPattern{}, in), PatternError);
}
