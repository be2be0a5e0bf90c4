#pragma once

#include <vector>

#include "qms/matrix.hpp"

namespace qms {

/// The seven input matrices of the matrix array (A; B, C, D; E, F, G),
/// with A m x n, B..D sharing A's rows and E..G sharing A's columns.
struct SevenInput {
    QMatrix A, B, C, D, E, F, G;
};

/// Token of a block-rank pattern grid: one of the seven input letters or a
/// zero block of inferred size.
enum class Tok { A, B, C, D, E, F, G, O };

/// A block pattern such as [[D,0,A,B,0],[D,A,0,0,C],[0,E,0,0,0],[0,0,F,0,0]].
/// Letters are input matrices, juxtaposition within a row is horizontal
/// concatenation, rows of the grid are block rows, and O is a zero block
/// whose size is inferred. Grids are spelled out as data so there is no
/// subscript string parsing anywhere.
struct RankPattern {
    std::vector<std::vector<Tok>> grid;
};

/// Concatenates the pattern into a concrete matrix. Every grid row and every
/// grid column must contain at least one letter, all letters in a row must
/// agree on row count and all letters in a column on column count, else
/// PatternError.
QMatrix assemble(const RankPattern& p, const SevenInput& in);

/// rank(assemble(p, in)); the r_{...} value of the pattern.
int pattern_rank(const RankPattern& p, const SevenInput& in);

}  // namespace qms
