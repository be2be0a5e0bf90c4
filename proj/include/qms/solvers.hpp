#pragma once

#include <map>
#include <string>
#include <vector>

#include "qms/random.hpp"
#include "qms/seven_decomp.hpp"

namespace qms {

/// One term of a grid cell: a signed S_A block or a signed reference to a
/// free parameter.
struct Term {
    int sign = 1;
    bool is_block = false;
    int bi = 0, bj = 0;     // S_A block indices when is_block
    std::string free_ref;   // slot name otherwise
};

/// A cell of a hatted solution grid: either a free slot or a fixed value
/// expressed as a sum of terms (blocks of S_A and previously chosen frees).
struct Cell {
    std::string free_name;  // nonempty = free slot
    std::vector<Term> terms;
    bool is_free() const { return !free_name.empty(); }
};

/// Block grid of one hatted unknown together with its block sizes.
struct GridSpec {
    std::vector<int> row_sizes, col_sizes;
    std::vector<std::vector<Cell>> cells;  // cells[i][j]
};

struct FreeSlot {
    std::string name;
    int rows = 0, cols = 0;
};

using ParamAssignment = std::map<std::string, QMatrix>;

struct ConsistencyCondition {
    std::string name;
    QMatrix residual;  // the block (or difference) that had to vanish
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<ConsistencyCondition> failed_conditions;
};

/// Solvability of B X E + C Y F + D Z G = A in terms of the decomposition:
/// the rank condition t = 0, the three block equalities
/// A94 = A96, A49 = A69, A64 = A46, and the forced zero blocks.
ConsistencyReport check_consistency_three(const SevenDecomposition& d);

/// Solvability of B X + W E + C Y F + D Z G = A: t = 0, A89 = 0, A98 = 0 and
/// A(i,10) = 0, A(10,i) = 0 for i = 6..9. Strictly weaker than the
/// three-term conditions.
ConsistencyReport check_consistency_four(const SevenDecomposition& d);

/// Parameterization of all solutions (X, Y, Z): hatted grids plus the free
/// slot manifest. Built only for consistent systems.
struct SolutionFamilyThree {
    SevenDecomposition d;
    GridSpec xhat, yhat, zhat;
    std::vector<FreeSlot> free_slots;
};

struct SolutionFamilyFour {
    SevenDecomposition d;
    GridSpec xhat, what, yhat, zhat;
    std::vector<FreeSlot> free_slots;
};

SolutionFamilyThree general_solution_three(const SevenDecomposition& d);
SolutionFamilyFour general_solution_four(const SevenDecomposition& d);

struct ThreeSolution {
    QMatrix X, Y, Z;
};
struct FourSolution {
    QMatrix X, W, Y, Z;
};

/// Builds the hatted grids from a complete parameter assignment and maps
/// them through the transforms. ParameterError on missing/extra/misshapen
/// slots.
ThreeSolution assemble_three(const SolutionFamilyThree& fam, const ParamAssignment& params);
FourSolution assemble_four(const SolutionFamilyFour& fam, const ParamAssignment& params);

/// Projects a known solution onto the free slots; assembling the result
/// reproduces the solution exactly (completeness witness).
ParamAssignment recover_params_three(const SolutionFamilyThree& fam, const QMatrix& X0,
                                     const QMatrix& Y0, const QMatrix& Z0);
ParamAssignment recover_params_four(const SolutionFamilyFour& fam, const QMatrix& X0,
                                    const QMatrix& W0, const QMatrix& Y0, const QMatrix& Z0);

ParamAssignment zero_params(const std::vector<FreeSlot>& slots);
ParamAssignment random_params(const std::vector<FreeSlot>& slots, Rng& rng, long lo = -2,
                              long hi = 2);

QMatrix residual_three(const SevenInput& in, const ThreeSolution& s);
QMatrix residual_four(const SevenInput& in, const FourSolution& s);

}  // namespace qms
