#pragma once

#include <string>
#include <vector>

#include "qms/completion.hpp"
#include "qms/pattern.hpp"
#include "qms/seven_decomp.hpp"

namespace qms {

enum class EquationKind { three_term, four_term };
enum class UnknownId { X, W, Y, Z };

std::string to_string(UnknownId u);
std::string to_string(EquationKind eq);

/// One evaluated term of a min/max formula, kept for reporting.
struct TermValue {
    std::string name;
    int value = 0;
};

struct RankRangeReport {
    EquationKind eq = EquationKind::three_term;
    UnknownId unknown = UnknownId::X;
    RankRange range;
    std::vector<TermValue> max_terms;     // max = min over these
    std::vector<TermValue> min_branches;  // min = max over these
};

/// Direct formula path: evaluates the published min/max expressions from
/// ranks of block patterns assembled out of the seven inputs. Requires the
/// respective equation to be consistent (InconsistentSystem otherwise); pass
/// a precomputed decomposition to skip re-decomposing.
RankRangeReport rank_range_three(const SevenInput& in, UnknownId which,
                                 const SevenDecomposition* d = nullptr);
RankRangeReport rank_range_four(const SevenInput& in, UnknownId which,
                                const SevenDecomposition* d = nullptr);

RankRangeReport rank_range_X_three(const SevenInput& in);
RankRangeReport rank_range_Y_three(const SevenInput& in);
RankRangeReport rank_range_Z_three(const SevenInput& in);
RankRangeReport rank_range_X_four(const SevenInput& in);
RankRangeReport rank_range_W_four(const SevenInput& in);
std::pair<RankRangeReport, RankRangeReport> rank_range_YZ_four(const SevenInput& in);

/// Proof-internal path: the same ranges evaluated from the extracted S_A
/// blocks and the partition sizes, by eliminating the free blocks of the
/// hatted unknown one group at a time (two-corner border, L-strips, then the
/// two-interior-unknowns core). Must agree with the direct path exactly.
RankRange rank_range_internal_path(const SevenDecomposition& d, EquationKind eq,
                                   UnknownId which);

struct IdentityCheck {
    std::string name;
    int lhs = 0, rhs = 0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// The proof-internal block-rank identities: each equates the rank of a
/// matrix of extracted S_A blocks with pattern ranks of the original inputs
/// minus partition sizes. The four-term set needs four-term consistency; the
/// three-term set additionally needs the three-term conditions, and is
/// skipped when they do not hold.
IdentityReport verify_block_rank_identities(const SevenDecomposition& d,
                                            const SevenInput& in);

}  // namespace qms
