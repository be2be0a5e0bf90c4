#pragma once

#include <json.hpp>

#include "qms/rank_range.hpp"
#include "qms/seven_decomp.hpp"
#include "qms/solvers.hpp"

namespace qms {

using ordered_json = nlohmann::ordered_json;

/// JSON form of a matrix: {"rows", "cols", "entries"} with quaternion
/// entries as 4-tuples of rational strings. Shared by the instance file
/// format and all CLI reports; no floating point anywhere.
ordered_json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const ordered_json& j, const std::string& path);

ordered_json partition_to_json(const BlockPartition& p);
ordered_json decomposition_to_json(const SevenDecomposition& d);
ordered_json verify_report_to_json(const VerifyReport& rep);
ordered_json consistency_to_json(const ConsistencyReport& rep);

/// Solution family: free-slot manifest plus the cell grids (each cell either
/// a free slot or a signed sum of S_A blocks and free references).
ordered_json grid_to_json(const GridSpec& g);
ordered_json family_to_json(const SolutionFamilyThree& fam);
ordered_json family_to_json(const SolutionFamilyFour& fam);

ordered_json rank_range_report_to_json(const RankRangeReport& rep);
ordered_json identity_report_to_json(const IdentityReport& rep);

}  // namespace qms
