#include "qms/json_io.hpp"

#include "qms/error.hpp"

namespace qms {

ordered_json matrix_to_json(const QMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.cols(); ++k) {
            const Quaternion& q = m.at(i, k);
            row.push_back(ordered_json::array(
                {to_string(q.a0), to_string(q.a1), to_string(q.a2), to_string(q.a3)}));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

QMatrix matrix_from_json(const ordered_json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw FormatError(path + ": expected {rows, cols, entries}");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw FormatError(path + ": rows/cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 0 || cols < 0) throw FormatError(path + ": negative dimension");
    const ordered_json& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw FormatError(path + ".entries: expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const ordered_json& row = entries[i];
        const std::string rpath = path + ".entries[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw FormatError(rpath + ": expected " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k) {
            const ordered_json& cell = row[k];
            const std::string cpath = rpath + "[" + std::to_string(k) + "]";
            if (!cell.is_array() || cell.size() != 4)
                throw FormatError(cpath + ": expected [a0,a1,a2,a3]");
            Rational coeff[4];
            for (int c = 0; c < 4; ++c) {
                if (!cell[c].is_string())
                    throw FormatError(cpath + "[" + std::to_string(c) +
                                      "]: expected a rational string");
                try {
                    coeff[c] = parse_rational(cell[c].get<std::string>());
                } catch (const FormatError& err) {
                    throw FormatError(cpath + "[" + std::to_string(c) + "]: " +
                                      err.what());
                }
            }
            m.at(i, k) = Quaternion(coeff[0], coeff[1], coeff[2], coeff[3]);
        }
    }
    return m;
}

ordered_json partition_to_json(const BlockPartition& p) {
    ordered_json j;
    j["m"] = {p.row.m1, p.row.m2, p.row.m3, p.row.m4,
              p.row.m5, p.row.m6, p.row.m7, p.row.m8};
    j["n"] = {p.col.m1, p.col.m2, p.col.m3, p.col.m4,
              p.col.m5, p.col.m6, p.col.m7, p.col.m8};
    j["t"] = p.t;
    j["row_layout"] = p.row_layout();
    j["col_layout"] = p.col_layout();
    return j;
}

ordered_json decomposition_to_json(const SevenDecomposition& d) {
    ordered_json j;
    j["partition"] = partition_to_json(d.partition);
    j["SA"] = matrix_to_json(d.SA);
    ordered_json t;
    t["P"] = matrix_to_json(d.P);
    t["Q"] = matrix_to_json(d.Q);
    t["T1"] = matrix_to_json(d.T1);
    t["T2"] = matrix_to_json(d.T2);
    t["T3"] = matrix_to_json(d.T3);
    t["V1"] = matrix_to_json(d.V1);
    t["V2"] = matrix_to_json(d.V2);
    t["V3"] = matrix_to_json(d.V3);
    j["transforms"] = std::move(t);
    return j;
}

ordered_json verify_report_to_json(const VerifyReport& rep) {
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
        ordered_json j;
        j["name"] = it.name;
        j["pass"] = it.pass;
        items.push_back(std::move(j));
    }
    ordered_json j;
    j["items"] = std::move(items);
    j["all_pass"] = rep.all_pass();
    return j;
}

ordered_json consistency_to_json(const ConsistencyReport& rep) {
    ordered_json j;
    j["consistent"] = rep.consistent;
    ordered_json failed = ordered_json::array();
    for (const auto& cond : rep.failed_conditions) {
        ordered_json c;
        c["condition"] = cond.name;
        c["offending_block"] = matrix_to_json(cond.residual);
        failed.push_back(std::move(c));
    }
    j["failed_conditions"] = std::move(failed);
    return j;
}

ordered_json grid_to_json(const GridSpec& g) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : g.cells) {
        ordered_json jrow = ordered_json::array();
        for (const Cell& cell : row) {
            ordered_json jc;
            if (cell.is_free()) {
                jc["free"] = cell.free_name;
            } else {
                ordered_json terms = ordered_json::array();
                for (const Term& t : cell.terms) {
                    ordered_json jt;
                    jt["sign"] = t.sign;
                    if (t.is_block)
                        jt["block"] = {t.bi, t.bj};
                    else
                        jt["free"] = t.free_ref;
                    terms.push_back(std::move(jt));
                }
                jc["terms"] = std::move(terms);
            }
            jrow.push_back(std::move(jc));
        }
        rows.push_back(std::move(jrow));
    }
    ordered_json j;
    j["row_sizes"] = g.row_sizes;
    j["col_sizes"] = g.col_sizes;
    j["cells"] = std::move(rows);
    return j;
}

namespace {

ordered_json slots_to_json(const std::vector<FreeSlot>& slots) {
    ordered_json j = ordered_json::array();
    for (const FreeSlot& s : slots) {
        ordered_json js;
        js["name"] = s.name;
        js["rows"] = s.rows;
        js["cols"] = s.cols;
        j.push_back(std::move(js));
    }
    return j;
}

}  // namespace

ordered_json family_to_json(const SolutionFamilyThree& fam) {
    ordered_json j;
    j["equation"] = "three";
    j["free_slots"] = slots_to_json(fam.free_slots);
    ordered_json grids;
    grids["Xhat"] = grid_to_json(fam.xhat);
    grids["Yhat"] = grid_to_json(fam.yhat);
    grids["Zhat"] = grid_to_json(fam.zhat);
    j["grids"] = std::move(grids);
    return j;
}

ordered_json family_to_json(const SolutionFamilyFour& fam) {
    ordered_json j;
    j["equation"] = "four";
    j["free_slots"] = slots_to_json(fam.free_slots);
    ordered_json grids;
    grids["Xhat"] = grid_to_json(fam.xhat);
    grids["What"] = grid_to_json(fam.what);
    grids["Yhat"] = grid_to_json(fam.yhat);
    grids["Zhat"] = grid_to_json(fam.zhat);
    j["grids"] = std::move(grids);
    return j;
}

ordered_json rank_range_report_to_json(const RankRangeReport& rep) {
    ordered_json j;
    j["equation"] = to_string(rep.eq);
    j["unknown"] = to_string(rep.unknown);
    j["min"] = rep.range.min;
    j["max"] = rep.range.max;
    ordered_json mx = ordered_json::array();
    for (const auto& t : rep.max_terms) {
        ordered_json jt;
        jt["name"] = t.name;
        jt["value"] = t.value;
        mx.push_back(std::move(jt));
    }
    j["max_terms"] = std::move(mx);
    ordered_json mn = ordered_json::array();
    for (const auto& t : rep.min_branches) {
        ordered_json jt;
        jt["name"] = t.name;
        jt["value"] = t.value;
        mn.push_back(std::move(jt));
    }
    j["min_branches"] = std::move(mn);
    return j;
}

ordered_json identity_report_to_json(const IdentityReport& rep) {
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
        ordered_json j;
        j["name"] = it.name;
        j["lhs"] = it.lhs;
        j["rhs"] = it.rhs;
        j["pass"] = it.pass;
        items.push_back(std::move(j));
    }
    ordered_json j;
    j["items"] = std::move(items);
    j["all_pass"] = rep.all_pass();
    return j;
}

}  // namespace qms
