#include "qms/pattern.hpp"

#include <string>

#include "qms/error.hpp"

namespace qms {

namespace {

const QMatrix& pick(const SevenInput& in, Tok t) {
    switch (t) {
        case Tok::A: return in.A;
        case Tok::B: return in.B;
        case Tok::C: return in.C;
        case Tok::D: return in.D;
        case Tok::E: return in.E;
        case Tok::F: return in.F;
        case Tok::G: return in.G;
        default: throw PatternError("zero token has no matrix");
    }
}

}  // namespace

QMatrix assemble(const RankPattern& p, const SevenInput& in) {
    const int nrows = static_cast<int>(p.grid.size());
    if (nrows == 0) throw PatternError("empty pattern");
    const int ncols = static_cast<int>(p.grid.front().size());
    for (const auto& row : p.grid)
        if (static_cast<int>(row.size()) != ncols) throw PatternError("ragged pattern grid");

    std::vector<int> heights(nrows, -1), widths(ncols, -1);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) {
            if (p.grid[i][j] == Tok::O) continue;
            const QMatrix& m = pick(in, p.grid[i][j]);
            if (heights[i] >= 0 && heights[i] != m.rows())
                throw PatternError("row " + std::to_string(i) + " height conflict");
            if (widths[j] >= 0 && widths[j] != m.cols())
                throw PatternError("column " + std::to_string(j) + " width conflict");
            heights[i] = m.rows();
            widths[j] = m.cols();
        }
    for (int i = 0; i < nrows; ++i)
        if (heights[i] < 0)
            throw PatternError("pattern row " + std::to_string(i) + " has no letter");
    for (int j = 0; j < ncols; ++j)
        if (widths[j] < 0)
            throw PatternError("pattern column " + std::to_string(j) + " has no letter");

    int total_r = 0, total_c = 0;
    for (int h : heights) total_r += h;
    for (int w : widths) total_c += w;
    QMatrix out(total_r, total_c);
    int r0 = 0;
    for (int i = 0; i < nrows; ++i) {
        int c0 = 0;
        for (int j = 0; j < ncols; ++j) {
            if (p.grid[i][j] != Tok::O) out.paste(r0, c0, pick(in, p.grid[i][j]));
            c0 += widths[j];
        }
        r0 += heights[i];
    }
    return out;
}

int pattern_rank(const RankPattern& p, const SevenInput& in) {
    return rank(assemble(p, in));
}

}  // namespace qms
