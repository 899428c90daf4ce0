#include "taquin/knuth.hpp"

#include <array>
#include <optional>

#include <json.hpp>

namespace taquin {

bool knuth_equivalent(const Filling& f, const Filling& g, RskVariant v) {
    if (f.width() != g.width() || f.height() != g.height())
        throw error("knuth equivalence: dimension mismatch");
    return rsk_correspond(f, v).p == rsk_correspond(g, v).p;
}

bool dual_knuth_equivalent(const Filling& f, const Filling& g, RskVariant v) {
    if (f.width() != g.width() || f.height() != g.height())
        throw error("knuth equivalence: dimension mismatch");
    return rsk_correspond(f, v).q == rsk_correspond(g, v).q;
}

namespace {

// rows of the single crosses in columns k, k+1, k+2 (leftmost k); 0 marks an
// empty column or more than one cross
std::array<int, 3> triple_rows(const Filling& f, int k) {
    std::array<int, 3> rows{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        int c = k + i, found = 0;
        for (int r = 1; r <= f.height(); ++r)
            if (f.at(c, r) > 0) {
                if (f.at(c, r) > 1 || found) return {0, 0, 0};
                found = r;
            }
        rows[i] = found;
    }
    return rows;
}

std::optional<KnuthMove::Kind> pattern_kind(const std::array<int, 3>& rows) {
    auto [a, b, c] = rows;
    if (!a || !b || !c) return std::nullopt;
    // first kind: the left column sits in the middle
    if ((c < a && a < b) || (b < a && a < c)) return KnuthMove::Kind::first;
    // second kind: the right column sits in the middle
    if ((a < c && c < b) || (b < c && c < a)) return KnuthMove::Kind::second;
    return std::nullopt;
}

} // namespace

Filling apply_knuth_move(const Filling& f, const KnuthMove& m) {
    if (!f.poly().is_rectangle() || !f.is_partial())
        throw error("knuth move: partial rectangular filling required");
    int k = m.column;
    if (k < 1 || k + 2 > f.width())
        throw error("knuth move: columns out of range");
    auto rows = triple_rows(f, k);
    auto kind = pattern_kind(rows);
    if (!kind || *kind != m.kind)
        throw error("knuth move: pattern mismatch at columns " + std::to_string(k) +
                    ".." + std::to_string(k + 2));
    Filling out = f;
    int ca, cb;  // the two columns whose crosses swap rows
    if (m.kind == KnuthMove::Kind::first) {
        ca = k + 1;
        cb = k + 2;
    } else {
        ca = k;
        cb = k + 1;
    }
    int ra = 0, rb = 0;
    for (int r = 1; r <= f.height(); ++r) {
        if (f.at(ca, r)) ra = r;
        if (f.at(cb, r)) rb = r;
    }
    out.set(ca, ra, 0);
    out.set(cb, rb, 0);
    out.set(ca, rb, 1);
    out.set(cb, ra, 1);
    return out;
}

std::vector<KnuthMove> find_knuth_moves(const Filling& f) {
    if (!f.poly().is_rectangle() || !f.is_partial())
        throw error("knuth moves: partial rectangular filling required");
    std::vector<KnuthMove> out;
    for (int k = 1; k + 2 <= f.width(); ++k) {
        auto kind = pattern_kind(triple_rows(f, k));
        if (kind) out.push_back({*kind, k});
    }
    return out;
}

bool triangle_shape(const Filling& f) {
    if (f.width() != 3)
        throw error("triangle shape: exactly three columns required");
    if (!f.is_partial() || f.mass() != 3)
        throw error("triangle shape: three single crosses required");
    return shape_of(f, RskVariant::rsk) == Partition({2, 1});
}

bool tableau_triangle_equivalent(const Tableau& t, int k) {
    if (k < 2) throw error("triangle equivalence: needs entries k-1,k,k+1 with k >= 2");
    Tableau cur = t;
    for (int i = 0; i < k - 2; ++i) cur = jdt_slide(cur);
    // entries 1,2,3 must now sit as (1 3 / 2) or (1 2 / 3)
    int r1 = 0, c1 = 0, r2 = 0, c2 = 0, r3 = 0, c3 = 0;
    for (int r = 1; r <= static_cast<int>(cur.rows.size()); ++r)
        for (int c = 1; c <= static_cast<int>(cur.rows[r - 1].size()); ++c) {
            int e = cur.at(r, c);
            if (e == 1) r1 = r, c1 = c;
            if (e == 2) r2 = r, c2 = c;
            if (e == 3) r3 = r, c3 = c;
        }
    if (!r1 || !r2 || !r3) return false;
    bool l_shape_a = r1 == 1 && c1 == 1 && r2 == 2 && c2 == 1 && r3 == 1 && c3 == 2;
    bool l_shape_b = r1 == 1 && c1 == 1 && r2 == 1 && c2 == 2 && r3 == 2 && c3 == 1;
    return l_shape_a || l_shape_b;
}

std::string to_json(const KnuthMove& m) {
    nlohmann::json j;
    j["kind"] = m.kind == KnuthMove::Kind::first ? "first" : "second";
    j["k"] = m.column;
    return j.dump();
}

} // namespace taquin
