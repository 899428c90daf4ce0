#include "taquin/transform.hpp"

#include <algorithm>

namespace taquin {

Filling jbar(const Filling& f, RskVariant v, JbarOrientation o) {
    if (f.poly().empty()) return f;
    RskPair pq = rsk_correspond(f, v);
    if (o == JbarOrientation::top)
        return rsk_invert(pq.p, promotion(pq.q), v);
    return rsk_invert(promotion(pq.p), pq.q, v);
}

Filling jbar_inverse(const Filling& f, RskVariant v, JbarOrientation o) {
    if (f.poly().empty()) return f;
    RskPair pq = rsk_correspond(f, v);
    if (o == JbarOrientation::top)
        return rsk_invert(pq.p, promotion_inverse(pq.q), v);
    return rsk_invert(promotion_inverse(pq.p), pq.q, v);
}

Filling apply_jbar_rect(const Filling& f, const MaxRectangle& rect, RskVariant v,
                        bool inverse) {
    if (!f.poly().contains_box(rect.c1, rect.c2, rect.r1, rect.r2))
        throw error("jbar rect: rectangle not inside the polyomino");
    Filling sub = restrict(f, rect);
    Filling moved = inverse ? jbar_inverse(sub, v) : jbar(sub, v);
    Filling out = f;
    for (int c = rect.c1; c <= rect.c2; ++c)
        for (int r = rect.r1; r <= rect.r2; ++r)
            out.set(c, r, moved.at(c - rect.c1 + 1, r - rect.r1 + 1));
    return out;
}

int moon_move_target(const MoonPolyomino& m, int c1) {
    if (c1 < 1 || c1 > m.width()) throw error("moon move: column out of range");
    int c2 = c1;
    for (int c = c1 + 1; c <= m.width(); ++c)
        if (m.bottom(c) <= m.bottom(c1) && m.top(c) >= m.top(c1)) c2 = c;
    return c2;
}

namespace {

Filling relocate(const Filling& f, const MaxRectangle& rect, const Filling& moved,
                 const std::vector<int>& sigma) {
    auto m2 = reorder_columns(f.poly(), sigma);
    if (!m2) throw error("moon move: reordered polyomino is not moon");
    Filling out(*m2);
    for (int c = 1; c <= f.width(); ++c)
        for (int r = f.poly().bottom(c); r <= f.poly().top(c); ++r) {
            if (c >= rect.c1 && c <= rect.c2 && r >= rect.r1 && r <= rect.r2) continue;
            out.set(sigma[c - 1], r, f.at(c, r));
        }
    for (int c = rect.c1; c <= rect.c2; ++c)
        for (int r = rect.r1; r <= rect.r2; ++r)
            out.set(c, r, moved.at(c - rect.c1 + 1, r - rect.r1 + 1));
    return out;
}

} // namespace

Filling moon_move(const Filling& f, int c1, RskVariant v) {
    const MoonPolyomino& m = f.poly();
    int c2 = moon_move_target(m, c1);
    if (c2 == c1)
        throw error("moon move: column " + std::to_string(c1) +
                    " is not contained in any column to its right");
    MaxRectangle rect{c1, c2, m.bottom(c1), m.top(c1)};
    Filling moved = jbar(restrict(f, rect), v);
    std::vector<int> sigma(m.width());
    for (int c = 1; c <= m.width(); ++c) {
        if (c == c1) sigma[c - 1] = c2;
        else if (c > c1 && c <= c2) sigma[c - 1] = c - 1;
        else sigma[c - 1] = c;
    }
    return relocate(f, rect, moved, sigma);
}

Filling moon_move_inverse(const Filling& f, int c2, RskVariant v) {
    const MoonPolyomino& m = f.poly();
    if (c2 < 1 || c2 > m.width()) throw error("moon move: column out of range");
    int c1 = c2;
    for (int c = c2 - 1; c >= 1; --c)
        if (m.bottom(c) <= m.bottom(c2) && m.top(c) >= m.top(c2)) c1 = c;
    if (c1 == c2)
        throw error("moon move: column " + std::to_string(c2) +
                    " is not contained in any column to its left");
    MaxRectangle rect{c1, c2, m.bottom(c2), m.top(c2)};
    Filling moved = jbar_inverse(restrict(f, rect), v);
    std::vector<int> sigma(m.width());
    for (int c = 1; c <= m.width(); ++c) {
        if (c == c2) sigma[c - 1] = c1;
        else if (c >= c1 && c < c2) sigma[c - 1] = c + 1;
        else sigma[c - 1] = c;
    }
    return relocate(f, rect, moved, sigma);
}

namespace {

Filling sort_columns(Filling g, RskVariant v) {
    for (;;) {
        int pick = 0;
        for (int c = 1; c <= g.width() && !pick; ++c)
            for (int j = c + 1; j <= g.width(); ++j)
                if (g.poly().col_height(j) > g.poly().col_height(c)) {
                    pick = c;
                    break;
                }
        if (!pick) return g;
        g = moon_move(g, pick, v);
    }
}

ChainKind reflect_kind(ChainKind k) {
    switch (k) {
    case ChainKind::ne: return ChainKind::ne;
    case ChainKind::NE: return ChainKind::NE;
    case ChainKind::nE: return ChainKind::Ne;
    case ChainKind::Ne: return ChainKind::nE;
    default:
        throw error(std::string("to_ferrers: unsupported chain kind ") + to_string(k));
    }
}

} // namespace

Filling to_ferrers(const Filling& f, ChainKind kind) {
    RskVariant v = variant_for_kind(kind);
    RskVariant v_reflected = variant_for_kind(reflect_kind(kind));
    Filling g = sort_columns(f, v);
    g = reflect(g);
    g = sort_columns(g, v_reflected);
    g = reflect(g);
    if (!g.poly().empty() && classify(g.poly()) != MoonClass::ferrers)
        throw error("to_ferrers: pipeline did not reach a Ferrers shape");
    return g;
}

Filling reverse_columns(const Filling& f) {
    if (!f.poly().is_rectangle()) throw error("reverse_columns: rectangle required");
    Filling out(f.poly());
    for (int c = 1; c <= f.width(); ++c)
        for (int r = 1; r <= f.height(); ++r)
            out.set(f.width() + 1 - c, r, f.at(c, r));
    return out;
}

Filling ev_t(const Filling& f, RskVariant v) {
    if (f.poly().empty()) return f;
    if (classify(f.poly()) != MoonClass::ferrers)
        throw error("ev_t: Ferrers shape required");
    Filling g = f;
    const int w = f.width();
    for (int k = 1; k <= w - 1; ++k) {
        int h = g.poly().col_height(w);
        for (int c = k; c <= w; ++c) h = std::min(h, g.poly().col_height(c));
        MaxRectangle rect{k, w, 1, h};
        Filling moved = jbar_inverse(restrict(g, rect), v);
        std::vector<int> sigma(w);
        for (int c = 1; c <= w; ++c) {
            if (c == w) sigma[c - 1] = k;
            else if (c >= k) sigma[c - 1] = c + 1;
            else sigma[c - 1] = c;
        }
        g = relocate(g, rect, moved, sigma);
    }
    return g;
}

namespace {

// corner grid of a Ferrers-shaped growth diagram; row_width(r) = number of
// columns of height >= r
struct FerrersCorners {
    std::vector<int> row_width;  // index 1..height
    int height = 0;
    std::vector<std::vector<Partition>> corner;  // [j][i], j = 0..height

    FerrersCorners(const MoonPolyomino& m) {
        height = m.height();
        row_width.assign(height + 1, 0);
        for (int r = 1; r <= height; ++r) {
            int w = 0;
            for (int c = 1; c <= m.width(); ++c)
                if (m.col_height(c) >= r) ++w;
            row_width[r] = w;
        }
        corner.resize(height + 1);
        for (int j = 0; j <= height; ++j)
            corner[j].resize(row_width[std::max(j, 1)] + 1);
    }
};

} // namespace

std::vector<Partition> ferrers_border_labels(const Filling& f) {
    if (f.poly().empty()) return {Partition()};
    if (classify(f.poly()) != MoonClass::ferrers)
        throw error("border labels: Ferrers shape required");
    if (!f.is_partial()) throw error("border labels: partial filling required");
    FerrersCorners g(f.poly());
    const int H = g.height;
    for (int r = 1; r <= H; ++r)
        for (int c = 1; c <= g.row_width[r]; ++c)
            g.corner[r][c] = forward_rule(g.corner[r - 1][c - 1], g.corner[r][c - 1],
                                          g.corner[r - 1][c], f.at(c, r) > 0);
    std::vector<Partition> rim;
    for (int i = 0; i <= g.row_width[H]; ++i) rim.push_back(g.corner[H][i]);
    for (int r = H - 1; r >= 0; --r)
        for (int i = g.row_width[r + 1]; i <= g.row_width[std::max(r, 1)]; ++i)
            rim.push_back(g.corner[r][i]);
    return rim;
}

Filling e_transform(const Filling& f, RskVariant v) {
    if (f.poly().empty()) return f;
    if (classify(f.poly()) != MoonClass::ferrers)
        throw error("e_transform: Ferrers shape required");
    if (!f.is_partial()) {
        // standardise, transform the partial filling, contract back
        Filling fstd = standardize(f, v);
        Filling estd = e_transform(fstd, v);
        const auto [row_mass, col_mass] = sums(f);
        std::vector<int> roff(1, 0), coff(1, 0);
        for (int x : row_mass) roff.push_back(roff.back() + x);
        for (int x : col_mass) coff.push_back(coff.back() + x);
        auto locate = [](const std::vector<int>& offsets, int pos) {
            for (size_t i = 1; i < offsets.size(); ++i)
                if (pos <= offsets[i]) return static_cast<int>(i);
            throw error("e_transform: position out of range");
        };
        Filling out(f.poly());
        for (int c = 1; c <= estd.width(); ++c)
            for (int r = 1; r <= estd.height(); ++r)
                if (estd.at(c, r)) {
                    int oc = locate(coff, c), orow = locate(roff, r);
                    if (!out.poly().cell(oc, orow))
                        throw error("e_transform: transposed borders inconsistent");
                    out.set(oc, orow, out.at(oc, orow) + 1);
                }
        if (standardize(out, v) != estd)
            throw error("e_transform: transposed borders inconsistent");
        return out;
    }

    FerrersCorners g(f.poly());
    const int H = g.height;
    // forward labels
    for (int r = 1; r <= H; ++r)
        for (int c = 1; c <= g.row_width[r]; ++c)
            g.corner[r][c] = forward_rule(g.corner[r - 1][c - 1], g.corner[r][c - 1],
                                          g.corner[r - 1][c], f.at(c, r) > 0);
    // transpose the border labels in place
    FerrersCorners e(f.poly());
    for (int i = 0; i <= g.row_width[std::max(H, 1)]; ++i)
        e.corner[H][i] = transpose(g.corner[H][i]);
    for (int r = H - 1; r >= 0; --r)
        for (int i = g.row_width[r + 1]; i <= g.row_width[std::max(r, 1)]; ++i)
            e.corner[r][i] = transpose(g.corner[r][i]);
    // backward pass
    Filling out(f.poly());
    for (int r = H; r >= 1; --r)
        for (int c = g.row_width[r]; c >= 1; --c) {
            auto [lambda, cross] =
                backward_rule(e.corner[r][c - 1], e.corner[r - 1][c], e.corner[r][c]);
            e.corner[r - 1][c - 1] = lambda;
            if (cross) out.set(c, r, 1);
        }
    for (int i = 0; i <= g.row_width[1]; ++i)
        if (!e.corner[0][i].empty())
            throw error("e_transform: transposed borders inconsistent");
    for (int r = 0; r <= H; ++r)
        if (!e.corner[r][0].empty())
            throw error("e_transform: transposed borders inconsistent");
    return out;
}

} // namespace taquin
