#include "taquin/polyomino.hpp"

#include <algorithm>
#include <map>

namespace taquin {

namespace {

bool nested(std::pair<int, int> a, std::pair<int, int> b) {
    bool a_in_b = a.first >= b.first && a.second <= b.second;
    bool b_in_a = b.first >= a.first && b.second <= a.second;
    return a_in_b || b_in_a;
}

} // namespace

MoonPolyomino MoonPolyomino::from_columns(std::vector<std::pair<int, int>> cols) {
    MoonPolyomino m;
    m.cols_ = std::move(cols);
    if (m.cols_.empty()) return m;
    int min_bottom = m.cols_[0].first;
    for (auto [b, t] : m.cols_) {
        if (b > t) throw error("polyomino: empty column interval");
        min_bottom = std::min(min_bottom, b);
    }
    for (auto& [b, t] : m.cols_) {
        b -= min_bottom - 1;
        t -= min_bottom - 1;
    }
    for (int i = 0; i < m.width(); ++i)
        for (int j = i + 1; j < m.width(); ++j)
            if (!nested(m.cols_[i], m.cols_[j]))
                throw error("polyomino: columns " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " are incomparable");
    // row convexity: the columns covering each row must be contiguous
    for (int r = 1; r <= m.height(); ++r) {
        int first = 0, last = 0;
        for (int c = 1; c <= m.width(); ++c)
            if (m.cell(c, r)) {
                if (!first) first = c;
                last = c;
            }
        for (int c = first; c <= last && first; ++c)
            if (!m.cell(c, r))
                throw error("polyomino: row " + std::to_string(r) +
                            " is not contiguous at column " + std::to_string(c));
    }
    return m;
}

MoonPolyomino MoonPolyomino::validate(const std::set<std::pair<int, int>>& cells) {
    if (cells.empty()) return MoonPolyomino();
    int cmin = cells.begin()->first, cmax = cmin;
    for (auto [c, r] : cells) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    std::vector<std::pair<int, int>> cols;
    for (int c = cmin; c <= cmax; ++c) {
        int lo = 0, hi = 0, count = 0;
        for (auto [cc, r] : cells)
            if (cc == c) {
                if (!count) lo = hi = r;
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                ++count;
            }
        if (count == 0)
            throw error("polyomino: column " + std::to_string(c - cmin + 1) +
                        " is empty (column range must be contiguous)");
        if (count != hi - lo + 1)
            throw error("polyomino: column " + std::to_string(c - cmin + 1) +
                        " is not contiguous (convexity violation)");
        cols.emplace_back(lo, hi);
    }
    return from_columns(std::move(cols));
}

MoonPolyomino MoonPolyomino::rectangle(int width, int height) {
    if (width < 0 || height < 0 || (width == 0) != (height == 0))
        throw error("polyomino: bad rectangle dimensions");
    std::vector<std::pair<int, int>> cols(width, {1, height});
    return from_columns(std::move(cols));
}

MoonPolyomino MoonPolyomino::ferrers(const Partition& column_heights) {
    std::vector<std::pair<int, int>> cols;
    for (int c = 1; c <= column_heights.length(); ++c)
        cols.emplace_back(1, column_heights.part(c));
    return from_columns(std::move(cols));
}

MoonPolyomino MoonPolyomino::stack(const std::vector<int>& column_heights) {
    std::vector<std::pair<int, int>> cols;
    for (int h : column_heights) cols.emplace_back(1, h);
    return from_columns(std::move(cols));
}

int MoonPolyomino::height() const {
    int h = 0;
    for (auto [b, t] : cols_) h = std::max(h, t);
    return h;
}

int MoonPolyomino::cells() const {
    int n = 0;
    for (auto [b, t] : cols_) n += t - b + 1;
    return n;
}

bool MoonPolyomino::contains_box(int c1, int c2, int r1, int r2) const {
    for (int c = c1; c <= c2; ++c) {
        if (c < 1 || c > width()) return false;
        if (r1 < bottom(c) || r2 > top(c)) return false;
    }
    return c1 <= c2 && r1 <= r2;
}

bool MoonPolyomino::is_rectangle() const {
    if (empty()) return false;
    for (int c = 1; c <= width(); ++c)
        if (bottom(c) != 1 || top(c) != height()) return false;
    return true;
}

Partition content(const MoonPolyomino& m) {
    std::vector<int> heights;
    for (int c = 1; c <= m.width(); ++c) heights.push_back(m.col_height(c));
    std::sort(heights.rbegin(), heights.rend());
    return Partition(std::move(heights));
}

MoonClass classify(const MoonPolyomino& m) {
    bool stack = true;
    for (int c = 1; c <= m.width(); ++c)
        if (m.bottom(c) != 1) stack = false;
    if (!stack) return MoonClass::generic_moon;
    for (int c = 2; c <= m.width(); ++c)
        if (m.col_height(c) > m.col_height(c - 1)) return MoonClass::stack;
    return MoonClass::ferrers;
}

std::optional<MoonPolyomino> reorder_columns(const MoonPolyomino& m,
                                             const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != m.width())
        throw error("reorder: permutation size mismatch");
    std::vector<std::pair<int, int>> cols(m.width());
    std::vector<bool> hit(m.width(), false);
    for (int c = 1; c <= m.width(); ++c) {
        int dst = sigma[c - 1];
        if (dst < 1 || dst > m.width() || hit[dst - 1])
            throw error("reorder: not a permutation");
        hit[dst - 1] = true;
        cols[dst - 1] = {m.bottom(c), m.top(c)};
    }
    try {
        return MoonPolyomino::from_columns(std::move(cols));
    } catch (const error&) {
        return std::nullopt;
    }
}

MoonPolyomino reflect(const MoonPolyomino& m) {
    std::set<std::pair<int, int>> cells;
    for (int c = 1; c <= m.width(); ++c)
        for (int r = m.bottom(c); r <= m.top(c); ++r) cells.insert({r, c});
    return MoonPolyomino::validate(cells);
}

std::vector<MaxRectangle> maximal_rectangles(const MoonPolyomino& m) {
    std::vector<MaxRectangle> all;
    for (int c1 = 1; c1 <= m.width(); ++c1)
        for (int c2 = c1; c2 <= m.width(); ++c2)
            for (int r1 = 1; r1 <= m.height(); ++r1)
                for (int r2 = r1; r2 <= m.height(); ++r2)
                    if (m.contains_box(c1, c2, r1, r2))
                        all.push_back({c1, c2, r1, r2});
    std::vector<MaxRectangle> out;
    for (const auto& a : all) {
        bool maximal = true;
        for (const auto& b : all)
            if (a != b && b.c1 <= a.c1 && a.c2 <= b.c2 && b.r1 <= a.r1 && a.r2 <= b.r2)
                maximal = false;
        if (maximal) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void extend_interval_chain(std::vector<std::pair<int, int>>& cols, int budget,
                           int max_cells, std::vector<MoonPolyomino>& out) {
    if (!cols.empty()) {
        try {
            out.push_back(MoonPolyomino::from_columns(cols));
        } catch (const error&) {
            return;  // non-moon prefix cannot become moon by appending
        }
    }
    if (budget <= 0) return;
    for (int b = 1; b <= max_cells; ++b) {
        for (int t = b; t - b + 1 <= budget && t <= max_cells; ++t) {
            bool ok = true;
            for (auto [pb, pt] : cols)
                if (!nested({b, t}, {pb, pt})) ok = false;
            if (!ok) continue;
            cols.emplace_back(b, t);
            extend_interval_chain(cols, budget - (t - b + 1), max_cells, out);
            cols.pop_back();
        }
    }
}

} // namespace

std::vector<MoonPolyomino> enumerate_moon_polyominoes(int max_cells) {
    std::vector<MoonPolyomino> out;
    std::vector<std::pair<int, int>> cols;
    extend_interval_chain(cols, max_cells, max_cells, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_grid(const MoonPolyomino& m) {
    std::string out;
    for (int r = m.height(); r >= 1; --r) {
        for (int c = 1; c <= m.width(); ++c) out += m.cell(c, r) ? 'o' : '.';
        out += '\n';
    }
    return out;
}

} // namespace taquin
