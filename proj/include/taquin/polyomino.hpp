#pragma once

#include "taquin/partition.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace taquin {

/// Inclusion-maximal rectangle inside a moon polyomino: columns c1..c2,
/// rows r1..r2, all 1-based inclusive.
struct MaxRectangle {
    int c1 = 0, c2 = 0, r1 = 0, r2 = 0;
    int width() const { return c2 - c1 + 1; }
    int height() const { return r2 - r1 + 1; }
    auto operator<=>(const MaxRectangle&) const = default;
};

enum class MoonClass { generic_moon, stack, ferrers };

/// Convex intersection-free polyomino stored as one row interval per column.
/// Columns are numbered 1..width with no gaps; rows grow upward and the
/// lowest cell sits in row 1.
class MoonPolyomino {
public:
    MoonPolyomino() = default;  // empty polyomino

    /// Builds from column intervals (bottom, top), already left-to-right.
    static MoonPolyomino from_columns(std::vector<std::pair<int, int>> cols);
    /// Validates an arbitrary cell set (column, row); reports the offending
    /// columns or rows on failure.
    static MoonPolyomino validate(const std::set<std::pair<int, int>>& cells);
    static MoonPolyomino rectangle(int width, int height);
    /// Ferrers shape with the given column heights (weakly decreasing).
    static MoonPolyomino ferrers(const Partition& column_heights);
    /// Stack polyomino with the given column heights, in the given order.
    static MoonPolyomino stack(const std::vector<int>& column_heights);

    int width() const { return static_cast<int>(cols_.size()); }
    int height() const;
    int cells() const;
    bool empty() const { return cols_.empty(); }
    int bottom(int c) const { return cols_[c - 1].first; }
    int top(int c) const { return cols_[c - 1].second; }
    int col_height(int c) const { return top(c) - bottom(c) + 1; }
    bool cell(int c, int r) const {
        return c >= 1 && c <= width() && r >= bottom(c) && r <= top(c);
    }
    bool contains_box(int c1, int c2, int r1, int r2) const;
    bool is_rectangle() const;

    auto operator<=>(const MoonPolyomino&) const = default;

private:
    std::vector<std::pair<int, int>> cols_;
};

Partition content(const MoonPolyomino& m);
MoonClass classify(const MoonPolyomino& m);

/// sigma[i] is the 1-based destination of column i+1.  Returns the reordered
/// polyomino when it is moon, nullopt otherwise.
std::optional<MoonPolyomino> reorder_columns(const MoonPolyomino& m,
                                             const std::vector<int>& sigma);

MoonPolyomino reflect(const MoonPolyomino& m);

std::vector<MaxRectangle> maximal_rectangles(const MoonPolyomino& m);

/// All moon polyominoes with up to max_cells cells, translation-normalized.
std::vector<MoonPolyomino> enumerate_moon_polyominoes(int max_cells);

std::string to_grid(const MoonPolyomino& m);  // top row first, 'o' cells

} // namespace taquin
