#pragma once

#include "taquin/polyomino.hpp"

namespace taquin {

/// Chain kinds: lowercase letters demand strict steps, uppercase allow equal
/// row (E/e names the column behaviour... see the table in the README).
/// ne: strictly right, strictly above        se: strictly right, strictly below
/// NE: weakly right, weakly above (weighted) SE: weakly right, weakly below (weighted)
/// nE: strictly above, weakly right          Ne: strictly right, weakly above
/// sE: strictly below, weakly right          Se: strictly right, weakly below
enum class ChainKind { ne, se, NE, SE, nE, Ne, sE, Se };

const char* to_string(ChainKind k);
ChainKind parse_chain_kind(std::string_view s);

/// Multiplicity assignment on the cells of a moon polyomino.
class Filling {
public:
    Filling() = default;
    explicit Filling(MoonPolyomino poly);

    const MoonPolyomino& poly() const { return poly_; }
    int width() const { return poly_.width(); }
    int height() const { return poly_.height(); }
    int at(int c, int r) const;
    void set(int c, int r, int value);
    int mass() const;          // total multiplicity
    int support_size() const;  // number of non-zero cells

    bool is_zero_one() const;
    /// At most one 1 per row and per column, 0-1 entries.
    bool is_partial() const;
    /// Exactly one 1 per row and column; rectangles only.
    bool is_standard() const;

    auto operator<=>(const Filling&) const = default;

private:
    MoonPolyomino poly_;
    std::vector<int> e_;  // dense width x height, column-major per column
};

/// Row sums (bottom to top) and column sums (left to right).
std::pair<std::vector<int>, std::vector<int>> sums(const Filling& f);

/// Restriction to a column and row window; coordinates are renumbered so the
/// result is again anchored at (1,1).  An empty window gives an empty filling.
Filling restrict(const Filling& f, int c1, int c2, int r1, int r2);
Filling restrict(const Filling& f, const MaxRectangle& r);

/// Exact length of the longest chain of the given kind; chains must have
/// their full bounding box inside the polyomino.
int longest_chain(const Filling& f, ChainKind kind);

/// Standard filling of the permutation: column c carries row perm[c-1].
Filling permutation_filling(const std::vector<int>& perm);

/// Filling on a rectangle from row-major values, top row first.
Filling rectangle_filling(int width, int height, const std::vector<int>& rows_top_first);

Filling reflect(const Filling& f);  // about the line x = y

std::string to_grid(const Filling& f);  // top row first, '.'-padded
Filling parse_grid(std::string_view text);

bool kind_legal(const Filling& f, ChainKind kind);

} // namespace taquin
