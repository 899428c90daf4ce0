#pragma once

#include "taquin/tableau.hpp"
#include "taquin/transform.hpp"

namespace taquin {

/// Knuth transformation on three adjacent columns of a partial filling.
/// `column` is the leftmost column of the affected triple.
struct KnuthMove {
    enum class Kind { first, second };
    Kind kind = Kind::first;
    int column = 0;
    auto operator<=>(const KnuthMove&) const = default;
};

/// Equal right-border chains under the variant.
bool knuth_equivalent(const Filling& f, const Filling& g, RskVariant v);
/// Equal top-border chains under the variant.
bool dual_knuth_equivalent(const Filling& f, const Filling& g, RskVariant v);

/// Applies the move, throws when the three columns do not match a pattern.
Filling apply_knuth_move(const Filling& f, const KnuthMove& m);

/// All applicable moves, columns left to right, first kind before second.
std::vector<KnuthMove> find_knuth_moves(const Filling& f);

/// A 3-column partial filling with 3 entries whose growth shape equals 21.
bool triangle_shape(const Filling& f);

/// Entries k-1, k, k+1 of a partial tableau are shape equivalent to a
/// triangle: jdt applied k-2 times leaves 1,2,3 in an L of shape 21.
bool tableau_triangle_equivalent(const Tableau& t, int k);

std::string to_json(const KnuthMove& m);

} // namespace taquin
