#pragma once

#include "taquin/jdt.hpp"
#include "taquin/rsk.hpp"

namespace taquin {

/// Which border chain promotion acts on.  The theorem suites all use `top`
/// (right border fixed, top border promoted, column sums shifted left); the
/// `right` orientation is exposed for experimentation.
enum class JbarOrientation { top, right };

/// Promotion on rectangular fillings: the filling corresponding to
/// (P, promotion(Q)) under the given variant.
Filling jbar(const Filling& f, RskVariant v,
             JbarOrientation o = JbarOrientation::top);
Filling jbar_inverse(const Filling& f, RskVariant v,
                     JbarOrientation o = JbarOrientation::top);

/// jbar applied to the entries inside a rectangle; the rest stays.
Filling apply_jbar_rect(const Filling& f, const MaxRectangle& rect, RskVariant v,
                        bool inverse = false);

/// Relocates column c1 past the maximal rectangle of its height, applying
/// jbar inside the rectangle; returns the filling on the reordered polyomino.
Filling moon_move(const Filling& f, int c1, RskVariant v);
/// Inverse: relocates column c2 back to the front of its rectangle.
Filling moon_move_inverse(const Filling& f, int c2, RskVariant v);

/// The last column of the maximal rectangle of column c1's height; equals c1
/// when the column is not movable.
int moon_move_target(const MoonPolyomino& m, int c1);

/// Column-sorting bijection onto the Ferrers shape of the content.
Filling to_ferrers(const Filling& f, ChainKind kind);

/// Reverses the column order of a standard filling; corresponds to
/// (P^t, ev(Q)^t).
Filling reverse_columns(const Filling& f);

/// Iterated jbar-inverse over the shrinking full-width rectangles of a
/// Ferrers filling; lands on the reversed polyomino.
Filling ev_t(const Filling& f, RskVariant v);

/// Border-transposing bijection on fillings of Ferrers shapes.
Filling e_transform(const Filling& f, RskVariant v);

/// Rim labels of a partial filling of a Ferrers shape, read from the left
/// end of the top row down to the bottom-right corner.
std::vector<Partition> ferrers_border_labels(const Filling& f);

} // namespace taquin
