#pragma once

#include "taquin/filling.hpp"

namespace taquin {

/// Maximal cardinality of a union of k chains of the given kind in a
/// rectangular filling, by exhaustive branch-and-bound.  Pairwise-disjoint
/// kinds (NE, SE, nE, Ne, sE, Se and ne/se on 0-1 fillings) assign whole
/// cells; multiset kinds (ne, se with multiplicities) split entries into
/// units, each usable in at most one chain.  Independent of growth diagrams.
long greene_oracle(const Filling& f, ChainKind kind, int k, int cap = 12);

/// Full Greene shape: part k is oracle(k) - oracle(k-1).
Partition greene_shape_oracle(const Filling& f, ChainKind kind, int cap = 12);

} // namespace taquin
