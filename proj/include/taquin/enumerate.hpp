#pragma once

#include "taquin/rsk.hpp"

#include <functional>
#include <map>
#include <optional>

namespace taquin {

/// Lambda statistic: Greene partition of every maximal rectangle, keyed by
/// (height, width) which determines the rectangle in a moon polyomino.
using LambdaStatistic = std::map<std::pair<int, int>, Partition>;

LambdaStatistic lambda_statistic(const Filling& f, ChainKind kind);

/// Constraints of a filling census.  Unset fields are unconstrained.
struct CountQuery {
    ChainKind kind = ChainKind::ne;
    bool zero_one = true;
    std::optional<int> longest;                  // exact longest-chain value
    std::optional<std::vector<int>> row_sums;    // bottom to top
    std::optional<std::vector<int>> col_sums;    // left to right
    std::optional<int> total;                    // total mass
    std::optional<int> nonzero;                  // number of non-zero entries
    std::optional<std::vector<int>> row_counts;  // non-zero entries per row
    int max_multiplicity = 9;                    // per-cell bound for arbitrary fillings
};

struct EnumerationCaps {
    int max_cells_zero_one = 22;
    int max_mass_arbitrary = 10;
};

/// Streams every filling of M matching q exactly once, in lexicographic grid
/// order.  Throws when the instance exceeds the caps.
void enumerate_fillings(const MoonPolyomino& m, const CountQuery& q,
                        const std::function<void(const Filling&)>& yield,
                        const EnumerationCaps& caps = {});

long count_fillings(const MoonPolyomino& m, const CountQuery& q,
                    const EnumerationCaps& caps = {});

/// Census rows: (longest value, optional row sums) -> count, deterministic
/// lexicographic bucket order.
std::map<std::pair<int, std::vector<int>>, long>
census(const MoonPolyomino& m, const CountQuery& q, bool by_rows,
       const EnumerationCaps& caps = {});

/// All partial fillings of a w x h rectangle.
void enumerate_partial_fillings(int width, int height,
                                const std::function<void(const Filling&)>& yield);

void enumerate_permutations(int n, const std::function<void(const std::vector<int>&)>& yield);

/// All cell-mode chains with steps of size at most one, length <= max_steps,
/// at most max_cells total cells.
void enumerate_cell_chains(int max_steps, int max_cells,
                           const std::function<void(const PartitionChain&)>& yield);

/// All hstrip-mode chains of the given length with at most max_cells cells.
void enumerate_hstrip_chains(int steps, int max_cells,
                             const std::function<void(const PartitionChain&)>& yield);

/// All standard tableaux with exactly n cells.
void enumerate_standard_tableaux(int n, const std::function<void(const Tableau&)>& yield);

} // namespace taquin
