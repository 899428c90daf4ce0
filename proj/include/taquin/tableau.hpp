#pragma once

#include "taquin/chain.hpp"

namespace taquin {

enum class TableauKind { standard, partial, semistandard, transposed_semistandard };

/// Young tableau in French convention: rows[0] is the bottom row.
struct Tableau {
    std::vector<std::vector<int>> rows;
    TableauKind kind = TableauKind::partial;

    Partition shape() const;
    int cells() const;
    /// Entry at (row r, column c), 1-based; 0 where no cell.
    int at(int r, int c) const;
    auto operator<=>(const Tableau&) const = default;
};

void validate(const Tableau& t);

/// Entry i fills the cells of seq[i] \ seq[i-1]; kind follows the mode.
Tableau chain_to_tableau(const PartitionChain& c);
PartitionChain tableau_to_chain(const Tableau& t);

/// Sliding jeu de taquin: decrement all entries, slide the vacated cells out.
/// Partial tableaux use the single-hole rule, semistandard tableaux the
/// multi-hole rule; transposed semistandard tableaux go through transposition.
Tableau jdt_slide(const Tableau& t);

Tableau transpose(const Tableau& t);

std::string to_string(const Tableau& t);  // one row per line, bottom row first
Tableau parse_tableau(std::string_view text);

} // namespace taquin
