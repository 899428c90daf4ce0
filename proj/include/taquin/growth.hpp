#pragma once

#include "taquin/chain.hpp"
#include "taquin/filling.hpp"

#include <string>

namespace taquin {

/// Local forward rule F1-F4 on one square: lambda bottom-left, mu top-left,
/// nu bottom-right; returns the top-right partition.
Partition forward_rule(const Partition& lambda, const Partition& mu,
                       const Partition& nu, bool cross);

/// Local backward rule B1-B4: returns (lambda, cross).
std::pair<Partition, bool> backward_rule(const Partition& mu, const Partition& nu,
                                         const Partition& rho);

/// Corner-labelled rectangle; corner(i, j) has i cells to its left and j
/// cells below it.
class GrowthDiagram {
public:
    GrowthDiagram(Filling filling);  // applies F1-F4; filling must be partial

    int width() const { return width_; }
    int height() const { return height_; }
    const Partition& corner(int i, int j) const {
        return corners_[static_cast<size_t>(i) * (height_ + 1) + j];
    }
    const Filling& filling() const { return filling_; }

    /// Right border, bottom to top.
    PartitionChain p_chain() const;
    /// Top border, left to right.
    PartitionChain q_chain() const;

    std::string to_json() const;

private:
    friend GrowthDiagram ungrow(const PartitionChain&, const PartitionChain&);
    GrowthDiagram() = default;
    Partition& corner_mut(int i, int j) {
        return corners_[static_cast<size_t>(i) * (height_ + 1) + j];
    }
    int width_ = 0, height_ = 0;
    Filling filling_;
    std::vector<Partition> corners_;
};

GrowthDiagram grow(const Filling& f);

/// Reconstructs the unique partial filling whose growth diagram has borders
/// P (right) and Q (top); inverse of grow.
GrowthDiagram ungrow(const PartitionChain& p, const PartitionChain& q);

} // namespace taquin
