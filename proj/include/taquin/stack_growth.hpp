#pragma once

#include "taquin/rsk.hpp"

namespace taquin {

/// Label of one rim corner of a stack-polyomino growth diagram.  Indented
/// corners carry a tuple: entry j is the Greene partition of the rectangle
/// below-left of the corner beginning j columns further left.
struct RimCorner {
    int x = 0, y = 0;  // x columns to the left, y rows below
    std::vector<Partition> tuple;
    auto operator<=>(const RimCorner&) const = default;
};

struct StackGrowthLabels {
    MoonPolyomino shape;
    std::vector<RimCorner> corners;  // rim order: top row left-to-right, then down
    auto operator<=>(const StackGrowthLabels&) const = default;

    /// All partitions in rim order.
    std::vector<Partition> flatten() const;
};

StackGrowthLabels stack_growth_labels(const Filling& f, RskVariant v);

/// Inverse for partial fillings; reports the first offending corner when the
/// labels violate the deletion conditions.
Filling stack_growth_reconstruct(const StackGrowthLabels& labels, RskVariant v);

std::string to_string(const StackGrowthLabels& labels);

} // namespace taquin
