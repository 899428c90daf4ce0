#pragma once

#include "taquin/partition.hpp"

#include <iosfwd>

namespace taquin {

/// Step discipline of a weakly increasing sequence of partitions.
enum class StepMode { cell, hstrip, vstrip };

/// Sequence of partitions starting at the empty partition; the borders of
/// growth diagrams.  Mode cell allows at most one cell per step (repeats
/// permitted), hstrip/vstrip allow horizontal/vertical strip steps.
struct PartitionChain {
    std::vector<Partition> seq;
    StepMode mode = StepMode::cell;

    int steps() const { return static_cast<int>(seq.size()) - 1; }
    const Partition& back() const { return seq.back(); }
    auto operator<=>(const PartitionChain&) const = default;
};

bool step_ok(const Partition& a, const Partition& b, StepMode mode);
bool is_valid(const PartitionChain& c);
void validate(const PartitionChain& c);  // throws with the offending step index

/// Transpose every partition; hstrip and vstrip swap.
PartitionChain transpose(const PartitionChain& c);

/// Drop steps that repeat the previous partition.
PartitionChain dedup(const PartitionChain& c);

StepMode infer_mode(const std::vector<Partition>& seq);

std::string to_string(const PartitionChain& c);  // one partition per line
PartitionChain parse_chain(std::string_view text, StepMode mode);
PartitionChain parse_chain(std::string_view text);  // mode inferred

} // namespace taquin
