#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taquin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer partition: weakly decreasing positive parts, French convention
/// (part i counts the cells of row i, rows growing upward).  The empty
/// partition is the default value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

enum class StripClass { single_cell, horizontal, vertical, both, neither };

struct Relation {
    bool contained = false;
    StripClass strip = StripClass::neither;
};

Partition union_of(const Partition& a, const Partition& b);
Partition intersection(const Partition& a, const Partition& b);
Partition transpose(const Partition& a);

/// a contained in b, pointwise.
bool is_contained(const Partition& a, const Partition& b);

/// b/a has at most one cell per column (requires a contained in b).
bool is_hstrip(const Partition& a, const Partition& b);
/// b/a has at most one cell per row.
bool is_vstrip(const Partition& a, const Partition& b);

/// Containment plus the strip class of the skew b/a.
Relation relation(const Partition& a, const Partition& b);

/// Adds (delta=+1) or removes (delta=-1) one cell in row k (1-based).
/// Throws taquin::error if the result is not weakly decreasing.
Partition bump(const Partition& a, int k, int delta);

/// Cells of b/a as (row, column) pairs, 1-based, requires a contained in b.
std::vector<std::pair<int, int>> skew_cells(const Partition& a, const Partition& b);

/// Text form: comma-separated parts, "-" for the empty partition.
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

} // namespace taquin
