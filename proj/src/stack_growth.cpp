#include "taquin/stack_growth.hpp"

#include <algorithm>

namespace taquin {

namespace {

struct StackGeom {
    int height = 0;
    std::vector<int> left, right;  // per row 1..height; index 0 mirrors row 1

    StackGeom(const MoonPolyomino& s) {
        if (s.empty() || classify(s) == MoonClass::generic_moon)
            throw error("stack growth: stack polyomino required");
        height = s.height();
        left.assign(height + 1, 0);
        right.assign(height + 1, 0);
        for (int r = 1; r <= height; ++r) {
            int lo = 0, hi = 0;
            for (int c = 1; c <= s.width(); ++c)
                if (s.col_height(c) >= r) {
                    if (!lo) lo = c;
                    hi = c;
                }
            left[r] = lo;
            right[r] = hi;
        }
        left[0] = left[1];
        right[0] = right[1];
    }

    // tuple length at the drop corner below row r
    int tuple_size(int r) const { return r >= 1 ? left[r] - left[r - 1] + 1 : 1; }
};

Partition region_shape(const Filling& f, RskVariant v, int c1, int c2, int r1, int r2) {
    if (c1 > c2 || r1 > r2) return Partition();
    return shape_of(restrict(f, c1, c2, r1, r2), v);
}

} // namespace

std::vector<Partition> StackGrowthLabels::flatten() const {
    std::vector<Partition> out;
    for (const RimCorner& c : corners)
        for (const Partition& p : c.tuple) out.push_back(p);
    return out;
}

StackGrowthLabels stack_growth_labels(const Filling& f, RskVariant v) {
    if (!variant_legal(f, v))
        throw error(std::string("variant ") + to_string(v) + " needs a 0-1 filling");
    StackGeom geom(f.poly());
    const int H = geom.height;
    StackGrowthLabels out;
    out.shape = f.poly();
    for (int x = geom.left[H] - 1; x <= geom.right[H]; ++x)
        out.corners.push_back(
            {x, H, {region_shape(f, v, geom.left[H], x, 1, H)}});
    for (int r = H - 1; r >= 0; --r) {
        RimCorner drop{geom.right[r + 1], r, {}};
        for (int j = 0; j < geom.tuple_size(r + 1); ++j)
            drop.tuple.push_back(
                region_shape(f, v, geom.left[r + 1] - j, geom.right[r + 1], 1, r));
        out.corners.push_back(std::move(drop));
        for (int x = geom.right[r + 1] + 1; x <= geom.right[std::max(r, 1)]; ++x)
            out.corners.push_back(
                {x, r, {region_shape(f, v, geom.left[std::max(r, 1)], x, 1, r)}});
    }
    return out;
}

Filling stack_growth_reconstruct(const StackGrowthLabels& labels, RskVariant v) {
    (void)v;  // partial fillings only; all variants share the cell rules
    StackGeom geom(labels.shape);
    const int H = geom.height;
    auto corner_error = [](int x, int y, const std::string& what) {
        return error("stack labels: corner (" + std::to_string(x) + "," +
                     std::to_string(y) + "): " + what);
    };

    // index the given corners and check the rim layout
    size_t next = 0;
    auto take = [&](int x, int y, int expected_tuple) -> const RimCorner& {
        if (next >= labels.corners.size()) throw corner_error(x, y, "missing label");
        const RimCorner& c = labels.corners[next++];
        if (c.x != x || c.y != y)
            throw corner_error(c.x, c.y, "unexpected corner, wanted (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
        if (static_cast<int>(c.tuple.size()) != expected_tuple)
            throw corner_error(x, y, "tuple of length " + std::to_string(c.tuple.size()) +
                                         ", wanted " + std::to_string(expected_tuple));
        return c;
    };

    std::vector<Partition> top;  // labels along the top of the current row
    for (int x = geom.left[H] - 1; x <= geom.right[H]; ++x) {
        const RimCorner& c = take(x, H, 1);
        if (x == geom.left[H] - 1 && !c.tuple[0].empty())
            throw corner_error(x, H, "leftmost label must be empty");
        if (!top.empty() &&
            !step_ok(top.back(), c.tuple[0], StepMode::cell))
            throw corner_error(x, H, "not obtained from the left neighbour by adding at most one cell");
        top.push_back(c.tuple[0]);
    }

    Filling out(labels.shape);
    for (int r = H; r >= 1; --r) {
        const RimCorner& drop = take(geom.right[r], r - 1, geom.tuple_size(r));
        // backward pass across row r, seeded by the first tuple entry
        std::vector<Partition> bottom(top.size());
        bottom.back() = drop.tuple[0];
        for (int c = geom.right[r]; c >= geom.left[r]; --c) {
            const int i = c - (geom.left[r] - 1);
            std::pair<Partition, bool> got;
            try {
                got = backward_rule(top[i - 1], bottom[i], top[i]);
            } catch (const error& e) {
                throw corner_error(c, r, e.what());
            }
            bottom[i - 1] = got.first;
            if (got.second) out.set(c, r, 1);
        }
        if (!bottom.front().empty())
            throw corner_error(geom.left[r] - 1, r - 1, "left border label not empty");
        if (r == 1) {
            for (const Partition& p : bottom)
                if (!p.empty())
                    throw corner_error(geom.right[1], 0, "bottom border labels must be empty");
            break;
        }
        // extend to the left by the indentation, one jdt preimage per column
        PartitionChain chain{bottom, StepMode::cell};
        for (int j = 1; j < geom.tuple_size(r); ++j) {
            chain.seq.push_back(drop.tuple[j]);
            try {
                validate(chain);
                chain = promotion_inverse(chain);
            } catch (const error& e) {
                throw corner_error(geom.right[r], r - 1, e.what());
            }
        }
        // and to the right along the rim of row r-1
        for (int x = geom.right[r] + 1; x <= geom.right[r - 1]; ++x) {
            const RimCorner& c = take(x, r - 1, 1);
            if (!step_ok(chain.seq.back(), c.tuple[0], StepMode::cell))
                throw corner_error(x, r - 1,
                                   "not obtained from the left neighbour by adding at most one cell");
            chain.seq.push_back(c.tuple[0]);
        }
        top = chain.seq;
    }
    if (next != labels.corners.size())
        throw error("stack labels: trailing corners beyond the rim");
    return out;
}

std::string to_string(const StackGrowthLabels& labels) {
    std::string out;
    for (const RimCorner& c : labels.corners) {
        out += std::to_string(c.x) + "," + std::to_string(c.y) + ":";
        for (size_t i = 0; i < c.tuple.size(); ++i) {
            out += i ? " | " : " ";
            out += to_string(c.tuple[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace taquin
