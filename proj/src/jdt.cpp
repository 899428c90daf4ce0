#include "taquin/jdt.hpp"

#include <algorithm>
#include <functional>

namespace taquin {

namespace {

// partitions nu with a <= nu <= b and both steps at most one cell
std::vector<Partition> cell_candidates(const Partition& a, const Partition& b) {
    std::vector<Partition> out;
    int lo = std::max(a.size(), b.size() - 1);
    int hi = std::min(a.size() + 1, b.size());
    for (int sz = lo; sz <= hi; ++sz) {
        if (sz == a.size()) {
            if (is_contained(a, b)) out.push_back(a);
        } else if (sz == b.size()) {
            if (is_contained(a, b)) out.push_back(b);
        } else {
            for (int r = 1; r <= a.length() + 1; ++r) {
                std::vector<int> parts = a.parts();
                if (r > static_cast<int>(parts.size())) parts.resize(r, 0);
                parts[r - 1] += 1;
                if (r > 1 && parts[r - 1] > parts[r - 2]) continue;
                Partition nu(std::move(parts));
                if (is_contained(nu, b)) out.push_back(nu);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition cell_local(const Partition& mu_prev, const Partition& lam_i,
                     const Partition& lam_next) {
    auto cand = cell_candidates(mu_prev, lam_next);
    if (cand.empty())
        throw error("jdt: no square completion for " + to_string(mu_prev) + " / " +
                    to_string(lam_next));
    if (cand.size() == 1) return cand.front();
    if (cand.size() == 2) return cand[0] == lam_i ? cand[1] : cand[0];
    throw error("jdt: ambiguous square completion");
}

// red/green local rule for horizontal-strip chains
Partition hstrip_local(const Partition& mu_prev, const Partition& lam_i,
                       const Partition& lam_next) {
    if (lam_next == lam_i) return mu_prev;
    const int nrows = lam_next.length();
    // colour 0 = none, 1 = green (in lam_next, not lam_i), 2 = red (in lam_i,
    // not mu_prev); cells indexed by row, column ranges within lam_next
    auto colour_at = [&](int r, int c) -> int {
        if (c > lam_next.part(r) || c <= mu_prev.part(r)) return 0;
        return c > lam_i.part(r) ? 1 : 2;
    };
    // columns with both colours swap them; afterwards count reds per row
    // as if sorted to the right end of the coloured span
    std::vector<int> reds(nrows + 1, 0);
    std::vector<std::vector<int>> colour(nrows + 1);
    for (int r = 1; r <= nrows; ++r) {
        colour[r].resize(lam_next.part(r) + 1, 0);
        for (int c = mu_prev.part(r) + 1; c <= lam_next.part(r); ++c)
            colour[r][c] = colour_at(r, c);
    }
    int ncols = lam_next.part(1);
    for (int c = 1; c <= ncols; ++c) {
        int green_row = 0, red_row = 0;
        for (int r = 1; r <= nrows; ++r) {
            if (c >= static_cast<int>(colour[r].size())) continue;
            if (colour[r][c] == 1) green_row = r;
            if (colour[r][c] == 2) red_row = r;
        }
        if (green_row && red_row) {
            colour[green_row][c] = 2;
            colour[red_row][c] = 1;
        }
    }
    std::vector<int> parts;
    for (int r = 1; r <= nrows; ++r) {
        int red = 0;
        for (int c = mu_prev.part(r) + 1; c <= lam_next.part(r); ++c)
            if (colour[r][c] == 2) ++red;
        int len = lam_next.part(r) - red;
        if (len) parts.push_back(len);
    }
    Partition mu(std::move(parts));
    if (!is_hstrip(mu_prev, mu) || !is_hstrip(mu, lam_next))
        throw error("jdt: strip rule produced an invalid step");
    return mu;
}

// enumerate partitions nu with mu_prev <= nu <= lam_next where both
// lam_next/nu and nu/mu_prev are horizontal strips
void hstrip_between(const Partition& mu_prev, const Partition& lam_next,
                    std::vector<int>& acc, int row,
                    const std::function<void(const Partition&)>& emit) {
    if (row > lam_next.length()) {
        std::vector<int> parts = acc;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        emit(Partition(std::move(parts)));
        return;
    }
    int lo = std::max(mu_prev.part(row), lam_next.part(row + 1));
    int hi = lam_next.part(row);
    if (row > 1) hi = std::min(hi, mu_prev.part(row - 1));  // nu/mu_prev h-strip
    if (row > 1) hi = std::min(hi, acc[row - 2]);
    for (int v = lo; v <= hi; ++v) {
        acc.push_back(v);
        hstrip_between(mu_prev, lam_next, acc, row + 1, emit);
        acc.pop_back();
    }
}

Partition hstrip_local_inverse(const Partition& mu_prev, const Partition& mu_i,
                               const Partition& lam_next) {
    std::vector<Partition> found;
    std::vector<int> acc;
    hstrip_between(mu_prev, lam_next, acc, 1, [&](const Partition& nu) {
        if (hstrip_local(mu_prev, nu, lam_next) == mu_i) found.push_back(nu);
    });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.size() != 1)
        throw error("jdt: inverse square completion not unique (" +
                    std::to_string(found.size()) + " candidates)");
    return found.front();
}

} // namespace

Partition jdt_local(const Partition& mu_prev, const Partition& lam_i,
                    const Partition& lam_next, StepMode mode) {
    switch (mode) {
    case StepMode::cell: return cell_local(mu_prev, lam_i, lam_next);
    case StepMode::hstrip: return hstrip_local(mu_prev, lam_i, lam_next);
    case StepMode::vstrip:
        return transpose(hstrip_local(transpose(mu_prev), transpose(lam_i),
                                      transpose(lam_next)));
    }
    throw error("jdt: bad mode");
}

Partition jdt_local_inverse(const Partition& mu_prev, const Partition& mu_i,
                            const Partition& lam_next, StepMode mode) {
    switch (mode) {
    case StepMode::cell: {
        auto cand = cell_candidates(mu_prev, lam_next);
        if (cand.size() == 1) return cand.front();
        if (cand.size() == 2) return cand[0] == mu_i ? cand[1] : cand[0];
        throw error("jdt: inverse square completion failed");
    }
    case StepMode::hstrip: return hstrip_local_inverse(mu_prev, mu_i, lam_next);
    case StepMode::vstrip:
        return transpose(hstrip_local_inverse(transpose(mu_prev), transpose(mu_i),
                                              transpose(lam_next)));
    }
    throw error("jdt: bad mode");
}

PartitionChain jdt_chain(const PartitionChain& c) {
    validate(c);
    if (c.steps() < 1) throw error("jdt: chain has no steps");
    PartitionChain out;
    out.mode = c.mode;
    out.seq.push_back(Partition());
    for (int i = 1; i <= c.steps() - 1; ++i)
        out.seq.push_back(jdt_local(out.seq[i - 1], c.seq[i], c.seq[i + 1], c.mode));
    validate(out);
    return out;
}

PartitionChain promotion(const PartitionChain& c) {
    PartitionChain out = jdt_chain(c);
    out.seq.push_back(c.seq.back());
    validate(out);
    return out;
}

PartitionChain promotion_inverse(const PartitionChain& c) {
    validate(c);
    if (c.steps() < 1) throw error("promotion inverse: chain has no steps");
    const int n = c.steps();
    PartitionChain out;
    out.mode = c.mode;
    out.seq.resize(n + 1);
    out.seq[0] = Partition();
    out.seq[n] = c.seq[n];
    for (int i = n - 1; i >= 1; --i)
        out.seq[i] = jdt_local_inverse(c.seq[i - 1], c.seq[i], out.seq[i + 1], c.mode);
    validate(out);
    return out;
}

PartitionChain evacuation(const PartitionChain& c) {
    validate(c);
    PartitionChain out;
    out.mode = c.mode;
    out.seq.resize(c.seq.size());
    PartitionChain cur = c;
    for (int i = static_cast<int>(c.seq.size()) - 1; i >= 0; --i) {
        out.seq[i] = cur.seq.back();
        if (i > 0) cur = jdt_chain(cur);
    }
    validate(out);
    return out;
}

} // namespace taquin
