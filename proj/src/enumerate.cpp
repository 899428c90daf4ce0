#include "taquin/enumerate.hpp"

#include "taquin/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace taquin {

LambdaStatistic lambda_statistic(const Filling& f, ChainKind kind) {
    RskVariant v = variant_for_kind(kind);
    if (!variant_legal(f, v))
        throw error(std::string("lambda statistic: kind ") + to_string(kind) +
                    " needs a 0-1 filling");
    LambdaStatistic out;
    for (const MaxRectangle& rect : maximal_rectangles(f.poly()))
        out[{rect.height(), rect.width()}] = shape_of(restrict(f, rect), v);
    return out;
}

namespace {

struct Enumerator {
    const MoonPolyomino& m;
    const CountQuery& q;
    const std::function<void(const Filling&)>& yield;
    std::vector<std::pair<int, int>> cells;  // grid order: top row first
    Filling work;
    std::vector<int> row_left, col_left;  // remaining exact budgets, -1 = free
    int total_left = -1;
    int max_mult = 1;
    int free_budget = 0;  // bound on mass when no exact budget applies

    void run() {
        descend(0, 0);
    }

    bool budgets_satisfiable(size_t idx) const {
        // remaining cells must be able to absorb every exact budget
        std::vector<int> row_room(m.height() + 1, 0), col_room(m.width() + 1, 0);
        for (size_t i = idx; i < cells.size(); ++i) {
            row_room[cells[i].second] += max_mult;
            col_room[cells[i].first] += max_mult;
        }
        long need = 0;
        for (int r = 1; r <= m.height(); ++r)
            if (row_left[r - 1] >= 0) {
                if (row_left[r - 1] > row_room[r]) return false;
                need += row_left[r - 1];
            }
        for (int c = 1; c <= m.width(); ++c)
            if (col_left[c - 1] >= 0 && col_left[c - 1] > col_room[c]) return false;
        if (total_left >= 0 && need > total_left) return false;
        return true;
    }

    void descend(size_t idx, int mass) {
        if (!budgets_satisfiable(idx)) return;
        if (idx == cells.size()) {
            for (int x : row_left)
                if (x > 0) return;
            for (int x : col_left)
                if (x > 0) return;
            if (total_left > 0) return;
            finish();
            return;
        }
        auto [c, r] = cells[idx];
        int cap = max_mult;
        if (row_left[r - 1] >= 0) cap = std::min(cap, row_left[r - 1]);
        if (col_left[c - 1] >= 0) cap = std::min(cap, col_left[c - 1]);
        if (total_left >= 0) cap = std::min(cap, total_left);
        bool unbounded_row = row_left[r - 1] < 0 && col_left[c - 1] < 0 && total_left < 0;
        if (unbounded_row) cap = std::min(cap, free_budget - mass);
        for (int v = 0; v <= cap; ++v) {
            work.set(c, r, v);
            if (row_left[r - 1] >= 0) row_left[r - 1] -= v;
            if (col_left[c - 1] >= 0) col_left[c - 1] -= v;
            if (total_left >= 0) total_left -= v;
            descend(idx + 1, mass + v);
            if (row_left[r - 1] >= 0) row_left[r - 1] += v;
            if (col_left[c - 1] >= 0) col_left[c - 1] += v;
            if (total_left >= 0) total_left += v;
            work.set(c, r, 0);
        }
    }

    void finish() {
        if (q.nonzero && work.support_size() != *q.nonzero) return;
        if (q.row_counts) {
            const auto& want = *q.row_counts;
            if (static_cast<int>(want.size()) != m.height()) return;
            for (int r = 1; r <= m.height(); ++r) {
                int cnt = 0;
                for (int c = 1; c <= m.width(); ++c)
                    if (work.at(c, r) > 0) ++cnt;
                if (cnt != want[r - 1]) return;
            }
        }
        if (q.longest && longest_chain(work, q.kind) != *q.longest) return;
        yield(work);
    }
};

} // namespace

void enumerate_fillings(const MoonPolyomino& m, const CountQuery& q,
                        const std::function<void(const Filling&)>& yield,
                        const EnumerationCaps& caps) {
    if (q.zero_one) {
        if (m.cells() > caps.max_cells_zero_one)
            throw error("enumeration cap exceeded: " + std::to_string(m.cells()) +
                        " cells with 0-1 entries, cap " +
                        std::to_string(caps.max_cells_zero_one) + " (--max-cells)");
    }
    Enumerator e{m, q, yield};
    for (int r = m.height(); r >= 1; --r)
        for (int c = 1; c <= m.width(); ++c)
            if (m.cell(c, r)) e.cells.push_back({c, r});
    e.work = Filling(m);
    e.max_mult = q.zero_one ? 1 : q.max_multiplicity;
    e.row_left.assign(m.height(), -1);
    e.col_left.assign(m.width(), -1);
    if (q.row_sums) {
        if (static_cast<int>(q.row_sums->size()) != m.height())
            throw error("enumeration: row sum vector length mismatch");
        for (int r = 0; r < m.height(); ++r) e.row_left[r] = (*q.row_sums)[r];
    }
    if (q.col_sums) {
        if (static_cast<int>(q.col_sums->size()) != m.width())
            throw error("enumeration: column sum vector length mismatch");
        for (int c = 0; c < m.width(); ++c) e.col_left[c] = (*q.col_sums)[c];
    }
    if (q.total) e.total_left = *q.total;
    if (!q.zero_one) {
        long bound = -1;
        if (q.total) bound = *q.total;
        if (q.row_sums)
            bound = std::accumulate(q.row_sums->begin(), q.row_sums->end(), 0L);
        if (bound < 0)
            throw error("enumeration cap exceeded: arbitrary fillings need a total or "
                        "row-sum bound (--max-mass)");
        if (bound > caps.max_mass_arbitrary)
            throw error("enumeration cap exceeded: mass " + std::to_string(bound) +
                        ", cap " + std::to_string(caps.max_mass_arbitrary) +
                        " (--max-mass)");
    }
    e.free_budget = q.zero_one ? m.cells() : caps.max_mass_arbitrary;
    e.run();
}

long count_fillings(const MoonPolyomino& m, const CountQuery& q,
                    const EnumerationCaps& caps) {
    long n = 0;
    enumerate_fillings(m, q, [&](const Filling&) { ++n; }, caps);
    return n;
}

std::map<std::pair<int, std::vector<int>>, long>
census(const MoonPolyomino& m, const CountQuery& q, bool by_rows,
       const EnumerationCaps& caps) {
    std::map<std::pair<int, std::vector<int>>, long> table;
    CountQuery relaxed = q;
    relaxed.longest.reset();
    enumerate_fillings(m, relaxed, [&](const Filling& f) {
        int l = longest_chain(f, q.kind);
        if (q.longest && l != *q.longest) return;
        std::vector<int> key;
        if (by_rows) key = sums(f).first;
        ++table[{l, key}];
    }, caps);
    return table;
}

void enumerate_partial_fillings(int width, int height,
                                const std::function<void(const Filling&)>& yield) {
    Filling work(MoonPolyomino::rectangle(width, height));
    std::vector<bool> row_used(height + 1, false);
    std::function<void(int)> go = [&](int c) {
        if (c > width) {
            yield(work);
            return;
        }
        go(c + 1);  // empty column
        for (int r = 1; r <= height; ++r)
            if (!row_used[r]) {
                row_used[r] = true;
                work.set(c, r, 1);
                go(c + 1);
                work.set(c, r, 0);
                row_used[r] = false;
            }
    };
    go(1);
}

void enumerate_permutations(int n, const std::function<void(const std::vector<int>&)>& yield) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        yield(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void enumerate_cell_chains(int max_steps, int max_cells,
                           const std::function<void(const PartitionChain&)>& yield) {
    PartitionChain chain;
    chain.mode = StepMode::cell;
    chain.seq.push_back(Partition());
    std::function<void()> go = [&]() {
        yield(chain);
        if (chain.steps() >= max_steps) return;
        const Partition& cur = chain.seq.back();
        // repeat step
        chain.seq.push_back(cur);
        go();
        chain.seq.pop_back();
        if (cur.size() >= max_cells) return;
        for (int r = 1; r <= cur.length() + 1; ++r) {
            try {
                chain.seq.push_back(bump(cur, r, +1));
            } catch (const error&) {
                continue;
            }
            go();
            chain.seq.pop_back();
        }
    };
    go();
}

namespace {

void hstrip_extensions(const Partition& p, int budget, std::vector<int>& acc, int row,
                       const std::function<void(const Partition&)>& emit) {
    if (row > p.length() + 1) {
        std::vector<int> parts = acc;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        emit(Partition(std::move(parts)));
        return;
    }
    int lo = p.part(row);
    int hi = row == 1 ? p.part(1) + budget : std::min(p.part(row - 1), acc[row - 2]);
    for (int v = lo; v <= std::min(hi, lo + budget); ++v) {
        acc.push_back(v);
        hstrip_extensions(p, budget - (v - lo), acc, row + 1, emit);
        acc.pop_back();
    }
}

} // namespace

void enumerate_hstrip_chains(int steps, int max_cells,
                             const std::function<void(const PartitionChain&)>& yield) {
    PartitionChain chain;
    chain.mode = StepMode::hstrip;
    chain.seq.push_back(Partition());
    std::function<void()> go = [&]() {
        if (chain.steps() == steps) {
            yield(chain);
            return;
        }
        const Partition& cur = chain.seq.back();
        std::vector<int> acc;
        std::vector<Partition> exts;
        hstrip_extensions(cur, max_cells - cur.size(), acc, 1,
                          [&](const Partition& q) { exts.push_back(q); });
        for (const Partition& q : exts) {
            chain.seq.push_back(q);
            go();
            chain.seq.pop_back();
        }
    };
    go();
}

void enumerate_standard_tableaux(int n, const std::function<void(const Tableau&)>& yield) {
    PartitionChain chain;
    chain.mode = StepMode::cell;
    chain.seq.push_back(Partition());
    std::function<void()> go = [&]() {
        if (chain.steps() == n) {
            yield(chain_to_tableau(chain));
            return;
        }
        const Partition& cur = chain.seq.back();
        for (int r = 1; r <= cur.length() + 1; ++r) {
            try {
                chain.seq.push_back(bump(cur, r, +1));
            } catch (const error&) {
                continue;
            }
            go();
            chain.seq.pop_back();
        }
    };
    go();
}

} // namespace taquin
