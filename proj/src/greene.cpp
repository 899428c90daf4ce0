#include "taquin/greene.hpp"

#include <algorithm>

namespace taquin {

namespace {

struct Unit {
    int c, r, w;
    int cell_id;  // units of one cell are mutually incompatible
};

bool compatible(ChainKind k, const Unit& a, const Unit& b) {
    if (a.cell_id == b.cell_id) return false;
    switch (k) {
    case ChainKind::ne: return b.c > a.c && b.r > a.r;
    case ChainKind::se: return b.c > a.c && b.r < a.r;
    case ChainKind::NE: return b.c >= a.c && b.r >= a.r;
    case ChainKind::SE: return b.c >= a.c && b.r <= a.r;
    case ChainKind::nE: return b.c >= a.c && b.r > a.r;
    case ChainKind::Ne: return b.c > a.c && b.r >= a.r;
    case ChainKind::sE: return b.c >= a.c && b.r < a.r;
    case ChainKind::Se: return b.c > a.c && b.r <= a.r;
    }
    return false;
}

struct Search {
    ChainKind kind;
    int k;
    std::vector<Unit> units;
    std::vector<long> suffix;
    long best = 0;

    void dfs(size_t idx, std::vector<int>& last, int used, long covered) {
        best = std::max(best, covered);
        if (idx == units.size()) return;
        if (covered + suffix[idx] <= best) return;
        // place units[idx] on an existing chain or a fresh one
        for (int j = 0; j < used; ++j) {
            if (compatible(kind, units[last[j]], units[idx])) {
                int prev = last[j];
                last[j] = static_cast<int>(idx);
                dfs(idx + 1, last, used, covered + units[idx].w);
                last[j] = prev;
            }
        }
        if (used < k) {
            last[used] = static_cast<int>(idx);
            dfs(idx + 1, last, used + 1, covered + units[idx].w);
        }
        dfs(idx + 1, last, used, covered);  // skip
    }
};

} // namespace

long greene_oracle(const Filling& f, ChainKind kind, int k, int cap) {
    if (k < 1) throw error("greene oracle: k must be positive");
    if (!kind_legal(f, kind))
        throw error(std::string("greene oracle: kind ") + to_string(kind) +
                    " needs a 0-1 filling");
    const bool multiset = (kind == ChainKind::ne || kind == ChainKind::se);
    const bool weighted = (kind == ChainKind::NE || kind == ChainKind::SE);
    Search s;
    s.kind = kind;
    s.k = k;
    int cell_id = 0;
    for (int c = 1; c <= f.width(); ++c)
        for (int r = 1; r <= f.height(); ++r)
            if (int v = f.at(c, r); v > 0) {
                ++cell_id;
                if (multiset) {
                    for (int u = 0; u < v; ++u) s.units.push_back({c, r, 1, cell_id});
                } else {
                    s.units.push_back({c, r, weighted ? v : 1, cell_id});
                }
            }
    if (static_cast<int>(s.units.size()) > cap)
        throw error("greene oracle: instance has " + std::to_string(s.units.size()) +
                    " units, above the cap of " + std::to_string(cap));
    const bool up = kind == ChainKind::ne || kind == ChainKind::NE ||
                    kind == ChainKind::nE || kind == ChainKind::Ne;
    const bool col_major = kind != ChainKind::nE && kind != ChainKind::sE;
    std::sort(s.units.begin(), s.units.end(), [&](const Unit& a, const Unit& b) {
        if (col_major) {
            if (a.c != b.c) return a.c < b.c;
            return up ? a.r < b.r : a.r > b.r;
        }
        if (a.r != b.r) return up ? a.r < b.r : a.r > b.r;
        return a.c < b.c;
    });
    s.suffix.assign(s.units.size() + 1, 0);
    for (int i = static_cast<int>(s.units.size()) - 1; i >= 0; --i)
        s.suffix[i] = s.suffix[i + 1] + s.units[i].w;
    std::vector<int> last(std::max(1, k), -1);
    s.dfs(0, last, 0, 0);
    return s.best;
}

Partition greene_shape_oracle(const Filling& f, ChainKind kind, int cap) {
    std::vector<int> parts;
    long prev = 0;
    for (int k = 1;; ++k) {
        long v = greene_oracle(f, kind, k, cap);
        if (v == prev) break;
        parts.push_back(static_cast<int>(v - prev));
        prev = v;
    }
    return Partition(std::move(parts));
}

} // namespace taquin
