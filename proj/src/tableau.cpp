#include "taquin/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taquin {

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::cells() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

int Tableau::at(int r, int c) const {
    if (r < 1 || r > static_cast<int>(rows.size())) return 0;
    const auto& row = rows[r - 1];
    if (c < 1 || c > static_cast<int>(row.size())) return 0;
    return row[c - 1];
}

Tableau transpose(const Tableau& t) {
    Tableau out;
    switch (t.kind) {
    case TableauKind::semistandard: out.kind = TableauKind::transposed_semistandard; break;
    case TableauKind::transposed_semistandard: out.kind = TableauKind::semistandard; break;
    default: out.kind = t.kind; break;
    }
    const Partition sh = transpose(t.shape());
    out.rows.resize(sh.length());
    for (int r = 1; r <= sh.length(); ++r) {
        out.rows[r - 1].resize(sh.part(r));
        for (int c = 1; c <= sh.part(r); ++c) out.rows[r - 1][c - 1] = t.at(c, r);
    }
    return out;
}

void validate(const Tableau& t) {
    const Tableau* v = &t;
    Tableau tr;
    if (t.kind == TableauKind::transposed_semistandard) {
        tr = transpose(t);
        v = &tr;
    }
    // shape must be a partition
    (void)v->shape();
    const bool weak_rows = v->kind == TableauKind::semistandard;
    std::map<int, int> seen;
    for (size_t r = 0; r < v->rows.size(); ++r) {
        for (size_t c = 0; c < v->rows[r].size(); ++c) {
            int e = v->rows[r][c];
            if (e < 1) throw error("tableau: entries must be positive");
            ++seen[e];
            if (c > 0) {
                int left = v->rows[r][c - 1];
                if (weak_rows ? e < left : e <= left)
                    throw error("tableau: row not increasing");
            }
            if (r > 0 && c < v->rows[r - 1].size()) {
                if (e <= v->rows[r - 1][c])
                    throw error("tableau: column not strictly increasing");
            }
        }
    }
    if (t.kind == TableauKind::partial || t.kind == TableauKind::standard) {
        for (auto [e, n] : seen)
            if (n > 1) throw error("tableau: repeated entry " + std::to_string(e));
    }
    if (t.kind == TableauKind::standard) {
        int n = t.cells();
        for (int e = 1; e <= n; ++e)
            if (!seen.count(e)) throw error("tableau: not standard, missing " + std::to_string(e));
    }
}

Tableau chain_to_tableau(const PartitionChain& c) {
    validate(c);
    Tableau t;
    switch (c.mode) {
    case StepMode::hstrip: t.kind = TableauKind::semistandard; break;
    case StepMode::vstrip: t.kind = TableauKind::transposed_semistandard; break;
    case StepMode::cell: {
        bool all_unit = true;
        for (int i = 1; i <= c.steps(); ++i)
            all_unit = all_unit && c.seq[i].size() == c.seq[i - 1].size() + 1;
        t.kind = all_unit ? TableauKind::standard : TableauKind::partial;
        break;
    }
    }
    const Partition& full = c.seq.back();
    t.rows.resize(full.length());
    for (int r = 1; r <= full.length(); ++r) t.rows[r - 1].resize(full.part(r));
    for (int i = 1; i <= c.steps(); ++i)
        for (auto [r, col] : skew_cells(c.seq[i - 1], c.seq[i]))
            t.rows[r - 1][col - 1] = i;
    return t;
}

PartitionChain tableau_to_chain(const Tableau& t) {
    validate(t);
    PartitionChain c;
    switch (t.kind) {
    case TableauKind::semistandard: c.mode = StepMode::hstrip; break;
    case TableauKind::transposed_semistandard: c.mode = StepMode::vstrip; break;
    default: c.mode = StepMode::cell; break;
    }
    int max_entry = 0;
    for (const auto& row : t.rows)
        for (int e : row) max_entry = std::max(max_entry, e);
    for (int i = 0; i <= max_entry; ++i) {
        std::vector<int> parts;
        for (const auto& row : t.rows) {
            int len = 0;
            for (int e : row)
                if (e <= i) ++len;
            if (len) parts.push_back(len);
        }
        c.seq.emplace_back(std::move(parts));
    }
    validate(c);
    return c;
}

namespace {

// single-hole slide for partial tableaux, entries already decremented,
// hole marked 0
void slide_partial(std::vector<std::vector<int>>& rows, int r, int c) {
    auto exists = [&](int rr, int cc) {
        return rr >= 1 && rr <= static_cast<int>(rows.size()) &&
               cc >= 1 && cc <= static_cast<int>(rows[rr - 1].size());
    };
    for (;;) {
        bool up = exists(r + 1, c), right = exists(r, c + 1);
        if (!up && !right) {
            rows[r - 1].pop_back();
            while (!rows.empty() && rows.back().empty()) rows.pop_back();
            return;
        }
        int pick_r, pick_c;
        if (up && right) {
            if (rows[r][c - 1] < rows[r - 1][c]) pick_r = r + 1, pick_c = c;
            else pick_r = r, pick_c = c + 1;
        } else if (up) {
            pick_r = r + 1, pick_c = c;
        } else {
            pick_r = r, pick_c = c + 1;
        }
        std::swap(rows[r - 1][c - 1], rows[pick_r - 1][pick_c - 1]);
        r = pick_r;
        c = pick_c;
    }
}

// multi-hole slide for semistandard tableaux; on equal entries the upper
// cell moves
void slide_semistandard(std::vector<std::vector<int>>& rows) {
    auto exists = [&](int rr, int cc) {
        return rr >= 1 && rr <= static_cast<int>(rows.size()) &&
               cc >= 1 && cc <= static_cast<int>(rows[rr - 1].size());
    };
    for (;;) {
        int hr = 0, hc = 0;
        for (int r = 1; r <= static_cast<int>(rows.size()); ++r)
            for (int c = 1; c <= static_cast<int>(rows[r - 1].size()); ++c)
                if (rows[r - 1][c - 1] == 0 && c > hc) hr = r, hc = c;
        if (hc == 0) return;
        int r = hr, c = hc;
        for (;;) {
            bool up = exists(r + 1, c), right = exists(r, c + 1);
            if (!up && !right) {
                rows[r - 1].pop_back();
                while (!rows.empty() && rows.back().empty()) rows.pop_back();
                break;
            }
            int pick_r, pick_c;
            if (up && right) {
                int eu = rows[r][c - 1], er = rows[r - 1][c];
                if (eu <= er) pick_r = r + 1, pick_c = c;
                else pick_r = r, pick_c = c + 1;
            } else if (up) {
                pick_r = r + 1, pick_c = c;
            } else {
                pick_r = r, pick_c = c + 1;
            }
            std::swap(rows[r - 1][c - 1], rows[pick_r - 1][pick_c - 1]);
            r = pick_r;
            c = pick_c;
        }
    }
}

} // namespace

Tableau jdt_slide(const Tableau& t) {
    validate(t);
    if (t.kind == TableauKind::transposed_semistandard)
        return transpose(jdt_slide(transpose(t)));
    Tableau out = t;
    if (out.kind == TableauKind::standard) out.kind = TableauKind::partial;
    for (auto& row : out.rows)
        for (int& e : row) --e;
    if (out.kind == TableauKind::semistandard) {
        slide_semistandard(out.rows);
    } else {
        int hr = 0, hc = 0;
        for (int r = 1; r <= static_cast<int>(out.rows.size()); ++r)
            for (int c = 1; c <= static_cast<int>(out.rows[r - 1].size()); ++c)
                if (out.rows[r - 1][c - 1] == 0) hr = r, hc = c;
        if (hr) slide_partial(out.rows, hr, hc);
    }
    // restore standard kind when the result is one
    if (t.kind == TableauKind::standard || t.kind == TableauKind::partial) {
        bool std_entries = true;
        int n = out.cells(), seen_max = 0;
        for (auto& row : out.rows)
            for (int e : row) seen_max = std::max(seen_max, e);
        std_entries = (seen_max == n);
        out.kind = (t.kind == TableauKind::standard && std_entries)
                       ? TableauKind::standard
                       : TableauKind::partial;
    }
    validate(out);
    return out;
}

std::string to_string(const Tableau& t) {
    if (t.rows.empty()) return "-\n";
    std::string out;
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

Tableau parse_tableau(std::string_view text) {
    Tableau t;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line == "-") break;
        std::istringstream ls(line);
        std::vector<int> row;
        int e;
        while (ls >> e) row.push_back(e);
        t.rows.push_back(std::move(row));
    }
    // choose the least restrictive kind matching the content
    for (TableauKind k : {TableauKind::standard, TableauKind::partial,
                          TableauKind::semistandard,
                          TableauKind::transposed_semistandard}) {
        t.kind = k;
        try {
            validate(t);
            return t;
        } catch (const error&) {
        }
    }
    throw error("tableau: rows form no valid tableau");
}

} // namespace taquin
