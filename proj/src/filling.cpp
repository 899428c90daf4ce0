#include "taquin/filling.hpp"

#include <algorithm>
#include <sstream>

namespace taquin {

const char* to_string(ChainKind k) {
    switch (k) {
    case ChainKind::ne: return "ne";
    case ChainKind::se: return "se";
    case ChainKind::NE: return "NE";
    case ChainKind::SE: return "SE";
    case ChainKind::nE: return "nE";
    case ChainKind::Ne: return "Ne";
    case ChainKind::sE: return "sE";
    case ChainKind::Se: return "Se";
    }
    return "?";
}

ChainKind parse_chain_kind(std::string_view s) {
    if (s == "ne") return ChainKind::ne;
    if (s == "se") return ChainKind::se;
    if (s == "NE") return ChainKind::NE;
    if (s == "SE") return ChainKind::SE;
    if (s == "nE") return ChainKind::nE;
    if (s == "Ne") return ChainKind::Ne;
    if (s == "sE") return ChainKind::sE;
    if (s == "Se") return ChainKind::Se;
    throw error("unknown chain kind: '" + std::string(s) + "'");
}

Filling::Filling(MoonPolyomino poly)
    : poly_(std::move(poly)), e_(static_cast<size_t>(poly_.width()) * poly_.height(), 0) {}

int Filling::at(int c, int r) const {
    if (!poly_.cell(c, r)) return 0;
    return e_[(c - 1) * static_cast<size_t>(poly_.height()) + (r - 1)];
}

void Filling::set(int c, int r, int value) {
    if (!poly_.cell(c, r))
        throw error("filling: (" + std::to_string(c) + "," + std::to_string(r) +
                    ") is not a cell");
    if (value < 0) throw error("filling: negative multiplicity");
    e_[(c - 1) * static_cast<size_t>(poly_.height()) + (r - 1)] = value;
}

int Filling::mass() const {
    int n = 0;
    for (int v : e_) n += v;
    return n;
}

int Filling::support_size() const {
    int n = 0;
    for (int v : e_) n += v > 0;
    return n;
}

bool Filling::is_zero_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
}

bool Filling::is_partial() const {
    if (!is_zero_one()) return false;
    auto [rs, cs] = sums(*this);
    auto ok = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x <= 1; });
    };
    return ok(rs) && ok(cs);
}

bool Filling::is_standard() const {
    if (!poly_.is_rectangle() || !is_zero_one()) return false;
    auto [rs, cs] = sums(*this);
    auto ok = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
    };
    return ok(rs) && ok(cs);
}

std::pair<std::vector<int>, std::vector<int>> sums(const Filling& f) {
    std::vector<int> rs(f.height(), 0), cs(f.width(), 0);
    for (int c = 1; c <= f.width(); ++c)
        for (int r = 1; r <= f.height(); ++r) {
            rs[r - 1] += f.at(c, r);
            cs[c - 1] += f.at(c, r);
        }
    return {rs, cs};
}

Filling restrict(const Filling& f, int c1, int c2, int r1, int r2) {
    std::set<std::pair<int, int>> cells;
    for (int c = std::max(1, c1); c <= std::min(f.width(), c2); ++c)
        for (int r = std::max(1, r1); r <= std::min(f.height(), r2); ++r)
            if (f.poly().cell(c, r)) cells.insert({c, r});
    if (cells.empty()) return Filling();
    int cmin = cells.begin()->first, rmin = cells.begin()->second;
    for (auto [c, r] : cells) {
        cmin = std::min(cmin, c);
        rmin = std::min(rmin, r);
    }
    std::set<std::pair<int, int>> shifted;
    for (auto [c, r] : cells) shifted.insert({c - cmin + 1, r - rmin + 1});
    Filling out(MoonPolyomino::validate(shifted));
    for (auto [c, r] : cells)
        out.set(c - cmin + 1, r - rmin + 1, f.at(c, r));
    return out;
}

Filling restrict(const Filling& f, const MaxRectangle& r) {
    return restrict(f, r.c1, r.c2, r.r1, r.r2);
}

namespace {

struct Item {
    int c, r, w;
};

// per-kind step compatibility, a before b in chain order
bool step_compatible(ChainKind k, const Item& a, const Item& b) {
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

} // namespace

bool kind_legal(const Filling& f, ChainKind kind) {
    switch (kind) {
    case ChainKind::nE:
    case ChainKind::Ne:
    case ChainKind::sE:
    case ChainKind::Se:
        return f.is_zero_one();
    default:
        return true;
    }
}

int longest_chain(const Filling& f, ChainKind kind) {
    if (!kind_legal(f, kind))
        throw error(std::string("chain kind ") + to_string(kind) +
                    " is only defined for 0-1 fillings");
    const bool weighted = kind == ChainKind::NE || kind == ChainKind::SE;
    std::vector<Item> items;
    for (int c = 1; c <= f.width(); ++c)
        for (int r = 1; r <= f.height(); ++r)
            if (int v = f.at(c, r); v > 0) items.push_back({c, r, weighted ? v : 1});
    int best = 0;
    const int n = static_cast<int>(items.size());
    // the bounding box of a monotone chain is spanned by its first and last
    // elements, so fix the start and require box(start, item) in the shape
    for (int s = 0; s < n; ++s) {
        std::vector<int> len(n, 0);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (items[a].c != items[b].c) return items[a].c < items[b].c;
            bool up = kind == ChainKind::ne || kind == ChainKind::NE ||
                      kind == ChainKind::nE || kind == ChainKind::Ne;
            return up ? items[a].r < items[b].r : items[a].r > items[b].r;
        });
        for (int oi = 0; oi < n; ++oi) {
            int i = order[oi];
            if (i == s)
                len[i] = items[i].w;
            else if (step_compatible(kind, items[s], items[i]) || i == s) {
                int bestp = 0;
                for (int oj = 0; oj < oi; ++oj) {
                    int j = order[oj];
                    if (len[j] > 0 && step_compatible(kind, items[j], items[i]))
                        bestp = std::max(bestp, len[j]);
                }
                if (bestp > 0) len[i] = bestp + items[i].w;
            }
            if (len[i] > 0) {
                int c1 = std::min(items[s].c, items[i].c), c2 = std::max(items[s].c, items[i].c);
                int r1 = std::min(items[s].r, items[i].r), r2 = std::max(items[s].r, items[i].r);
                if (f.poly().contains_box(c1, c2, r1, r2)) best = std::max(best, len[i]);
            }
        }
    }
    return best;
}

Filling permutation_filling(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    Filling f(MoonPolyomino::rectangle(n, n));
    for (int c = 1; c <= n; ++c) f.set(c, perm[c - 1], 1);
    return f;
}

Filling rectangle_filling(int width, int height, const std::vector<int>& rows_top_first) {
    if (static_cast<int>(rows_top_first.size()) != width * height)
        throw error("rectangle_filling: size mismatch");
    Filling f(MoonPolyomino::rectangle(width, height));
    for (int i = 0; i < width * height; ++i) {
        int r = height - i / width;
        int c = i % width + 1;
        f.set(c, r, rows_top_first[i]);
    }
    return f;
}

Filling reflect(const Filling& f) {
    Filling out(reflect(f.poly()));
    for (int c = 1; c <= f.width(); ++c)
        for (int r = 1; r <= f.height(); ++r)
            if (f.poly().cell(c, r)) out.set(r, c, f.at(c, r));
    return out;
}

std::string to_grid(const Filling& f) {
    if (f.poly().empty()) return ".\n";
    std::string out;
    for (int r = f.height(); r >= 1; --r) {
        for (int c = 1; c <= f.width(); ++c) {
            if (!f.poly().cell(c, r)) {
                out += '.';
            } else {
                int v = f.at(c, r);
                if (v < 10)
                    out += static_cast<char>('0' + v);
                else
                    out += '[' + std::to_string(v) + ']';
            }
        }
        out += '\n';
    }
    return out;
}

Filling parse_grid(std::string_view text) {
    std::vector<std::vector<int>> rows;  // top row first, -1 marks non-cells
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::vector<int> row;
        for (size_t i = 0; i < line.size(); ++i) {
            char ch = line[i];
            if (ch == '.') {
                row.push_back(-1);
            } else if (ch == 'o' || ch == 'x' || ch == 'X') {
                row.push_back(ch == 'o' ? 0 : 1);
            } else if (ch >= '0' && ch <= '9') {
                row.push_back(ch - '0');
            } else if (ch == '[') {
                size_t close = line.find(']', i);
                if (close == std::string::npos)
                    throw error("grid parse error at line " + std::to_string(lineno) +
                                ", column " + std::to_string(i + 1) + ": unclosed '['");
                row.push_back(std::stoi(line.substr(i + 1, close - i - 1)));
                i = close;
            } else {
                throw error("grid parse error at line " + std::to_string(lineno) +
                            ", column " + std::to_string(i + 1) + ": bad character '" +
                            std::string(1, ch) + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    std::set<std::pair<int, int>> cells;
    const int height = static_cast<int>(rows.size());
    for (int i = 0; i < height; ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] >= 0) cells.insert({static_cast<int>(j) + 1, height - i});
    if (cells.empty()) return Filling();
    // normalize the column origin
    int cmin = cells.begin()->first;
    for (auto [c, r] : cells) cmin = std::min(cmin, c);
    std::set<std::pair<int, int>> shifted;
    for (auto [c, r] : cells) shifted.insert({c - cmin + 1, r});
    Filling f(MoonPolyomino::validate(shifted));
    for (int i = 0; i < height; ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] > 0) f.set(static_cast<int>(j) + 1 - cmin + 1, height - i, rows[i][j]);
    return f;
}

} // namespace taquin
