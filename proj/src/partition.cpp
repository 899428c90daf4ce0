#include "taquin/partition.hpp"

#include <algorithm>
#include <numeric>

namespace taquin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> out(std::max(a.length(), b.length()));
    for (int i = 1; i <= static_cast<int>(out.size()); ++i)
        out[i - 1] = std::max(a.part(i), b.part(i));
    return Partition(std::move(out));
}

Partition intersection(const Partition& a, const Partition& b) {
    std::vector<int> out(std::min(a.length(), b.length()));
    for (int i = 1; i <= static_cast<int>(out.size()); ++i)
        out[i - 1] = std::min(a.part(i), b.part(i));
    return Partition(std::move(out));
}

Partition transpose(const Partition& a) {
    std::vector<int> out(a.part(1));
    for (int c = 1; c <= a.part(1); ++c) {
        int count = 0;
        for (int i = 1; i <= a.length(); ++i)
            if (a.part(i) >= c) ++count;
        out[c - 1] = count;
    }
    return Partition(std::move(out));
}

bool is_contained(const Partition& a, const Partition& b) {
    if (a.length() > b.length()) return false;
    for (int i = 1; i <= a.length(); ++i)
        if (a.part(i) > b.part(i)) return false;
    return true;
}

bool is_hstrip(const Partition& a, const Partition& b) {
    if (!is_contained(a, b)) return false;
    for (int i = 1; i <= b.length(); ++i)
        if (b.part(i + 1) > a.part(i)) return false;
    return true;
}

bool is_vstrip(const Partition& a, const Partition& b) {
    if (!is_contained(a, b)) return false;
    for (int i = 1; i <= b.length(); ++i)
        if (b.part(i) - a.part(i) > 1) return false;
    return true;
}

Relation relation(const Partition& a, const Partition& b) {
    Relation rel;
    if (!is_contained(a, b)) return rel;
    rel.contained = true;
    const bool h = is_hstrip(a, b);
    const bool v = is_vstrip(a, b);
    if (b.size() - a.size() <= 1)
        rel.strip = StripClass::single_cell;
    else if (h && v)
        rel.strip = StripClass::both;
    else if (h)
        rel.strip = StripClass::horizontal;
    else if (v)
        rel.strip = StripClass::vertical;
    else
        rel.strip = StripClass::neither;
    return rel;
}

Partition bump(const Partition& a, int k, int delta) {
    if (k < 1) throw error("bump: row index must be >= 1");
    if (delta != 1 && delta != -1) throw error("bump: delta must be +1 or -1");
    if (delta == 1 && k > a.length() + 1)
        throw error("bump: adding in row " + std::to_string(k) +
                    " would leave a gap");
    if (delta == -1 && a.part(k) == 0)
        throw error("bump: row " + std::to_string(k) + " has no cell to remove");
    std::vector<int> parts = a.parts();
    if (k > static_cast<int>(parts.size())) parts.resize(k, 0);
    parts[k - 1] += delta;
    if (k > 1 && parts[k - 1] > parts[k - 2])
        throw error("bump: result not weakly decreasing at row " + std::to_string(k));
    if (k < static_cast<int>(parts.size()) && parts[k] > parts[k - 1])
        throw error("bump: result not weakly decreasing at row " + std::to_string(k + 1));
    return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> skew_cells(const Partition& a, const Partition& b) {
    if (!is_contained(a, b)) throw error("skew_cells: shapes not nested");
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= b.length(); ++r)
        for (int c = a.part(r) + 1; c <= b.part(r); ++c)
            cells.emplace_back(r, c);
    return cells;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw error("empty partition text");
    text = text.substr(begin, end - begin + 1);
    if (text == "-") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        try {
            parts.push_back(std::stoi(std::string(tok)));
        } catch (const std::exception&) {
            throw error("bad partition part: '" + std::string(tok) + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace taquin
