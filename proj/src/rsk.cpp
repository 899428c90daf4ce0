#include "taquin/rsk.hpp"

#include <algorithm>
#include <numeric>

namespace taquin {

const char* to_string(RskVariant v) {
    switch (v) {
    case RskVariant::rsk: return "rsk";
    case RskVariant::dual_rsk_prime: return "dual-rsk-prime";
    case RskVariant::dual_rsk: return "dual-rsk";
    case RskVariant::rsk_prime: return "rsk-prime";
    }
    return "?";
}

RskVariant parse_variant(std::string_view s) {
    if (s == "rsk") return RskVariant::rsk;
    if (s == "dual-rsk-prime" || s == "burge") return RskVariant::dual_rsk_prime;
    if (s == "dual-rsk") return RskVariant::dual_rsk;
    if (s == "rsk-prime") return RskVariant::rsk_prime;
    throw error("unknown variant: '" + std::string(s) + "'");
}

StepMode p_mode(RskVariant v) {
    return (v == RskVariant::rsk || v == RskVariant::rsk_prime) ? StepMode::hstrip
                                                                : StepMode::vstrip;
}

StepMode q_mode(RskVariant v) {
    return (v == RskVariant::rsk || v == RskVariant::dual_rsk) ? StepMode::hstrip
                                                               : StepMode::vstrip;
}

ChainKind greene_kind(RskVariant v) {
    switch (v) {
    case RskVariant::rsk: return ChainKind::NE;
    case RskVariant::dual_rsk_prime: return ChainKind::ne;
    case RskVariant::dual_rsk: return ChainKind::nE;
    case RskVariant::rsk_prime: return ChainKind::Ne;
    }
    throw error("bad variant");
}

ChainKind greene_kind_transpose(RskVariant v) {
    switch (v) {
    case RskVariant::rsk: return ChainKind::se;
    case RskVariant::dual_rsk_prime: return ChainKind::SE;
    case RskVariant::dual_rsk: return ChainKind::Se;
    case RskVariant::rsk_prime: return ChainKind::sE;
    }
    throw error("bad variant");
}

RskVariant variant_for_kind(ChainKind kind) {
    switch (kind) {
    case ChainKind::NE: return RskVariant::rsk;
    case ChainKind::ne: return RskVariant::dual_rsk_prime;
    case ChainKind::nE: return RskVariant::dual_rsk;
    case ChainKind::Ne: return RskVariant::rsk_prime;
    default:
        throw error(std::string("no variant encodes chain kind ") + to_string(kind));
    }
}

RskVariant conjugate(RskVariant v) {
    switch (v) {
    case RskVariant::rsk: return RskVariant::dual_rsk_prime;
    case RskVariant::dual_rsk_prime: return RskVariant::rsk;
    case RskVariant::dual_rsk: return RskVariant::rsk_prime;
    case RskVariant::rsk_prime: return RskVariant::dual_rsk;
    }
    throw error("bad variant");
}

bool variant_legal(const Filling& f, RskVariant v) {
    if (v == RskVariant::dual_rsk || v == RskVariant::rsk_prime)
        return f.is_zero_one();
    return true;
}

namespace {

struct UnitRef {
    int c, r, u;  // original cell and unit index within the cell
};

// The standardisation places each row's and column's units in a chain whose
// direction depends on the variant.  new position = base + rank, with ranks
// possibly reversed.
struct Layout {
    bool col_reversed, row_reversed, row_unit_desc;
};

Layout layout_for(RskVariant v) {
    switch (v) {
    case RskVariant::rsk: return {false, false, false};             // ne rows, ne cols
    case RskVariant::dual_rsk_prime: return {true, true, true};     // se rows, se cols
    case RskVariant::dual_rsk: return {false, true, false};         // se rows, ne cols
    case RskVariant::rsk_prime: return {true, false, false};        // ne rows, se cols
    }
    throw error("bad variant");
}

Filling standardize_impl(const Filling& f, RskVariant v, bool expand_first_column) {
    if (f.poly().empty() || classify(f.poly()) != MoonClass::ferrers)
        throw error("standardize: rectangular or Ferrers filling required");
    if (!variant_legal(f, v))
        throw error(std::string("variant ") + to_string(v) + " needs a 0-1 filling");
    const auto [row_mass, col_mass] = sums(f);
    const int n = f.mass();
    if (n == 0) throw error("standardize: empty filling");
    const Layout lay = layout_for(v);

    // column bases: expanded width per original column
    std::vector<int> col_width(f.width()), col_base(f.width(), 0);
    int total_cols = 0;
    for (int c = 1; c <= f.width(); ++c) {
        col_width[c - 1] = (!expand_first_column && c == 1) ? (col_mass[0] > 0 ? 1 : 0)
                                                            : col_mass[c - 1];
        col_base[c - 1] = total_cols;
        total_cols += col_width[c - 1];
    }
    std::vector<int> row_base(f.height(), 0);
    int total_rows = 0;
    for (int r = 1; r <= f.height(); ++r) {
        row_base[r - 1] = total_rows;
        total_rows += row_mass[r - 1];
    }

    // expanded shape: each copy of column c reaches the top of the copies of
    // its original top row
    std::vector<int> heights;
    for (int c = 1; c <= f.width(); ++c) {
        int h = 0;
        for (int r = 1; r <= f.poly().col_height(c); ++r) h += row_mass[r - 1];
        for (int i = 0; i < col_width[c - 1]; ++i) heights.push_back(h);
    }
    Filling out(MoonPolyomino::stack(heights));
    for (int c = 1; c <= f.width(); ++c) {
        if (col_mass[c - 1] == 0) continue;
        // units of column c in (row asc, unit asc) order
        std::vector<UnitRef> cunits;
        for (int r = 1; r <= f.height(); ++r)
            for (int u = 0; u < f.at(c, r); ++u) cunits.push_back({c, r, u});
        for (int rank = 0; rank < static_cast<int>(cunits.size()); ++rank) {
            const UnitRef& unit = cunits[rank];
            int newcol;
            if (!expand_first_column && c == 1)
                newcol = 1;
            else
                newcol = col_base[c - 1] +
                         (lay.col_reversed ? static_cast<int>(cunits.size()) - rank : rank + 1);
            // rank of this unit within its row
            int row_rank = 0, row_count = 0;
            for (int cc = 1; cc <= f.width(); ++cc)
                for (int u = 0; u < f.at(cc, unit.r); ++u) {
                    bool before;
                    if (cc != c)
                        before = cc < c;
                    else
                        before = lay.row_unit_desc ? u > unit.u : u < unit.u;
                    if (before) ++row_rank;
                    ++row_count;
                }
            int newrow = row_base[unit.r - 1] +
                         (lay.row_reversed ? row_count - row_rank : row_rank + 1);
            out.set(newcol, newrow, 1);
        }
    }
    return out;
}

std::vector<int> cum(const std::vector<int>& masses) {
    std::vector<int> out(masses.size() + 1, 0);
    std::partial_sum(masses.begin(), masses.end(), out.begin() + 1);
    return out;
}

} // namespace

Filling standardize(const Filling& f, RskVariant v) {
    return standardize_impl(f, v, true);
}

Filling partial_standardize(const Filling& f, RskVariant v) {
    return standardize_impl(f, v, false);
}

PartitionChain expand_chain(const PartitionChain& c) {
    validate(c);
    PartitionChain out;
    out.mode = StepMode::cell;
    out.seq.push_back(Partition());
    for (int i = 1; i <= c.steps(); ++i) {
        auto cells = skew_cells(c.seq[i - 1], c.seq[i]);
        if (c.mode == StepMode::hstrip || c.mode == StepMode::cell)
            std::sort(cells.begin(), cells.end(),
                      [](auto a, auto b) { return a.second < b.second; });  // column asc
        else
            std::sort(cells.begin(), cells.end());  // row asc
        Partition cur = c.seq[i - 1];
        for (auto [r, col] : cells) {
            cur = bump(cur, r, +1);
            out.seq.push_back(cur);
        }
    }
    validate(out);
    return out;
}

PartitionChain compress_chain(const PartitionChain& cells, const std::vector<int>& masses,
                              StepMode mode) {
    PartitionChain out;
    out.mode = mode;
    const std::vector<int> offsets = cum(masses);
    if (offsets.back() != cells.steps())
        throw error("compress: masses inconsistent with the chain length");
    for (int off : offsets) out.seq.push_back(cells.seq[off]);
    validate(out);
    return out;
}

RskPair rsk_correspond(const Filling& f, RskVariant v) {
    if (!f.poly().is_rectangle() && !f.poly().empty())
        throw error("rsk: filling must be rectangular");
    if (!variant_legal(f, v))
        throw error(std::string("variant ") + to_string(v) + " needs a 0-1 filling");
    const auto [row_mass, col_mass] = sums(f);
    RskPair out;
    if (f.mass() == 0) {
        out.p.mode = p_mode(v);
        out.q.mode = q_mode(v);
        out.p.seq.assign(f.height() + 1, Partition());
        out.q.seq.assign(f.width() + 1, Partition());
        return out;
    }
    GrowthDiagram d = grow(standardize(f, v));
    out.p = compress_chain(d.p_chain(), row_mass, p_mode(v));
    out.q = compress_chain(d.q_chain(), col_mass, q_mode(v));
    return out;
}

Partition shape_of(const Filling& f, RskVariant v) {
    return rsk_correspond(f, v).p.back();
}

Filling rsk_invert(const PartitionChain& p, const PartitionChain& q, RskVariant v) {
    validate(p);
    validate(q);
    if (p.mode != p_mode(v))
        throw error(std::string("rsk invert: P mode does not fit variant ") + to_string(v));
    if (q.mode != q_mode(v))
        throw error(std::string("rsk invert: Q mode does not fit variant ") + to_string(v));
    if (p.back() != q.back())
        throw error("rsk invert: chains end in different partitions");
    const int height = p.steps(), width = q.steps();
    std::vector<int> row_mass(height), col_mass(width);
    for (int i = 1; i <= height; ++i)
        row_mass[i - 1] = p.seq[i].size() - p.seq[i - 1].size();
    for (int i = 1; i <= width; ++i)
        col_mass[i - 1] = q.seq[i].size() - q.seq[i - 1].size();
    Filling f(MoonPolyomino::rectangle(width, height));
    if (p.back().size() == 0) return f;

    GrowthDiagram d = ungrow(expand_chain(p), expand_chain(q));
    const std::vector<int> roff = cum(row_mass), coff = cum(col_mass);
    auto locate = [](const std::vector<int>& offsets, int pos) {
        for (size_t i = 1; i < offsets.size(); ++i)
            if (pos <= offsets[i]) return static_cast<int>(i);
        throw error("rsk invert: position out of range");
    };
    for (int c = 1; c <= d.width(); ++c)
        for (int r = 1; r <= d.height(); ++r)
            if (d.filling().at(c, r)) {
                int oc = locate(coff, c), orow = locate(roff, r);
                f.set(oc, orow, f.at(oc, orow) + 1);
            }
    if (standardize(f, v) != d.filling())
        throw error("rsk invert: chains are not consistent with the variant");
    return f;
}

} // namespace taquin
