#include "taquin/growth.hpp"

#include <json.hpp>

namespace taquin {

Partition forward_rule(const Partition& lambda, const Partition& mu,
                       const Partition& nu, bool cross) {
    auto check = [&](const Partition& outer, const char* name) {
        if (!is_contained(lambda, outer) || outer.size() - lambda.size() > 1)
            throw error(std::string("forward rule: ") + name +
                        " must cover lambda by at most one cell");
    };
    check(mu, "mu");
    check(nu, "nu");
    if (cross) {
        if (lambda != mu || lambda != nu)
            throw error("forward rule: a cross requires lambda = mu = nu");
        return bump(lambda, 1, +1);  // F4
    }
    if (mu != nu) return union_of(mu, nu);  // F2
    if (lambda == mu) return lambda;        // F1
    // F3: lambda differs from mu in part i, add in part i+1
    for (int i = 1; i <= mu.length(); ++i)
        if (lambda.part(i) != mu.part(i)) return bump(mu, i + 1, +1);
    throw error("forward rule: unreachable");
}

std::pair<Partition, bool> backward_rule(const Partition& mu, const Partition& nu,
                                         const Partition& rho) {
    auto check = [&](const Partition& inner, const char* name) {
        if (!is_contained(inner, rho) || rho.size() - inner.size() > 1)
            throw error(std::string("backward rule: rho must cover ") + name +
                        " by at most one cell");
    };
    check(mu, "mu");
    check(nu, "nu");
    if (mu != nu) return {intersection(mu, nu), false};  // B2
    if (mu == rho) return {rho, false};                  // B1
    for (int i = 1; i <= rho.length(); ++i)
        if (mu.part(i) != rho.part(i)) {
            if (i == 1) return {mu, true};            // B4
            return {bump(mu, i - 1, -1), false};      // B3
        }
    throw error("backward rule: unreachable");
}

GrowthDiagram::GrowthDiagram(Filling filling) : filling_(std::move(filling)) {
    if (!filling_.poly().empty() && !filling_.poly().is_rectangle())
        throw error("growth diagram: filling must be rectangular");
    if (!filling_.is_partial())
        throw error("growth diagram: filling must be partial");
    width_ = filling_.width();
    height_ = filling_.height();
    corners_.assign(static_cast<size_t>(width_ + 1) * (height_ + 1), Partition());
    for (int i = 1; i <= width_; ++i)
        for (int j = 1; j <= height_; ++j)
            corner_mut(i, j) = forward_rule(corner(i - 1, j - 1), corner(i - 1, j),
                                            corner(i, j - 1), filling_.at(i, j) > 0);
}

PartitionChain GrowthDiagram::p_chain() const {
    PartitionChain p;
    p.mode = StepMode::cell;
    for (int j = 0; j <= height_; ++j) p.seq.push_back(corner(width_, j));
    return p;
}

PartitionChain GrowthDiagram::q_chain() const {
    PartitionChain q;
    q.mode = StepMode::cell;
    for (int i = 0; i <= width_; ++i) q.seq.push_back(corner(i, height_));
    return q;
}

std::string GrowthDiagram::to_json() const {
    nlohmann::json j;
    j["width"] = width_;
    j["height"] = height_;
    std::vector<std::string> grid;
    {
        std::string g = to_grid(filling_);
        size_t pos = 0;
        while (pos < g.size()) {
            size_t nl = g.find('\n', pos);
            grid.push_back(g.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }
    j["filling"] = grid;
    std::vector<std::string> corners;
    for (int jj = height_; jj >= 0; --jj)
        for (int i = 0; i <= width_; ++i)
            corners.push_back(to_string(corner(i, jj)));
    j["corners"] = corners;
    return j.dump(2);
}

GrowthDiagram grow(const Filling& f) { return GrowthDiagram(f); }

GrowthDiagram ungrow(const PartitionChain& p, const PartitionChain& q) {
    validate(p);
    validate(q);
    if (p.mode != StepMode::cell || q.mode != StepMode::cell)
        throw error("ungrow: borders must be cell-mode chains");
    if (p.back() != q.back())
        throw error("ungrow: border chains must end in the same partition");
    GrowthDiagram d;
    d.height_ = p.steps();
    d.width_ = q.steps();
    d.filling_ = Filling(MoonPolyomino::rectangle(d.width_, d.height_));
    d.corners_.assign(static_cast<size_t>(d.width_ + 1) * (d.height_ + 1), Partition());
    for (int j = 0; j <= d.height_; ++j) d.corner_mut(d.width_, j) = p.seq[j];
    for (int i = 0; i <= d.width_; ++i) d.corner_mut(i, d.height_) = q.seq[i];
    for (int j = d.height_; j >= 1; --j)
        for (int i = d.width_; i >= 1; --i) {
            auto [lambda, cross] =
                backward_rule(d.corner(i - 1, j), d.corner(i, j - 1), d.corner(i, j));
            d.corner_mut(i - 1, j - 1) = lambda;
            if (cross) d.filling_.set(i, j, 1);
        }
    for (int i = 0; i <= d.width_; ++i)
        if (!d.corner(i, 0).empty())
            throw error("ungrow: incompatible chains (bottom border not empty)");
    for (int j = 0; j <= d.height_; ++j)
        if (!d.corner(0, j).empty())
            throw error("ungrow: incompatible chains (left border not empty)");
    return d;
}

} // namespace taquin
