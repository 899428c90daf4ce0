#include "taquin/chain.hpp"

#include <sstream>

namespace taquin {

bool step_ok(const Partition& a, const Partition& b, StepMode mode) {
    switch (mode) {
    case StepMode::cell:
        return is_contained(a, b) && b.size() - a.size() <= 1;
    case StepMode::hstrip:
        return is_hstrip(a, b);
    case StepMode::vstrip:
        return is_vstrip(a, b);
    }
    return false;
}

bool is_valid(const PartitionChain& c) {
    if (c.seq.empty() || !c.seq.front().empty()) return false;
    for (size_t i = 1; i < c.seq.size(); ++i)
        if (!step_ok(c.seq[i - 1], c.seq[i], c.mode)) return false;
    return true;
}

void validate(const PartitionChain& c) {
    if (c.seq.empty()) throw error("chain: empty sequence");
    if (!c.seq.front().empty()) throw error("chain: must start at the empty partition");
    for (size_t i = 1; i < c.seq.size(); ++i)
        if (!step_ok(c.seq[i - 1], c.seq[i], c.mode))
            throw error("chain: invalid step " + std::to_string(i) + " (" +
                        to_string(c.seq[i - 1]) + " -> " + to_string(c.seq[i]) + ")");
}

PartitionChain transpose(const PartitionChain& c) {
    PartitionChain out;
    out.mode = c.mode == StepMode::hstrip   ? StepMode::vstrip
               : c.mode == StepMode::vstrip ? StepMode::hstrip
                                            : StepMode::cell;
    out.seq.reserve(c.seq.size());
    for (const Partition& p : c.seq) out.seq.push_back(transpose(p));
    return out;
}

PartitionChain dedup(const PartitionChain& c) {
    PartitionChain out;
    out.mode = c.mode;
    for (const Partition& p : c.seq)
        if (out.seq.empty() || out.seq.back() != p) out.seq.push_back(p);
    return out;
}

StepMode infer_mode(const std::vector<Partition>& seq) {
    bool cell = true, h = true, v = true;
    for (size_t i = 1; i < seq.size(); ++i) {
        cell = cell && step_ok(seq[i - 1], seq[i], StepMode::cell);
        h = h && step_ok(seq[i - 1], seq[i], StepMode::hstrip);
        v = v && step_ok(seq[i - 1], seq[i], StepMode::vstrip);
    }
    if (cell) return StepMode::cell;
    if (h) return StepMode::hstrip;
    if (v) return StepMode::vstrip;
    throw error("chain: steps fit no mode");
}

std::string to_string(const PartitionChain& c) {
    std::string out;
    for (const Partition& p : c.seq) {
        out += to_string(p);
        out += '\n';
    }
    return out;
}

static std::vector<Partition> parse_lines(std::string_view text) {
    std::vector<Partition> seq;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        seq.push_back(parse_partition(line));
    }
    return seq;
}

PartitionChain parse_chain(std::string_view text, StepMode mode) {
    PartitionChain c{parse_lines(text), mode};
    validate(c);
    return c;
}

PartitionChain parse_chain(std::string_view text) {
    PartitionChain c;
    c.seq = parse_lines(text);
    if (c.seq.empty()) throw error("chain: empty sequence");
    c.mode = infer_mode(c.seq);
    validate(c);
    return c;
}

} // namespace taquin
