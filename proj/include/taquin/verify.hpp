#pragma once

#include "taquin/enumerate.hpp"
#include "taquin/knuth.hpp"
#include "taquin/stack_growth.hpp"
#include "taquin/transform.hpp"

#include <cstdint>

namespace taquin {

struct VerifyConfig {
    int max_cells = 0;   // 0 = suite default
    int max_mass = 0;    // 0 = suite default
    std::uint64_t seed = 2016;
    int sample = 1000;   // size of randomized supplements
};

struct VerificationReport {
    std::string suite;
    long instances = 0;
    std::vector<std::string> failures;  // offending inputs, grid text form
    double wall_seconds = 0;
    std::string config_echo;

    bool passed() const { return failures.empty(); }
    std::string to_text() const;
    std::string to_json() const;  // excludes wall time, byte-stable
    std::string to_csv() const;
};

std::vector<std::string> suite_names();
bool is_suite(std::string_view name);

/// Runs one named suite; throws on unknown names.
VerificationReport run_suite(std::string_view name, const VerifyConfig& config = {});

} // namespace taquin
