/**
 * @file verify.hpp
 * @brief End-to-end verification battery. Each criterion is an exact check
 *        (tolerance zero unless stated otherwise in its detail line) and
 *        reports pass/fail with a human-readable summary.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torilab {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the battery in order; Quick shrinks ranges for a fast smoke pass.
/// The seed drives the randomized consistency items.
std::vector<CriterionResult> run_verification(VerifyLevel level, uint64_t seed);

} // namespace torilab
