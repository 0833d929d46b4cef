/**
 * Seeded property sweep over random instances: the cross-checks between
 * the closed-form cup matrices and the rational face-ring oracle, plus
 * structural invariants. Instances use per-index sub-seeds, so reports
 * are byte-identical for a fixed seed regardless of thread count.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric4 {

struct PropertyReport {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_counterexample;  // empty when the property held
};

struct FuzzReport {
    uint64_t seed = 0;
    int count = 0;
    std::vector<PropertyReport> properties;

    bool all_passed() const;
};

/// `count` scales the instance budget of every property.
FuzzReport run_fuzz(uint64_t seed, int count);

}  // namespace toric4
