/**
 * Deterministic pseudo-random instance generation shared by the fuzz
 * command and the test suites. All draws go through mt19937_64 with
 * modulo reduction, so a seed reproduces byte-identical streams on any
 * platform.
 */
#pragma once

#include <cstdint>
#include <random>

#include "toric4/charpair.hpp"
#include "toric4/intlinalg.hpp"

namespace toric4 {

class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    uint64_t raw() { return g_(); }
    /// inclusive bounds
    Int uniform(Int lo, Int hi);
    bool coin() { return (raw() & 1) != 0; }

private:
    std::mt19937_64 g_;
};

/// Stable per-instance sub-seed (splitmix-style), for parallel sweeps.
uint64_t mix_seed(uint64_t seed, uint64_t stream, uint64_t index);

IntVec2 random_primitive(Rng& rng, Int bound, bool nonzero_entries);

/// [(a_1,b_1)..(a_n,b_n),(1,0),(0,1)] with adjacent independence; when
/// nonzero_products is set, every a_i*b_i != 0.
CharacteristicPair random_smooth_form_pair(Rng& rng, int n, Int bound, bool nonzero_products);

CharacteristicPair random_valid_pair(Rng& rng, int m, Int bound);

/// Triangle [(a_1,b_1),(1,0),(a_3,b_3)] with a_3*b_3 != 0, as a normalized
/// half-form value (identity transform).
NormalizedPair random_half_triangle(Rng& rng, Int bound);

/// Random valid (n+2)-gon put into half form by the auto normalizer.
NormalizedPair random_half_pair(Rng& rng, int n, Int bound);

struct ContractionInstance {
    CharacteristicPair pair;
    int i = 1;
    int j = 2;
};

/// Smooth-form pair with the divisibility needed for the three contraction
/// liftings (keep-one through keep-two factorization) to exist.
ContractionInstance random_liftable_contraction(Rng& rng);

}  // namespace toric4
