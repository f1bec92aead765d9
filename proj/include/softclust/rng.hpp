#pragma once

#include "softclust/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace softclust {

// Documented PRNG for the whole toolkit: std::mt19937_64. Identical seed
// gives an identical stream within one binary.
using Rng = std::mt19937_64;

inline Rng seeded_rng(std::uint64_t seed) { return Rng{seed}; }

/// splitmix64-style mixer for deriving independent per-task seeds from
/// (base seed, task index), e.g. one per c in a sweep.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// k distinct indices drawn uniformly from [0, n), in draw order.
std::vector<Index> sample_distinct(Index n, int k, Rng& rng);

} // namespace softclust
