#include "softclust/rng.hpp"

#include <stdexcept>

namespace softclust {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over base advanced by the golden-ratio increment.
    std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<Index> sample_distinct(Index n, int k, Rng& rng) {
    if (k < 0 || static_cast<Index>(k) > n) {
        throw std::invalid_argument("sample_distinct: k out of range");
    }
    std::vector<Index> picked;
    picked.reserve(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    while (static_cast<int>(picked.size()) < k) {
        std::uniform_int_distribution<Index> dist(0, n - 1);
        Index i = dist(rng);
        if (!used[static_cast<std::size_t>(i)]) {
            used[static_cast<std::size_t>(i)] = true;
            picked.push_back(i);
        }
    }
    return picked;
}

} // namespace softclust
