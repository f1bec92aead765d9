#pragma once

#include "softclust/distance.hpp"

#include <filesystem>
#include <vector>

namespace softclust {

struct VatResult {
    std::vector<Index> ordering;     // permutation of [0, n)
    DissimilarityMatrix reordered;   // reordered(i,j) = input(ordering[i], ordering[j])
};

/// Prim-style MST ordering: start from the row of the lexicographically
/// smallest global-max entry, then repeatedly take the unvisited point
/// nearest to the visited set (ties toward the smallest index).
VatResult vat_order(const DissimilarityMatrix& dmat);

/// Min-max path distance transform: D'(i,j) = min over paths i->j of the
/// largest edge on the path. Computed by the O(n^2) recursion over the VAT
/// order; result is returned in the original index order.
DissimilarityMatrix ivat_transform(const DissimilarityMatrix& dmat);

/// Binary PGM (P5), 8-bit, linear scaling by the global max. An all-zero
/// matrix renders all black.
void render_pgm(const DissimilarityMatrix& reordered, const std::filesystem::path& path);

} // namespace softclust
