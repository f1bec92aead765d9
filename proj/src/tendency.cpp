#include "softclust/tendency.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>

namespace softclust {

VatResult vat_order(const DissimilarityMatrix& dmat) {
    const Index n = dmat.n();
    const auto& d = dmat.dmat();

    std::vector<Index> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> visited(static_cast<std::size_t>(n), false);

    // seed: row of the lexicographically smallest argmax entry
    Index seed = 0;
    {
        double best = -1.0;
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                if (d(i, j) > best) {
                    best = d(i, j);
                    seed = i;
                }
            }
        }
    }
    order.push_back(seed);
    visited[static_cast<std::size_t>(seed)] = true;

    // Prim selection: unvisited point nearest to the visited set, smallest
    // index on ties
    for (Index step = 1; step < n; ++step) {
        Index pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Index j = 0; j < n; ++j) {
            if (visited[static_cast<std::size_t>(j)]) continue;
            double nearest = std::numeric_limits<double>::infinity();
            for (Index i : order) nearest = std::min(nearest, d(i, j));
            if (nearest < best) {
                best = nearest;
                pick = j;
            }
        }
        order.push_back(pick);
        visited[static_cast<std::size_t>(pick)] = true;
    }

    Matrix r(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            r(i, j) = d(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);

    return VatResult{std::move(order), DissimilarityMatrix(std::move(r))};
}

DissimilarityMatrix ivat_transform(const DissimilarityMatrix& dmat) {
    const Index n = dmat.n();
    VatResult vat = vat_order(dmat);
    const auto& r = vat.reordered.dmat();

    // recursion over the VAT order: each new point connects to its nearest
    // predecessor; max-edge distances extend through that connection
    Matrix dp = Matrix::Zero(n, n);
    for (Index row = 1; row < n; ++row) {
        Index j = 0;
        double best = r(row, 0);
        for (Index k = 1; k < row; ++k) {
            if (r(row, k) < best) {
                best = r(row, k);
                j = k;
            }
        }
        for (Index c = 0; c < row; ++c) {
            double v = (c == j) ? r(row, j) : std::max(r(row, j), dp(j, c));
            dp(row, c) = v;
            dp(c, row) = v;
        }
    }

    // back to original indices
    Matrix out = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            out(vat.ordering[static_cast<std::size_t>(i)],
                vat.ordering[static_cast<std::size_t>(j)]) = dp(i, j);

    return DissimilarityMatrix(std::move(out));
}

void render_pgm(const DissimilarityMatrix& reordered, const std::filesystem::path& path) {
    const Index n = reordered.n();
    const auto& d = reordered.dmat();
    const double maxv = d.maxCoeff();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_pgm: cannot open " + path.string());
    out << "P5\n" << n << ' ' << n << "\n255\n";
    std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            double v = maxv > 0.0 ? d(i, j) / maxv : 0.0;
            row[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(std::lround(255.0 * v));
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    if (!out) throw std::runtime_error("render_pgm: write failed for " + path.string());
}

} // namespace softclust
