#include "softclust/types.hpp"

#include <cmath>

namespace softclust {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
}

} // namespace

Dataset::Dataset(Matrix points) : points_(std::move(points)) {
    if (points_.rows() < 1 || points_.cols() < 1) {
        throw std::invalid_argument("Dataset: need n >= 1 and d >= 1");
    }
    require_finite(points_, "Dataset");
}

MembershipMatrix::MembershipMatrix(Matrix u, MembershipKind kind)
    : u_(std::move(u)), kind_(kind) {
    if (u_.rows() < 1 || u_.cols() < 1) {
        throw std::invalid_argument("MembershipMatrix: empty matrix");
    }
    require_finite(u_, "MembershipMatrix");
    if ((u_.array() < 0.0).any() || (u_.array() > 1.0).any()) {
        throw std::invalid_argument("MembershipMatrix: entries must lie in [0, 1]");
    }
    if (kind_ == MembershipKind::fuzzy) {
        for (Index i = 0; i < u_.cols(); ++i) {
            double s = u_.col(i).sum();
            if (std::abs(s - 1.0) > kColumnSumTol) {
                throw std::invalid_argument("MembershipMatrix: fuzzy column " +
                                            std::to_string(i) + " sums to " +
                                            std::to_string(s) + ", expected 1");
            }
        }
    } else {
        for (Index i = 0; i < u_.cols(); ++i) {
            if ((u_.col(i).array() <= 0.0).all()) {
                throw std::invalid_argument(
                    "MembershipMatrix: possibilistic column " + std::to_string(i) +
                    " is all zero");
            }
        }
    }
}

CentroidSet::CentroidSet(Matrix theta) : theta_(std::move(theta)) {
    if (theta_.rows() < 1 || theta_.cols() < 1) {
        throw std::invalid_argument("CentroidSet: need c >= 1 and d >= 1");
    }
    require_finite(theta_, "CentroidSet");
}

void RunConfig::validate() const {
    if (c < 2) throw std::invalid_argument("RunConfig: c must be >= 2");
    if (!(q > 1.0)) throw std::invalid_argument("RunConfig: fuzzifier q must be > 1");
    if (max_iter < 1) throw std::invalid_argument("RunConfig: max_iter must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("RunConfig: tol must be positive");
}

std::string to_string(DistanceKind kind) {
    return kind == DistanceKind::euclidean ? "euclidean" : "mahalanobis";
}

DistanceKind distance_kind_from_string(const std::string& s) {
    if (s == "euclidean") return DistanceKind::euclidean;
    if (s == "mahalanobis") return DistanceKind::mahalanobis;
    throw std::invalid_argument("unknown distance kind: " + s);
}

} // namespace softclust
