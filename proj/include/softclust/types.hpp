#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace softclust {

// Points are rows; row-major storage keeps a point contiguous.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class DistanceKind { euclidean, mahalanobis };
enum class MembershipKind { fuzzy, possibilistic };

/// n x d matrix of observations, one point per row. Immutable after
/// construction; all entries must be finite.
class Dataset {
public:
    explicit Dataset(Matrix points);

    const Matrix& points() const { return points_; }
    Index n() const { return points_.rows(); }
    Index d() const { return points_.cols(); }
    auto row(Index i) const { return points_.row(i); }

private:
    Matrix points_;
};

/// c x n matrix of memberships (fuzzy: columns sum to 1) or typicalities
/// (possibilistic: unconstrained across clusters, but no all-zero column).
class MembershipMatrix {
public:
    static constexpr double kColumnSumTol = 1e-9;

    MembershipMatrix(Matrix u, MembershipKind kind);

    const Matrix& u() const { return u_; }
    MembershipKind kind() const { return kind_; }
    Index c() const { return u_.rows(); }
    Index n() const { return u_.cols(); }

private:
    Matrix u_;
    MembershipKind kind_;
};

/// c x d matrix of cluster representatives, one centroid per row.
class CentroidSet {
public:
    explicit CentroidSet(Matrix theta);

    const Matrix& theta() const { return theta_; }
    Index c() const { return theta_.rows(); }
    Index d() const { return theta_.cols(); }
    auto row(Index j) const { return theta_.row(j); }

private:
    Matrix theta_;
};

struct RunConfig {
    int c = 2;
    double q = 2.0;          // fuzzifier, strictly > 1
    int max_iter = 300;
    double tol = 1e-6;       // max-abs centroid displacement
    std::uint64_t seed = 0;
    DistanceKind distance_kind = DistanceKind::euclidean;

    void validate() const;
};

struct ClusteringResult {
    CentroidSet centroids;
    MembershipMatrix memberships;
    std::vector<int> labels;
    std::vector<double> cost_trace;
    int iterations = 0;
    bool converged = false;
    // PCM may legitimately collapse clusters onto one mode; flagged, not an error.
    bool coincident_centroids = false;
};

std::string to_string(DistanceKind kind);
DistanceKind distance_kind_from_string(const std::string& s);

} // namespace softclust
