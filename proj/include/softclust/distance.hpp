#pragma once

#include "softclust/types.hpp"

#include <optional>

namespace softclust {

/// Inverse covariance plus the diagonal regularization that produced it.
/// Construction verifies symmetry (1e-10) and positive definiteness.
class CovarianceModel {
public:
    CovarianceModel(Matrix sigma_inv, double regularization);

    const Matrix& sigma_inv() const { return sigma_inv_; }
    double regularization() const { return regularization_; }
    Index d() const { return sigma_inv_.rows(); }

private:
    Matrix sigma_inv_;
    double regularization_;
};

double sq_euclidean(const Vector& a, const Vector& b);
double mahalanobis_sq(const Vector& a, const Vector& b, const CovarianceModel& cov);

/// Sample covariance (n-1 denominator) with `regularization` added to the
/// diagonal, then inverted. Throws if still not positive-definite.
CovarianceModel fit_covariance(const Dataset& data, double regularization);

/// Distance used by the fit/validation paths: squared form for the cost and
/// update equations, non-squared for dissimilarity matrices and indices.
class Metric {
public:
    static Metric euclidean() { return Metric{DistanceKind::euclidean, std::nullopt}; }
    static Metric mahalanobis(CovarianceModel cov) {
        return Metric{DistanceKind::mahalanobis, std::move(cov)};
    }

    DistanceKind kind() const { return kind_; }
    const std::optional<CovarianceModel>& covariance() const { return cov_; }

    double sq(const Eigen::Ref<const Eigen::RowVectorXd>& a,
              const Eigen::Ref<const Eigen::RowVectorXd>& b) const;
    double dist(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                const Eigen::Ref<const Eigen::RowVectorXd>& b) const;

private:
    Metric(DistanceKind kind, std::optional<CovarianceModel> cov)
        : kind_(kind), cov_(std::move(cov)) {}

    DistanceKind kind_;
    std::optional<CovarianceModel> cov_;
};

/// n x n symmetric nonnegative matrix with zero diagonal.
class DissimilarityMatrix {
public:
    explicit DissimilarityMatrix(Matrix dmat);

    const Matrix& dmat() const { return dmat_; }
    Index n() const { return dmat_.rows(); }
    double operator()(Index i, Index j) const { return dmat_(i, j); }

private:
    Matrix dmat_;
};

/// Pairwise non-squared distances. Mahalanobis requires a covariance model.
DissimilarityMatrix pairwise_matrix(const Dataset& data, DistanceKind kind,
                                    const std::optional<CovarianceModel>& cov = std::nullopt);

} // namespace softclust
