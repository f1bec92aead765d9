#include "softclust/distance.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace softclust {

CovarianceModel::CovarianceModel(Matrix sigma_inv, double regularization)
    : sigma_inv_(std::move(sigma_inv)), regularization_(regularization) {
    if (sigma_inv_.rows() != sigma_inv_.cols() || sigma_inv_.rows() < 1) {
        throw std::invalid_argument("CovarianceModel: sigma_inv must be square");
    }
    if (regularization_ < 0.0) {
        throw std::invalid_argument("CovarianceModel: regularization must be >= 0");
    }
    if (!sigma_inv_.allFinite()) {
        throw std::invalid_argument("CovarianceModel: non-finite entry");
    }
    double asym = (sigma_inv_ - sigma_inv_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw std::invalid_argument("CovarianceModel: sigma_inv not symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt{Eigen::MatrixXd(sigma_inv_)};
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("CovarianceModel: sigma_inv not positive-definite");
    }
}

double sq_euclidean(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sq_euclidean: dimension mismatch");
    }
    return (a - b).squaredNorm();
}

double mahalanobis_sq(const Vector& a, const Vector& b, const CovarianceModel& cov) {
    if (a.size() != b.size() || a.size() != cov.d()) {
        throw std::invalid_argument("mahalanobis_sq: dimension mismatch");
    }
    Vector diff = a - b;
    return diff.dot(cov.sigma_inv() * diff);
}

CovarianceModel fit_covariance(const Dataset& data, double regularization) {
    if (data.n() < 2) {
        throw std::invalid_argument("fit_covariance: need at least 2 points");
    }
    Eigen::MatrixXd x = data.points();
    Eigen::RowVectorXd mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - mean;
    Eigen::MatrixXd cov = centered.transpose() * centered / double(data.n() - 1);
    cov.diagonal().array() += regularization;

    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("fit_covariance: covariance singular after regularization");
    }
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(data.d(), data.d()));
    // enforce exact symmetry lost to rounding in the solve
    Matrix sym = (inv + inv.transpose()) / 2.0;
    return CovarianceModel(std::move(sym), regularization);
}

double Metric::sq(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                  const Eigen::Ref<const Eigen::RowVectorXd>& b) const {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Metric::sq: dimension mismatch");
    }
    if (kind_ == DistanceKind::euclidean) {
        return (a - b).squaredNorm();
    }
    Eigen::RowVectorXd diff = a - b;
    return diff * cov_->sigma_inv() * diff.transpose();
}

double Metric::dist(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                    const Eigen::Ref<const Eigen::RowVectorXd>& b) const {
    return std::sqrt(std::max(0.0, sq(a, b)));
}

DissimilarityMatrix::DissimilarityMatrix(Matrix dmat) : dmat_(std::move(dmat)) {
    if (dmat_.rows() != dmat_.cols() || dmat_.rows() < 1) {
        throw std::invalid_argument("DissimilarityMatrix: must be square, n >= 1");
    }
    if (!dmat_.allFinite()) {
        throw std::invalid_argument("DissimilarityMatrix: non-finite entry");
    }
    if ((dmat_.array() < 0.0).any()) {
        throw std::invalid_argument("DissimilarityMatrix: negative entry");
    }
    for (Index i = 0; i < dmat_.rows(); ++i) {
        if (dmat_(i, i) != 0.0) {
            throw std::invalid_argument("DissimilarityMatrix: nonzero diagonal at " +
                                        std::to_string(i));
        }
        for (Index j = i + 1; j < dmat_.cols(); ++j) {
            if (dmat_(i, j) != dmat_(j, i)) {
                throw std::invalid_argument("DissimilarityMatrix: not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

DissimilarityMatrix pairwise_matrix(const Dataset& data, DistanceKind kind,
                                    const std::optional<CovarianceModel>& cov) {
    if (kind == DistanceKind::mahalanobis && !cov) {
        throw std::invalid_argument("pairwise_matrix: mahalanobis requires a covariance model");
    }
    Metric metric = kind == DistanceKind::euclidean ? Metric::euclidean()
                                                    : Metric::mahalanobis(*cov);
    Index n = data.n();
    Matrix d = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            double v = metric.dist(data.row(i), data.row(j));
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return DissimilarityMatrix(std::move(d));
}

} // namespace softclust
