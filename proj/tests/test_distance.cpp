#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "softclust/distance.hpp"
#include "softclust/rng.hpp"

#include <cmath>

using namespace softclust;

namespace {

Vector vec(std::initializer_list<double> vals) {
    Vector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (double x : vals) v(i++) = x;
    return v;
}

} // namespace

TEST_CASE("sq_euclidean hand values") {
    CHECK(sq_euclidean(vec({0, 0}), vec({0, 0})) == 0.0);
    CHECK(sq_euclidean(vec({0, 0}), vec({3, 4})) == 25.0);
    CHECK(sq_euclidean(vec({1}), vec({-1})) == 4.0);
    CHECK_THROWS_AS(sq_euclidean(vec({1}), vec({1, 2})), std::invalid_argument);
}

TEST_CASE("sq_euclidean symmetry and triangle inequality on random triples") {
    Rng rng = seeded_rng(11);
    std::uniform_real_distribution<double> uni(-5, 5);
    for (int t = 0; t < 200; ++t) {
        Vector a(3), b(3), c(3);
        for (int k = 0; k < 3; ++k) {
            a(k) = uni(rng);
            b(k) = uni(rng);
            c(k) = uni(rng);
        }
        CHECK(sq_euclidean(a, b) == sq_euclidean(b, a));
        double ab = std::sqrt(sq_euclidean(a, b));
        double bc = std::sqrt(sq_euclidean(b, c));
        double ac = std::sqrt(sq_euclidean(a, c));
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("mahalanobis_sq hand values") {
    Matrix id = Matrix::Identity(2, 2);
    CovarianceModel ident(id, 0.0);
    CHECK(mahalanobis_sq(vec({1, 2}), vec({1, 2}), ident) == 0.0);
    CHECK(mahalanobis_sq(vec({0, 0}), vec({3, 4}), ident) == doctest::Approx(25.0));

    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 4.0;
    diag(1, 1) = 1.0;
    CovarianceModel model(diag, 0.0);
    CHECK(mahalanobis_sq(vec({0, 0}), vec({1, 1}), model) == doctest::Approx(5.0));
    CHECK_THROWS_AS(mahalanobis_sq(vec({0, 0, 0}), vec({1, 1, 1}), model),
                    std::invalid_argument);
}

TEST_CASE("mahalanobis with identity equals squared euclidean on random inputs") {
    CovarianceModel ident(Matrix::Identity(3, 3), 0.0);
    Rng rng = seeded_rng(5);
    std::uniform_real_distribution<double> uni(-10, 10);
    for (int t = 0; t < 100; ++t) {
        Vector a(3), b(3);
        for (int k = 0; k < 3; ++k) {
            a(k) = uni(rng);
            b(k) = uni(rng);
        }
        CHECK(std::abs(mahalanobis_sq(a, b, ident) - sq_euclidean(a, b)) <= 1e-12 *
                  std::max(1.0, sq_euclidean(a, b)));
    }
}

TEST_CASE("CovarianceModel rejects asymmetric and indefinite matrices") {
    Matrix asym(2, 2);
    asym << 1, 0.5, 0.2, 1;
    CHECK_THROWS_AS(CovarianceModel(asym, 0.0), std::invalid_argument);

    Matrix indef(2, 2);
    indef << 1, 2, 2, 1;  // eigenvalues 3, -1
    CHECK_THROWS_AS(CovarianceModel(indef, 0.0), std::invalid_argument);
}

TEST_CASE("fit_covariance on a large isotropic sample is near identity") {
    Rng rng = seeded_rng(123);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix pts(10000, 2);
    for (Index i = 0; i < pts.rows(); ++i)
        for (Index j = 0; j < 2; ++j) pts(i, j) = gauss(rng);
    CovarianceModel model = fit_covariance(Dataset(pts), 0.0);
    CHECK((model.sigma_inv() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 0.1);
}

TEST_CASE("fit_covariance: collinear points need regularization") {
    Matrix pts(4, 2);
    pts << 0, 0, 1, 1, 2, 2, 3, 3;
    Dataset data(pts);
    CHECK_THROWS_AS(fit_covariance(data, 0.0), std::runtime_error);
    CHECK_NOTHROW(fit_covariance(data, 1e-3));
}

TEST_CASE("fit_covariance requires n >= 2") {
    Matrix pts(1, 2);
    pts << 0, 0;
    CHECK_THROWS_AS(fit_covariance(Dataset(pts), 0.0), std::invalid_argument);
}

TEST_CASE("pairwise_matrix hand example and degenerate n=1") {
    Matrix pts(3, 1);
    pts << 0, 3, 1;
    DissimilarityMatrix d = pairwise_matrix(Dataset(pts), DistanceKind::euclidean);
    Matrix expected(3, 3);
    expected << 0, 3, 1, 3, 0, 2, 1, 2, 0;
    CHECK((d.dmat() - expected).cwiseAbs().maxCoeff() <= 1e-12);

    Matrix single(1, 2);
    single << 5, 5;
    DissimilarityMatrix one = pairwise_matrix(Dataset(single), DistanceKind::euclidean);
    CHECK(one.n() == 1);
    CHECK(one(0, 0) == 0.0);
}

TEST_CASE("pairwise_matrix is exactly its own transpose and consistent with sq_euclidean") {
    Rng rng = seeded_rng(77);
    std::uniform_real_distribution<double> uni(-3, 3);
    Matrix pts(20, 3);
    for (Index i = 0; i < pts.rows(); ++i)
        for (Index j = 0; j < 3; ++j) pts(i, j) = uni(rng);
    Dataset data(pts);
    DissimilarityMatrix d = pairwise_matrix(data, DistanceKind::euclidean);
    CHECK((d.dmat() - d.dmat().transpose()).cwiseAbs().maxCoeff() == 0.0);
    for (Index i = 0; i < data.n(); ++i) {
        for (Index j = 0; j < data.n(); ++j) {
            double sq = sq_euclidean(pts.row(i).transpose(), pts.row(j).transpose());
            CHECK(std::abs(d(i, j) * d(i, j) - sq) <= 1e-9);
        }
    }
}

TEST_CASE("pairwise_matrix requires a covariance model for mahalanobis") {
    Matrix pts(2, 2);
    pts << 0, 0, 1, 1;
    CHECK_THROWS_AS(pairwise_matrix(Dataset(pts), DistanceKind::mahalanobis),
                    std::invalid_argument);
}

TEST_CASE("DissimilarityMatrix validation") {
    Matrix bad(2, 2);
    bad << 0, 1, 2, 0;
    CHECK_THROWS_AS(DissimilarityMatrix{bad}, std::invalid_argument);
    bad << 1, 2, 2, 0;
    CHECK_THROWS_AS(DissimilarityMatrix{bad}, std::invalid_argument);
    bad << 0, -1, -1, 0;
    CHECK_THROWS_AS(DissimilarityMatrix{bad}, std::invalid_argument);
}
