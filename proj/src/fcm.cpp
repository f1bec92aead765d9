#include "softclust/fcm.hpp"

#include "softclust/rng.hpp"

#include <cmath>
#include <limits>

namespace softclust {

namespace {

constexpr double kCoincidenceSq = 1e-24;  // d^2 below this counts as "at the centroid"
constexpr double kEmptyWeight = 1e-30;

void check_dims(const Dataset& data, const CentroidSet& centroids) {
    if (data.d() != centroids.d()) {
        throw std::invalid_argument("fcm: dataset and centroids disagree on dimension");
    }
}

} // namespace

double fcm_cost(const Dataset& data, const CentroidSet& centroids,
                const MembershipMatrix& memberships, double q, const Metric& metric) {
    check_dims(data, centroids);
    if (memberships.c() != centroids.c() || memberships.n() != data.n()) {
        throw std::invalid_argument("fcm_cost: membership shape mismatch");
    }
    double cost = 0.0;
    for (Index i = 0; i < data.n(); ++i) {
        for (Index j = 0; j < centroids.c(); ++j) {
            cost += std::pow(memberships.u()(j, i), q) *
                    metric.sq(data.row(i), centroids.row(j));
        }
    }
    return cost;
}

MembershipMatrix update_memberships(const Dataset& data, const CentroidSet& centroids,
                                    double q, const Metric& metric) {
    check_dims(data, centroids);
    if (!(q > 1.0)) throw std::invalid_argument("update_memberships: q must be > 1");

    const Index n = data.n();
    const Index c = centroids.c();
    const double expo = 1.0 / (q - 1.0);
    Matrix u(c, n);
    std::vector<double> d2(static_cast<std::size_t>(c));

    for (Index i = 0; i < n; ++i) {
        int coincident = 0;
        for (Index j = 0; j < c; ++j) {
            d2[static_cast<std::size_t>(j)] = metric.sq(data.row(i), centroids.row(j));
            if (d2[static_cast<std::size_t>(j)] < kCoincidenceSq) ++coincident;
        }
        if (coincident > 0) {
            for (Index j = 0; j < c; ++j) {
                u(j, i) = d2[static_cast<std::size_t>(j)] < kCoincidenceSq
                              ? 1.0 / coincident
                              : 0.0;
            }
            continue;
        }
        // u_ij = d2_j^{-e} / sum_k d2_k^{-e}
        double total = 0.0;
        for (Index j = 0; j < c; ++j) {
            double w = std::pow(d2[static_cast<std::size_t>(j)], -expo);
            u(j, i) = w;
            total += w;
        }
        u.col(i) /= total;
    }
    return MembershipMatrix(std::move(u), MembershipKind::fuzzy);
}

CentroidSet update_centroids(const Dataset& data, const MembershipMatrix& memberships,
                             double q) {
    if (memberships.n() != data.n()) {
        throw std::invalid_argument("update_centroids: membership shape mismatch");
    }
    const Index c = memberships.c();
    Matrix theta = Matrix::Zero(c, data.d());
    for (Index j = 0; j < c; ++j) {
        double weight_sum = 0.0;
        Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(data.d());
        for (Index i = 0; i < data.n(); ++i) {
            double w = std::pow(memberships.u()(j, i), q);
            weight_sum += w;
            acc += w * data.row(i);
        }
        if (weight_sum < kEmptyWeight) {
            throw std::runtime_error("update_centroids: cluster " + std::to_string(j) +
                                     " is empty (weight sum ~0)");
        }
        theta.row(j) = acc / weight_sum;
    }
    return CentroidSet(std::move(theta));
}

std::vector<int> harden_by_nearest_centroid(const Dataset& data,
                                            const CentroidSet& centroids,
                                            const Metric& metric) {
    check_dims(data, centroids);
    std::vector<int> labels(static_cast<std::size_t>(data.n()));
    for (Index i = 0; i < data.n(); ++i) {
        int best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (Index j = 0; j < centroids.c(); ++j) {
            double d = metric.sq(data.row(i), centroids.row(j));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        labels[static_cast<std::size_t>(i)] = best;
    }
    return labels;
}

ClusteringResult fcm_fit(const Dataset& data, const RunConfig& config, const Metric& metric,
                         const std::optional<CentroidSet>& init) {
    config.validate();
    if (config.c > data.n()) {
        throw std::invalid_argument("fcm_fit: c exceeds the number of points");
    }

    CentroidSet centroids = [&] {
        if (init) {
            if (init->c() != config.c || init->d() != data.d()) {
                throw std::invalid_argument("fcm_fit: init centroid shape mismatch");
            }
            return *init;
        }
        Rng rng = seeded_rng(config.seed);
        auto idx = sample_distinct(data.n(), config.c, rng);
        Matrix theta(config.c, data.d());
        for (int j = 0; j < config.c; ++j) theta.row(j) = data.row(idx[size_t(j)]);
        return CentroidSet(std::move(theta));
    }();

    MembershipMatrix memberships = update_memberships(data, centroids, config.q, metric);
    std::vector<double> trace;
    trace.push_back(fcm_cost(data, centroids, memberships, config.q, metric));

    int iterations = 0;
    bool converged = false;
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        CentroidSet next = update_centroids(data, memberships, config.q);
        double shift = (next.theta() - centroids.theta()).cwiseAbs().maxCoeff();
        centroids = std::move(next);
        memberships = update_memberships(data, centroids, config.q, metric);
        trace.push_back(fcm_cost(data, centroids, memberships, config.q, metric));
        iterations = iter;
        if (shift < config.tol) {
            converged = true;
            break;
        }
    }

    std::vector<int> labels = harden_by_nearest_centroid(data, centroids, metric);
    return ClusteringResult{std::move(centroids), std::move(memberships), std::move(labels),
                            std::move(trace), iterations, converged, false};
}

} // namespace softclust
