#include "softclust/pcm.hpp"

#include "softclust/fcm.hpp"

#include <cmath>

namespace softclust {

namespace {

void check_eta(const Vector& eta, Index c) {
    if (eta.size() != c) throw std::invalid_argument("pcm: eta length mismatch");
    for (Index j = 0; j < c; ++j) {
        if (!(eta(j) > 0.0)) {
            throw std::invalid_argument("pcm: eta_" + std::to_string(j) +
                                        " must be strictly positive");
        }
    }
}

} // namespace

double pcm_cost(const Dataset& data, const CentroidSet& centroids,
                const MembershipMatrix& typicalities, const Vector& eta, double q,
                const Metric& metric) {
    if (typicalities.c() != centroids.c() || typicalities.n() != data.n()) {
        throw std::invalid_argument("pcm_cost: typicality shape mismatch");
    }
    check_eta(eta, centroids.c());
    double cost = 0.0;
    for (Index j = 0; j < centroids.c(); ++j) {
        double penalty = 0.0;
        for (Index i = 0; i < data.n(); ++i) {
            double u = typicalities.u()(j, i);
            cost += std::pow(u, q) * metric.sq(data.row(i), centroids.row(j));
            penalty += std::pow(1.0 - u, q);
        }
        cost += eta(j) * penalty;
    }
    return cost;
}

MembershipMatrix update_typicalities(const Dataset& data, const CentroidSet& centroids,
                                     const Vector& eta, double q, const Metric& metric) {
    if (!(q > 1.0)) throw std::invalid_argument("update_typicalities: q must be > 1");
    check_eta(eta, centroids.c());
    const double expo = 1.0 / (q - 1.0);
    Matrix u(centroids.c(), data.n());
    for (Index i = 0; i < data.n(); ++i) {
        for (Index j = 0; j < centroids.c(); ++j) {
            double ratio = metric.sq(data.row(i), centroids.row(j)) / eta(j);
            u(j, i) = 1.0 / (1.0 + std::pow(ratio, expo));
        }
    }
    return MembershipMatrix(std::move(u), MembershipKind::possibilistic);
}

Vector estimate_eta(const Dataset& data, const ClusteringResult& fcm_result, double q,
                    double K, const Metric& metric) {
    if (fcm_result.memberships.kind() != MembershipKind::fuzzy) {
        throw std::invalid_argument("estimate_eta: needs fuzzy memberships from an FCM run");
    }
    if (!(K > 0.0)) throw std::invalid_argument("estimate_eta: K must be positive");
    const auto& u = fcm_result.memberships.u();
    const auto& centroids = fcm_result.centroids;
    Vector eta(centroids.c());
    for (Index j = 0; j < centroids.c(); ++j) {
        double num = 0.0, den = 0.0;
        for (Index i = 0; i < data.n(); ++i) {
            double w = std::pow(u(j, i), q);
            num += w * metric.sq(data.row(i), centroids.row(j));
            den += w;
        }
        double e = den > 0.0 ? K * num / den : 0.0;
        if (!(e > 0.0)) {
            throw std::runtime_error("estimate_eta: degenerate cluster " + std::to_string(j) +
                                     " (zero scatter)");
        }
        eta(j) = e;
    }
    return eta;
}

ClusteringResult pcm_fit(const Dataset& data, const RunConfig& config, double K,
                         const Metric& metric) {
    config.validate();
    ClusteringResult warm = fcm_fit(data, config, metric);
    Vector eta = estimate_eta(data, warm, config.q, K, metric);

    CentroidSet centroids = warm.centroids;
    MembershipMatrix u = update_typicalities(data, centroids, eta, config.q, metric);
    std::vector<double> trace;
    trace.push_back(pcm_cost(data, centroids, u, eta, config.q, metric));

    int iterations = 0;
    bool converged = false;
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        CentroidSet next = update_centroids(data, u, config.q);
        double shift = (next.theta() - centroids.theta()).cwiseAbs().maxCoeff();
        centroids = std::move(next);
        u = update_typicalities(data, centroids, eta, config.q, metric);
        trace.push_back(pcm_cost(data, centroids, u, eta, config.q, metric));
        iterations = iter;
        if (shift < config.tol) {
            converged = true;
            break;
        }
    }

    // labels by max typicality, ties toward the smaller index
    std::vector<int> labels(static_cast<std::size_t>(data.n()));
    for (Index i = 0; i < data.n(); ++i) {
        int best = 0;
        double best_u = u.u()(0, i);
        for (Index j = 1; j < centroids.c(); ++j) {
            if (u.u()(j, i) > best_u) {
                best_u = u.u()(j, i);
                best = static_cast<int>(j);
            }
        }
        labels[static_cast<std::size_t>(i)] = best;
    }

    bool coincident = false;
    for (Index a = 0; a < centroids.c() && !coincident; ++a) {
        for (Index b = a + 1; b < centroids.c(); ++b) {
            if ((centroids.row(a) - centroids.row(b)).cwiseAbs().maxCoeff() < config.tol) {
                coincident = true;
                break;
            }
        }
    }

    return ClusteringResult{std::move(centroids), std::move(u), std::move(labels),
                            std::move(trace), iterations, converged, coincident};
}

} // namespace softclust
