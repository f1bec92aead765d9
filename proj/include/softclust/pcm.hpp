#pragma once

#include "softclust/distance.hpp"
#include "softclust/types.hpp"

namespace softclust {

/// J = sum_i sum_j u_ij^q d^2(x_i,theta_j) + sum_j eta_j sum_i (1-u_ij)^q
double pcm_cost(const Dataset& data, const CentroidSet& centroids,
                const MembershipMatrix& typicalities, const Vector& eta, double q,
                const Metric& metric);

/// u_ij = 1 / (1 + (d^2(x_i,theta_j)/eta_j)^(1/(q-1))); u = 1 at the centroid.
/// Clusters are independent of each other.
MembershipMatrix update_typicalities(const Dataset& data, const CentroidSet& centroids,
                                     const Vector& eta, double q, const Metric& metric);

/// eta_j = K * sum_i u_ij^q d^2(x_i,theta_j) / sum_i u_ij^q from a preliminary
/// FCM fit. Throws if any eta_j fails to be strictly positive.
Vector estimate_eta(const Dataset& data, const ClusteringResult& fcm_result, double q,
                    double K, const Metric& metric);

/// FCM warm start, eta estimated once and frozen, then alternating
/// typicality / weighted-mean centroid updates. Labels by max typicality.
ClusteringResult pcm_fit(const Dataset& data, const RunConfig& config, double K,
                         const Metric& metric);

} // namespace softclust
