#pragma once

#include "softclust/distance.hpp"
#include "softclust/types.hpp"

#include <optional>
#include <vector>

namespace softclust {

/// J = sum_i sum_j u_ij^q d^2(x_i, theta_j)
double fcm_cost(const Dataset& data, const CentroidSet& centroids,
                const MembershipMatrix& memberships, double q, const Metric& metric);

/// u_ij = 1 / sum_k (d^2(x_i,theta_j) / d^2(x_i,theta_k))^(1/(q-1)).
/// A point coinciding with m >= 1 centroids gets 1/m on each and 0 elsewhere.
MembershipMatrix update_memberships(const Dataset& data, const CentroidSet& centroids,
                                    double q, const Metric& metric);

/// theta_j = sum_i u_ij^q x_i / sum_i u_ij^q. Throws on an empty cluster
/// (weight sum below 1e-30).
CentroidSet update_centroids(const Dataset& data, const MembershipMatrix& memberships,
                             double q);

/// labels[i] = argmin_j d(x_i, theta_j), ties toward the smaller index.
std::vector<int> harden_by_nearest_centroid(const Dataset& data,
                                            const CentroidSet& centroids,
                                            const Metric& metric);

/// Alternating minimization from a seeded initialization (c distinct data
/// points) until the max-abs centroid displacement drops below config.tol or
/// max_iter is reached. `init` overrides the seeded initialization when given.
ClusteringResult fcm_fit(const Dataset& data, const RunConfig& config, const Metric& metric,
                         const std::optional<CentroidSet>& init = std::nullopt);

} // namespace softclust
