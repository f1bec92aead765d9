#pragma once

#include "softclust/types.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace softclust {

struct ClusterSpec {
    Vector center;
    Vector axis_spreads;   // per-axis standard deviations, all > 0
    double rotation = 0.0; // radians, applied to the first two axes (d = 2)
    int count = 0;
};

struct NoiseSpec {
    int count = 0;
    Vector box_min;
    Vector box_max;
};

struct Scenario {
    std::string name;
    std::vector<ClusterSpec> clusters;
    NoiseSpec noise;

    void validate() const;
};

struct LabeledDataset {
    Dataset data;
    std::vector<int> truth;  // cluster index, -1 for noise
};

/// Axis-aligned Gaussian per cluster, rotated and translated; uniform noise
/// in the box. Points appear cluster by cluster, noise last.
LabeledDataset generate(const Scenario& scenario, std::uint64_t seed);

/// Appends one point labeled -1.
LabeledDataset add_outlier(const LabeledDataset& data, const Vector& position);

/// The committed scenario registry: two_separate, two_dense_elliptic,
/// two_diff_size, three_close, four_clusters, five_clusters.
const std::vector<Scenario>& builtin_scenarios();
const Scenario& scenario_by_name(const std::string& name);
std::vector<std::string> scenario_names();

/// Plain-text scenario definitions, one block per scenario:
///   scenario <name>
///   cluster center=<v> spread=<v> rotation=<r> count=<n>
///   noise count=<n> box=<min...,max...>
std::vector<Scenario> parse_scenario_file(const std::filesystem::path& path);

} // namespace softclust
