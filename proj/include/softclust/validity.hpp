#pragma once

#include "softclust/distance.hpp"
#include "softclust/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace softclust {

enum class Algorithm { fcm, pcm };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/// PC = (1/n) sum of squared entries. In [1/c, 1] for fuzzy memberships;
/// may exceed 1 for possibilistic typicalities.
double partition_coefficient(const MembershipMatrix& u);

struct DunnResult {
    double value = 0.0;
    bool degenerate = false;  // all clusters singletons: value is +inf
};

/// DI = min inter-cluster single-linkage distance / max cluster diameter.
/// Throws with fewer than 2 non-empty clusters.
DunnResult dunn_index(const Dataset& data, const std::vector<int>& labels,
                      const Metric& metric);

/// Davies-Bouldin over hardened labels and fitted centroids: scatter
/// S_i = ((1/|A_i|) sum d(x, v_i)^q)^(1/q), R_i = max_j (S_i+S_j)/d(v_i,v_j),
/// DBI = mean R_i. Throws on empty clusters or coincident centroids.
double davies_bouldin(const Dataset& data, const std::vector<int>& labels,
                      const CentroidSet& centroids, double scatter_q, const Metric& metric);

struct ValidityRow {
    int c = 0;
    double pc = 0.0;
    double di = 0.0;
    double dbi = 0.0;
    Algorithm algorithm = Algorithm::fcm;
    std::uint64_t seed = 0;
    std::vector<std::string> flags;  // "failed", "di_degenerate", "di_failed",
                                     // "dbi_failed", "pc_unnormalized"
    bool failed = false;
    std::string error;
};

struct ValidityReport {
    std::vector<ValidityRow> rows;   // sorted by c ascending, c unique
};

/// One fit per candidate c with a seed derived from (base seed, c). Per-row
/// failures are flagged and the sweep continues.
ValidityReport sweep_c(const Dataset& data, Algorithm algorithm, int c_min, int c_max,
                       const RunConfig& base, const Metric& metric, double K = 1.0);

std::string report_to_json(const ValidityReport& report);
std::string report_to_csv(const ValidityReport& report);
void write_report(const ValidityReport& report, const std::filesystem::path& json_path,
                  const std::filesystem::path& csv_path);

} // namespace softclust
