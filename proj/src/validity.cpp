#include "softclust/validity.hpp"

#include "softclust/fcm.hpp"
#include "softclust/pcm.hpp"
#include "softclust/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace softclust {

std::string to_string(Algorithm a) { return a == Algorithm::fcm ? "fcm" : "pcm"; }

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "fcm") return Algorithm::fcm;
    if (s == "pcm") return Algorithm::pcm;
    throw std::invalid_argument("unknown algorithm: " + s);
}

double partition_coefficient(const MembershipMatrix& u) {
    return u.u().array().square().sum() / double(u.n());
}

namespace {

std::vector<std::vector<Index>> group_by_label(const std::vector<int>& labels) {
    std::map<int, std::vector<Index>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        groups[labels[i]].push_back(static_cast<Index>(i));
    }
    std::vector<std::vector<Index>> out;
    for (auto& [label, members] : groups) out.push_back(std::move(members));
    return out;
}

} // namespace

DunnResult dunn_index(const Dataset& data, const std::vector<int>& labels,
                      const Metric& metric) {
    if (labels.size() != static_cast<std::size_t>(data.n())) {
        throw std::invalid_argument("dunn_index: label count mismatch");
    }
    auto groups = group_by_label(labels);
    if (groups.size() < 2) {
        throw std::invalid_argument("dunn_index: need at least 2 non-empty clusters");
    }

    double max_diameter = 0.0;
    for (const auto& g : groups) {
        for (std::size_t a = 0; a < g.size(); ++a) {
            for (std::size_t b = a + 1; b < g.size(); ++b) {
                max_diameter = std::max(max_diameter, metric.dist(data.row(g[a]), data.row(g[b])));
            }
        }
    }

    double min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < groups.size(); ++p) {
        for (std::size_t r = p + 1; r < groups.size(); ++r) {
            for (Index a : groups[p]) {
                for (Index b : groups[r]) {
                    min_separation = std::min(min_separation, metric.dist(data.row(a), data.row(b)));
                }
            }
        }
    }

    if (max_diameter == 0.0) {
        return DunnResult{std::numeric_limits<double>::infinity(), true};
    }
    return DunnResult{min_separation / max_diameter, false};
}

double davies_bouldin(const Dataset& data, const std::vector<int>& labels,
                      const CentroidSet& centroids, double scatter_q, const Metric& metric) {
    if (labels.size() != static_cast<std::size_t>(data.n())) {
        throw std::invalid_argument("davies_bouldin: label count mismatch");
    }
    if (centroids.c() < 2) {
        throw std::invalid_argument("davies_bouldin: need c >= 2");
    }
    if (!(scatter_q > 0.0)) {
        throw std::invalid_argument("davies_bouldin: scatter_q must be positive");
    }
    const Index c = centroids.c();

    std::vector<double> scatter(static_cast<std::size_t>(c), 0.0);
    std::vector<Index> count(static_cast<std::size_t>(c), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int j = labels[i];
        if (j < 0 || j >= c) throw std::invalid_argument("davies_bouldin: label out of range");
        scatter[static_cast<std::size_t>(j)] +=
            std::pow(metric.dist(data.row(static_cast<Index>(i)), centroids.row(j)), scatter_q);
        ++count[static_cast<std::size_t>(j)];
    }
    for (Index j = 0; j < c; ++j) {
        if (count[static_cast<std::size_t>(j)] == 0) {
            throw std::runtime_error("davies_bouldin: cluster " + std::to_string(j) +
                                     " is empty");
        }
        scatter[static_cast<std::size_t>(j)] = std::pow(
            scatter[static_cast<std::size_t>(j)] / double(count[static_cast<std::size_t>(j)]),
            1.0 / scatter_q);
    }

    double total = 0.0;
    for (Index i = 0; i < c; ++i) {
        double worst = 0.0;
        for (Index j = 0; j < c; ++j) {
            if (j == i) continue;
            double sep = metric.dist(centroids.row(i), centroids.row(j));
            if (sep < 1e-12) {
                throw std::runtime_error("davies_bouldin: coincident centroids " +
                                         std::to_string(i) + " and " + std::to_string(j));
            }
            worst = std::max(worst, (scatter[static_cast<std::size_t>(i)] +
                                     scatter[static_cast<std::size_t>(j)]) /
                                        sep);
        }
        total += worst;
    }
    return total / double(c);
}

ValidityReport sweep_c(const Dataset& data, Algorithm algorithm, int c_min, int c_max,
                       const RunConfig& base, const Metric& metric, double K) {
    if (c_min < 2 || c_min > c_max || c_max > data.n()) {
        throw std::invalid_argument("sweep_c: need 2 <= c_min <= c_max <= n");
    }
    ValidityReport report;
    for (int c = c_min; c <= c_max; ++c) {
        ValidityRow row;
        row.c = c;
        row.algorithm = algorithm;
        RunConfig cfg = base;
        cfg.c = c;
        cfg.seed = derive_seed(base.seed, static_cast<std::uint64_t>(c));
        row.seed = cfg.seed;
        try {
            ClusteringResult fit = algorithm == Algorithm::fcm
                                       ? fcm_fit(data, cfg, metric)
                                       : pcm_fit(data, cfg, K, metric);
            row.pc = partition_coefficient(fit.memberships);
            if (algorithm == Algorithm::pcm) row.flags.push_back("pc_unnormalized");
            try {
                DunnResult di = dunn_index(data, fit.labels, metric);
                row.di = di.value;
                if (di.degenerate) row.flags.push_back("di_degenerate");
            } catch (const std::exception&) {
                row.di = std::numeric_limits<double>::quiet_NaN();
                row.flags.push_back("di_failed");
            }
            try {
                row.dbi = davies_bouldin(data, fit.labels, fit.centroids, 2.0, metric);
            } catch (const std::exception&) {
                row.dbi = std::numeric_limits<double>::quiet_NaN();
                row.flags.push_back("dbi_failed");
            }
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
            row.flags.push_back("failed");
            row.pc = row.di = row.dbi = std::numeric_limits<double>::quiet_NaN();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

nlohmann::json value_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

std::string value_or_empty(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

} // namespace

std::string report_to_json(const ValidityReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row;
        row["c"] = r.c;
        row["pc"] = value_or_null(r.pc);
        row["di"] = value_or_null(r.di);
        row["dbi"] = value_or_null(r.dbi);
        row["algorithm"] = to_string(r.algorithm);
        row["seed"] = r.seed;
        row["flags"] = r.flags;
        row["failed"] = r.failed;
        if (r.failed) row["error"] = r.error;
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

std::string report_to_csv(const ValidityReport& report) {
    std::ostringstream out;
    out << "c,pc,di,dbi,flags\n";
    for (const auto& r : report.rows) {
        out << r.c << ',' << value_or_empty(r.pc) << ',' << value_or_empty(r.di) << ','
            << value_or_empty(r.dbi) << ',';
        for (std::size_t i = 0; i < r.flags.size(); ++i) {
            if (i) out << ';';
            out << r.flags[i];
        }
        out << '\n';
    }
    return out.str();
}

void write_report(const ValidityReport& report, const std::filesystem::path& json_path,
                  const std::filesystem::path& csv_path) {
    std::ofstream j(json_path);
    if (!j) throw std::runtime_error("write_report: cannot open " + json_path.string());
    j << report_to_json(report);
    std::ofstream c(csv_path);
    if (!c) throw std::runtime_error("write_report: cannot open " + csv_path.string());
    c << report_to_csv(report);
}

} // namespace softclust
