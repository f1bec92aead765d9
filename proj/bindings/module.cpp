#include "softclust/csv.hpp"
#include "softclust/datagen.hpp"
#include "softclust/distance.hpp"
#include "softclust/fcm.hpp"
#include "softclust/pcm.hpp"
#include "softclust/tendency.hpp"
#include "softclust/validity.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace softclust;

namespace {

Metric metric_for(const Dataset& data, const std::string& name) {
    DistanceKind kind = distance_kind_from_string(name);
    if (kind == DistanceKind::euclidean) return Metric::euclidean();
    Eigen::MatrixXd x = data.points();
    Eigen::RowVectorXd mean = x.colwise().mean();
    double trace =
        (x.rowwise() - mean).squaredNorm() / double(std::max<Index>(1, data.n() - 1));
    return Metric::mahalanobis(fit_covariance(data, 1e-9 * trace / double(data.d())));
}

py::dict result_to_dict(const ClusteringResult& r) {
    py::dict d;
    d["centroids"] = Matrix(r.centroids.theta());
    d["memberships"] = Matrix(r.memberships.u());
    d["labels"] = r.labels;
    d["cost_trace"] = r.cost_trace;
    d["iterations"] = r.iterations;
    d["converged"] = r.converged;
    d["coincident_centroids"] = r.coincident_centroids;
    return d;
}

RunConfig config_from(int c, double q, int max_iter, double tol, std::uint64_t seed) {
    RunConfig cfg;
    cfg.c = c;
    cfg.q = q;
    cfg.max_iter = max_iter;
    cfg.tol = tol;
    cfg.seed = seed;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Soft-partition clustering: FCM/PCM, VAT/iVAT tendency, validity indices";

    m.def(
        "fcm_fit",
        [](const Matrix& points, int c, double q, int max_iter, double tol,
           std::uint64_t seed, const std::string& metric) {
            Dataset data(points);
            return result_to_dict(
                fcm_fit(data, config_from(c, q, max_iter, tol, seed), metric_for(data, metric)));
        },
        py::arg("points"), py::arg("c"), py::arg("q") = 2.0, py::arg("max_iter") = 300,
        py::arg("tol") = 1e-6, py::arg("seed") = 0, py::arg("metric") = "euclidean");

    m.def(
        "pcm_fit",
        [](const Matrix& points, int c, double q, double K, int max_iter, double tol,
           std::uint64_t seed, const std::string& metric) {
            Dataset data(points);
            return result_to_dict(pcm_fit(data, config_from(c, q, max_iter, tol, seed), K,
                                          metric_for(data, metric)));
        },
        py::arg("points"), py::arg("c"), py::arg("q") = 2.0, py::arg("K") = 1.0,
        py::arg("max_iter") = 300, py::arg("tol") = 1e-6, py::arg("seed") = 0,
        py::arg("metric") = "euclidean");

    m.def(
        "pairwise_matrix",
        [](const Matrix& points, const std::string& metric) {
            Dataset data(points);
            DistanceKind kind = distance_kind_from_string(metric);
            std::optional<CovarianceModel> cov;
            if (kind == DistanceKind::mahalanobis) cov = *metric_for(data, metric).covariance();
            return Matrix(pairwise_matrix(data, kind, cov).dmat());
        },
        py::arg("points"), py::arg("metric") = "euclidean");

    m.def(
        "vat_order",
        [](const Matrix& dmat) {
            VatResult r = vat_order(DissimilarityMatrix(dmat));
            return py::make_tuple(r.ordering, Matrix(r.reordered.dmat()));
        },
        py::arg("dmat"), "Returns (ordering, reordered matrix).");

    m.def(
        "ivat_transform",
        [](const Matrix& dmat) {
            return Matrix(ivat_transform(DissimilarityMatrix(dmat)).dmat());
        },
        py::arg("dmat"));

    m.def(
        "render_pgm",
        [](const Matrix& dmat, const std::filesystem::path& path) {
            render_pgm(DissimilarityMatrix(dmat), path);
        },
        py::arg("dmat"), py::arg("path"));

    m.def(
        "partition_coefficient",
        [](const Matrix& u, const std::string& kind) {
            auto k = kind == "fuzzy" ? MembershipKind::fuzzy : MembershipKind::possibilistic;
            return partition_coefficient(MembershipMatrix(u, k));
        },
        py::arg("u"), py::arg("kind") = "fuzzy");

    m.def(
        "dunn_index",
        [](const Matrix& points, const std::vector<int>& labels) {
            DunnResult r = dunn_index(Dataset(points), labels, Metric::euclidean());
            return py::make_tuple(r.value, r.degenerate);
        },
        py::arg("points"), py::arg("labels"), "Returns (value, degenerate).");

    m.def(
        "davies_bouldin",
        [](const Matrix& points, const std::vector<int>& labels, const Matrix& centroids,
           double scatter_q) {
            return davies_bouldin(Dataset(points), labels, CentroidSet(centroids), scatter_q,
                                  Metric::euclidean());
        },
        py::arg("points"), py::arg("labels"), py::arg("centroids"),
        py::arg("scatter_q") = 2.0);

    m.def(
        "sweep_c",
        [](const Matrix& points, const std::string& algorithm, int c_min, int c_max, double q,
           std::uint64_t seed, double K) {
            Dataset data(points);
            RunConfig base = config_from(c_min, q, 300, 1e-6, seed);
            ValidityReport rep = sweep_c(data, algorithm_from_string(algorithm), c_min, c_max,
                                         base, Metric::euclidean(), K);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["c"] = r.c;
                d["pc"] = r.pc;
                d["di"] = r.di;
                d["dbi"] = r.dbi;
                d["flags"] = r.flags;
                d["failed"] = r.failed;
                rows.append(d);
            }
            return rows;
        },
        py::arg("points"), py::arg("algorithm"), py::arg("c_min"), py::arg("c_max"),
        py::arg("q") = 2.0, py::arg("seed") = 0, py::arg("K") = 1.0);

    m.def(
        "generate",
        [](const std::string& scenario, std::uint64_t seed) {
            LabeledDataset lds = generate(scenario_by_name(scenario), seed);
            return py::make_tuple(Matrix(lds.data.points()), lds.truth);
        },
        py::arg("scenario"), py::arg("seed") = 0, "Returns (points, truth labels).");

    m.def("scenario_names", &scenario_names);

    m.def(
        "load_csv",
        [](const std::filesystem::path& path, bool has_header) {
            return Matrix(load_csv(path, has_header).points());
        },
        py::arg("path"), py::arg("has_header") = false);

    m.def(
        "write_csv",
        [](const Matrix& points, const std::filesystem::path& path) {
            write_csv(Dataset(points), path);
        },
        py::arg("points"), py::arg("path"));
}
