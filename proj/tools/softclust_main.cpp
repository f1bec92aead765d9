#include "softclust/csv.hpp"
#include "softclust/datagen.hpp"
#include "softclust/distance.hpp"
#include "softclust/fcm.hpp"
#include "softclust/pcm.hpp"
#include "softclust/rng.hpp"
#include "softclust/tendency.hpp"
#include "softclust/validity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace softclust;

namespace {

// usage / validation problems exit with 2, runtime failures with 1
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t effective_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SOFTCLUST_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

Metric make_metric(const Dataset& data, DistanceKind kind) {
    if (kind == DistanceKind::euclidean) return Metric::euclidean();
    // default diagonal regularization: 1e-9 * trace/d of the sample covariance
    Eigen::MatrixXd x = data.points();
    Eigen::RowVectorXd mean = x.colwise().mean();
    double trace = (x.rowwise() - mean).squaredNorm() / double(std::max<Index>(1, data.n() - 1));
    double reg = 1e-9 * trace / double(data.d());
    return Metric::mahalanobis(fit_covariance(data, reg));
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

fs::path truth_path_for(const fs::path& data_path) {
    fs::path p = data_path;
    p.replace_extension();
    return p.string() + "_truth.csv";
}

struct CommonFitFlags {
    std::string algorithm = "fcm";
    double q = 2.0;
    std::string metric = "euclidean";
    double K = 1.0;
    double tol = 1e-6;
    int max_iter = 300;
    std::optional<std::uint64_t> seed;
};

void add_fit_flags(CLI::App* cmd, CommonFitFlags& f) {
    cmd->add_option("--algorithm", f.algorithm, "fcm or pcm")
        ->check(CLI::IsMember({"fcm", "pcm"}));
    cmd->add_option("--q", f.q, "fuzzifier (> 1)");
    cmd->add_option("--metric", f.metric, "euclidean or mahalanobis")
        ->check(CLI::IsMember({"euclidean", "mahalanobis"}));
    cmd->add_option("--K", f.K, "PCM eta scale constant");
    cmd->add_option("--tol", f.tol, "centroid-displacement convergence tolerance");
    cmd->add_option("--max-iter", f.max_iter, "iteration cap");
    cmd->add_option("--seed", f.seed, "RNG seed (default: $SOFTCLUST_SEED or 0)");
}

RunConfig make_config(const CommonFitFlags& f, int c) {
    RunConfig cfg;
    cfg.c = c;
    cfg.q = f.q;
    cfg.max_iter = f.max_iter;
    cfg.tol = f.tol;
    cfg.seed = effective_seed(f.seed);
    cfg.distance_kind = distance_kind_from_string(f.metric);
    return cfg;
}

ClusteringResult run_fit(const Dataset& data, Algorithm algo, const RunConfig& cfg,
                         double K, const Metric& metric) {
    return algo == Algorithm::fcm ? fcm_fit(data, cfg, metric)
                                  : pcm_fit(data, cfg, K, metric);
}

json fit_to_json(const ClusteringResult& result, Algorithm algo, const RunConfig& cfg,
                 double K) {
    json out;
    out["algorithm"] = to_string(algo);
    out["c"] = cfg.c;
    out["q"] = cfg.q;
    out["seed"] = cfg.seed;
    out["metric"] = to_string(cfg.distance_kind);
    out["tol"] = cfg.tol;
    out["max_iter"] = cfg.max_iter;
    if (algo == Algorithm::pcm) out["K"] = K;
    out["centroids"] = matrix_to_json(result.centroids.theta());
    out["labels"] = result.labels;
    out["memberships"] = matrix_to_json(result.memberships.u());
    out["iterations"] = result.iterations;
    out["converged"] = result.converged;
    out["coincident_centroids"] = result.coincident_centroids;
    out["final_cost"] = result.cost_trace.back();
    out["cost_trace"] = result.cost_trace;
    return out;
}

const Scenario& resolve_scenario(const std::string& name, const std::string& file,
                                 std::vector<Scenario>& storage) {
    if (!file.empty()) {
        storage = parse_scenario_file(file);
        for (const auto& s : storage) {
            if (s.name == name) return s;
        }
        throw UsageError("scenario '" + name + "' not found in " + file);
    }
    try {
        return scenario_by_name(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_gen(const std::string& scenario_name, const std::string& scenario_file,
            std::optional<std::uint64_t> seed_flag, const fs::path& out,
            fs::path truth_out) {
    std::vector<Scenario> storage;
    const Scenario& scenario = resolve_scenario(scenario_name, scenario_file, storage);
    std::uint64_t seed = effective_seed(seed_flag);
    LabeledDataset lds = generate(scenario, seed);
    if (truth_out.empty()) truth_out = truth_path_for(out);
    write_csv(lds.data, out);
    write_labels(lds.truth, truth_out);
    std::cout << "scenario=" << scenario.name << " seed=" << seed << " n=" << lds.data.n()
              << " d=" << lds.data.d() << " clusters=" << scenario.clusters.size() << "\n";
    return 0;
}

int cmd_fit(const fs::path& data_path, bool header, int c, const CommonFitFlags& flags,
            const fs::path& out) {
    Dataset data = load_csv(data_path, header);
    if (c < 2 || c > data.n()) {
        throw UsageError("need 2 <= c <= n (c=" + std::to_string(c) +
                         ", n=" + std::to_string(data.n()) + ")");
    }
    Algorithm algo = algorithm_from_string(flags.algorithm);
    RunConfig cfg = make_config(flags, c);
    Metric metric = make_metric(data, cfg.distance_kind);
    ClusteringResult result = run_fit(data, algo, cfg, flags.K, metric);
    write_text(out, fit_to_json(result, algo, cfg, flags.K).dump(2) + "\n");
    std::cout << to_string(algo) << " c=" << c << " seed=" << cfg.seed
              << " iterations=" << result.iterations
              << " converged=" << (result.converged ? "true" : "false")
              << " final_cost=" << result.cost_trace.back() << "\n";
    return 0;
}

int cmd_vat(const fs::path& data_path, bool header, bool ivat, const std::string& metric_name,
            const fs::path& out) {
    Dataset data = load_csv(data_path, header);
    DistanceKind kind = distance_kind_from_string(metric_name);
    std::optional<CovarianceModel> cov;
    if (kind == DistanceKind::mahalanobis) cov = *make_metric(data, kind).covariance();
    DissimilarityMatrix dmat = pairwise_matrix(data, kind, cov);
    if (ivat) dmat = ivat_transform(dmat);
    VatResult vat = vat_order(dmat);
    render_pgm(vat.reordered, out);

    std::ostringstream order;
    for (std::size_t i = 0; i < vat.ordering.size(); ++i) {
        if (i) order << ' ';
        order << vat.ordering[i];
    }
    order << '\n';
    write_text(out.string() + ".order.txt", order.str());
    std::cout << (ivat ? "ivat" : "vat") << " n=" << data.n() << " image=" << out.string()
              << "\n";
    return 0;
}

void print_report(const ValidityReport& report) {
    int best_pc = -1, best_di = -1, best_dbi = -1;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (r.failed) continue;
        if (best_pc < 0 || r.pc > report.rows[size_t(best_pc)].pc) best_pc = int(i);
        if (!std::isnan(r.di) && (best_di < 0 || r.di > report.rows[size_t(best_di)].di))
            best_di = int(i);
        if (!std::isnan(r.dbi) && (best_dbi < 0 || r.dbi < report.rows[size_t(best_dbi)].dbi))
            best_dbi = int(i);
    }
    std::cout << "c\tpc\tdi\tdbi\tflags\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        std::cout << r.c << '\t' << r.pc << (int(i) == best_pc ? "*" : "") << '\t' << r.di
                  << (int(i) == best_di ? "*" : "") << '\t' << r.dbi
                  << (int(i) == best_dbi ? "*" : "") << '\t';
        for (std::size_t k = 0; k < r.flags.size(); ++k) {
            if (k) std::cout << ';';
            std::cout << r.flags[k];
        }
        std::cout << '\n';
    }
    std::cout << "(* best: max pc, max di, min dbi)\n";
}

int cmd_validate(const fs::path& data_path, bool header, int c_min, int c_max,
                 const CommonFitFlags& flags, const fs::path& out_base) {
    Dataset data = load_csv(data_path, header);
    if (c_min < 2 || c_min > c_max || c_max > data.n()) {
        throw UsageError("need 2 <= c-min <= c-max <= n");
    }
    Algorithm algo = algorithm_from_string(flags.algorithm);
    RunConfig cfg = make_config(flags, c_min);
    Metric metric = make_metric(data, cfg.distance_kind);
    ValidityReport report = sweep_c(data, algo, c_min, c_max, cfg, metric, flags.K);
    write_report(report, out_base.string() + ".json", out_base.string() + ".csv");
    print_report(report);
    return 0;
}

int cmd_pipeline(const std::string& scenario_name, const std::string& scenario_file,
                 int c_min, int c_max, const CommonFitFlags& flags, const fs::path& out_dir) {
    std::vector<Scenario> storage;
    const Scenario& scenario = resolve_scenario(scenario_name, scenario_file, storage);
    if (c_min < 2 || c_min > c_max) throw UsageError("need 2 <= c-min <= c-max");
    Algorithm algo = algorithm_from_string(flags.algorithm);
    std::uint64_t seed = effective_seed(flags.seed);

    fs::create_directories(out_dir);
    json manifest;
    manifest["scenario"] = scenario.name;
    manifest["algorithm"] = to_string(algo);
    manifest["c_min"] = c_min;
    manifest["c_max"] = c_max;
    manifest["q"] = flags.q;
    manifest["seed"] = seed;
    manifest["metric"] = flags.metric;
    manifest["K"] = flags.K;
    json artifacts = json::array();
    auto record = [&](const fs::path& p, const std::string& kind) {
        artifacts.push_back({{"path", p.filename().string()}, {"kind", kind}});
    };
    auto flush_manifest = [&](const std::string& status) {
        manifest["artifacts"] = artifacts;
        manifest["status"] = status;
        write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
    };

    try {
        LabeledDataset lds = generate(scenario, seed);
        write_csv(lds.data, out_dir / "data.csv");
        record(out_dir / "data.csv", "dataset");
        write_labels(lds.truth, out_dir / "truth.csv");
        record(out_dir / "truth.csv", "truth_labels");

        DistanceKind kind = distance_kind_from_string(flags.metric);
        Metric metric = make_metric(lds.data, kind);
        std::optional<CovarianceModel> cov;
        if (kind == DistanceKind::mahalanobis) cov = *metric.covariance();
        DissimilarityMatrix dmat = pairwise_matrix(lds.data, kind, cov);

        VatResult vat = vat_order(dmat);
        render_pgm(vat.reordered, out_dir / "vat.pgm");
        record(out_dir / "vat.pgm", "vat_image");
        VatResult ivat = vat_order(ivat_transform(dmat));
        render_pgm(ivat.reordered, out_dir / "ivat.pgm");
        record(out_dir / "ivat.pgm", "ivat_image");

        for (int c = c_min; c <= c_max; ++c) {
            if (c > lds.data.n()) throw UsageError("c exceeds generated n");
            RunConfig cfg = make_config(flags, c);
            cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(c));
            ClusteringResult result = run_fit(lds.data, algo, cfg, flags.K, metric);
            fs::path p = out_dir / ("fit_c" + std::to_string(c) + ".json");
            write_text(p, fit_to_json(result, algo, cfg, flags.K).dump(2) + "\n");
            record(p, "fit_result");
        }

        RunConfig base = make_config(flags, c_min);
        ValidityReport report = sweep_c(lds.data, algo, c_min, c_max, base, metric, flags.K);
        write_report(report, out_dir / "report.json", out_dir / "report.csv");
        record(out_dir / "report.json", "validity_report");
        record(out_dir / "report.csv", "validity_table");
        print_report(report);
    } catch (...) {
        flush_manifest("aborted");
        throw;
    }
    flush_manifest("complete");
    std::cout << "pipeline complete: " << out_dir.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"soft-partition clustering toolkit: FCM/PCM fits, VAT/iVAT tendency "
                 "images, and PC/DI/DBI validity sweeps"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic scenario dataset");
    std::string gen_scenario, gen_file;
    std::optional<std::uint64_t> gen_seed;
    fs::path gen_out, gen_truth;
    gen->add_option("scenario", gen_scenario, "scenario name")->required();
    gen->add_option("--scenario-file", gen_file, "plain-text scenario definitions");
    gen->add_option("--seed", gen_seed, "RNG seed (default: $SOFTCLUST_SEED or 0)");
    gen->add_option("--out", gen_out, "output data CSV")->required();
    gen->add_option("--truth", gen_truth, "truth-label CSV (default: <out>_truth.csv)");

    // fit
    auto* fit = app.add_subcommand("fit", "fit FCM or PCM and write a JSON result");
    fs::path fit_data, fit_out;
    bool fit_header = false;
    int fit_c = 2;
    CommonFitFlags fit_flags;
    fit->add_option("--data", fit_data, "input CSV")->required();
    fit->add_flag("--header", fit_header, "input CSV has a header line");
    fit->add_option("--c", fit_c, "cluster count")->required();
    add_fit_flags(fit, fit_flags);
    fit->add_option("--out", fit_out, "output JSON path")->required();

    // vat
    auto* vat = app.add_subcommand("vat", "write a VAT/iVAT tendency image (PGM)");
    fs::path vat_data, vat_out;
    bool vat_header = false, vat_ivat = false;
    std::string vat_metric = "euclidean";
    vat->add_option("--data", vat_data, "input CSV")->required();
    vat->add_flag("--header", vat_header, "input CSV has a header line");
    vat->add_flag("--ivat", vat_ivat, "apply the min-max path transform first");
    vat->add_option("--metric", vat_metric)->check(CLI::IsMember({"euclidean", "mahalanobis"}));
    vat->add_option("--out", vat_out, "output PGM path")->required();

    // validate
    auto* validate = app.add_subcommand("validate", "sweep c and report PC/DI/DBI");
    fs::path val_data, val_out;
    bool val_header = false;
    int val_cmin = 2, val_cmax = 6;
    CommonFitFlags val_flags;
    validate->add_option("--data", val_data, "input CSV")->required();
    validate->add_flag("--header", val_header, "input CSV has a header line");
    validate->add_option("--c-min", val_cmin, "smallest candidate c")->required();
    validate->add_option("--c-max", val_cmax, "largest candidate c")->required();
    add_fit_flags(validate, val_flags);
    validate->add_option("--out", val_out, "output base path (writes .json and .csv)")
        ->required();

    // pipeline
    auto* pipeline =
        app.add_subcommand("pipeline", "generate -> tendency -> fit per c -> validate");
    std::string pipe_scenario, pipe_file;
    int pipe_cmin = 2, pipe_cmax = 6;
    CommonFitFlags pipe_flags;
    fs::path pipe_out;
    pipeline->add_option("scenario", pipe_scenario, "scenario name")->required();
    pipeline->add_option("--scenario-file", pipe_file, "plain-text scenario definitions");
    pipeline->add_option("--c-min", pipe_cmin, "smallest candidate c")->required();
    pipeline->add_option("--c-max", pipe_cmax, "largest candidate c")->required();
    add_fit_flags(pipeline, pipe_flags);
    pipeline->add_option("--out", pipe_out, "output directory")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(gen_scenario, gen_file, gen_seed, gen_out, gen_truth);
        if (fit->parsed()) return cmd_fit(fit_data, fit_header, fit_c, fit_flags, fit_out);
        if (vat->parsed()) return cmd_vat(vat_data, vat_header, vat_ivat, vat_metric, vat_out);
        if (validate->parsed())
            return cmd_validate(val_data, val_header, val_cmin, val_cmax, val_flags, val_out);
        if (pipeline->parsed())
            return cmd_pipeline(pipe_scenario, pipe_file, pipe_cmin, pipe_cmax, pipe_flags,
                                pipe_out);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
