#include "softclust/datagen.hpp"

#include "softclust/rng.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace softclust {

void Scenario::validate() const {
    if (clusters.empty()) throw std::invalid_argument("Scenario: no clusters");
    const Index d = clusters.front().center.size();
    for (const auto& c : clusters) {
        if (c.center.size() != d || c.axis_spreads.size() != d) {
            throw std::invalid_argument("Scenario: inconsistent dimensions in " + name);
        }
        if (c.count < 1) throw std::invalid_argument("Scenario: cluster count must be positive");
        if ((c.axis_spreads.array() <= 0.0).any()) {
            throw std::invalid_argument("Scenario: spreads must be positive");
        }
    }
    if (noise.count < 0) throw std::invalid_argument("Scenario: negative noise count");
    if (noise.count > 0 &&
        (noise.box_min.size() != d || noise.box_max.size() != d ||
         (noise.box_max.array() < noise.box_min.array()).any())) {
        throw std::invalid_argument("Scenario: bad noise box");
    }
}

LabeledDataset generate(const Scenario& scenario, std::uint64_t seed) {
    scenario.validate();
    const Index d = scenario.clusters.front().center.size();
    Index total = scenario.noise.count;
    for (const auto& c : scenario.clusters) total += c.count;

    Rng rng = seeded_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Matrix points(total, d);
    std::vector<int> truth(static_cast<std::size_t>(total));
    Index row = 0;
    int label = 0;
    for (const auto& cl : scenario.clusters) {
        const double cs = std::cos(cl.rotation);
        const double sn = std::sin(cl.rotation);
        for (int k = 0; k < cl.count; ++k, ++row) {
            Vector p(d);
            for (Index a = 0; a < d; ++a) p(a) = gauss(rng) * cl.axis_spreads(a);
            if (d >= 2 && cl.rotation != 0.0) {
                double x = p(0), y = p(1);
                p(0) = cs * x - sn * y;
                p(1) = sn * x + cs * y;
            }
            points.row(row) = (p + cl.center).transpose();
            truth[static_cast<std::size_t>(row)] = label;
        }
        ++label;
    }
    for (int k = 0; k < scenario.noise.count; ++k, ++row) {
        for (Index a = 0; a < d; ++a) {
            std::uniform_real_distribution<double> uni(scenario.noise.box_min(a),
                                                       scenario.noise.box_max(a));
            points(row, a) = uni(rng);
        }
        truth[static_cast<std::size_t>(row)] = -1;
    }
    return LabeledDataset{Dataset(std::move(points)), std::move(truth)};
}

LabeledDataset add_outlier(const LabeledDataset& data, const Vector& position) {
    if (position.size() != data.data.d()) {
        throw std::invalid_argument("add_outlier: dimension mismatch");
    }
    if (!position.allFinite()) {
        throw std::invalid_argument("add_outlier: non-finite position");
    }
    Matrix points(data.data.n() + 1, data.data.d());
    points.topRows(data.data.n()) = data.data.points();
    points.row(data.data.n()) = position.transpose();
    std::vector<int> truth = data.truth;
    truth.push_back(-1);
    return LabeledDataset{Dataset(std::move(points)), std::move(truth)};
}

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

ClusterSpec blob(double cx, double cy, double sx, double sy, double rot, int count) {
    return ClusterSpec{vec2(cx, cy), vec2(sx, sy), rot, count};
}

std::vector<Scenario> make_registry() {
    // Approximations of the five figure scenarios plus the different-size
    // variant; the original datasets were never published.
    std::vector<Scenario> reg;

    reg.push_back(Scenario{"two_separate",
                           {blob(0, 0, 1, 1, 0, 100), blob(15, 15, 1, 1, 0, 100)},
                           NoiseSpec{}});

    reg.push_back(Scenario{"two_dense_elliptic",
                           {blob(0, 0, 2.5, 0.8, 0.6, 200), blob(10, 0, 1.2, 0.5, -0.4, 80)},
                           NoiseSpec{}});

    reg.push_back(Scenario{"two_diff_size",
                           {blob(0, 0, 1, 1, 0, 200), blob(10, 0, 1, 1, 0, 40)},
                           NoiseSpec{}});

    reg.push_back(Scenario{"three_close",
                           {blob(0, 0, 1, 1, 0, 100), blob(7, 0, 1, 1, 0, 100),
                            blob(3.5, 6, 1, 1, 0, 100)},
                           NoiseSpec{}});

    reg.push_back(Scenario{"four_clusters",
                           {blob(0, 0, 1, 1, 0, 75), blob(10, 0, 1, 1, 0, 75),
                            blob(0, 10, 1, 1, 0, 75), blob(10, 10, 1, 1, 0, 75)},
                           NoiseSpec{}});

    reg.push_back(Scenario{"five_clusters",
                           {blob(0, 0, 1, 1, 0, 60), blob(12, 0, 1, 1, 0, 60),
                            blob(0, 12, 1, 1, 0, 60), blob(12, 12, 1, 1, 0, 60),
                            blob(6, 6, 1, 1, 0, 60)},
                           NoiseSpec{}});

    return reg;
}

Vector parse_vector(const std::string& s) {
    std::vector<double> vals;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    Vector v(static_cast<Index>(vals.size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = vals[static_cast<std::size_t>(i)];
    return v;
}

std::pair<std::string, std::string> split_kv(const std::string& tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
        throw std::runtime_error("scenario file: expected key=value, got '" + tok + "'");
    }
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

} // namespace

const std::vector<Scenario>& builtin_scenarios() {
    static const std::vector<Scenario> registry = make_registry();
    return registry;
}

const Scenario& scenario_by_name(const std::string& name) {
    for (const auto& s : builtin_scenarios()) {
        if (s.name == name) return s;
    }
    std::string known;
    for (const auto& s : builtin_scenarios()) {
        if (!known.empty()) known += ", ";
        known += s.name;
    }
    throw std::invalid_argument("unknown scenario '" + name + "' (valid: " + known + ")");
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& s : builtin_scenarios()) names.push_back(s.name);
    return names;
}

std::vector<Scenario> parse_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_scenario_file: cannot open " + path.string());

    std::vector<Scenario> scenarios;
    Scenario current;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word) || word[0] == '#') continue;
        if (word == "scenario") {
            if (open) {
                current.validate();
                scenarios.push_back(std::move(current));
                current = Scenario{};
            }
            if (!(ss >> current.name)) {
                throw std::runtime_error("scenario file: missing scenario name");
            }
            open = true;
        } else if (word == "cluster") {
            if (!open) throw std::runtime_error("scenario file: cluster before scenario");
            ClusterSpec cl;
            std::string tok;
            while (ss >> tok) {
                auto [key, value] = split_kv(tok);
                if (key == "center") cl.center = parse_vector(value);
                else if (key == "spread") cl.axis_spreads = parse_vector(value);
                else if (key == "rotation") cl.rotation = std::stod(value);
                else if (key == "count") cl.count = std::stoi(value);
                else throw std::runtime_error("scenario file: unknown cluster key " + key);
            }
            current.clusters.push_back(std::move(cl));
        } else if (word == "noise") {
            if (!open) throw std::runtime_error("scenario file: noise before scenario");
            std::string tok;
            while (ss >> tok) {
                auto [key, value] = split_kv(tok);
                if (key == "count") {
                    current.noise.count = std::stoi(value);
                } else if (key == "box") {
                    Vector box = parse_vector(value);
                    if (box.size() % 2 != 0) {
                        throw std::runtime_error("scenario file: box needs min...,max...");
                    }
                    Index d = box.size() / 2;
                    current.noise.box_min = box.head(d);
                    current.noise.box_max = box.tail(d);
                } else {
                    throw std::runtime_error("scenario file: unknown noise key " + key);
                }
            }
        } else {
            throw std::runtime_error("scenario file: unknown directive " + word);
        }
    }
    if (open) {
        current.validate();
        scenarios.push_back(std::move(current));
    }
    return scenarios;
}

} // namespace softclust
