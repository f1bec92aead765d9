#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "softclust/csv.hpp"
#include "softclust/datagen.hpp"

#include <cmath>
#include <filesystem>
#include <set>

using namespace softclust;

TEST_CASE("generate: sample means land near the configured centers") {
    Scenario s = scenario_by_name("two_separate");
    LabeledDataset lds = generate(s, 99);
    REQUIRE(lds.data.n() == 200);
    REQUIRE(lds.data.d() == 2);

    Eigen::RowVector2d mean0 = Eigen::RowVector2d::Zero();
    Eigen::RowVector2d mean1 = Eigen::RowVector2d::Zero();
    int n0 = 0, n1 = 0;
    for (Index i = 0; i < lds.data.n(); ++i) {
        if (lds.truth[size_t(i)] == 0) {
            mean0 += lds.data.row(i);
            ++n0;
        } else {
            mean1 += lds.data.row(i);
            ++n1;
        }
    }
    CHECK(n0 == 100);
    CHECK(n1 == 100);
    CHECK((mean0 / n0 - Eigen::RowVector2d(0, 0)).norm() < 0.5);
    CHECK((mean1 / n1 - Eigen::RowVector2d(15, 15)).norm() < 0.5);
}

TEST_CASE("generate: no noise requested, no -1 labels") {
    for (const auto& s : builtin_scenarios()) {
        LabeledDataset lds = generate(s, 1);
        if (s.noise.count == 0) {
            for (int t : lds.truth) CHECK(t >= 0);
        }
    }
}

TEST_CASE("generate is deterministic per seed") {
    Scenario s = scenario_by_name("three_close");
    LabeledDataset a = generate(s, 5);
    LabeledDataset b = generate(s, 5);
    CHECK((a.data.points() - b.data.points()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.truth == b.truth);
    LabeledDataset c = generate(s, 6);
    CHECK((a.data.points() - c.data.points()).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("generate: noise points are labeled -1 and stay inside the box") {
    Scenario s = scenario_by_name("two_separate");
    s.noise.count = 25;
    s.noise.box_min = Vector(2);
    s.noise.box_min << -5, -5;
    s.noise.box_max = Vector(2);
    s.noise.box_max << 20, 20;
    LabeledDataset lds = generate(s, 8);
    int noise_seen = 0;
    for (Index i = 0; i < lds.data.n(); ++i) {
        if (lds.truth[size_t(i)] != -1) continue;
        ++noise_seen;
        CHECK(lds.data.points()(i, 0) >= -5);
        CHECK(lds.data.points()(i, 0) <= 20);
        CHECK(lds.data.points()(i, 1) >= -5);
        CHECK(lds.data.points()(i, 1) <= 20);
    }
    CHECK(noise_seen == 25);
}

TEST_CASE("rotated cluster covariance is diagonal after rotating back") {
    Scenario s;
    s.name = "one_elliptic";
    ClusterSpec cl;
    cl.center = Vector(2);
    cl.center << 0, 0;
    cl.axis_spreads = Vector(2);
    cl.axis_spreads << 3.0, 0.5;
    cl.rotation = 0.7;
    cl.count = 10000;
    s.clusters.push_back(cl);

    LabeledDataset lds = generate(s, 17);
    Eigen::MatrixXd x = lds.data.points();
    Eigen::RowVectorXd mean = x.colwise().mean();
    Eigen::MatrixXd centered = x.rowwise() - mean;

    // rotate back
    Eigen::Matrix2d rot;
    rot << std::cos(-0.7), -std::sin(-0.7), std::sin(-0.7), std::cos(-0.7);
    Eigen::MatrixXd unrotated = centered * rot.transpose();
    Eigen::Matrix2d cov =
        (unrotated.transpose() * unrotated / double(lds.data.n() - 1));
    double corr = cov(0, 1) / std::sqrt(cov(0, 0) * cov(1, 1));
    CHECK(std::abs(corr) < 0.05);
    CHECK(cov(0, 0) == doctest::Approx(9.0).epsilon(0.1));
    CHECK(cov(1, 1) == doctest::Approx(0.25).epsilon(0.1));
}

TEST_CASE("add_outlier appends one -1 point") {
    LabeledDataset lds = generate(scenario_by_name("two_separate"), 3);
    Vector pos(2);
    pos << 100, 100;
    LabeledDataset with = add_outlier(lds, pos);
    CHECK(with.data.n() == lds.data.n() + 1);
    CHECK(with.truth.back() == -1);
    CHECK(with.data.points()(with.data.n() - 1, 0) == 100.0);

    // an outlier placed on a cluster center is still labeled -1
    Vector center(2);
    center << 0, 0;
    LabeledDataset at_center = add_outlier(lds, center);
    CHECK(at_center.truth.back() == -1);

    // and it survives a CSV round-trip
    auto p = std::filesystem::temp_directory_path() / "softclust_outlier.csv";
    write_csv(with.data, p);
    Dataset back = load_csv(p, false);
    CHECK(back.n() == with.data.n());
    CHECK(back.points()(back.n() - 1, 1) == 100.0);
}

TEST_CASE("registry covers all five table scenarios plus the different-size variant") {
    std::set<std::string> names;
    for (const auto& s : builtin_scenarios()) names.insert(s.name);
    for (const char* expected : {"two_separate", "two_dense_elliptic", "two_diff_size",
                                 "three_close", "four_clusters", "five_clusters"}) {
        CHECK(names.count(expected) == 1);
    }
    CHECK_THROWS_AS(scenario_by_name("bogus"), std::invalid_argument);
}

TEST_CASE("shipped scenario file parses and matches the registry") {
    auto path = std::filesystem::path(SOFTCLUST_SOURCE_DIR) / "scenarios" / "default.scn";
    auto scenarios = parse_scenario_file(path);
    REQUIRE(scenarios.size() == builtin_scenarios().size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const Scenario& a = scenarios[i];
        const Scenario& b = builtin_scenarios()[i];
        CHECK(a.name == b.name);
        REQUIRE(a.clusters.size() == b.clusters.size());
        for (std::size_t k = 0; k < a.clusters.size(); ++k) {
            CHECK((a.clusters[k].center - b.clusters[k].center).norm() == 0.0);
            CHECK((a.clusters[k].axis_spreads - b.clusters[k].axis_spreads).norm() == 0.0);
            CHECK(a.clusters[k].rotation == b.clusters[k].rotation);
            CHECK(a.clusters[k].count == b.clusters[k].count);
        }
        CHECK(a.noise.count == b.noise.count);
    }
}

TEST_CASE("scenario validation") {
    Scenario s;
    s.name = "bad";
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    ClusterSpec cl;
    cl.center = Vector::Zero(2);
    cl.axis_spreads = Vector::Zero(2);  // non-positive spread
    cl.count = 10;
    s.clusters.push_back(cl);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
