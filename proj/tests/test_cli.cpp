#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// integration tests against the built binary (path in $SOFTCLUST_CLI)

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli() {
    const char* p = std::getenv("SOFTCLUST_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

fs::path make_workdir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("softclust_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("gen writes data and truth files") {
    fs::path dir = make_workdir("gen");
    fs::path out = dir / "data.csv";
    CHECK(run("gen two_separate --seed 1 --out " + out.string()) == 0);
    CHECK(fs::exists(out));
    CHECK(fs::exists(dir / "data_truth.csv"));
}

TEST_CASE("gen rejects a bogus scenario with status 2") {
    fs::path dir = make_workdir("gen_bad");
    CHECK(run("gen bogus_name --out " + (dir / "d.csv").string()) == 2);
}

TEST_CASE("gen fails with status 1 on an unwritable path") {
    CHECK(run("gen two_separate --out /nonexistent_dir_xyz/data.csv") == 1);
}

TEST_CASE("fit fcm produces a converged JSON result near the true centers") {
    fs::path dir = make_workdir("fit");
    fs::path data = dir / "data.csv";
    REQUIRE(run("gen two_separate --seed 2 --out " + data.string()) == 0);
    fs::path out = dir / "fit.json";
    CHECK(run("fit --data " + data.string() + " --c 2 --seed 2 --out " + out.string()) == 0);

    json j = json::parse(read_file(out));
    CHECK(j["converged"].get<bool>());
    CHECK(j["algorithm"] == "fcm");
    REQUIRE(j["centroids"].size() == 2);
    double x0 = j["centroids"][0][0].get<double>();
    double x1 = j["centroids"][1][0].get<double>();
    double lo = std::min(x0, x1), hi = std::max(x0, x1);
    CHECK(std::abs(lo - 0.0) < 1.0);
    CHECK(std::abs(hi - 15.0) < 1.0);
    CHECK(j["labels"].size() == 200);
    CHECK(j["memberships"].size() == 2);
}

TEST_CASE("fit with c > n exits 2") {
    fs::path dir = make_workdir("fit_bad");
    std::ofstream(dir / "tiny.csv") << "0,0\n1,1\n2,2\n";
    CHECK(run("fit --data " + (dir / "tiny.csv").string() + " --c 5 --out " +
              (dir / "o.json").string()) == 2);
}

TEST_CASE("fit pcm echoes K in the output JSON") {
    fs::path dir = make_workdir("fit_pcm");
    fs::path data = dir / "data.csv";
    REQUIRE(run("gen two_separate --seed 3 --out " + data.string()) == 0);
    fs::path out = dir / "fit.json";
    CHECK(run("fit --data " + data.string() +
              " --algorithm pcm --c 2 --K 1.5 --seed 3 --out " + out.string()) == 0);
    json j = json::parse(read_file(out));
    CHECK(j["K"].get<double>() == 1.5);
    CHECK(j["algorithm"] == "pcm");
}

TEST_CASE("vat writes an n x n PGM plus a permutation sidecar") {
    fs::path dir = make_workdir("vat");
    fs::path data = dir / "data.csv";
    REQUIRE(run("gen two_separate --seed 4 --out " + data.string()) == 0);
    fs::path img = dir / "vat.pgm";
    CHECK(run("vat --data " + data.string() + " --out " + img.string()) == 0);

    std::string pgm = read_file(img);
    CHECK(pgm.rfind("P5\n200 200\n255\n", 0) == 0);
    CHECK(pgm.size() == std::string("P5\n200 200\n255\n").size() + 200 * 200);
    CHECK(fs::exists(img.string() + ".order.txt"));
}

TEST_CASE("--ivat lowers within-structure pixel values on chained data") {
    fs::path dir = make_workdir("ivat");
    fs::path data = dir / "chain.csv";
    {
        std::ofstream out(data);
        for (int i = 0; i < 30; ++i) out << i << "," << 0 << "\n";
    }
    fs::path plain = dir / "vat.pgm";
    fs::path ivat = dir / "ivat.pgm";
    REQUIRE(run("vat --data " + data.string() + " --out " + plain.string()) == 0);
    REQUIRE(run("vat --data " + data.string() + " --ivat --out " + ivat.string()) == 0);

    std::string a = read_file(plain);
    std::string b = read_file(ivat);
    REQUIRE(a.size() == b.size());
    auto header = a.find("255\n") + 4;
    unsigned max_a = 0, max_b = 0;
    for (std::size_t i = header; i < a.size(); ++i) {
        max_a = std::max<unsigned>(max_a, static_cast<unsigned char>(a[i]));
        max_b = std::max<unsigned>(max_b, static_cast<unsigned char>(b[i]));
    }
    // the transform never increases any entry
    CHECK(max_b <= max_a);

    // on a pure chain every min-max distance collapses to the unit step, so
    // the transformed image is flat off the diagonal
    unsigned min_offdiag = 255;
    for (std::size_t i = header; i < b.size(); ++i) {
        std::size_t k = i - header;
        if (k / 30 == k % 30) continue;
        min_offdiag = std::min<unsigned>(min_offdiag, static_cast<unsigned char>(b[i]));
    }
    CHECK(min_offdiag == 255);
}

TEST_CASE("vat on a single point yields a 1x1 black image") {
    fs::path dir = make_workdir("vat1");
    std::ofstream(dir / "one.csv") << "3,4\n";
    fs::path img = dir / "one.pgm";
    CHECK(run("vat --data " + (dir / "one.csv").string() + " --out " + img.string()) == 0);
    std::string pgm = read_file(img);
    CHECK(pgm == std::string("P5\n1 1\n255\n") + '\0');
}

TEST_CASE("validate writes matching JSON and CSV and flags best c") {
    fs::path dir = make_workdir("validate");
    fs::path data = dir / "data.csv";
    REQUIRE(run("gen three_close --seed 6 --out " + data.string()) == 0);
    fs::path base = dir / "report";
    CHECK(run("validate --data " + data.string() + " --c-min 2 --c-max 6 --seed 6 --out " +
              base.string()) == 0);
    CHECK(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "report.csv"));

    json rows = json::parse(read_file(dir / "report.json"));
    REQUIRE(rows.size() == 5);
    double best_dbi = 1e300;
    int best_c = 0;
    for (const auto& row : rows) {
        if (row["dbi"].is_number() && row["dbi"].get<double>() < best_dbi) {
            best_dbi = row["dbi"].get<double>();
            best_c = row["c"].get<int>();
        }
    }
    CHECK(best_c == 3);
}

TEST_CASE("validate rejects c_min > c_max with status 2") {
    fs::path dir = make_workdir("validate_bad");
    fs::path data = dir / "data.csv";
    REQUIRE(run("gen two_separate --seed 1 --out " + data.string()) == 0);
    CHECK(run("validate --data " + data.string() + " --c-min 5 --c-max 3 --out " +
              (dir / "r").string()) == 2);
}

TEST_CASE("pipeline emits the full artifact set with a manifest") {
    fs::path dir = make_workdir("pipeline");
    fs::path out = dir / "run";
    CHECK(run("pipeline two_separate --c-min 2 --c-max 5 --seed 9 --out " + out.string()) == 0);

    for (const char* f : {"data.csv", "truth.csv", "vat.pgm", "ivat.pgm", "fit_c2.json",
                          "fit_c3.json", "fit_c4.json", "fit_c5.json", "report.json",
                          "report.csv", "manifest.json"}) {
        CHECK(fs::exists(out / f));
    }
    json manifest = json::parse(read_file(out / "manifest.json"));
    CHECK(manifest["status"] == "complete");
    int fits = 0, pgms = 0, reports = 0;
    for (const auto& a : manifest["artifacts"]) {
        std::string kind = a["kind"].get<std::string>();
        if (kind == "fit_result") ++fits;
        if (kind == "vat_image" || kind == "ivat_image") ++pgms;
        if (kind == "validity_report") ++reports;
    }
    CHECK(fits == 4);
    CHECK(pgms == 2);
    CHECK(reports == 1);
}

TEST_CASE("pipeline pcm over 2..7 completes with all rows present or flagged") {
    fs::path dir = make_workdir("pipeline_pcm");
    fs::path out = dir / "run";
    CHECK(run("pipeline five_clusters --algorithm pcm --c-min 2 --c-max 7 --seed 11 --out " +
              out.string()) == 0);
    json rows = json::parse(read_file(out / "report.json"));
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        bool ok = !row["failed"].get<bool>();
        bool flagged = !row["flags"].empty();
        CHECK((ok || flagged));
    }
}

TEST_CASE("SOFTCLUST_SEED env var supplies the default seed and is echoed") {
    fs::path dir = make_workdir("envseed");
    fs::path data = dir / "data.csv";
    std::string env_cmd = "SOFTCLUST_SEED=77 " + cli() + " gen two_separate --out " +
                          data.string() + " > " + (dir / "log.txt").string() + " 2>&1";
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    std::string log = read_file(dir / "log.txt");
    CHECK(log.find("seed=77") != std::string::npos);

    // same as an explicit --seed 77
    fs::path data2 = dir / "data2.csv";
    REQUIRE(run("gen two_separate --seed 77 --out " + data2.string()) == 0);
    CHECK(read_file(data) == read_file(data2));
}

TEST_CASE("unknown flags exit 2") {
    CHECK(run("gen two_separate --bogus-flag 1 --out /tmp/x.csv") == 2);
    CHECK(run("frobnicate") == 2);
}
