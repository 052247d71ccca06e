#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavedens/io.hpp"
#include "wavedens/runner.hpp"

using namespace wavedens;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("wavedens_test_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("CSV ingestion: plain rows") {
    TempDir dir;
    const fs::path csv = dir.path / "in.csv";
    std::ofstream(csv) << "1.5,1\n2.0,0\n";
    const CensoredSample s = ingest_csv(csv.string());
    REQUIRE(s.size() == 2);
    REQUIRE(s.y == std::vector<double>{1.5, 2.0});
    REQUIRE(s.delta == std::vector<int>{1, 0});
    REQUIRE_FALSE(s.tau.has_value());
}

TEST_CASE("CSV ingestion: header detected only when neither field is numeric") {
    TempDir dir;
    const fs::path with_header = dir.path / "h.csv";
    std::ofstream(with_header) << "time,status\n3.25,1\n";
    REQUIRE(ingest_csv(with_header.string()).size() == 1);

    const fs::path bad = dir.path / "bad.csv";
    std::ofstream(bad) << "x,1\n";
    try {
        ingest_csv(bad.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.row == 1);
    }
}

TEST_CASE("CSV ingestion: error rows carry 1-based numbers") {
    TempDir dir;
    const fs::path neg = dir.path / "neg.csv";
    std::ofstream(neg) << "1.0,1\n-1,1\n";
    try {
        ingest_csv(neg.string());
        FAIL("expected NegativeTime");
    } catch (const NegativeTime& e) {
        REQUIRE(e.row == 2);
    }

    const fs::path status = dir.path / "status.csv";
    std::ofstream(status) << "1.0,dead\n";
    REQUIRE_THROWS_AS(ingest_csv(status.string()), BadStatus);

    const fs::path two = dir.path / "two.csv";
    std::ofstream(two) << "1.0,2\n";
    REQUIRE_THROWS_AS(ingest_csv(two.string()), BadStatus);

    REQUIRE_THROWS_AS(ingest_csv((dir.path / "missing.csv").string()), IoError);
}

TEST_CASE("CSV round-trip is exact") {
    TempDir dir;
    CensoredSample s;
    Xoshiro256 rng(3, 3);
    for (int i = 0; i < 200; ++i) {
        s.y.push_back(rng.uniform() * 1e3);
        s.delta.push_back(static_cast<int>(rng.next() % 2));
    }
    const fs::path csv = dir.path / "round.csv";
    write_sample_csv(s, csv.string());
    const CensoredSample back = ingest_csv(csv.string());
    REQUIRE(back.y == s.y);
    REQUIRE(back.delta == s.delta);
}

TEST_CASE("estimate mode writes density.csv and meta.json with the mass identity") {
    TempDir dir;
    const fs::path csv = dir.path / "sample.csv";
    {
        std::ofstream out(csv);
        Xoshiro256 rng(17, 4);
        for (int i = 0; i < 300; ++i) {
            const double x = rng.uniform() * 12.0;
            const double t = rng.exponential(0.1);
            out << std::min(x, t) << ',' << (x <= t ? 1 : 0) << '\n';
        }
    }
    RunConfig cfg;
    cfg.mode = RunMode::estimate;
    cfg.input_path = csv.string();
    cfg.output_dir = (dir.path / "out").string();
    cfg.filter = "symmlet5";
    cfg.grid_points = 64;
    REQUIRE(run(cfg) == 0);

    const auto meta = nlohmann::json::parse(slurp(dir.path / "out" / "meta.json"));
    REQUIRE(meta["filter"] == "symmlet5");
    REQUIRE(meta["level"].get<int>() == select_level(300));
    REQUIRE(meta["tau"].get<double>() > 0.0);

    // meta mass must reproduce the estimator's coefficient-sum integral
    const CensoredSample sample = normalize(ingest_csv(csv.string()));
    const DensityEstimate e =
        fit_partial(sample, load_filter("symmlet5"), meta["level"].get<int>());
    REQUIRE(meta["mass"].get<double>() ==
            Catch::Approx(coefficient_mass(e)).margin(1e-10));

    // density.csv: header + grid_points rows, clip postprocess keeps f >= 0
    std::ifstream density(dir.path / "out" / "density.csv");
    std::string line;
    std::getline(density, line);
    REQUIRE(line == "t_original,x_normalized,f_hat,f_hat_original_units,variance");
    int rows = 0;
    while (std::getline(density, line)) {
        ++rows;
        double t, x, fh, fo, var;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &t, &x, &fh, &fo, &var) == 5);
        REQUIRE(fh >= 0.0);
        REQUIRE(fo == Catch::Approx(fh / meta["tau"].get<double>()).margin(1e-12));
        REQUIRE(var >= 0.0);
    }
    REQUIRE(rows == 64);
}

TEST_CASE("estimate mode on the three-point Haar example") {
    TempDir dir;
    const fs::path csv = dir.path / "three.csv";
    std::ofstream(csv) << "1,1\n2,0\n3,1\n";
    RunConfig cfg;
    cfg.mode = RunMode::estimate;
    cfg.input_path = csv.string();
    cfg.output_dir = (dir.path / "out").string();
    cfg.filter = "haar";
    cfg.level = 0;
    cfg.grid_points = 5;
    REQUIRE(run(cfg) == 0);
    const auto meta = nlohmann::json::parse(slurp(dir.path / "out" / "meta.json"));
    REQUIRE(meta["mass"].get<double>() == Catch::Approx(1.0).margin(1e-12));
    std::ifstream density(dir.path / "out" / "density.csv");
    std::string line;
    std::getline(density, line);
    while (std::getline(density, line)) {
        double t, x, fh, fo, var;
        std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &t, &x, &fh, &fo, &var);
        REQUIRE(fh == Catch::Approx(1.0).margin(1e-12));  // flat density, mass 1
    }
}

TEST_CASE("simulate mode is byte-identical across runs") {
    TempDir dir;
    RunConfig cfg;
    cfg.mode = RunMode::simulate;
    cfg.baseline = "normal";
    cfg.n = 100;
    cfg.replications = 5;
    cfg.seed = 7;
    cfg.grid_points = 64;
    cfg.output_dir = (dir.path / "a").string();
    REQUIRE(run(cfg) == 0);
    cfg.output_dir = (dir.path / "b").string();
    REQUIRE(run(cfg) == 0);
    REQUIRE(slurp(dir.path / "a" / "report.json") == slurp(dir.path / "b" / "report.json"));
    REQUIRE(slurp(dir.path / "a" / "curve_partial.csv") ==
            slurp(dir.path / "b" / "curve_partial.csv"));
}

TEST_CASE("simulate mode emits both curve files when asked for both kinds") {
    TempDir dir;
    RunConfig cfg;
    cfg.mode = RunMode::simulate;
    cfg.baseline = "bimodal";
    cfg.n = 60;
    cfg.replications = 3;
    cfg.grid_points = 32;
    cfg.kinds = {EstimatorKind::partial, EstimatorKind::complete};
    cfg.output_dir = (dir.path / "out").string();
    REQUIRE(run(cfg) == 0);
    REQUIRE(fs::exists(dir.path / "out" / "curve_partial.csv"));
    REQUIRE(fs::exists(dir.path / "out" / "curve_complete.csv"));
    std::istringstream curve(slurp(dir.path / "out" / "curve_partial.csv"));
    std::string header;
    std::getline(curve, header);
    REQUIRE(header == "x,true_pdf,mean_estimate,q025,q975,best_estimate");
}

TEST_CASE("missing input surfaces as an IoError with exit code 3") {
    RunConfig cfg;
    cfg.mode = RunMode::estimate;
    cfg.input_path = "/nonexistent/file.csv";
    cfg.output_dir = "/tmp";
    REQUIRE(run(cfg) == 3);
}

TEST_CASE("bad filter name surfaces as a config error with exit code 2") {
    TempDir dir;
    const fs::path csv = dir.path / "s.csv";
    std::ofstream(csv) << "1,1\n2,1\n";
    RunConfig cfg;
    cfg.mode = RunMode::estimate;
    cfg.input_path = csv.string();
    cfg.output_dir = dir.path.string();
    cfg.filter = "sym99";
    REQUIRE(run(cfg) == 2);
}
