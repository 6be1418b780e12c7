#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nwfpp/experiments.hpp"

using namespace nwfpp;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

experiment_config tiny(const std::string& kind, const std::string& dir) {
    experiment_config c;
    c.experiment = kind;
    c.n_list = {400};
    c.rho = 2.0;
    c.reps = 3;
    c.pairs_per_graph = 4;
    c.master_seed = 99;
    c.bp_horizon = 2.0;
    c.output_dir = dir;
    return c;
}

} // namespace

TEST_CASE("config parsing and validation") {
    const auto j = nlohmann::json::parse(R"({
        "experiment": "distance", "n_list": [100, 1000], "rho": 2.0,
        "reps": 4, "pairs_per_graph": 5, "master_seed": 7,
        "bp_horizon": 3.5, "output_dir": "/tmp/x"
    })");
    const experiment_config c = experiment_config::from_json(j);
    CHECK(c.experiment == "distance");
    CHECK(c.n_list == std::vector<std::int64_t>{100, 1000});
    CHECK(c.reps == 4);
    CHECK(c.bp_horizon == 3.5);

    // unknown keys are rejected by name
    auto bad = j;
    bad["shortcutz"] = 1;
    try {
        experiment_config::from_json(bad);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("shortcutz") != std::string::npos);
    }

    auto bad2 = j;
    bad2["experiment"] = "diffusion";
    CHECK_THROWS_AS(experiment_config::from_json(bad2), std::invalid_argument);
    auto bad3 = j;
    bad3["n_list"] = nlohmann::json::array();
    CHECK_THROWS_AS(experiment_config::from_json(bad3), std::invalid_argument);
    auto bad4 = j;
    bad4["rho"] = 0.0;
    CHECK_THROWS_AS(experiment_config::from_json(bad4), std::invalid_argument);

    // parse errors carry position diagnostics
    const fs::path p = fs::temp_directory_path() / "nwfpp_bad.json";
    std::ofstream(p) << "{ \"experiment\": ";
    try {
        experiment_config::from_json_file(p.string());
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
}

TEST_CASE("pair samples are worker-count independent") {
    const auto one = sample_pairs(300, 2.0, 4, 3, 42, 1);
    const auto four = sample_pairs(300, 2.0, 4, 3, 42, 4);
    REQUIRE(one.samples.size() == four.samples.size());
    REQUIRE(one.failures.empty());
    for (std::size_t i = 0; i < one.samples.size(); ++i) {
        CHECK(one.samples[i].u == four.samples[i].u);
        CHECK(one.samples[i].v == four.samples[i].v);
        CHECK(one.samples[i].weight == four.samples[i].weight); // bit-for-bit
        CHECK(one.samples[i].hops == four.samples[i].hops);
    }
}

TEST_CASE("campaign outputs are byte-identical across reruns and worker counts") {
    for (const std::string kind : {"distance", "hopcount", "epidemic", "collision"}) {
        CAPTURE(kind);
        const fs::path d1 = fs::temp_directory_path() / ("nwfpp_camp1_" + kind);
        const fs::path d2 = fs::temp_directory_path() / ("nwfpp_camp2_" + kind);
        fs::remove_all(d1);
        fs::remove_all(d2);
        run_campaign(tiny(kind, d1.string()), 1);
        run_campaign(tiny(kind, d2.string()), 2);
        std::vector<fs::path> csvs;
        for (const auto& entry : fs::directory_iterator(d1))
            if (entry.path().extension() == ".csv") csvs.push_back(entry.path());
        CHECK(!csvs.empty());
        for (const fs::path& p : csvs) {
            CAPTURE(p.filename().string());
            CHECK(slurp(p) == slurp(d2 / p.filename()));
        }

        // rerun in place reproduces the same CSV bytes
        const std::string before = slurp(csvs.front());
        run_campaign(tiny(kind, d1.string()), 2);
        CHECK(slurp(csvs.front()) == before);
    }
}

TEST_CASE("campaign summary structure") {
    const fs::path dir = fs::temp_directory_path() / "nwfpp_camp_sum";
    fs::remove_all(dir);
    const campaign_result r = run_campaign(tiny("distance", dir.string()), 2);
    CHECK(r.summary.contains("results"));
    CHECK(r.summary.contains("all_pass"));
    CHECK(r.summary.contains("runtime_seconds"));
    CHECK(r.summary["config"]["master_seed"] == 99);
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "distance.csv"));
    CHECK(fs::exists(dir / "distance_limit.csv"));

    const std::string csv = slurp(dir / "distance.csv");
    CHECK(csv.rfind("n,rep,pair,u,v,weight,shifted_weight\n", 0) == 0);
    // 1 header + reps*pairs rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 4);
}
