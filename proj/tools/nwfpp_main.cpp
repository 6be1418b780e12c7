#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nwfpp/cmbp.hpp"
#include "nwfpp/csvio.hpp"
#include "nwfpp/experiments.hpp"
#include "nwfpp/fpp.hpp"
#include "nwfpp/mgf.hpp"
#include "nwfpp/nwgraph.hpp"
#include "nwfpp/stats.hpp"
#include "nwfpp/theory.hpp"

namespace {

using namespace nwfpp;

struct time_grid {
    double t0 = 0.0, t1 = 0.0, dt = 0.0;
};

// "t0:t1:dt"
time_grid parse_grid(const std::string& s) {
    time_grid g;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.t0, &g.t1, &g.dt) != 3 || g.dt <= 0.0 ||
        g.t1 < g.t0)
        throw CLI::ValidationError("grid", "expected t0:t1:dt with dt > 0");
    return g;
}

std::vector<double> expand_grid(const time_grid& g) {
    std::vector<double> ts;
    for (double t = g.t0; t <= g.t1 + 1e-12 * std::max(1.0, std::abs(g.t1)); t += g.dt)
        ts.push_back(t);
    return ts;
}

// stdout unless --out given
class out_target {
public:
    explicit out_target(const std::string& path) : path_(path) {}
    csv_writer open() const { return csv_writer(path_.empty() ? "/dev/stdout" : path_); }

private:
    std::string path_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"first passage percolation on the Newman-Watts small world"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- constants ----
    double c_rho = 1.0;
    auto* c_cmd = app.add_subcommand("constants", "print the model constants as JSON");
    c_cmd->add_option("--rho", c_rho, "shortcut intensity")->required();
    c_cmd->callback([&] {
        const model_constants k = constants(c_rho);
        nlohmann::json j = {
            {"rho", k.rho},       {"lambda", k.lambda}, {"lambda2", k.lambda2},
            {"pi_R", k.pi_red()}, {"pi_B", k.pi_blue()}, {"u_R", k.u_red()},
            {"u_B", k.u_blue()},  {"c", k.c},           {"c_ihrg", ihrg_constant(k)},
        };
        std::printf("%s\n", j.dump(2).c_str());
    });

    // ---- run (campaign) ----
    std::string run_config;
    int run_workers = static_cast<int>(std::thread::hardware_concurrency());
    auto* run_cmd = app.add_subcommand("run", "run a campaign from a JSON config");
    run_cmd->add_option("--config", run_config, "config file")->required();
    run_cmd->add_option("--workers", run_workers, "worker threads");
    run_cmd->callback([&] {
        const campaign_result res = run_campaign_file(run_config, run_workers);
        std::printf("%s\n", res.summary.dump(2).c_str());
        exit_code = res.all_pass ? 0 : 1;
    });

    // ---- graph dump ----
    struct {
        std::int64_t n = 0;
        double rho = 0.0;
        std::uint64_t seed = 0;
        std::string out;
    } gd;
    auto* g_cmd = app.add_subcommand("graph", "graph utilities");
    auto* gd_cmd = g_cmd->add_subcommand("dump", "generate and dump a graph as CSV + JSON sidecar");
    gd_cmd->add_option("--n", gd.n)->required();
    gd_cmd->add_option("--rho", gd.rho)->required();
    gd_cmd->add_option("--seed", gd.seed)->required();
    gd_cmd->add_option("--out", gd.out, "output CSV path")->required();
    gd_cmd->callback([&] { dump_csv(generate({gd.n, gd.rho, gd.seed}), gd.out); });

    // ---- fpp ----
    struct {
        std::int64_t n = 1000;
        double rho = 1.0;
        std::uint64_t seed = 0;
        std::int64_t pairs = 1;
        std::int64_t source = 0;
        std::int64_t u = 0, v = 1;
        double tfreeze = 0.0;
        double horizon = 0.0;
        std::string grid = "0:10:0.5";
        std::string out;
    } fp;
    auto* f_cmd = app.add_subcommand("fpp", "exploration on the weighted graph");
    auto* fd_cmd = f_cmd->add_subcommand("distance", "shortest-weight distances of random pairs");
    fd_cmd->add_option("--n", fp.n)->required();
    fd_cmd->add_option("--rho", fp.rho)->required();
    fd_cmd->add_option("--seed", fp.seed)->required();
    fd_cmd->add_option("--pairs", fp.pairs)->required();
    fd_cmd->add_option("--out", fp.out);
    fd_cmd->callback([&] {
        const weighted_graph g = generate({fp.n, fp.rho, fp.seed});
        rng_stream pairs = derive_stream(fp.seed, "cli-pairs");
        csv_writer csv = out_target(fp.out).open();
        csv.row("pair_id", "u", "v", "weight", "hopcount");
        for (std::int64_t p = 0; p < fp.pairs; ++p) {
            const auto u = static_cast<std::int64_t>(pairs.next_below(fp.n));
            auto v = static_cast<std::int64_t>(pairs.next_below(fp.n));
            while (v == u) v = static_cast<std::int64_t>(pairs.next_below(fp.n));
            const path_result r = distance(g, u, v);
            csv.row(p, u, v, r.weight, r.hopcount);
        }
    });
    auto* fe_cmd = f_cmd->add_subcommand("epidemic", "fraction infected over a time grid");
    fe_cmd->add_option("--n", fp.n)->required();
    fe_cmd->add_option("--rho", fp.rho)->required();
    fe_cmd->add_option("--seed", fp.seed)->required();
    fe_cmd->add_option("--source", fp.source)->required();
    fe_cmd->add_option("--grid", fp.grid, "t0:t1:dt")->required();
    fe_cmd->add_option("--out", fp.out);
    fe_cmd->callback([&] {
        const weighted_graph g = generate({fp.n, fp.rho, fp.seed});
        const std::vector<double> ts = expand_grid(parse_grid(fp.grid));
        const std::vector<double> in = epidemic_curve(g, fp.source, ts);
        csv_writer csv = out_target(fp.out).open();
        csv.row("t", "I_n");
        for (std::size_t i = 0; i < ts.size(); ++i) csv.row(ts[i], in[i]);
    });
    auto* fc_cmd = f_cmd->add_subcommand("collide", "two-tree collision log");
    fc_cmd->add_option("--n", fp.n)->required();
    fc_cmd->add_option("--rho", fp.rho)->required();
    fc_cmd->add_option("--seed", fp.seed)->required();
    fc_cmd->add_option("--u", fp.u)->required();
    fc_cmd->add_option("--v", fp.v)->required();
    fc_cmd->add_option("--tfreeze", fp.tfreeze, "freeze time; 0 -> log n/(2 lambda)");
    fc_cmd->add_option("--horizon", fp.horizon, "scan horizon s_max; 0 -> 10/lambda");
    fc_cmd->add_option("--out", fp.out);
    fc_cmd->callback([&] {
        const weighted_graph g = generate({fp.n, fp.rho, fp.seed});
        const model_constants k = constants(fp.rho);
        const double tf =
            fp.tfreeze > 0.0 ? fp.tfreeze : std::log(static_cast<double>(fp.n)) / (2.0 * k.lambda);
        const double hz = fp.horizon > 0.0 ? fp.horizon : 10.0 / k.lambda;
        const collision_result r = collision_connect(g, fp.u, fp.v, tf, hz);
        static const char* pair_name[2][2] = {{"RR", "RB"}, {"BR", "BB"}};
        csv_writer csv = out_target(fp.out).open();
        csv.row("s", "color_pair", "remaining_lifetime");
        for (const collision_event& e : r.log)
            if (!e.ghost)
                csv.row(e.s, pair_name[static_cast<int>(e.v_color)][static_cast<int>(e.u_color)],
                        e.remaining);
    });

    // ---- bp ----
    struct {
        double rho = 1.0;
        std::string root = "blue";
        std::string mode = "split0";
        double horizon = 0.0;
        std::int64_t reps = 1000;
        std::uint64_t seed = 0;
        std::int64_t splits = 1000;
        std::string out;
    } bp;
    auto* b_cmd = app.add_subcommand("bp", "two-type branching process");
    auto* bw_cmd = b_cmd->add_subcommand("sample-w", "martingale-limit samples");
    bw_cmd->add_option("--rho", bp.rho)->required();
    bw_cmd->add_option("--root", bp.root)->check(CLI::IsMember({"red", "blue"}));
    bw_cmd->add_option("--mode", bp.mode, "root convention")
        ->check(CLI::IsMember({"alive", "split0"}));
    bw_cmd->add_option("--horizon", bp.horizon, "0 -> 15/lambda");
    bw_cmd->add_option("--reps", bp.reps)->required();
    bw_cmd->add_option("--seed", bp.seed)->required();
    bw_cmd->add_option("--out", bp.out);
    bw_cmd->callback([&] {
        const model_constants k = constants(bp.rho);
        const double t = bp.horizon > 0.0 ? bp.horizon : 15.0 / k.lambda;
        const auto ws = sample_w(bp.rho, bp.root == "red" ? color::red : color::blue, t,
                                 bp.reps, bp.seed,
                                 bp.mode == "alive" ? root_mode::alive : root_mode::split_at_zero);
        csv_writer csv = out_target(bp.out).open();
        csv.row("rep", "W");
        for (std::size_t i = 0; i < ws.size(); ++i) csv.row(static_cast<std::int64_t>(i), ws[i]);
    });
    auto* bd_cmd = b_cmd->add_subcommand("diag", "split log of one trajectory");
    bd_cmd->add_option("--rho", bp.rho)->required();
    bd_cmd->add_option("--splits", bp.splits)->required();
    bd_cmd->add_option("--seed", bp.seed)->required();
    bd_cmd->add_option("--root", bp.root)->check(CLI::IsMember({"red", "blue"}));
    bd_cmd->add_option("--mode", bp.mode)->check(CLI::IsMember({"alive", "split0"}));
    bd_cmd->add_option("--out", bp.out);
    bd_cmd->callback([&] {
        const bp_trajectory traj = simulate(
            bp.rho, bp.root == "red" ? color::red : color::blue,
            bp_stop::at_splits(static_cast<std::uint64_t>(bp.splits)), bp.seed,
            bp.mode == "alive" ? root_mode::alive : root_mode::split_at_zero);
        csv_writer csv = out_target(bp.out).open();
        csv.row("i", "T_i", "parent_type", "d_R", "d_B", "S_i");
        for (std::size_t i = 0; i < traj.splits.size(); ++i) {
            const split_event& e = traj.splits[i];
            csv.row(static_cast<std::int64_t>(i + 1), e.time,
                    e.parent == color::red ? "R" : "B", e.d_red, e.d_blue, e.alive_after);
        }
    });

    // ---- mgf ----
    struct {
        double rho = 1.0;
        double theta_max = 10.0;
        std::string grid = "-2:2:0.1";
        std::string out;
    } mg;
    auto* m_cmd = app.add_subcommand("mgf", "martingale-limit moment generating functions");
    auto* ms_cmd = m_cmd->add_subcommand("solve", "solve the functional-equation system");
    ms_cmd->add_option("--rho", mg.rho)->required();
    ms_cmd->add_option("--theta-max", mg.theta_max);
    ms_cmd->add_option("--out", mg.out, "output CSV")->required();
    ms_cmd->callback([&] {
        solver_config cfg;
        cfg.theta_max = mg.theta_max;
        const mgf_table t = solve(constants(mg.rho), cfg);
        csv_writer csv(mg.out);
        csv.row("theta", "M_R", "M_B");
        for (std::size_t i = 0; i < t.theta().size(); ++i)
            csv.row(t.theta()[i], t.m_red()[i], t.m_blue()[i]);
    });
    auto* mf_cmd = m_cmd->add_subcommand("fcurve", "epidemic curve function f");
    mf_cmd->add_option("--rho", mg.rho)->required();
    mf_cmd->add_option("--grid", mg.grid, "t0:t1:dt")->required();
    mf_cmd->add_option("--theta-max", mg.theta_max);
    mf_cmd->add_option("--out", mg.out);
    mf_cmd->callback([&] {
        const model_constants k = constants(mg.rho);
        solver_config cfg;
        cfg.theta_max = mg.theta_max;
        const mgf_table t = solve(k, cfg);
        csv_writer csv = out_target(mg.out).open();
        csv.row("t", "x", "f");
        for (const double tt : expand_grid(parse_grid(mg.grid)))
            csv.row(tt, epidemic_x(k, tt), f_curve(t, tt));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return exit_code;
}
