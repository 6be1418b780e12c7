#include "nwfpp/experiments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>

#include "nwfpp/cmbp.hpp"
#include "nwfpp/csvio.hpp"
#include "nwfpp/fpp.hpp"
#include "nwfpp/mgf.hpp"
#include "nwfpp/rng.hpp"
#include "nwfpp/stats.hpp"

namespace nwfpp {

namespace {

using nlohmann::json;

void parallel_for(int workers, std::int64_t count, const std::function<void(std::int64_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mx;
    auto worker = [&] {
        while (true) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                const std::scoped_lock lock(err_mx);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int k = static_cast<int>(std::min<std::int64_t>(workers, count));
    pool.reserve(k);
    for (int w = 0; w < k; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs) {
    const double m = mean_of(xs);
    double s = 0.0;
    for (const double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size());
}

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

// uniform pair U != V, resampled
std::pair<std::int32_t, std::int32_t> draw_pair(rng_stream& rng, std::int64_t n) {
    const auto u = static_cast<std::int32_t>(rng.next_below(n));
    auto v = static_cast<std::int32_t>(rng.next_below(n));
    while (v == u) v = static_cast<std::int32_t>(rng.next_below(n));
    return {u, v};
}

struct rep_failure {
    int rep;
    std::string what;
};

json failures_json(const std::vector<rep_failure>& fails) {
    json arr = json::array();
    for (const auto& f : fails) arr.push_back({{"rep", f.rep}, {"error", f.what}});
    return arr;
}

// runs fn(rep) for every rep, isolating failures; failed reps are flagged and
// the campaign continues
void for_each_rep(int workers, std::int64_t count, std::vector<rep_failure>& fails,
                  const std::function<void(std::int64_t)>& fn) {
    std::mutex mx;
    parallel_for(workers, count, [&](std::int64_t rep) {
        try {
            fn(rep);
        } catch (const std::exception& e) {
            const std::scoped_lock lock(mx);
            fails.push_back({static_cast<int>(rep), e.what()});
        }
    });
    std::sort(fails.begin(), fails.end(),
              [](const rep_failure& a, const rep_failure& b) { return a.rep < b.rep; });
}

// limit-law draws for the distance experiment:
// -(log(W_U W_V) + Gumbel + c)/lambda with exploration-root W samples
struct limit_draw {
    double w_u, w_v, gumbel, value;
};

std::vector<limit_draw> draw_limit_ensemble(const model_constants& k, double horizon,
                                            std::int64_t count, std::uint64_t master,
                                            std::int64_t n, int workers) {
    std::vector<limit_draw> out(count);
    parallel_for(workers, count, [&](std::int64_t d) {
        rng_stream ru = derive_stream(master, "bw-u", static_cast<std::uint64_t>(n), d);
        rng_stream rv = derive_stream(master, "bw-v", static_cast<std::uint64_t>(n), d);
        rng_stream rg = derive_stream(master, "gum", static_cast<std::uint64_t>(n), d);
        const double wu = sample_w_one(k, color::blue, horizon, ru, root_mode::split_at_zero);
        const double wv = sample_w_one(k, color::blue, horizon, rv, root_mode::split_at_zero);
        const double g = gumbel_sample(rg);
        out[d] = {wu, wv, g, -(std::log(wu * wv) + g + k.c) / k.lambda};
    });
    return out;
}

} // namespace

void experiment_config::validate() const {
    static const char* kinds[] = {"distance", "hopcount", "epidemic", "collision"};
    if (std::find(std::begin(kinds), std::end(kinds), experiment) == std::end(kinds))
        throw std::invalid_argument("config: unknown experiment '" + experiment + "'");
    if (n_list.empty())
        throw std::invalid_argument("config: n_list must be nonempty");
    for (const auto n : n_list)
        if (n < 3) throw std::invalid_argument("config: n_list entries must be >= 3");
    if (!(rho > 0.0)) throw std::invalid_argument("config: rho must be > 0");
    if (reps < 1) throw std::invalid_argument("config: reps must be >= 1");
    if (pairs_per_graph < 1)
        throw std::invalid_argument("config: pairs_per_graph must be >= 1");
    if (bp_horizon < 0.0) throw std::invalid_argument("config: bp_horizon must be >= 0");
    if (output_dir.empty()) throw std::invalid_argument("config: output_dir required");
}

experiment_config experiment_config::from_json(const json& j) {
    static const char* known[] = {"experiment", "n_list", "rho", "reps", "pairs_per_graph",
                                  "master_seed", "bp_horizon", "output_dir"};
    for (const auto& [key, _] : j.items())
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known))
            throw std::invalid_argument("config: unknown key '" + key + "'");

    experiment_config c;
    try {
        c.experiment = j.at("experiment").get<std::string>();
        c.n_list = j.at("n_list").get<std::vector<std::int64_t>>();
        c.rho = j.at("rho").get<double>();
        c.reps = j.at("reps").get<int>();
        c.master_seed = j.at("master_seed").get<std::uint64_t>();
        c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("pairs_per_graph")) c.pairs_per_graph = j.at("pairs_per_graph").get<int>();
        if (j.contains("bp_horizon")) c.bp_horizon = j.at("bp_horizon").get<double>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

experiment_config experiment_config::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    json j;
    try {
        j = json::parse(in); // exceptions carry byte positions
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    return from_json(j);
}

pair_sample_run sample_pairs(std::int64_t n, double rho, int reps, int pairs_per_graph,
                             std::uint64_t master_seed, int workers) {
    const model_constants k = constants(rho);
    const double t_freeze = std::log(static_cast<double>(n)) / (2.0 * k.lambda);
    std::vector<pair_sample> out(static_cast<std::size_t>(reps) * pairs_per_graph,
                                 pair_sample{-1, 0, 0, 0, 0, 0.0, 0});
    std::vector<rep_failure> fails;
    for_each_rep(workers, reps, fails, [&](std::int64_t rep) {
        const weighted_graph g = generate(
            {n, rho, derive_seed(master_seed, "graph", static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(rep))});
        rng_stream pairs = derive_stream(master_seed, "pairs", static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(rep));
        for (int p = 0; p < pairs_per_graph; ++p) {
            const auto [u, v] = draw_pair(pairs, n);
            const collision_result r = collision_connect(g, u, v, t_freeze);
            out[rep * pairs_per_graph + p] =
                {n, static_cast<int>(rep), p, u, v, r.path.weight, r.path.hopcount};
        }
    });
    pair_sample_run run;
    for (pair_sample& s : out)
        if (s.n >= 0) run.samples.push_back(s);
    for (const rep_failure& f : fails) run.failures.emplace_back(f.rep, f.what);
    return run;
}

namespace {

json run_distance(const experiment_config& cfg, int workers, bool& all_pass,
                  std::vector<rep_failure>& fails) {
    const model_constants k = constants(cfg.rho);
    const double horizon = cfg.horizon(k);
    csv_writer csv(cfg.output_dir + "/distance.csv");
    csv.row("n", "rep", "pair", "u", "v", "weight", "shifted_weight");
    csv_writer lim_csv(cfg.output_dir + "/distance_limit.csv");
    lim_csv.row("n", "draw", "W_U", "W_V", "Lambda", "value");

    json per_n = json::object();
    std::vector<double> medians;
    for (const std::int64_t n : cfg.n_list) {
        const double shift_n = std::log(static_cast<double>(n)) / k.lambda;
        const auto run = sample_pairs(n, cfg.rho, cfg.reps, cfg.pairs_per_graph,
                                      cfg.master_seed, workers);
        for (const auto& [rep, what] : run.failures) fails.push_back({rep, what});
        const auto& samples = run.samples;
        std::vector<double> shifted;
        shifted.reserve(samples.size());
        for (const pair_sample& s : samples) {
            shifted.push_back(s.weight - shift_n);
            csv.row(s.n, s.rep, s.pair, s.u, s.v, s.weight, shifted.back());
        }
        const auto limit = draw_limit_ensemble(k, horizon, static_cast<std::int64_t>(samples.size()),
                                               cfg.master_seed, n, workers);
        std::vector<double> limit_values;
        limit_values.reserve(limit.size());
        for (std::size_t d = 0; d < limit.size(); ++d) {
            limit_values.push_back(limit[d].value);
            lim_csv.row(n, static_cast<std::int64_t>(d), limit[d].w_u, limit[d].w_v,
                        limit[d].gumbel, limit[d].value);
        }
        const ks_result ks = ks_two_sample(shifted, limit_values);
        const bool pass = ks.statistic < 0.1;
        all_pass = all_pass && pass;
        medians.push_back(median_of(shifted));
        per_n[std::to_string(n)] = {
            {"pairs", samples.size()},
            {"median_shifted", medians.back()},
            {"mean_shifted", mean_of(shifted)},
            {"ks_vs_limit", ks.statistic},
            {"ks_threshold", 0.1},
            {"pass_ks", pass},
        };
    }

    json cross = json::object();
    for (std::size_t i = 0; i + 1 < cfg.n_list.size(); ++i) {
        const double ref = std::log(static_cast<double>(cfg.n_list[i + 1]) /
                                    static_cast<double>(cfg.n_list[i])) / k.lambda;
        const double got = (medians[i + 1] + std::log(static_cast<double>(cfg.n_list[i + 1])) / k.lambda) -
                           (medians[i] + std::log(static_cast<double>(cfg.n_list[i])) / k.lambda);
        const double rel = std::abs(got - ref) / ref;
        const bool pass = rel <= 0.1;
        all_pass = all_pass && pass;
        cross[std::to_string(cfg.n_list[i]) + "->" + std::to_string(cfg.n_list[i + 1])] = {
            {"median_shift", got}, {"reference", ref}, {"rel_err", rel}, {"pass", pass}};
    }
    return {{"per_n", per_n}, {"median_shift_checks", cross}};
}

json run_hopcount(const experiment_config& cfg, int workers, bool& all_pass,
                  std::vector<rep_failure>& fails) {
    const model_constants k = constants(cfg.rho);
    csv_writer csv(cfg.output_dir + "/hopcount.csv");
    csv.row("n", "rep", "pair", "hops", "standardized");

    json per_n = json::object();
    for (const std::int64_t n : cfg.n_list) {
        const double ct = (k.lambda + 1.0) / k.lambda * std::log(static_cast<double>(n));
        const auto run = sample_pairs(n, cfg.rho, cfg.reps, cfg.pairs_per_graph,
                                      cfg.master_seed, workers);
        for (const auto& [rep, what] : run.failures) fails.push_back({rep, what});
        const auto& samples = run.samples;
        std::vector<double> hops, std_theory;
        for (const pair_sample& s : samples) {
            hops.push_back(static_cast<double>(s.hops));
            std_theory.push_back((hops.back() - ct) / std::sqrt(ct));
            csv.row(s.n, s.rep, s.pair, s.hops, std_theory.back());
        }
        const double m = mean_of(hops), var = variance_of(hops);
        std::vector<double> studentized;
        for (const double h : hops) studentized.push_back((h - m) / std::sqrt(var));
        const ks_result ks_st = ks_one_sample(studentized, normal_cdf);
        const ks_result ks_th = ks_one_sample(std_theory, normal_cdf);
        const bool pass_mean = std::abs(m / ct - 1.0) <= 0.10;
        const bool pass_var = std::abs(var / ct - 1.0) <= 0.25;
        const bool pass_ks = ks_st.statistic < 0.1;
        all_pass = all_pass && pass_mean && pass_var && pass_ks;
        per_n[std::to_string(n)] = {
            {"pairs", samples.size()},
            {"mean", m},
            {"variance", var},
            {"target", ct},
            {"mean_ratio", m / ct},
            {"variance_ratio", var / ct},
            {"ks_studentized", ks_st.statistic},
            {"ks_theory_standardized", ks_th.statistic},
            {"pass_mean", pass_mean},
            {"pass_variance", pass_var},
            {"pass_ks", pass_ks},
        };
    }
    return {{"per_n", per_n}};
}

json run_epidemic(const experiment_config& cfg, int workers, bool& all_pass,
                  std::vector<rep_failure>& fails) {
    const model_constants k = constants(cfg.rho);
    const double horizon = cfg.horizon(k);
    solver_config scfg;
    scfg.theta_max = 500.0;
    scfg.grid_points = 768;
    const mgf_table table = solve(k, scfg);

    // t grid [-4/lambda, 4/lambda] step 0.1/lambda
    std::vector<double> grid;
    for (int i = -40; i <= 40; ++i) grid.push_back(0.1 * i / k.lambda);

    csv_writer fcsv(cfg.output_dir + "/fcurve.csv");
    fcsv.row("t", "f");
    std::vector<double> f_base;
    for (const double t : grid) {
        f_base.push_back(f_curve(table, t));
        fcsv.row(t, f_base.back());
    }

    csv_writer csv(cfg.output_dir + "/epidemic.csv");
    csv.row("n", "rep", "source", "t", "I_n");

    json per_n = json::object();
    for (const std::int64_t n : cfg.n_list) {
        const double log_shift = std::log(static_cast<double>(n)) / k.lambda;
        std::vector<double> abs_grid;
        for (const double t : grid) abs_grid.push_back(t + log_shift);

        const std::int64_t max_sources = static_cast<std::int64_t>(cfg.reps) * cfg.pairs_per_graph;
        std::vector<std::vector<double>> all_curves(max_sources);
        std::vector<std::int32_t> source_ids(max_sources, -1);
        for_each_rep(workers, cfg.reps, fails, [&](std::int64_t rep) {
            const weighted_graph g = generate(
                {n, cfg.rho, derive_seed(cfg.master_seed, "graph",
                                         static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(rep))});
            rng_stream src_rng = derive_stream(cfg.master_seed, "sources",
                                               static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(rep));
            for (int s = 0; s < cfg.pairs_per_graph; ++s) {
                const auto src = static_cast<std::int32_t>(src_rng.next_below(n));
                const std::int64_t idx = rep * cfg.pairs_per_graph + s;
                all_curves[idx] = epidemic_curve(g, src, abs_grid);
                source_ids[idx] = src;
            }
        });
        std::vector<std::vector<double>> curves;
        for (std::int64_t idx = 0; idx < max_sources; ++idx) {
            if (source_ids[idx] < 0) continue;
            for (std::size_t ti = 0; ti < grid.size(); ++ti)
                csv.row(n, static_cast<int>(idx / cfg.pairs_per_graph), source_ids[idx],
                        grid[ti], all_curves[idx][ti]);
            curves.push_back(std::move(all_curves[idx]));
        }
        const std::int64_t sources = static_cast<std::int64_t>(curves.size());

        // theory ensemble: f(t + log W / lambda) = 1 - M(x(t) W), clamped at theta_max
        const std::int64_t draws = std::max<std::int64_t>(2000, max_sources);
        std::vector<std::vector<double>> fcurves(draws);
        parallel_for(workers, draws, [&](std::int64_t d) {
            rng_stream rw = derive_stream(cfg.master_seed, "bw-e",
                                          static_cast<std::uint64_t>(n), d);
            const double w = sample_w_one(k, color::blue, horizon, rw,
                                          root_mode::split_at_zero);
            std::vector<double> fc(grid.size());
            for (std::size_t ti = 0; ti < grid.size(); ++ti) {
                const double x = std::min(epidemic_x(k, grid[ti]) * w, table.theta_max());
                fc[ti] = 1.0 - table.eval_root_split(x);
            }
            fcurves[d] = std::move(fc);
        });

        double sup_mean_diff = 0.0, max_ks = 0.0;
        int window_points = 0;
        for (std::size_t ti = 0; ti < grid.size(); ++ti) {
            std::vector<double> iv(sources), fv(draws);
            for (std::int64_t i = 0; i < sources; ++i) iv[i] = curves[i][ti];
            for (std::int64_t d = 0; d < draws; ++d) fv[d] = fcurves[d][ti];
            const double mi = mean_of(iv), mf = mean_of(fv);
            sup_mean_diff = std::max(sup_mean_diff, std::abs(mi - mf));
            if (mf >= 0.1 && mf <= 0.9) {
                ++window_points;
                max_ks = std::max(max_ks, ks_two_sample(iv, fv).statistic);
            }
        }
        const bool pass_mean = sup_mean_diff < 0.05;
        const bool pass_ks = max_ks < 0.15;
        all_pass = all_pass && pass_mean && pass_ks;
        per_n[std::to_string(n)] = {
            {"sources", sources},
            {"f_draws", draws},
            {"sup_mean_distance", sup_mean_diff},
            {"max_per_t_ks", max_ks},
            {"window_points", window_points},
            {"pass_mean", pass_mean},
            {"pass_ks", pass_ks},
        };
    }
    return {{"per_n", per_n}, {"mgf_residual", table.residual()}};
}

json run_collision(const experiment_config& cfg, int workers, bool& all_pass,
                   std::vector<rep_failure>& fails) {
    const model_constants k = constants(cfg.rho);
    const double s0 = -1.0 / k.lambda, s1 = 1.0 / k.lambda;
    const double z = 1.0 - k.pi_red() * k.pi_red() / 2.0;
    const double theory_intensity = z * (std::exp(k.lambda * s1) - std::exp(k.lambda * s0)) / k.lambda;
    const std::array<double, 4> probs = {
        k.pi_blue() * k.pi_blue() / z,          // q=B, r=B
        k.pi_red() * k.pi_blue() / z,           // q=R, r=B
        k.pi_blue() * k.pi_red() / z,           // q=B, r=R
        k.pi_red() * k.pi_red() / 2.0 / z,      // q=R, r=R
    };
    static const char* pair_name[2][2] = {{"RR", "RB"}, {"BR", "BB"}}; // [q][r]

    csv_writer csv(cfg.output_dir + "/collision.csv");
    csv.row("n", "rep", "s", "color_pair", "remaining");

    json per_n = json::object();
    std::vector<double> mean_norm_by_n;
    for (const std::int64_t n : cfg.n_list) {
        const double t_n = std::log(static_cast<double>(n)) / (2.0 * k.lambda);
        struct rep_out {
            std::vector<collision_event> events; // non-ghost, s <= s1
            double w_u = 0.0, w_v = 0.0;
            bool ok = false;
            std::string err;
        };
        std::vector<rep_out> outs(cfg.reps);
        parallel_for(workers, cfg.reps, [&](std::int64_t rep) {
            rep_out& o = outs[rep];
            try {
                const weighted_graph g = generate(
                    {n, cfg.rho, derive_seed(cfg.master_seed, "graph",
                                             static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(rep))});
                rng_stream pairs = derive_stream(cfg.master_seed, "pairs",
                                                 static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(rep));
                const auto [u, v] = draw_pair(pairs, n);
                const shortest_weight_tree swt_u = explore(g, u, swt_stop::at_time(t_n));
                const shortest_weight_tree swt_v = explore(g, v, swt_stop::at_time(t_n));
                o.w_u = swt_martingale(swt_u, k);
                o.w_v = swt_martingale(swt_v, k);
                const collision_result r = collision_connect(g, u, v, t_n, s1);
                for (const collision_event& e : r.log)
                    if (!e.ghost && e.s <= s1) o.events.push_back(e);
                o.ok = true;
            } catch (const std::exception& e) {
                o.err = e.what();
            }
        });

        std::array<std::int64_t, 4> counts{0, 0, 0, 0};
        std::vector<double> norm_counts;
        for (int rep = 0; rep < cfg.reps; ++rep) {
            const rep_out& o = outs[rep];
            if (!o.ok) {
                fails.push_back({rep, o.err});
                continue;
            }
            std::int64_t in_window = 0;
            for (const collision_event& e : o.events) {
                csv.row(n, rep, e.s, pair_name[static_cast<int>(e.v_color)][static_cast<int>(e.u_color)],
                        e.remaining);
                if (e.s >= s0) {
                    ++in_window;
                    const int qi = e.v_color == color::blue ? 1 : 0;
                    const int ri = e.u_color == color::blue ? 1 : 0;
                    // order: BB, RB, BR, RR
                    counts[qi == 1 && ri == 1 ? 0 : (qi == 0 && ri == 1 ? 1 : (qi == 1 ? 2 : 3))] += 1;
                }
            }
            norm_counts.push_back(static_cast<double>(in_window) / (o.w_u * o.w_v));
        }

        const chi_square_result chi = chi_square_gof(counts, probs);
        const double mean_norm = mean_of(norm_counts);
        const double rel = std::abs(mean_norm - theory_intensity) / theory_intensity;
        const bool pass_chi = chi.p_value > 0.01;
        const bool pass_intensity = rel <= 0.15;
        all_pass = all_pass && pass_chi && pass_intensity;
        mean_norm_by_n.push_back(mean_norm);
        per_n[std::to_string(n)] = {
            {"instances", norm_counts.size()},
            {"counts_BB_RB_BR_RR", counts},
            {"chi_square", chi.statistic},
            {"chi_square_p", chi.p_value},
            {"mean_normalized_count", mean_norm},
            {"theory_intensity", theory_intensity},
            {"intensity_rel_err", rel},
            {"pass_chi_square", pass_chi},
            {"pass_intensity", pass_intensity},
        };
    }

    json cross = json::object();
    for (std::size_t i = 0; i + 1 < cfg.n_list.size(); ++i) {
        const double rel = std::abs(mean_norm_by_n[i + 1] - mean_norm_by_n[i]) / theory_intensity;
        const bool pass = rel <= 0.15;
        all_pass = all_pass && pass;
        cross[std::to_string(cfg.n_list[i]) + "->" + std::to_string(cfg.n_list[i + 1])] = {
            {"rel_change", rel}, {"pass", pass}};
    }
    return {{"per_n", per_n}, {"stability_checks", cross},
            {"window", {{"s0", s0}, {"s1", s1}}}};
}

} // namespace

campaign_result run_campaign(const experiment_config& cfg, int workers) {
    cfg.validate();
    std::filesystem::create_directories(cfg.output_dir);
    const auto t0 = std::chrono::steady_clock::now();

    bool all_pass = true;
    std::vector<rep_failure> fails;
    json body;
    if (cfg.experiment == "distance")
        body = run_distance(cfg, workers, all_pass, fails);
    else if (cfg.experiment == "hopcount")
        body = run_hopcount(cfg, workers, all_pass, fails);
    else if (cfg.experiment == "epidemic")
        body = run_epidemic(cfg, workers, all_pass, fails);
    else
        body = run_collision(cfg, workers, all_pass, fails);
    if (!fails.empty()) all_pass = false;

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    campaign_result res;
    res.summary = {
        {"experiment", cfg.experiment},
        {"config",
         {{"n_list", cfg.n_list},
          {"rho", cfg.rho},
          {"reps", cfg.reps},
          {"pairs_per_graph", cfg.pairs_per_graph},
          {"master_seed", cfg.master_seed},
          {"bp_horizon", cfg.bp_horizon}}},
        {"results", body},
        {"flagged_reps", failures_json(fails)},
        {"runtime_seconds", secs},
        {"all_pass", all_pass},
    };
    res.all_pass = all_pass;
    std::ofstream out(cfg.output_dir + "/summary.json");
    out << res.summary.dump(2) << '\n';
    return res;
}

campaign_result run_campaign_file(const std::string& config_path, int workers) {
    return run_campaign(experiment_config::from_json_file(config_path), workers);
}

} // namespace nwfpp
