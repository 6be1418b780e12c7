#include "nwfpp/cmbp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace nwfpp {

namespace {

constexpr std::uint64_t kMaxSplits = 100'000'000;

struct bp_state {
    std::uint64_t a_red = 0;
    std::uint64_t a_blue = 0;
    std::uint64_t n_red_dead = 0;
    std::uint64_t n_blue_dead = 0;
    double t = 0.0;
    std::uint64_t splits = 0;
};

// One split. Returns false when the next split would pass t_max (state is
// then frozen at t_max). first_at_zero skips the waiting-time draw.
template <class OnSplit>
bool step(bp_state& s, const offspring_law& law, rng_stream& rng, double t_max,
          bool first_at_zero, OnSplit&& on_split) {
    const std::uint64_t alive = s.a_red + s.a_blue;
    if (!first_at_zero) {
        const double dt = rng.exp1() / static_cast<double>(alive);
        if (s.t + dt > t_max) {
            s.t = t_max;
            return false;
        }
        s.t += dt;
    }
    color parent;
    if (s.a_red == 0)
        parent = color::blue;
    else if (s.a_blue == 0)
        parent = color::red;
    else
        parent = rng.next_below(alive) < s.a_red ? color::red : color::blue;

    const std::uint32_t d_red = offspring_law::red_children(parent);
    const std::uint32_t d_blue = law.blue_children(rng);
    if (parent == color::red) {
        s.a_red += d_red - 1; // net zero
        s.a_blue += d_blue;
        ++s.n_red_dead;
    } else {
        s.a_blue += d_blue;
        --s.a_blue;
        s.a_red += d_red;
        ++s.n_blue_dead;
    }
    ++s.splits;
    on_split(s, parent, d_red, d_blue);
    return true;
}

bp_state init_state(color root) {
    bp_state s;
    (root == color::red ? s.a_red : s.a_blue) = 1;
    return s;
}

} // namespace

bp_trajectory simulate(double rho, color root, bp_stop stop, std::uint64_t seed,
                       root_mode mode) {
    if (!(rho > 0.0)) throw std::domain_error("simulate: rho must be > 0");
    if (stop.mode == bp_stop::kind::at_splits && stop.splits > kMaxSplits)
        throw std::length_error("simulate: at-splits stop exceeds the 1e8 cap");
    if (stop.mode == bp_stop::kind::at_time && stop.time < 0.0)
        throw std::domain_error("simulate: stop time must be >= 0");

    const offspring_law law{rho};
    rng_stream rng = derive_stream(seed, "bp");
    bp_state s = init_state(root);
    bp_trajectory traj;
    traj.root = root;
    traj.mode = mode;

    const double t_max =
        stop.mode == bp_stop::kind::at_time ? stop.time : std::numeric_limits<double>::infinity();
    const std::uint64_t m_max = stop.mode == bp_stop::kind::at_splits ? stop.splits : kMaxSplits;
    auto log_split = [&](const bp_state& st, color parent, std::uint32_t dr, std::uint32_t db) {
        traj.splits.push_back({st.t, parent, dr, db, st.a_red + st.a_blue});
    };

    bool first = mode == root_mode::split_at_zero;
    while (s.splits < m_max) {
        if (!step(s, law, rng, t_max, first, log_split)) break;
        first = false;
        if (s.splits == kMaxSplits && stop.mode == bp_stop::kind::at_time)
            throw std::length_error("simulate: split budget (1e8) exhausted before stop time");
    }
    if (stop.mode == bp_stop::kind::at_splits)
        s.t = traj.splits.empty() ? 0.0 : traj.splits.back().time;

    traj.a_red = s.a_red;
    traj.a_blue = s.a_blue;
    traj.n_red_dead = s.n_red_dead;
    traj.n_blue_dead = s.n_blue_dead;
    traj.t_end = s.t;
    return traj;
}

double martingale_w(const bp_trajectory& traj, const model_constants& k) {
    if (traj.a_red + traj.a_blue == 0)
        throw std::runtime_error("martingale_w: empty particle population");
    return std::exp(-k.lambda * traj.t_end) *
           (static_cast<double>(traj.a_red) * k.u_red() +
            static_cast<double>(traj.a_blue) * k.u_blue());
}

double sample_w_one(const model_constants& k, color root, double horizon, rng_stream& rng,
                    root_mode mode) {
    const offspring_law law{k.rho};
    bp_state s = init_state(root);
    bool first = mode == root_mode::split_at_zero;
    while (step(s, law, rng, horizon, first, [](auto&&...) {})) first = false;
    return std::exp(-k.lambda * horizon) *
           (static_cast<double>(s.a_red) * k.u_red() +
            static_cast<double>(s.a_blue) * k.u_blue());
}

std::vector<double> sample_w(double rho, color root, double horizon, std::int64_t reps,
                             std::uint64_t seed, root_mode mode, int workers) {
    if (!(rho > 0.0)) throw std::domain_error("sample_w: rho must be > 0");
    if (reps <= 0) throw std::invalid_argument("sample_w: reps must be positive");
    const model_constants k = constants(rho);
    std::vector<double> out(reps);

    auto run_range = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t rep = lo; rep < hi; ++rep) {
            rng_stream rng = derive_stream(seed, "bp-w", static_cast<std::uint64_t>(rep));
            out[rep] = sample_w_one(k, root, horizon, rng, mode);
        }
    };

    if (workers <= 1) {
        run_range(0, reps);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (reps + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = w * chunk;
            if (lo >= reps) break;
            pool.emplace_back(run_range, lo, std::min(reps, lo + chunk));
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<double> sample_w_checkpoints(double rho, color root,
                                         std::span<const double> times,
                                         std::uint64_t seed, root_mode mode) {
    if (!(rho > 0.0)) throw std::domain_error("sample_w_checkpoints: rho must be > 0");
    const model_constants k = constants(rho);
    const offspring_law law{rho};
    rng_stream rng = derive_stream(seed, "bp-w");
    bp_state s = init_state(root);
    std::vector<double> out;
    out.reserve(times.size());
    bool first = mode == root_mode::split_at_zero;
    for (const double t : times) {
        while (step(s, law, rng, t, first, [](auto&&...) {})) first = false;
        out.push_back(std::exp(-k.lambda * t) *
                      (static_cast<double>(s.a_red) * k.u_red() +
                       static_cast<double>(s.a_blue) * k.u_blue()));
        // state is frozen exactly at t; memorylessness lets the next stretch
        // continue with a fresh Exp draw
    }
    return out;
}

std::uint64_t generation_sample(const bp_trajectory& traj, rng_stream& rng) {
    std::uint64_t g = 0;
    for (const split_event& e : traj.splits) {
        const double p = static_cast<double>(e.d_red + e.d_blue) /
                         static_cast<double>(e.alive_after);
        if (rng.next_double() < p) ++g;
    }
    return g;
}

double generation_mean(const bp_trajectory& traj) {
    double m = 0.0;
    for (const split_event& e : traj.splits)
        m += static_cast<double>(e.d_red + e.d_blue) / static_cast<double>(e.alive_after);
    return m;
}

} // namespace nwfpp
