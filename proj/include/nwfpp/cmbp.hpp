#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nwfpp/rng.hpp"
#include "nwfpp/theory.hpp"

namespace nwfpp {

// red parent -> 1 red + Poi(rho) blue; blue parent -> 2 red + Poi(rho) blue
struct offspring_law {
    double rho;

    static constexpr std::uint32_t red_children(color parent) {
        return parent == color::red ? 1u : 2u;
    }
    std::uint32_t blue_children(rng_stream& rng) const {
        return static_cast<std::uint32_t>(rng.poisson(rho));
    }
};

// Whether the root carries a standard Exp(1) lifetime or splits at time zero
// (the exploration convention: a single blue particle that dies immediately,
// so T_1 = 0).
enum class root_mode : std::uint8_t { alive, split_at_zero };

struct split_event {
    double time;               // T_i
    color parent;              // type of the dying particle
    std::uint32_t d_red;       // offspring counts
    std::uint32_t d_blue;
    std::uint64_t alive_after; // S_i, alive count just after the split
};

struct bp_trajectory {
    color root;
    root_mode mode;
    std::vector<split_event> splits;
    std::uint64_t a_red = 0;  // alive counts at t_end
    std::uint64_t a_blue = 0;
    std::uint64_t n_red_dead = 0;
    std::uint64_t n_blue_dead = 0;
    double t_end = 0.0;
};

struct bp_stop {
    enum class kind : std::uint8_t { at_time, at_splits };
    kind mode;
    double time = 0.0;
    std::uint64_t splits = 0;

    static bp_stop at_time(double t) { return {kind::at_time, t, 0}; }
    static bp_stop at_splits(std::uint64_t m) { return {kind::at_splits, 0.0, m}; }
};

// Event-driven count simulation: inter-split times Exp(1)/alive, dying type
// proportional to per-type alive counts, offspring per offspring_law.
// Deterministic given the seed. at-splits is capped at 1e8.
bp_trajectory simulate(double rho, color root, bp_stop stop, std::uint64_t seed,
                       root_mode mode = root_mode::split_at_zero);

// e^{-lambda t_end} (A_R u_R + A_B u_B) of a stopped trajectory
double martingale_w(const bp_trajectory& traj, const model_constants& k);

// `reps` independent W samples at horizon T; reproducible from the seed and
// independent of `workers` (per-rep derived streams)
std::vector<double> sample_w(double rho, color root, double horizon, std::int64_t reps,
                             std::uint64_t seed, root_mode mode = root_mode::split_at_zero,
                             int workers = 1);

// one W draw from a caller-owned stream
double sample_w_one(const model_constants& k, color root, double horizon, rng_stream& rng,
                    root_mode mode = root_mode::split_at_zero);

// W of one trajectory observed at several increasing times
std::vector<double> sample_w_checkpoints(double rho, color root,
                                         std::span<const double> times,
                                         std::uint64_t seed,
                                         root_mode mode = root_mode::split_at_zero);

// Generation of a uniformly chosen alive particle after the last logged
// split: sum of conditionally independent Bernoulli(D_i/S_i) indicators.
std::uint64_t generation_sample(const bp_trajectory& traj, rng_stream& rng);

// exact conditional mean of generation_sample given the split log
double generation_mean(const bp_trajectory& traj);

} // namespace nwfpp
