#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nwfpp/nwgraph.hpp"
#include "nwfpp/theory.hpp"

namespace nwfpp {

struct path_result {
    double weight = 0.0;
    std::int64_t hopcount = 0;
    std::vector<std::int32_t> path; // endpoints included
};

struct frontier_entry {
    std::int32_t vertex; // unexplored endpoint
    std::int32_t parent; // explored endpoint of the carrying edge
    double remaining;    // lifetime left at frozen_at
    color col;           // edge color (cycle -> red, shortcut -> blue)
};

// Frozen snapshot of the exploration. A vertex is explored iff its distance
// is <= frozen_at (right-continuous at split times); the frontier carries one
// entry per explored->unexplored edge, so a vertex may appear several times.
// The source counts as a blue explored vertex.
struct shortest_weight_tree {
    std::int32_t root = 0;
    double frozen_at = 0.0;
    std::vector<std::int32_t> order;  // explored vertices in pop order
    std::vector<double> dist;         // +inf when unexplored
    std::vector<std::int32_t> parent; // -1 for root and unexplored
    std::vector<std::int32_t> hops;
    std::vector<color> colors;
    std::vector<std::uint8_t> explored;
    std::vector<frontier_entry> frontier;
    std::int64_t n_red = 0, n_blue = 0; // explored counts
    std::int64_t a_red = 0, a_blue = 0; // frontier entry counts

    bool is_explored(std::int64_t v) const { return explored[v] != 0; }
};

struct swt_stop {
    enum class kind : std::uint8_t { at_time, at_splits, until_target };
    kind mode;
    double time = 0.0;
    std::int64_t splits = 0;
    std::int32_t target = -1;

    static swt_stop at_time(double t) { return {kind::at_time, t, 0, -1}; }
    static swt_stop at_splits(std::int64_t m) { return {kind::at_splits, 0.0, m, -1}; }
    static swt_stop until_target(std::int32_t v) { return {kind::until_target, 0.0, 0, v}; }
};

// Dijkstra over the weighted graph; ties broken toward the lower vertex id.
shortest_weight_tree explore(const weighted_graph& g, std::int64_t source, swt_stop stop);

// exact shortest-weight path; distance(u,u) is the empty path
path_result distance(const weighted_graph& g, std::int64_t u, std::int64_t v);

// e^{-lambda frozen_at} (A_R u_R + A_B u_B) from the frontier counts
double swt_martingale(const shortest_weight_tree& tree, const model_constants& k);

struct collision_event {
    double s;            // collision time offset: explored in SWT^v at t_freeze + s
    color v_color;       // color of the vertex as explored in SWT^v (q)
    color u_color;       // color of the frontier entry in SWT^u (r)
    double remaining;    // remaining lifetime of the entry at t_freeze
    std::int32_t vertex;
    std::int32_t u_parent;
    std::int32_t v_parent;
    bool ghost; // the SWT^v path to the vertex passes through SWT^u's explored set
};

struct collision_result {
    path_result path;
    bool direct = false; // v was already explored in SWT^u(t_freeze)
    double t_freeze = 0.0;
    double grown_to = 0.0;              // SWT^v growth bound actually reached
    std::optional<double> horizon;      // requested s_max, when given
    std::vector<collision_event> log;   // ordered by s
    std::int32_t meeting_vertex = -1;
    std::int64_t hops_u = 0, hops_v = 0; // split of the hopcount at the meeting vertex
};

// Grows SWT^u to t_freeze, freezes it, then grows SWT^v recording every
// collision; the returned weight min_i(2 t_freeze + P_i + R_i) equals
// distance(g,u,v).weight. SWT^v always grows far enough for that minimum to
// be exact; with `horizon` it additionally grows to t_freeze + horizon so the
// log is complete there.
collision_result collision_connect(const weighted_graph& g, std::int64_t u, std::int64_t v,
                                   double t_freeze,
                                   std::optional<double> horizon = std::nullopt);

struct collision_streams {
    // times[q][r]: sorted s values with v-explored color q and u-active color r
    std::vector<double> times[2][2];
    bool partial = false; // log not grown to the requested horizon

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& row : times)
            for (const auto& v : row) t += static_cast<std::int64_t>(v.size());
        return t;
    }
};

// Four time-ordered counting streams per color pair, ghosts excluded unless
// requested (ghost collisions are the thinned part of the coupled process).
collision_streams classify_collisions(const collision_result& r, double horizon,
                                      bool include_ghosts = false);

// I_n(t) = fraction of vertices within distance t of the source, evaluated on
// a sorted grid from one full single-source exploration
std::vector<double> epidemic_curve(const weighted_graph& g, std::int64_t source,
                                   std::span<const double> grid);

} // namespace nwfpp
