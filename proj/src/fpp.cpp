#include "nwfpp/fpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace nwfpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using heap_item = std::pair<double, std::int32_t>; // (tentative distance, vertex)
using min_heap = std::priority_queue<heap_item, std::vector<heap_item>, std::greater<>>;

void check_vertex(const weighted_graph& g, std::int64_t v, const char* what) {
    if (v < 0 || v >= g.n) throw std::invalid_argument(std::string(what) + ": unknown vertex");
}

// shared Dijkstra state; explored set grows in pop order
struct dijkstra_state {
    std::vector<double> dist;
    std::vector<double> tent;
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> hops;
    std::vector<color> colors;
    std::vector<std::uint8_t> explored;
    std::vector<std::int32_t> order;
    min_heap heap;

    explicit dijkstra_state(std::int64_t n, std::int32_t source)
        : dist(n, kInf), tent(n, kInf), parent(n, -1), hops(n, -1),
          colors(n, color::blue), explored(n, 0) {
        tent[source] = 0.0;
        heap.emplace(0.0, source);
    }

    // explores and returns the next vertex, or nullopt when exhausted;
    // stops *before* exploring anything farther than t_max
    std::optional<std::int32_t> pop(const weighted_graph& g, double t_max) {
        while (!heap.empty()) {
            const auto [d, x] = heap.top();
            if (d > t_max) return std::nullopt;
            heap.pop();
            if (explored[x] || d > tent[x]) continue;
            explored[x] = 1;
            dist[x] = d;
            hops[x] = parent[x] < 0 ? 0 : hops[parent[x]] + 1;
            order.push_back(x);
            for (std::uint32_t a = g.adj_offsets[x]; a < g.adj_offsets[x + 1]; ++a) {
                const std::uint32_t eid = g.adj_edge_ids[a];
                const edge_record& e = g.edges[eid];
                const std::int32_t y = e.u == x ? e.v : e.u;
                if (explored[y]) continue;
                const double cand = d + e.weight;
                if (cand < tent[y]) {
                    tent[y] = cand;
                    parent[y] = x;
                    colors[y] = edge_color(e.kind);
                    heap.emplace(cand, y);
                }
            }
            return x;
        }
        return std::nullopt;
    }

    double next_pop_distance() {
        while (!heap.empty()) {
            const auto [d, x] = heap.top();
            if (!explored[x] && d <= tent[x]) return d;
            heap.pop();
        }
        return kInf;
    }
};

std::vector<std::int32_t> backtrack(const std::vector<std::int32_t>& parent, std::int32_t v) {
    std::vector<std::int32_t> path{v};
    while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

shortest_weight_tree explore(const weighted_graph& g, std::int64_t source, swt_stop stop) {
    check_vertex(g, source, "explore");
    if (stop.mode == swt_stop::kind::until_target) check_vertex(g, stop.target, "explore");
    if (stop.mode == swt_stop::kind::at_splits && stop.splits < 1)
        throw std::invalid_argument("explore: at-splits stop needs m >= 1");
    if (stop.mode == swt_stop::kind::at_time && !(stop.time >= 0.0))
        throw std::invalid_argument("explore: at-time stop needs T >= 0");

    dijkstra_state st(g.n, static_cast<std::int32_t>(source));
    const double t_max = stop.mode == swt_stop::kind::at_time ? stop.time : kInf;
    double frozen = stop.mode == swt_stop::kind::at_time ? stop.time : 0.0;
    while (true) {
        if (stop.mode == swt_stop::kind::at_splits &&
            static_cast<std::int64_t>(st.order.size()) == stop.splits)
            break;
        const auto x = st.pop(g, t_max);
        if (!x) break;
        if (stop.mode != swt_stop::kind::at_time) frozen = st.dist[*x];
        if (stop.mode == swt_stop::kind::until_target && *x == stop.target) break;
    }

    shortest_weight_tree tree;
    tree.root = static_cast<std::int32_t>(source);
    tree.frozen_at = frozen;
    tree.order = std::move(st.order);
    tree.dist = std::move(st.dist);
    tree.parent = std::move(st.parent);
    tree.hops = std::move(st.hops);
    tree.colors = std::move(st.colors);
    tree.explored = std::move(st.explored);
    for (const std::int32_t v : tree.order)
        (tree.colors[v] == color::red && v != tree.root ? tree.n_red : tree.n_blue) += 1;

    for (const std::int32_t v : tree.order) {
        for (std::uint32_t a = g.adj_offsets[v]; a < g.adj_offsets[v + 1]; ++a) {
            const edge_record& e = g.edges[g.adj_edge_ids[a]];
            const std::int32_t y = e.u == v ? e.v : e.u;
            if (tree.explored[y]) continue;
            const color col = edge_color(e.kind);
            tree.frontier.push_back({y, v, tree.dist[v] + e.weight - tree.frozen_at, col});
            (col == color::red ? tree.a_red : tree.a_blue) += 1;
        }
    }
    return tree;
}

path_result distance(const weighted_graph& g, std::int64_t u, std::int64_t v) {
    check_vertex(g, u, "distance");
    check_vertex(g, v, "distance");
    if (u == v) return {0.0, 0, {static_cast<std::int32_t>(u)}};
    dijkstra_state st(g.n, static_cast<std::int32_t>(u));
    while (const auto x = st.pop(g, kInf)) {
        if (*x == v) {
            path_result r;
            r.weight = st.dist[v];
            r.hopcount = st.hops[v];
            r.path = backtrack(st.parent, static_cast<std::int32_t>(v));
            return r;
        }
    }
    throw std::runtime_error("distance: target unreachable (graph invariant violated)");
}

double swt_martingale(const shortest_weight_tree& tree, const model_constants& k) {
    if (tree.frontier.empty())
        throw std::runtime_error("swt_martingale: empty frontier (tree covers the graph)");
    return std::exp(-k.lambda * tree.frozen_at) *
           (static_cast<double>(tree.a_red) * k.u_red() +
            static_cast<double>(tree.a_blue) * k.u_blue());
}

collision_result collision_connect(const weighted_graph& g, std::int64_t u, std::int64_t v,
                                   double t_freeze, std::optional<double> horizon) {
    check_vertex(g, u, "collision_connect");
    check_vertex(g, v, "collision_connect");
    if (u == v) throw std::invalid_argument("collision_connect: u and v must differ");
    if (!(t_freeze > 0.0)) throw std::invalid_argument("collision_connect: t_freeze must be > 0");

    collision_result res;
    res.t_freeze = t_freeze;
    res.horizon = horizon;

    const shortest_weight_tree swt_u = explore(g, u, swt_stop::at_time(t_freeze));
    if (swt_u.is_explored(v)) {
        res.direct = true;
        res.path.weight = swt_u.dist[v];
        res.path.hopcount = swt_u.hops[v];
        res.path.path = backtrack(swt_u.parent, static_cast<std::int32_t>(v));
        res.meeting_vertex = static_cast<std::int32_t>(v);
        res.hops_u = swt_u.hops[v];
        res.grown_to = 0.0;
        return res;
    }

    // frontier entries indexed by vertex
    std::vector<std::uint32_t> by_vertex(swt_u.frontier.size());
    for (std::uint32_t i = 0; i < by_vertex.size(); ++i) by_vertex[i] = i;
    std::stable_sort(by_vertex.begin(), by_vertex.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return swt_u.frontier[a].vertex < swt_u.frontier[b].vertex;
                     });
    auto entries_at = [&](std::int32_t x) {
        auto lo = std::lower_bound(by_vertex.begin(), by_vertex.end(), x,
                                   [&](std::uint32_t i, std::int32_t key) {
                                       return swt_u.frontier[i].vertex < key;
                                   });
        auto hi = lo;
        while (hi != by_vertex.end() && swt_u.frontier[*hi].vertex == x) ++hi;
        return std::pair(lo, hi);
    };

    dijkstra_state st(g.n, static_cast<std::int32_t>(v));
    std::vector<std::uint8_t> contaminated(g.n, 0);
    double best = kInf;
    std::int32_t best_vertex = -1;
    std::uint32_t best_entry = 0;

    res.grown_to = kInf; // completeness bound of the log; finite when stopped early
    while (true) {
        const double top = st.next_pop_distance();
        const double bound = std::isinf(best) ? kInf : best - t_freeze;
        const double want = horizon ? std::max(bound, t_freeze + *horizon) : bound;
        if (top > want) {
            res.grown_to = top - t_freeze;
            break;
        }
        const auto popped = st.pop(g, kInf);
        if (!popped) break;
        const std::int32_t x = *popped;
        const std::int32_t p = st.parent[x];
        if (p >= 0) contaminated[x] = contaminated[p] | swt_u.explored[p];
        const auto [lo, hi] = entries_at(x);
        for (auto it = lo; it != hi; ++it) {
            const frontier_entry& fe = swt_u.frontier[*it];
            const double s = st.dist[x] - t_freeze;
            res.log.push_back({s, st.colors[x], fe.col, fe.remaining, x, fe.parent,
                               p, contaminated[x] != 0});
            const double w = t_freeze + fe.remaining + st.dist[x];
            if (w < best) {
                best = w;
                best_vertex = x;
                best_entry = *it;
            }
        }
    }

    if (best_vertex < 0)
        throw std::runtime_error("collision_connect: no collision found (graph invariant violated)");

    const frontier_entry& fe = swt_u.frontier[best_entry];
    res.path.weight = best;
    res.hops_u = swt_u.hops[fe.parent] + 1;
    res.hops_v = st.hops[best_vertex];
    res.path.hopcount = res.hops_u + res.hops_v;
    res.meeting_vertex = best_vertex;
    res.path.path = backtrack(swt_u.parent, fe.parent);
    std::vector<std::int32_t> tail = backtrack(st.parent, best_vertex); // v .. x
    res.path.path.insert(res.path.path.end(), tail.rbegin(), tail.rend());
    std::sort(res.log.begin(), res.log.end(),
              [](const collision_event& a, const collision_event& b) { return a.s < b.s; });
    return res;
}

collision_streams classify_collisions(const collision_result& r, double horizon,
                                      bool include_ghosts) {
    collision_streams out;
    out.partial = r.grown_to < horizon;
    for (const collision_event& e : r.log) {
        if (e.s > horizon) continue;
        if (e.ghost && !include_ghosts) continue;
        out.times[static_cast<int>(e.v_color)][static_cast<int>(e.u_color)].push_back(e.s);
    }
    return out;
}

std::vector<double> epidemic_curve(const weighted_graph& g, std::int64_t source,
                                   std::span<const double> grid) {
    check_vertex(g, source, "epidemic_curve");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("epidemic_curve: grid must be sorted");
    dijkstra_state st(g.n, static_cast<std::int32_t>(source));
    while (st.pop(g, kInf)) {
    }
    std::vector<double> dists = std::move(st.dist);
    std::sort(dists.begin(), dists.end());
    std::vector<double> out;
    out.reserve(grid.size());
    for (const double t : grid) {
        const auto it = std::upper_bound(dists.begin(), dists.end(), t);
        out.push_back(static_cast<double>(it - dists.begin()) / static_cast<double>(g.n));
    }
    return out;
}

} // namespace nwfpp
