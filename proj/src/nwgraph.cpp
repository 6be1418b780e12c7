#include "nwfpp/nwgraph.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nwfpp/csvio.hpp"
#include "nwfpp/rng.hpp"

namespace nwfpp {

void graph_config::validate() const {
    if (n < 3)
        throw std::invalid_argument("graph_config: n must be >= 3");
    if (rho < 0.0 || !std::isfinite(rho))
        throw std::invalid_argument("graph_config: rho must be finite and >= 0");
}

std::int64_t candidate_pair_count(std::int64_t n) { return n * (n - 3) / 2; }

std::pair<std::int64_t, std::int64_t> pair_from_index(std::int64_t n, std::int64_t k) {
    if (k < 0 || k >= candidate_pair_count(n))
        throw std::out_of_range("pair_from_index: index out of range");
    const std::int64_t d = 2 + k / n;
    const std::int64_t i = k % n;
    return {i, (i + d) % n};
}

std::int64_t pair_to_index(std::int64_t n, std::int64_t i, std::int64_t j) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::out_of_range("pair_to_index: not a vertex pair");
    std::int64_t fwd = (j - i + n) % n; // gap walking i -> j clockwise
    std::int64_t base = i, d = fwd;
    if (n - fwd < d) {
        d = n - fwd;
        base = j;
    } else if (n - fwd == d) {
        base = std::min(i, j); // antipodal pair of an even cycle
    }
    if (d < 2)
        throw std::out_of_range("pair_to_index: pair is adjacent on the cycle");
    return (d - 2) * n + base;
}

weighted_graph weighted_graph::from_edges(std::int64_t n, std::vector<edge_record> edges) {
    weighted_graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj_offsets.assign(n + 1, 0);
    for (const edge_record& e : g.edges) {
        ++g.adj_offsets[e.u + 1];
        ++g.adj_offsets[e.v + 1];
    }
    for (std::int64_t v = 0; v < n; ++v) g.adj_offsets[v + 1] += g.adj_offsets[v];
    g.adj_edge_ids.resize(2 * g.edges.size());
    std::vector<std::uint32_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
    for (std::uint32_t id = 0; id < g.edges.size(); ++id) {
        g.adj_edge_ids[cursor[g.edges[id].u]++] = id;
        g.adj_edge_ids[cursor[g.edges[id].v]++] = id;
    }
    return g;
}

weighted_graph generate(const graph_config& config) {
    config.validate();
    const std::int64_t n = config.n;
    rng_stream rng = derive_stream(config.seed, "nwgraph");

    std::vector<edge_record> edges;
    edges.reserve(n + static_cast<std::int64_t>(config.rho * n / 2 * 1.1) + 16);
    for (std::int64_t i = 0; i < n; ++i)
        edges.push_back({static_cast<std::int32_t>(i),
                         static_cast<std::int32_t>((i + 1) % n),
                         edge_kind::cycle, rng.exp1()});

    const std::int64_t total = candidate_pair_count(n);
    const double p = config.rho / static_cast<double>(n);
    if (p > 0.0 && total > 0) {
        // Bernoulli process over the linear pair index via geometric gaps
        const double log1mp = std::log1p(-p);
        std::int64_t k = -1;
        while (true) {
            const double u = rng.next_double_open();
            const double skip = std::floor(std::log(u) / log1mp);
            if (skip >= static_cast<double>(total)) break; // also catches inf
            k += 1 + static_cast<std::int64_t>(skip);
            if (k >= total) break;
            const auto [i, j] = pair_from_index(n, k);
            edges.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                             edge_kind::shortcut, rng.exp1()});
        }
    }

    weighted_graph g = weighted_graph::from_edges(n, std::move(edges));
    g.rho = config.rho;
    g.seed = config.seed;
    return g;
}

void dump_csv(const weighted_graph& g, const std::string& path) {
    csv_writer out(path);
    out.row("u", "v", "kind", "weight");
    for (const edge_record& e : g.edges)
        out.row(e.u, e.v, e.kind == edge_kind::cycle ? "cycle" : "shortcut", e.weight);
    out.close();

    csv_writer side(path + ".json");
    char buf[160];
    std::snprintf(buf, sizeof buf, "{\"n\": %lld, \"rho\": %s, \"seed\": %llu}",
                  static_cast<long long>(g.n), format_g17(g.rho).c_str(),
                  static_cast<unsigned long long>(g.seed));
    side.line(buf);
    side.close();
}

} // namespace nwfpp
