#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nwfpp/theory.hpp" // color

namespace nwfpp {

enum class edge_kind : std::uint8_t { cycle = 0, shortcut = 1 };

inline color edge_color(edge_kind k) {
    return k == edge_kind::cycle ? color::red : color::blue;
}

struct graph_config {
    std::int64_t n = 0;
    double rho = 0.0;
    std::uint64_t seed = 0;

    // throws std::invalid_argument
    void validate() const;
};

struct edge_record {
    std::int32_t u;
    std::int32_t v;
    edge_kind kind;
    double weight;
};

// Cycle on n vertices (0-indexed) plus shortcut edges, each carrying an
// Exp(1) weight. Immutable once built; adjacency is CSR over edge ids.
struct weighted_graph {
    std::int64_t n = 0;
    double rho = 0.0;
    std::uint64_t seed = 0;
    std::vector<edge_record> edges; // cycle edges first: edge i = (i, i+1 mod n)
    std::vector<std::uint32_t> adj_offsets;
    std::vector<std::uint32_t> adj_edge_ids;

    std::int64_t degree(std::int64_t v) const { return adj_offsets[v + 1] - adj_offsets[v]; }

    std::int32_t other_end(std::uint32_t edge_id, std::int32_t v) const {
        const edge_record& e = edges[edge_id];
        return e.u == v ? e.v : e.u;
    }

    std::int64_t shortcut_count() const { return static_cast<std::int64_t>(edges.size()) - n; }

    // builds adjacency from an explicit edge list (test weight injection)
    static weighted_graph from_edges(std::int64_t n, std::vector<edge_record> edges);
};

// Independently includes each of the n(n-3)/2 non-adjacent pairs with
// probability rho/n (geometric skipping over the linear pair index, O(rho n));
// every edge gets an independent Exp(1) weight. Deterministic in config.
weighted_graph generate(const graph_config& config);

// pair count and the bijection between linear indices and unordered
// non-adjacent pairs; enumeration is by circular gap d = 2 + k/n, i = k mod n
std::int64_t candidate_pair_count(std::int64_t n);
std::pair<std::int64_t, std::int64_t> pair_from_index(std::int64_t n, std::int64_t k);
std::int64_t pair_to_index(std::int64_t n, std::int64_t i, std::int64_t j);

// CSV dump `u,v,kind,weight` plus one-line JSON sidecar `{n, rho, seed}`
// written to path + ".json"
void dump_csv(const weighted_graph& g, const std::string& path);

} // namespace nwfpp
