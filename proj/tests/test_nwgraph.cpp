#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "nwfpp/nwgraph.hpp"
#include "nwfpp/stats.hpp"

using namespace nwfpp;

TEST_CASE("rho = 0 gives the bare cycle") {
    const weighted_graph g = generate({10, 0.0, 42});
    CHECK(g.edges.size() == 10);
    for (const edge_record& e : g.edges) CHECK(e.kind == edge_kind::cycle);
    for (std::int64_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("invalid configs are rejected") {
    CHECK_THROWS_AS(generate({2, 1.0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({10, -0.5, 0}), std::invalid_argument);
}

TEST_CASE("pair indexing") {
    // n = 4: candidate set is exactly {(0,2), (1,3)} (the two diagonals)
    CHECK(candidate_pair_count(4) == 2);
    CHECK(pair_from_index(4, 0) == std::pair<std::int64_t, std::int64_t>{0, 2});
    CHECK(pair_from_index(4, 1) == std::pair<std::int64_t, std::int64_t>{1, 3});

    CHECK(candidate_pair_count(3) == 0);
    CHECK(candidate_pair_count(5) == 5);

    CHECK_THROWS_AS(pair_from_index(4, 2), std::out_of_range);
    CHECK_THROWS_AS(pair_from_index(5, -1), std::out_of_range);
    CHECK_THROWS_AS(pair_to_index(6, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(pair_to_index(6, 2, 2), std::out_of_range);

    for (const std::int64_t n : {4, 5, 6, 7, 12}) {
        CAPTURE(n);
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::int64_t k = 0; k < candidate_pair_count(n); ++k) {
            const auto [i, j] = pair_from_index(n, k);
            CHECK(i != j);
            const std::int64_t gap = std::min((j - i + n) % n, (i - j + n) % n);
            CHECK(gap >= 2); // non-adjacent
            seen.insert(std::minmax(i, j));
            CHECK(pair_to_index(n, i, j) == k);
            CHECK(pair_to_index(n, j, i) == k);
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == candidate_pair_count(n));
    }
}

TEST_CASE("generation is deterministic and respects the invariants") {
    const weighted_graph a = generate({500, 2.0, 7});
    const weighted_graph b = generate({500, 2.0, 7});
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].u == b.edges[i].u);
        CHECK(a.edges[i].v == b.edges[i].v);
        CHECK(a.edges[i].weight == b.edges[i].weight); // bit-for-bit
    }
    const weighted_graph c = generate({500, 2.0, 8});
    CHECK(c.edges.size() != a.edges.size()); // different seed, different draw (a.s.)

    std::set<std::pair<std::int32_t, std::int32_t>> shortcut_pairs;
    for (std::int64_t i = 0; i < 500; ++i) {
        CHECK(a.edges[i].u == i);
        CHECK(a.edges[i].v == (i + 1) % 500);
    }
    for (std::size_t i = 500; i < a.edges.size(); ++i) {
        const edge_record& e = a.edges[i];
        CHECK(e.kind == edge_kind::shortcut);
        const auto gap = std::min((e.v - e.u + 500) % 500, (e.u - e.v + 500) % 500);
        CHECK(gap >= 2);
        CHECK(shortcut_pairs.insert(std::minmax(e.u, e.v)).second); // no duplicates
    }
    for (const edge_record& e : a.edges) CHECK(e.weight > 0.0);
}

TEST_CASE("shortcut count matches Bin(n(n-3)/2, rho/n) in mean") {
    const std::int64_t n = 10'000;
    const double rho = 2.0;
    const int reps = 500;
    double sum = 0.0;
    for (int r = 0; r < reps; ++r) sum += static_cast<double>(generate({n, rho, static_cast<std::uint64_t>(1000 + r)}).shortcut_count());
    const double total = static_cast<double>(candidate_pair_count(n));
    const double p = rho / static_cast<double>(n);
    const double mean = total * p;
    const double se = std::sqrt(total * p * (1.0 - p) / reps);
    CHECK(std::abs(sum / reps - mean) < 3.0 * se);
}

TEST_CASE("shortcut count distribution: chi-square against the binomial") {
    const std::int64_t n = 100;
    const double rho = 2.0;
    const int reps = 10'000;
    std::map<std::int64_t, std::int64_t> hist;
    for (int r = 0; r < reps; ++r) ++hist[generate({n, rho, static_cast<std::uint64_t>(50'000 + r)}).shortcut_count()];

    // binomial pmf oracle via log factorials
    const std::int64_t total = candidate_pair_count(n); // 4850
    const double p = rho / static_cast<double>(n);
    std::vector<double> logfact(total + 1, 0.0);
    for (std::int64_t i = 1; i <= total; ++i) logfact[i] = logfact[i - 1] + std::log(i);
    auto pmf = [&](std::int64_t k) {
        return std::exp(logfact[total] - logfact[k] - logfact[total - k] +
                        k * std::log(p) + (total - k) * std::log1p(-p));
    };

    // bins with expected count >= 5: central singleton bins plus two tails
    const std::int64_t mode = static_cast<std::int64_t>(total * p);
    std::int64_t lo = mode, hi = mode;
    while (pmf(lo - 1) * reps >= 5.0) --lo;
    while (pmf(hi + 1) * reps >= 5.0) ++hi;
    std::vector<std::int64_t> counts;
    std::vector<double> probs;
    std::int64_t c_lo = 0, c_hi = 0;
    for (const auto& [k, c] : hist) {
        if (k < lo) c_lo += c;
        if (k > hi) c_hi += c;
    }
    double tail_lo = 0.0;
    for (std::int64_t k = 0; k < lo; ++k) tail_lo += pmf(k);
    counts.push_back(c_lo);
    probs.push_back(tail_lo);
    double covered = tail_lo;
    for (std::int64_t k = lo; k <= hi; ++k) {
        counts.push_back(hist.count(k) ? hist[k] : 0);
        probs.push_back(pmf(k));
        covered += probs.back();
    }
    counts.push_back(c_hi);
    probs.push_back(1.0 - covered);

    const chi_square_result res = chi_square_gof(counts, probs);
    CAPTURE(res.statistic);
    CAPTURE(res.dof);
    CHECK(res.p_value > 0.01);
}

TEST_CASE("edge weights are Exp(1): KS over 1e5 weights") {
    std::vector<double> ws;
    int seed = 0;
    while (ws.size() < 100'000) {
        const weighted_graph g = generate({5000, 1.5, 900u + static_cast<unsigned>(seed++)});
        for (const edge_record& e : g.edges) ws.push_back(e.weight);
    }
    ws.resize(100'000);
    const ks_result r = ks_one_sample(ws, [](double x) { return -std::expm1(-x); });
    CHECK(r.statistic < 1.36 / std::sqrt(1e5));
}

TEST_CASE("csv dump and sidecar") {
    const weighted_graph g = generate({16, 1.0, 3});
    const std::string path = "/tmp/nwfpp_test_graph.csv";
    dump_csv(g, path);
    std::FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f);
    char line[256];
    REQUIRE(std::fgets(line, sizeof line, f));
    CHECK(std::string(line) == "u,v,kind,weight\n");
    int rows = 0;
    while (std::fgets(line, sizeof line, f)) ++rows;
    std::fclose(f);
    CHECK(rows == static_cast<int>(g.edges.size()));
    f = std::fopen((path + ".json").c_str(), "rb");
    REQUIRE(f);
    REQUIRE(std::fgets(line, sizeof line, f));
    std::fclose(f);
    CHECK(std::string(line).find("\"n\": 16") != std::string::npos);
}
