#include <stdexcept>
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "sqdisc/bounds.hpp"
#include "sqdisc/constants.hpp"
#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/reference.hpp"
#include "sqdisc/search.hpp"
#include "sqdisc/slots.hpp"

using namespace sqdisc;

namespace {

OrientedGraph transitive(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

OrientedGraph rotational(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= (n - 1) / 2; ++d) g.add_arc(i, (i + d) % n);
    return g;
}

// arcs i -> i+1 and i -> i+2 around a cycle: underlying squared n-cycle
OrientedGraph squared_cycle(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_arc(i, (i + 1) % n);
        g.add_arc(i, (i + 2) % n);
    }
    return g;
}

bool valid_connection(const OrientedGraph& g, const std::vector<int>& seq, Arc from, Arc to,
                      const std::vector<int>& forbidden) {
    if (seq.size() < 4) return false;
    if (seq.front() != from.first || seq[1] != from.second) return false;
    if (seq[seq.size() - 2] != to.first || seq.back() != to.second) return false;
    const std::set<int> uniq(seq.begin(), seq.end());
    if (uniq.size() != seq.size()) return false;
    for (std::size_t i = 2; i + 2 < seq.size(); ++i)
        if (std::find(forbidden.begin(), forbidden.end(), seq[i]) != forbidden.end()) return false;
    const UnderlyingGraph u = underlying(g);
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j <= i + 2 && j < seq.size(); ++j)
            if (!u.has_edge(seq[i], seq[j])) return false;
    return true;
}

}  // namespace

// -------------------- mixed clique tilings --------------------

TEST_CASE("tilings of easy instances") {
    // two disjoint triangles across the doubled directed triangle
    const OrientedGraph b = blow_up(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}), 2);
    const auto cert = find_mixed_tiling(b, 3, 2, 0);
    REQUIRE(cert.has_value());
    CHECK(verify_tiling(b, *cert, 3, 2, 0) == TilingDefect::none);

    // complete graphs tile any way the counts allow
    const OrientedGraph k7 = transitive(7);
    const auto mixed = find_mixed_tiling(k7, 3, 1, 2);
    REQUIRE(mixed.has_value());
    CHECK(verify_tiling(k7, *mixed, 3, 1, 2) == TilingDefect::none);

    // leftover vertices are allowed when the tiles do not cover everyone
    OrientedGraph lonely(5);
    lonely.add_arc(0, 1);
    lonely.add_arc(1, 2);
    lonely.add_arc(0, 2);
    const auto partial = find_mixed_tiling(lonely, 3, 1, 0);
    REQUIRE(partial.has_value());
    CHECK(verify_tiling(lonely, *partial, 3, 1, 0) == TilingDefect::none);

    CHECK_FALSE(find_mixed_tiling(OrientedGraph(4), 2, 2, 0).has_value());
    CHECK_FALSE(find_mixed_tiling(lonely, 3, 1, 1).has_value());  // no second edge pair
}

TEST_CASE("tiling argument validation") {
    const OrientedGraph g = transitive(5);
    CHECK_THROWS_AS(find_mixed_tiling(g, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_mixed_tiling(g, 3, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_mixed_tiling(g, 3, 2, 0), std::invalid_argument);  // 6 > 5 vertices
}

TEST_CASE("tiling verification flags each defect") {
    const OrientedGraph k6 = transitive(6);
    const TilingCertificate good{{{0, 1, 2}, {3, 4, 5}}};
    CHECK(verify_tiling(k6, good, 3, 2, 0) == TilingDefect::none);

    CHECK(verify_tiling(k6, {{{0, 1, 2}}}, 3, 2, 0) == TilingDefect::wrong_tile_counts);
    CHECK(verify_tiling(k6, {{{0, 1, 2, 3}, {4, 5}}}, 3, 2, 0) == TilingDefect::wrong_tile_counts);
    CHECK(verify_tiling(k6, {{{0, 1, 9}, {3, 4, 5}}}, 3, 2, 0) == TilingDefect::vertex_out_of_range);
    CHECK(verify_tiling(k6, {{{0, 1, 2}, {2, 4, 5}}}, 3, 2, 0) == TilingDefect::overlapping_tiles);

    const TilingCertificate across{{{0, 1, 2}, {3, 4, 5}}};
    OrientedGraph sparse(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});  // 3-5 missing
    CHECK(verify_tiling(sparse, across, 3, 2, 0) == TilingDefect::missing_edge);

    CHECK(std::string(tiling_defect_name(TilingDefect::missing_edge)) == "missing-edge");
}

TEST_CASE("random instances: every tiling the solver emits verifies") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + int(rng.below(7));  // 6..12
        const int delta = (2 * n + 2) / 3 + int(rng.below(2));
        OrientedGraph g;
        try {
            g = random_min_degree_graph(n, std::min(delta, n - 1), rng.next());
        } catch (const std::runtime_error&) {
            continue;  // generator may give up on an unlucky target
        }
        const TilingProfile p = tiling_profile(n, min_total_degree(g));
        const auto cert = find_mixed_tiling(g, p.r, p.a_r, p.a_bar_r);
        if (cert) CHECK(verify_tiling(g, *cert, p.r, p.a_r, p.a_bar_r) == TilingDefect::none);
    }
}

// -------------------- hamilton-square branch and bound --------------------

TEST_CASE("optimal layouts of named tournaments") {
    const SearchResult t5 = max_discrepancy_square_hamilton(transitive(5));
    REQUIRE(t5.value.has_value());
    CHECK(*t5.value == 7);
    CHECK(t5.certified_optimal);
    REQUIRE(t5.ordering.has_value());
    const auto counts = verify_square_hamilton(transitive(5), *t5.ordering);
    REQUIRE(counts.has_value());
    CHECK(sigma_max(*counts) == 7);

    const SearchResult r5 = max_discrepancy_square_hamilton(rotational(5));
    CHECK(*r5.value == 10);

    CHECK_THROWS_AS(max_discrepancy_square_hamilton(transitive(4)), std::invalid_argument);
}

TEST_CASE("graphs without any layout report none, certified") {
    const OrientedGraph cyc5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const SearchResult r = max_discrepancy_square_hamilton(cyc5);
    CHECK_FALSE(r.value.has_value());
    CHECK_FALSE(r.ordering.has_value());
    CHECK(r.certified_optimal);
    CHECK_FALSE(reference::square_hamilton_bruteforce(cyc5).has_value());
}

TEST_CASE("pruned search agrees with the unpruned scan") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + int(rng.below(4));  // 5..8
        const bool full = rng.coin();
        const OrientedGraph g =
            full ? random_min_degree_graph(n, n - 1, rng.next())
                 : random_min_degree_graph(n, (2 * n + 2) / 3, rng.next());
        const SearchResult fast = max_discrepancy_square_hamilton(g);
        const auto slow = reference::square_hamilton_bruteforce(g);
        CHECK(fast.certified_optimal);
        REQUIRE(fast.value.has_value() == slow.has_value());
        if (slow) {
            CHECK(*fast.value == *slow);
            REQUIRE(fast.ordering.has_value());
            const auto counts = verify_square_hamilton(g, *fast.ordering);
            REQUIRE(counts.has_value());
            CHECK(sigma_max(*counts) == *fast.value);
            if (is_tournament(g)) CHECK(*fast.value == best_coupling_value(g));
        }
    }
}

TEST_CASE("search is deterministic across worker counts") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        const OrientedGraph g = random_min_degree_graph(9, 8, rng.next());
        const SearchResult serial = max_discrepancy_square_hamilton(g, {}, 1);
        const SearchResult parallel = max_discrepancy_square_hamilton(g, {}, 4);
        CHECK(serial.value == parallel.value);
        CHECK(serial.ordering == parallel.ordering);
    }
}

TEST_CASE("node budgets surrender the certificate, not the invariants") {
    const OrientedGraph g = random_min_degree_graph(14, 13, 7);
    SearchBudget budget;
    budget.max_nodes = 1;
    const SearchResult r = max_discrepancy_square_hamilton(g, budget);
    CHECK_FALSE(r.certified_optimal);
    if (r.ordering) {
        const auto counts = verify_square_hamilton(g, *r.ordering);
        REQUIRE(counts.has_value());
        CHECK(sigma_max(*counts) == *r.value);
    }
}

// -------------------- square-path connection --------------------

TEST_CASE("connections in dense and structured graphs") {
    // complete underlying graph: no internal vertices needed
    const auto direct = connect_edges(transitive(6), {0, 1}, {4, 5});
    REQUIRE(direct.has_value());
    CHECK(*direct == std::vector<int>{0, 1, 4, 5});

    // squared 9-cycle: two internal vertices bridge (0,1) to (4,5)
    const OrientedGraph c9 = squared_cycle(9);
    const auto bridged = connect_edges(c9, {0, 1}, {4, 5});
    REQUIRE(bridged.has_value());
    CHECK(bridged->size() == 6);
    CHECK(valid_connection(c9, *bridged, {0, 1}, {4, 5}, {}));

    // a plain cycle has no distance-2 edges at all
    OrientedGraph c8(8);
    for (int i = 0; i < 8; ++i) c8.add_arc(i, (i + 1) % 8);
    CHECK_FALSE(connect_edges(c8, {0, 1}, {4, 5}).has_value());
}

TEST_CASE("forbidden vertices reroute or disconnect") {
    const OrientedGraph c9 = squared_cycle(9);
    const auto around = connect_edges(c9, {0, 1}, {4, 5}, {2, 3});
    const auto oracle = reference::connect_shortest_exhaustive(c9, {0, 1}, {4, 5}, {2, 3});
    REQUIRE(around.has_value() == oracle.has_value());
    if (around) {
        CHECK(around->size() == oracle->size());
        CHECK(valid_connection(c9, *around, {0, 1}, {4, 5}, {2, 3}));
    }
}

TEST_CASE("connection argument validation") {
    const OrientedGraph g = transitive(6);
    CHECK_THROWS_AS(connect_edges(g, {0, 0}, {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(connect_edges(g, {0, 1}, {1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(connect_edges(g, {0, 9}, {4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(connect_edges(g, {0, 1}, {4, 5}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(connect_edges(g, {0, 1}, {4, 5}, {9}), std::invalid_argument);
    const OrientedGraph sparse(6, {{0, 1}, {4, 5}});
    CHECK_THROWS_AS(connect_edges(sparse, {0, 2}, {4, 5}), std::invalid_argument);
}

TEST_CASE("connection lengths match the exhaustive reference") {
    SplitMix64 rng(51);
    int solved = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + int(rng.below(7));  // 6..12
        OrientedGraph g;
        try {
            g = random_min_degree_graph(n, std::min(n - 1, 2 * n / 3 + 2), rng.next());
        } catch (const std::runtime_error&) {
            continue;
        }
        const auto edges = underlying(g).edges();
        if (edges.size() < 2) continue;
        // pick two disjoint edges
        const Arc from = edges[rng.below(edges.size())];
        Arc to{-1, -1};
        for (int tries = 0; tries < 50; ++tries) {
            const Arc cand = edges[rng.below(edges.size())];
            if (cand.first != from.first && cand.first != from.second && cand.second != from.first &&
                cand.second != from.second) {
                to = cand;
                break;
            }
        }
        if (to.first < 0) continue;
        const auto fast = connect_edges(g, from, to);
        const auto slow = reference::connect_shortest_exhaustive(g, from, to);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            ++solved;
            CHECK(fast->size() == slow->size());
            CHECK(valid_connection(g, *fast, from, to, {}));
        }
    }
    CHECK(solved >= 10);  // the sample must actually exercise the path
}

// -------------------- seeded random instances --------------------

TEST_CASE("random instances are reproducible and meet their degree target") {
    const OrientedGraph a = random_min_degree_graph(12, 9, 99);
    const OrientedGraph b = random_min_degree_graph(12, 9, 99);
    CHECK(a == b);
    CHECK(min_total_degree(a) >= 9);

    bool differs = false;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        differs = differs || !(random_min_degree_graph(12, 9, seed) == a);
    CHECK(differs);

    const OrientedGraph t = random_min_degree_graph(10, 9, 5);
    CHECK(is_tournament(t));

    CHECK_THROWS_AS(random_min_degree_graph(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_min_degree_graph(5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_min_degree_graph(5, -1, 1), std::invalid_argument);
}
