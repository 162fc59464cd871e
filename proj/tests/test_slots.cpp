#include <stdexcept>
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/search.hpp"
#include "sqdisc/slots.hpp"
#include "sqdisc/tournament.hpp"

using namespace sqdisc;

namespace {

OrientedGraph transitive(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

OrientedGraph rotational5() {
    OrientedGraph g(5);
    for (int i = 0; i < 5; ++i) {
        g.add_arc(i, (i + 1) % 5);
        g.add_arc(i, (i + 2) % 5);
    }
    return g;
}

OrientedGraph reverse_arcs(const OrientedGraph& g) {
    OrientedGraph out(g.order());
    for (const auto& [u, v] : g.arcs()) out.add_arc(v, u);
    return out;
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& perm) {
    OrientedGraph out(g.order());
    for (const auto& [u, v] : g.arcs()) out.add_arc(perm[std::size_t(u)], perm[std::size_t(v)]);
    return out;
}

std::vector<int> random_ordering(int n, SplitMix64& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[std::size_t(i)], order[rng.below(std::uint64_t(i) + 1)]);
    return order;
}

}  // namespace

TEST_CASE("square-cycle counts on the transitive 5-tournament") {
    const SlotCount c = slot_counts(transitive(5), CouplingLayout({0, 1, 2, 3, 4}));
    CHECK(c.sigma_plus == 7);
    CHECK(c.sigma_minus == 3);
    CHECK(sigma_max(c) == 7);
    CHECK(sigma_min(c) == 3);
}

TEST_CASE("square-cycle counts on the rotational 5-tournament") {
    const SlotCount c = slot_counts(rotational5(), CouplingLayout({0, 1, 2, 3, 4}));
    CHECK(c.sigma_plus == 10);
    CHECK(c.sigma_minus == 0);
}

TEST_CASE("clipped-path counts on the two triangles") {
    // transitive triangle, ordering (0,1,2): slots (0,1),(1,2),(2,0),(0,2),(1,0),(2,1)
    const SlotCount t = slot_counts(transitive(3), CouplingLayout({0, 1, 2}));
    CHECK(t.sigma_plus == 3);
    CHECK(t.sigma_minus == 3);

    // every ordering of the directed triangle also lands on (3,3)
    const OrientedGraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    std::vector<int> order{0, 1, 2};
    do {
        const SlotCount c = slot_counts(cyc, CouplingLayout(order));
        CHECK(c.sigma_plus == 3);
        CHECK(c.sigma_minus == 3);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("clipped-path layouts expose exactly 2n slots resolving copies") {
    for (int n : {3, 4}) {
        const CouplingLayout layout([&] {
            std::vector<int> o(static_cast<std::size_t>(n));
            std::iota(o.begin(), o.end(), 0);
            return o;
        }());
        CHECK(layout.kind() == LayoutKind::clipped_path);
        const auto slots = layout.slots();
        CHECK(int(slots.size()) == 2 * n);
        // clipping removed (v1', v2'); the copy-resolved pair (v1, v2) appears
        // exactly once, from the original path start
        int start_pairs = 0;
        for (const auto& [u, v] : slots) start_pairs += (u == 0 && v == 1);
        CHECK(start_pairs == 1);
    }
}

TEST_CASE("clipped-path slots coincide with the cyclic slot formula") {
    // the blown-up-path expansion happens to equal the mod-n formula; keep
    // both derivations honest against each other
    for (int n : {3, 4}) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        do {
            auto slots = CouplingLayout(order).slots();
            std::vector<Arc> cyclic;
            for (int i = 0; i < n; ++i)
                for (int d : {1, 2}) cyclic.emplace_back(order[std::size_t(i)], order[std::size_t((i + d) % n)]);
            std::sort(slots.begin(), slots.end());
            std::sort(cyclic.begin(), cyclic.end());
            CHECK(slots == cyclic);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("layout construction rejects bad orderings") {
    CHECK_THROWS_AS(CouplingLayout({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CouplingLayout({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("slot counting rejects non-edges") {
    OrientedGraph sparse(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});  // oriented 5-cycle
    CHECK_THROWS_AS(slot_counts(sparse, CouplingLayout({0, 1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("path slot counts") {
    // directed path 0->1->2->3 in the transitive tournament: 2l-3 = 5 slots, all forward
    const SlotCount c = path_slot_counts(transitive(4), {0, 1, 2, 3});
    CHECK(c.sigma_plus == 5);
    CHECK(c.sigma_minus == 0);

    const SlotCount r = path_slot_counts(transitive(4), {3, 2, 1, 0});
    CHECK(r.sigma_plus == 0);
    CHECK(r.sigma_minus == 5);

    CHECK(path_slot_counts(transitive(3), {0, 1}).sigma_plus == 1);
    CHECK_THROWS_AS(path_slot_counts(transitive(4), {0}), std::invalid_argument);
}

TEST_CASE("family sums add sigma_max per member") {
    CHECK(family_sigma_max({}) == 0);
    CHECK(family_sigma_max({{3, 1}, {2, 5}, {4, 4}}) == 3 + 5 + 4);
}

TEST_CASE("conservation: sigma_plus + sigma_minus == 2n over random tournaments") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + int(rng.below(6));  // 3..8
        const OrientedGraph t = random_min_degree_graph(n, n - 1, rng.next());
        const auto order = random_ordering(n, rng);
        const SlotCount c = slot_counts(t, CouplingLayout(order));
        CHECK(c.sigma_plus + c.sigma_minus == 2 * n);
    }
}

TEST_CASE("rotation leaves square-cycle counts unchanged") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + int(rng.below(4));  // 5..8
        const OrientedGraph t = random_min_degree_graph(n, n - 1, rng.next());
        auto order = random_ordering(n, rng);
        const SlotCount base = slot_counts(t, CouplingLayout(order));
        std::rotate(order.begin(), order.begin() + 1 + int(rng.below(std::uint64_t(n) - 1)), order.end());
        const SlotCount rot = slot_counts(t, CouplingLayout(order));
        CHECK(base.sigma_plus == rot.sigma_plus);
        CHECK(base.sigma_minus == rot.sigma_minus);
    }
}

TEST_CASE("reflection swaps the two counts") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + int(rng.below(4));
        const OrientedGraph t = random_min_degree_graph(n, n - 1, rng.next());
        auto order = random_ordering(n, rng);
        const SlotCount base = slot_counts(t, CouplingLayout(order));
        std::reverse(order.begin(), order.end());
        const SlotCount ref = slot_counts(t, CouplingLayout(order));
        CHECK(base.sigma_plus == ref.sigma_minus);
        CHECK(base.sigma_minus == ref.sigma_plus);
    }
}

TEST_CASE("reversing every arc swaps the two counts") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + int(rng.below(6));
        const OrientedGraph t = random_min_degree_graph(n, n - 1, rng.next());
        const auto order = random_ordering(n, rng);
        const SlotCount base = slot_counts(t, CouplingLayout(order));
        const SlotCount rev = slot_counts(reverse_arcs(t), CouplingLayout(order));
        CHECK(base.sigma_plus == rev.sigma_minus);
        CHECK(base.sigma_minus == rev.sigma_plus);
    }
}

TEST_CASE("relabeling graph and layout together changes nothing") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + int(rng.below(6));
        const OrientedGraph t = random_min_degree_graph(n, n - 1, rng.next());
        const auto order = random_ordering(n, rng);
        const auto perm = random_ordering(n, rng);
        const SlotCount base = slot_counts(t, CouplingLayout(order));
        std::vector<int> mapped;
        for (int v : order) mapped.push_back(perm[std::size_t(v)]);
        const SlotCount iso = slot_counts(relabel(t, perm), CouplingLayout(mapped));
        CHECK(base.sigma_plus == iso.sigma_plus);
        CHECK(base.sigma_minus == iso.sigma_minus);
    }
}

TEST_CASE("hamilton-square verification accepts blow-up layouts") {
    const OrientedGraph b = blow_up(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}), 2);
    // alternate the two copies of the directed triangle: 0,1,2 then copies 3,4,5
    const auto counts = verify_square_hamilton(b, {0, 1, 2, 3, 4, 5});
    REQUIRE(counts.has_value());
    CHECK(counts->sigma_plus + counts->sigma_minus == 12);
}

TEST_CASE("hamilton-square verification reports the first missing slot") {
    const OrientedGraph cyc5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Arc missing{-1, -1};
    const auto counts = verify_square_hamilton(cyc5, {0, 1, 2, 3, 4}, &missing);
    CHECK_FALSE(counts.has_value());
    CHECK(missing == Arc{0, 2});  // the first distance-2 pair is no edge

    CHECK_THROWS_AS(verify_square_hamilton(cyc5, {0, 1, 2, 3}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(verify_square_hamilton(cyc5, {0, 1, 2, 3, 3}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(verify_square_hamilton(transitive(4), {0, 1, 2, 3}, nullptr), std::invalid_argument);
}
