#include <stdexcept>
#include <set>

#include "doctest.h"
#include "sqdisc/reference.hpp"
#include "sqdisc/search.hpp"
#include "sqdisc/tournament.hpp"

using namespace sqdisc;

namespace {

OrientedGraph transitive(int n) {
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

OrientedGraph rotational(int n) {  // arcs i -> i+1, i -> i+2 (mod n); n = 5 or 7
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= (n - 1) / 2; ++d) g.add_arc(i, (i + d) % n);
    return g;
}

OrientedGraph relabel(const OrientedGraph& g, const std::vector<int>& perm) {
    OrientedGraph out(g.order());
    for (const auto& [u, v] : g.arcs()) out.add_arc(perm[std::size_t(u)], perm[std::size_t(v)]);
    return out;
}

// expected class counts by order, 1-based from n=1
constexpr long long kClassCounts[] = {0, 1, 1, 2, 4, 12, 56, 456, 6880};

}  // namespace

TEST_CASE("canonical key is invariant under relabeling") {
    const OrientedGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    const std::uint64_t key = canonical_key(tri);
    std::vector<int> perm{0, 1, 2};
    do {
        CHECK(canonical_key(relabel(tri, perm)) == key);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // all 24 relabelings of the transitive 4-tournament agree
    const OrientedGraph t4 = transitive(4);
    const std::uint64_t t4_key = canonical_key(t4);
    std::vector<int> perm4{0, 1, 2, 3};
    do {
        CHECK(canonical_key(relabel(t4, perm4)) == t4_key);
    } while (std::next_permutation(perm4.begin(), perm4.end()));
}

TEST_CASE("canonical key separates the two triangle classes") {
    const OrientedGraph cyclic(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(canonical_key(cyclic) != canonical_key(transitive(3)));
    CHECK_FALSE(are_isomorphic(cyclic, transitive(3)));
}

TEST_CASE("canonical relabeling realizes the key and stays isomorphic") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const OrientedGraph t = random_min_degree_graph(6, 5, seed);  // tournament
        const OrientedGraph canon = canonical_relabeling(t);
        CHECK(canonical_key(canon) == canonical_key(t));
        CHECK(are_isomorphic(canon, t));
    }
}

TEST_CASE("canonical key rejects non-tournaments") {
    CHECK_THROWS_AS(canonical_key(OrientedGraph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("brute-force isomorphism oracle basics") {
    const OrientedGraph a = transitive(4);
    std::vector<int> perm{2, 0, 3, 1};
    CHECK(are_isomorphic(a, relabel(a, perm)));
    CHECK_FALSE(are_isomorphic(a, transitive(3)));
}

TEST_CASE("enumeration counts match the frozen class counts") {
    for (int n = 1; n <= 7; ++n) {
        const auto classes = enumerate_tournaments(n);
        CHECK(std::int64_t(classes.size()) == kClassCounts[n]);
    }
}

TEST_CASE("enumeration agrees with the pairwise-isomorphism oracle") {
    for (int n = 1; n <= 5; ++n) {
        const auto oracle = reference::enumerate_by_pairwise_iso(n);
        const auto fast = enumerate_tournaments(n);
        REQUIRE(oracle.size() == fast.size());
        // same classes: every oracle representative matches exactly one key
        std::set<std::uint64_t> keys;
        for (const auto& t : fast) keys.insert(t.canonical_key);
        for (const auto& g : oracle) CHECK(keys.count(canonical_key(g)) == 1);
    }
}

TEST_CASE("representatives are pairwise non-isomorphic (oracle check)") {
    const auto classes = enumerate_tournaments(5);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK_FALSE(are_isomorphic(classes[i].graph, classes[j].graph));
}

TEST_CASE("orbit sizes partition the labeled tournaments") {
    // sum over classes of n!/|Aut| must hit 2^(n(n-1)/2) exactly
    for (int n = 3; n <= 5; ++n) {
        long long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        long long labeled = 0;
        for (const auto& t : enumerate_tournaments(n)) {
            const long long aut = reference::automorphism_count(t.graph);
            REQUIRE(factorial % aut == 0);
            labeled += factorial / aut;
        }
        CHECK(labeled == (1LL << (n * (n - 1) / 2)));
    }
}

TEST_CASE("enumeration is deterministic and order options behave") {
    const auto a = enumerate_tournaments(5);
    const auto b = enumerate_tournaments(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].canonical_key == b[i].canonical_key);
        CHECK(a[i].graph == b[i].graph);
    }
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].canonical_key < a[i].canonical_key);

    // default order serializes the canonical relabeling itself
    for (const auto& t : a) CHECK(canonical_key(t.graph) == t.canonical_key);

    // discovery order: same classes, first-seen raw orientations
    const auto disc = enumerate_tournaments(5, ClassOrder::discovery);
    REQUIRE(disc.size() == a.size());
    std::set<std::uint64_t> keys;
    for (const auto& t : a) keys.insert(t.canonical_key);
    for (const auto& t : disc) {
        CHECK(keys.count(t.canonical_key) == 1);
        CHECK(canonical_key(t.graph) == t.canonical_key);
    }
    // the very first discovered orientation is all arcs j -> i (slot bits 0)
    CHECK(disc[0].graph.has_arc(1, 0));
    CHECK(disc[0].graph.has_arc(2, 0));
}

TEST_CASE("enumeration results do not depend on the worker count") {
    const auto serial = enumerate_tournaments(6, ClassOrder::discovery, 1);
    const auto parallel = enumerate_tournaments(6, ClassOrder::discovery, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].graph == parallel[i].graph);
}

TEST_CASE("enumeration rejects unsupported orders") {
    CHECK_THROWS_AS(enumerate_tournaments(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_tournaments(9), std::invalid_argument);
}

TEST_CASE("key bit string renders the flattened canonical matrix") {
    const OrientedGraph t3 = transitive(3);
    const std::uint64_t key = canonical_key(t3);
    const std::string bits = key_bit_string(key, 3);
    CHECK(bits.size() == 9);
    // ascending out-degree order of the transitive triangle: sink, middle, source
    CHECK(bits == "000100110");
}

TEST_CASE("rotational tournaments are vertex-transitive") {
    for (int n : {5, 7}) {
        const OrientedGraph r = rotational(n);
        CHECK(reference::automorphism_count(r) % n == 0);  // the rotation orbit
        for (int v = 0; v < n; ++v) CHECK(degrees(r, v).out == (n - 1) / 2);
    }
}
