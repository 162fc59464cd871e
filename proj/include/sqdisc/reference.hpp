#pragma once

// Independent serial reference implementations.  Each reimplements a kernel
// by direct enumeration with none of the symmetry reductions, pruning, or
// parallel machinery of the main paths; tests and the benchmark hold the two
// sides against each other.

#include <cstdint>
#include <optional>
#include <vector>

#include "sqdisc/oriented_graph.hpp"

namespace sqdisc::reference {

// One representative per isomorphism class found by pairwise brute-force
// isomorphism tests over all 2^(n(n-1)/2) orientations (n <= 6 is practical).
std::vector<OrientedGraph> enumerate_by_pairwise_iso(int n);

// Number of permutations mapping the tournament onto itself (brute force).
long long automorphism_count(const OrientedGraph& tournament);

// max of sigma_max / min of sigma_min over every labeled coupling ordering:
// all n! of them, nothing fixed, nothing folded.
struct ExhaustiveExtremes {
    int best = 0;
    int worst = 0;
};
ExhaustiveExtremes coupling_extremes_exhaustive(const OrientedGraph& tournament);

// Hamilton-square optimum by scanning every (n-1)! ordering with the first
// vertex fixed; no bound pruning.  nullopt when no valid layout exists.
std::optional<int> square_hamilton_bruteforce(const OrientedGraph& g);

// Shortest square-path connection by plain deepening exhaustive search from
// zero internal vertices; semantics match connect_edges.
std::optional<std::vector<int>> connect_shortest_exhaustive(const OrientedGraph& g, Arc from, Arc to,
                                                            const std::vector<int>& forbidden = {});

}  // namespace sqdisc::reference
