#pragma once

// Certified searches on concrete oriented graphs: exact mixed clique tilings,
// branch-and-bound for the extremal Hamilton-square layout, shortest
// square-path connections, and the seeded random instance generator.

#include <cstdint>
#include <optional>
#include <vector>

#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/slots.hpp"

namespace sqdisc {

// splitmix64-v1: the fixed 64-bit mixer; identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = state_ += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound >= 1
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return next() >> 63; }

private:
    std::uint64_t state_;
};

inline constexpr const char* kRngName = "splitmix64-v1";

struct TilingCertificate {
    std::vector<std::vector<int>> tiles;
};

// Exhaustive backtracking for a disjoint places-everyone-or-skips tiling:
// count_r tiles of size r plus count_r1 of size r-1, every tile a clique of
// the underlying graph.  Vertices not in any tile are allowed only when
// r*count_r + (r-1)*count_r1 < n.  nullopt means no such tiling exists.
std::optional<TilingCertificate> find_mixed_tiling(const OrientedGraph& g, int r, long long count_r,
                                                   long long count_r1);

enum class TilingDefect {
    none,
    wrong_tile_counts,  // sizes other than {r, r-1} or wrong multiplicities
    vertex_out_of_range,
    overlapping_tiles,
    missing_edge,  // some tile is not an underlying clique
};

const char* tiling_defect_name(TilingDefect d);

// Definition-level checker, independent of the solver.
TilingDefect verify_tiling(const OrientedGraph& g, const TilingCertificate& cert, int r, long long count_r,
                           long long count_r1);

struct SearchBudget {
    std::uint64_t max_nodes = UINT64_MAX;
    double max_seconds = 0;  // 0 = unlimited
};

struct SearchResult {
    std::optional<std::vector<int>> ordering;  // a layout attaining value
    std::optional<int> value;                  // max over layouts of sigma_max
    bool certified_optimal = false;            // false once a budget was hit
    std::uint64_t nodes = 0;
};

// Maximum sigma_max over all Hamilton-square layouts of g (n >= 5), exact
// branch and bound: first vertex fixed, reflections folded, a branch dies
// when even all-forward completion of the undecided slots cannot beat the
// incumbent in either direction.  When the search completes, the value is
// exact and the reported ordering is re-derived by a fixed serial rescan, so
// both are deterministic across runs and worker counts.  No layout at all
// yields ordering = value = nullopt with certified_optimal = true (when the
// search ran to completion).
SearchResult max_discrepancy_square_hamilton(const OrientedGraph& g, const SearchBudget& budget = {},
                                             int jobs = 0);

// Shortest sequence a,b,x_1..x_m,c,d whose distance-1 and distance-2 pairs
// are all underlying edges (orientations ignored), with distinct vertices and
// every x_i outside forbidden.  BFS over ordered (previous, current) states;
// on the rare repeated-vertex reconstruction the exact answer is recovered by
// deepening exhaustive search.  nullopt means no such sequence exists.
std::optional<std::vector<int>> connect_edges(const OrientedGraph& g, Arc from, Arc to,
                                              const std::vector<int>& forbidden = {});

// Random oriented graph with min_total_degree >= delta_target (0-based ids,
// 0 <= delta_target <= n-1).  Underlying edges are sampled at a probability
// slightly above delta_target/(n-1), orientations by fair coin, and the whole
// graph is resampled until the degree target holds; delta_target = n-1 yields
// a uniformly oriented tournament directly.  Deterministic in (n, target, seed).
OrientedGraph random_min_degree_graph(int n, int delta_target, std::uint64_t seed);

}  // namespace sqdisc
