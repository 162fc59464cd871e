#pragma once

// Tournaments (complete oriented graphs) up to isomorphism for n <= 8.
//
// Canonical key: relabel vertices in ascending out-degree order, then take the
// lexicographically greatest row-major 0/1 flattening over all relabelings
// that permute only within equal-out-degree groups.  Two tournaments are
// isomorphic iff their keys match.  Keys fit one 64-bit word (n^2 <= 64 bits,
// first matrix entry in the most significant position), so integer order on
// keys is lexicographic order on flattenings.

#include <cstdint>
#include <string>
#include <vector>

#include "sqdisc/oriented_graph.hpp"

namespace sqdisc {

struct Tournament {
    OrientedGraph graph;
    std::uint64_t canonical_key = 0;
};

inline constexpr int kMaxEnumerationOrder = 8;

bool is_tournament(const OrientedGraph& g);

std::uint64_t canonical_key(const OrientedGraph& tournament);

// The relabeled copy realizing the canonical key.
OrientedGraph canonical_relabeling(const OrientedGraph& tournament);

std::string key_bit_string(std::uint64_t key, int n);

// Brute force over all n! vertex bijections; shares no code with the
// canonical-key machinery and serves as its correctness oracle.
bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b);

enum class ClassOrder {
    by_canonical_key,  // ascending key; graphs are the canonical relabelings
    discovery,         // first-seen order over the orientation scan; graphs are
                       // the raw first-seen orientations (compat output order)
};

// One representative per isomorphism class of tournaments on n vertices,
// found by scanning all 2^(n(n-1)/2) orientations of the complete graph,
// edge (i,j), i < j, in lexicographic slot order, slot bit 1 meaning i->j.
// jobs <= 0 uses every available worker; the result does not depend on jobs.
std::vector<Tournament> enumerate_tournaments(int n, ClassOrder order = ClassOrder::by_canonical_key,
                                              int jobs = 0);

}  // namespace sqdisc
