#pragma once

// Slot counting for squares of Hamilton cycles and of paths.
//
// A cyclic ordering v_1..v_n spans the 2n slots (v_i, v_{i+j}), j in {1,2},
// indices mod n.  A slot is "forward" when the graph has that arc and
// "backward" when it has the reverse; a valid layout has every slot realized
// one way or the other.  For n in {3,4} a Hamilton-square layout does not
// exist; the coupling is instead the square of the path v_1..v_n,v_1',v_2'
// through the 2-blow-up with its final distance-1 pair clipped off, copies
// resolving to their originals — again exactly 2n slots.

#include <optional>
#include <utility>
#include <vector>

#include "sqdisc/oriented_graph.hpp"

namespace sqdisc {

struct SlotCount {
    int sigma_plus = 0;   // forward slots
    int sigma_minus = 0;  // backward slots
};

inline int sigma_max(SlotCount c) { return c.sigma_plus > c.sigma_minus ? c.sigma_plus : c.sigma_minus; }
inline int sigma_min(SlotCount c) { return c.sigma_plus < c.sigma_minus ? c.sigma_plus : c.sigma_minus; }

enum class LayoutKind {
    square_cycle,  // n >= 5
    clipped_path,  // n in {3, 4}
};

class CouplingLayout {
public:
    // ordering must list at least 3 distinct vertices; the kind is forced by
    // its length (clipped_path below 5, square_cycle from 5 up).
    explicit CouplingLayout(std::vector<int> ordering);

    LayoutKind kind() const { return kind_; }
    const std::vector<int>& ordering() const { return ordering_; }

    // The 2n ordered slot pairs, copies already resolved to original ids.
    std::vector<Arc> slots() const;

private:
    std::vector<int> ordering_;
    LayoutKind kind_;
};

// Classifies every slot of the layout; throws when a slot pair is missing
// from the underlying graph or a vertex is out of range.
SlotCount slot_counts(const OrientedGraph& g, const CouplingLayout& layout);

// Square of the (open) path p_1..p_l: the 2l-3 slots (p_i, p_{i+j}), j in
// {1,2}.  Needs at least 2 distinct vertices.
SlotCount path_slot_counts(const OrientedGraph& g, const std::vector<int>& path);

// Sum of sigma_max over a family of counts.
long long family_sigma_max(const std::vector<SlotCount>& counts);

// Checks that ordering is a permutation of all vertices of g (n >= 5) whose
// 2n cyclic slots are all underlying edges; on success returns the counts.
// A missing slot is reported through *first_missing when given.
std::optional<SlotCount> verify_square_hamilton(const OrientedGraph& g, const std::vector<int>& ordering,
                                                Arc* first_missing = nullptr);

}  // namespace sqdisc
