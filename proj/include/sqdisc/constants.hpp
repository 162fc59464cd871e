#pragma once

// Per-order coupling constants over all tournament classes.
//
// For a tournament T on n vertices, best_coupling_value is the maximum of
// sigma_max over every coupling layout of T and worst_coupling_deficit the
// minimum of sigma_min; the two always sum to 2n because each layout's
// sigma_plus + sigma_minus = 2n.  Minimizing the best value over all
// isomorphism classes yields N(n), and M(n) = 2n - N(n) is the guaranteed
// discrepancy: every tournament on n vertices admits a coupling with
// sigma_max >= N(n), equivalently sigma_min <= 2n - N(n) for its worst class.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/tournament.hpp"

namespace sqdisc {

// max over coupling layouts of sigma_max.  Layouts for n >= 5 are cyclic
// orderings scanned with the first vertex fixed and reflections folded; for
// n in {3,4} all n! clipped-path orderings are scanned unreduced.
int best_coupling_value(const OrientedGraph& tournament);

// min over coupling layouts of sigma_min; equals 2n - best_coupling_value.
int worst_coupling_deficit(const OrientedGraph& tournament);

// Longest l such that some sequence u_0..u_l has every u_i -> u_{i+1} and
// u_i -> u_{i+2} as forward arcs (the square of a directed path, length in
// base-path edges).
int longest_square_directed_path(const OrientedGraph& tournament);

struct ClassConstants {
    int index = 0;  // 1-based position in the table's class order
    std::uint64_t canonical_key = 0;
    OrientedGraph graph;
    int best = 0;
    int deficit = 0;  // 2n - best
};

struct ConstantsTable {
    int n = 0;
    ClassOrder order = ClassOrder::by_canonical_key;
    std::vector<ClassConstants> rows;
    int n_value = 0;  // min over classes of best
    int m_value = 0;  // 2n - n_value = max over classes of deficit
};

// Enumerates the classes of order n and scans each one.  jobs <= 0 uses all
// available workers; results are independent of jobs.
ConstantsTable compute_constants(int n, ClassOrder order = ClassOrder::by_canonical_key, int jobs = 0);

// Same scan over caller-supplied tournaments kept in their given order
// (e.g. classes read back from an enumeration file).
ConstantsTable compute_constants_for(int n, const std::vector<OrientedGraph>& tournaments, int jobs = 0);

enum class Provenance { proved, computed };

struct NEntry {
    int n_value = 0;
    int m_value = 0;
    Provenance provenance = Provenance::computed;
};

// N/M values by order.  proved() carries the closed-form entries for
// n in {3,4,5} (N = 2n-3, M = 3).  frozen() extends them with the computed
// n in {6,7} entries, cross-checked by tests against live recomputation.
// with_computed() recomputes entries up to max_n; proved orders must come out
// at their closed-form values or it throws.
class NTable {
public:
    static NTable proved();
    static NTable frozen();
    static NTable with_computed(int max_n, int jobs = 0);

    bool contains(int n) const { return entries_.count(n) != 0; }
    const NEntry& at(int n) const;
    void set(int n, NEntry entry);
    const std::map<int, NEntry>& entries() const { return entries_; }

private:
    std::map<int, NEntry> entries_;
};

// Exact appendix-compatible results listing: one "Tournament {i}: {deficit}"
// line per class, a blank line, then "m={M}" with no trailing newline.
std::string render_constants_compat(const ConstantsTable& table);

// Default report body (callers may prepend '#' header lines).
std::string render_constants_report(const ConstantsTable& table);

}  // namespace sqdisc
