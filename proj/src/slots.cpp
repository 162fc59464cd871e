#include "sqdisc/slots.hpp"

#include <stdexcept>
#include <unordered_set>

namespace sqdisc {

namespace {

void check_distinct(const std::vector<int>& vs) {
    std::unordered_set<int> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) throw std::invalid_argument("repeated vertex in ordering");
}

}  // namespace

CouplingLayout::CouplingLayout(std::vector<int> ordering) : ordering_(std::move(ordering)) {
    if (ordering_.size() < 3) throw std::invalid_argument("coupling layout needs at least 3 vertices");
    check_distinct(ordering_);
    kind_ = ordering_.size() >= 5 ? LayoutKind::square_cycle : LayoutKind::clipped_path;
}

std::vector<Arc> CouplingLayout::slots() const {
    const int n = int(ordering_.size());
    std::vector<Arc> out;
    out.reserve(std::size_t(2 * n));
    if (kind_ == LayoutKind::square_cycle) {
        for (int i = 0; i < n; ++i)
            for (int d : {1, 2}) out.emplace_back(ordering_[std::size_t(i)], ordering_[std::size_t((i + d) % n)]);
    } else {
        // walk the blown-up path v_1..v_n, v_1', v_2' and drop its final
        // distance-1 pair; positions n and n+1 resolve to v_1 and v_2
        std::vector<int> seq = ordering_;
        seq.push_back(ordering_[0]);
        seq.push_back(ordering_[1]);
        const int len = int(seq.size());
        for (int i = 0; i < len; ++i)
            for (int d : {1, 2}) {
                if (i + d >= len) continue;
                if (d == 1 && i == len - 2) continue;  // the clipped pair (v_1', v_2')
                out.emplace_back(seq[std::size_t(i)], seq[std::size_t(i + d)]);
            }
    }
    return out;
}

namespace {

SlotCount classify(const OrientedGraph& g, const std::vector<Arc>& pairs) {
    SlotCount c;
    for (const auto& [u, v] : pairs) {
        if (g.has_arc(u, v))
            ++c.sigma_plus;
        else if (g.has_arc(v, u))
            ++c.sigma_minus;
        else
            throw std::invalid_argument("slot pair is not an underlying edge");
    }
    return c;
}

}  // namespace

SlotCount slot_counts(const OrientedGraph& g, const CouplingLayout& layout) {
    return classify(g, layout.slots());
}

SlotCount path_slot_counts(const OrientedGraph& g, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least 2 vertices");
    check_distinct(path);
    const int len = int(path.size());
    std::vector<Arc> pairs;
    pairs.reserve(std::size_t(2 * len - 3));
    for (int i = 0; i < len; ++i)
        for (int d : {1, 2})
            if (i + d < len) pairs.emplace_back(path[std::size_t(i)], path[std::size_t(i + d)]);
    return classify(g, pairs);
}

long long family_sigma_max(const std::vector<SlotCount>& counts) {
    long long sum = 0;
    for (const SlotCount& c : counts) sum += sigma_max(c);
    return sum;
}

std::optional<SlotCount> verify_square_hamilton(const OrientedGraph& g, const std::vector<int>& ordering,
                                                Arc* first_missing) {
    const int n = g.order();
    if (n < 5) throw std::invalid_argument("hamilton square verification needs n >= 5");
    if (int(ordering.size()) != n) throw std::invalid_argument("ordering must cover every vertex exactly once");
    std::vector<char> seen(std::size_t(n), 0);
    for (int v : ordering) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        if (seen[std::size_t(v)]) throw std::invalid_argument("ordering must cover every vertex exactly once");
        seen[std::size_t(v)] = 1;
    }
    SlotCount c;
    for (int i = 0; i < n; ++i)
        for (int d : {1, 2}) {
            const int u = ordering[std::size_t(i)];
            const int v = ordering[std::size_t((i + d) % n)];
            if (g.has_arc(u, v))
                ++c.sigma_plus;
            else if (g.has_arc(v, u))
                ++c.sigma_minus;
            else {
                if (first_missing) *first_missing = {u, v};
                return std::nullopt;
            }
        }
    return c;
}

}  // namespace sqdisc
