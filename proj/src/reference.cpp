#include "sqdisc/reference.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sqdisc/slots.hpp"
#include "sqdisc/tournament.hpp"

namespace sqdisc::reference {

std::vector<OrientedGraph> enumerate_by_pairwise_iso(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("pairwise-iso enumeration is practical for 1 <= n <= 6");
    const int m = n * (n - 1) / 2;
    std::vector<Arc> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    std::vector<OrientedGraph> reps;
    std::vector<std::vector<int>> rep_degrees;  // sorted out-degree prefilter
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
        OrientedGraph g(n);
        for (int idx = 0; idx < m; ++idx) {
            const auto [i, j] = slots[std::size_t(idx)];
            if (bits >> idx & 1)
                g.add_arc(i, j);
            else
                g.add_arc(j, i);
        }
        std::vector<int> deg;
        for (int v = 0; v < n; ++v) deg.push_back(degrees(g, v).out);
        std::sort(deg.begin(), deg.end());
        bool known = false;
        for (std::size_t k = 0; k < reps.size() && !known; ++k)
            known = rep_degrees[k] == deg && are_isomorphic(reps[k], g);
        if (!known) {
            reps.push_back(std::move(g));
            rep_degrees.push_back(std::move(deg));
        }
    }
    return reps;
}

long long automorphism_count(const OrientedGraph& tournament) {
    const int n = tournament.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = 0; v < n; ++v)
                if (tournament.has_arc(u, v) !=
                    tournament.has_arc(perm[std::size_t(u)], perm[std::size_t(v)])) {
                    match = false;
                    break;
                }
        count += match;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

ExhaustiveExtremes coupling_extremes_exhaustive(const OrientedGraph& tournament) {
    if (!is_tournament(tournament)) throw std::invalid_argument("coupling scan needs a tournament");
    const int n = tournament.order();
    if (n < 3) throw std::invalid_argument("couplings need n >= 3");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    ExhaustiveExtremes e{0, 2 * n};
    do {
        const SlotCount c = slot_counts(tournament, CouplingLayout(order));
        e.best = std::max(e.best, sigma_max(c));
        e.worst = std::min(e.worst, sigma_min(c));
    } while (std::next_permutation(order.begin(), order.end()));
    return e;
}

std::optional<int> square_hamilton_bruteforce(const OrientedGraph& g) {
    const int n = g.order();
    if (n < 5) throw std::invalid_argument("hamilton-square scan needs n >= 5");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::optional<int> best;
    do {
        Arc missing;
        const auto counts = verify_square_hamilton(g, order, &missing);
        if (!counts) continue;
        const int v = sigma_max(*counts);
        if (!best || v > *best) best = v;
    } while (std::next_permutation(order.begin() + 1, order.end()));  // first vertex fixed
    return best;
}

std::optional<std::vector<int>> connect_shortest_exhaustive(const OrientedGraph& g, Arc from, Arc to,
                                                            const std::vector<int>& forbidden) {
    const int n = g.order();
    const UnderlyingGraph u = underlying(g);
    const auto [a, b] = from;
    const auto [c, d] = to;
    for (int v : {a, b, c, d})
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw std::invalid_argument("endpoints must be 4 distinct vertices");
    if (!u.has_edge(a, b) || !u.has_edge(c, d))
        throw std::invalid_argument("endpoint pairs must be underlying edges");

    std::vector<char> allowed(std::size_t(n), 1);
    for (int v : forbidden) {
        if (v < 0 || v >= n) throw std::invalid_argument("forbidden vertex out of range");
        if (v == a || v == b || v == c || v == d)
            throw std::invalid_argument("endpoints must not be forbidden");
        allowed[std::size_t(v)] = 0;
    }
    int pool = 0;
    for (int v = 0; v < n; ++v)
        if (allowed[std::size_t(v)] && v != a && v != b && v != c && v != d) ++pool;

    std::vector<char> used(std::size_t(n), 0);
    used[std::size_t(a)] = used[std::size_t(b)] = used[std::size_t(c)] = used[std::size_t(d)] = 1;
    std::vector<int> body{a, b};

    std::function<bool(int, int, int)> dfs = [&](int prev, int cur, int left) -> bool {
        if (left == 0) return u.has_edge(prev, c) && u.has_edge(cur, c) && u.has_edge(cur, d);
        for (int w = 0; w < n; ++w) {
            if (used[std::size_t(w)] || !allowed[std::size_t(w)]) continue;
            if (!u.has_edge(prev, w) || !u.has_edge(cur, w)) continue;
            used[std::size_t(w)] = 1;
            body.push_back(w);
            if (dfs(cur, w, left - 1)) return true;
            body.pop_back();
            used[std::size_t(w)] = 0;
        }
        return false;
    };

    for (int depth = 0; depth <= pool; ++depth) {
        if (dfs(a, b, depth)) {
            body.push_back(c);
            body.push_back(d);
            return body;
        }
    }
    return std::nullopt;
}

}  // namespace sqdisc::reference
