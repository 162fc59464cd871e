#include "sqdisc/tournament.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqdisc {

namespace {

// Compact adjacency for n <= 8: row v is a byte, bit w set <=> arc v->w.
struct SmallAdj {
    int n = 0;
    std::array<std::uint8_t, 8> row{};
};

SmallAdj to_small(const OrientedGraph& g) {
    if (g.order() > kMaxEnumerationOrder) throw std::invalid_argument("order above canonical-key limit");
    SmallAdj s;
    s.n = g.order();
    for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v)
            if (g.has_arc(u, v)) s.row[u] |= std::uint8_t(1) << v;
    return s;
}

OrientedGraph to_graph(const SmallAdj& s) {
    OrientedGraph g(s.n);
    for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v)
            if (s.row[u] >> v & 1) g.add_arc(u, v);
    return g;
}

std::uint64_t flatten(const SmallAdj& a, const std::array<std::uint8_t, 8>& perm) {
    std::uint64_t key = 0;
    for (int i = 0; i < a.n; ++i) {
        const std::uint8_t r = a.row[perm[i]];
        for (int j = 0; j < a.n; ++j) key = key << 1 | (r >> perm[j] & 1);
    }
    return key;
}

// Max flattening over permutations moving vertices only within equal-out-degree
// groups (ascending out-degree).  Optionally records the realizing permutation.
std::uint64_t canonical_key_small(const SmallAdj& a, std::array<std::uint8_t, 8>* best_perm_out = nullptr) {
    const int n = a.n;
    std::array<std::uint8_t, 8> order{};
    for (int v = 0; v < n; ++v) order[v] = std::uint8_t(v);
    std::stable_sort(order.begin(), order.begin() + n, [&](std::uint8_t x, std::uint8_t y) {
        return std::popcount(a.row[x]) < std::popcount(a.row[y]);
    });

    // group boundaries over equal out-degrees
    std::array<std::uint8_t, 9> group_end{};
    int groups = 0;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && std::popcount(a.row[order[j]]) == std::popcount(a.row[order[i]])) ++j;
        group_end[groups++] = std::uint8_t(j);
        i = j;
    }

    std::array<std::uint8_t, 8> perm = order;
    std::uint64_t best = flatten(a, perm);
    std::array<std::uint8_t, 8> best_perm = perm;

    // odometer over the product of within-group permutations
    while (true) {
        int g = groups - 1;
        for (; g >= 0; --g) {
            const int lo = g == 0 ? 0 : group_end[g - 1];
            const int hi = group_end[g];
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
            // wrapped back to sorted order; carry into the previous group
        }
        if (g < 0) break;
        const std::uint64_t key = flatten(a, perm);
        if (key > best) {
            best = key;
            best_perm = perm;
        }
    }
    if (best_perm_out) *best_perm_out = best_perm;
    return best;
}

}  // namespace

bool is_tournament(const OrientedGraph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_arc(u, v) && !g.has_arc(v, u)) return false;
    return true;
}

std::uint64_t canonical_key(const OrientedGraph& tournament) {
    if (!is_tournament(tournament)) throw std::invalid_argument("canonical key needs a tournament");
    return canonical_key_small(to_small(tournament));
}

OrientedGraph canonical_relabeling(const OrientedGraph& tournament) {
    if (!is_tournament(tournament)) throw std::invalid_argument("canonical key needs a tournament");
    const SmallAdj a = to_small(tournament);
    std::array<std::uint8_t, 8> perm{};
    canonical_key_small(a, &perm);
    SmallAdj out;
    out.n = a.n;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.row[perm[i]] >> perm[j] & 1) out.row[i] |= std::uint8_t(1) << j;
    return to_graph(out);
}

std::string key_bit_string(std::uint64_t key, int n) {
    const int len = n * n;
    std::string s(std::size_t(len), '0');
    for (int i = 0; i < len; ++i)
        if (key >> (len - 1 - i) & 1) s[std::size_t(i)] = '1';
    return s;
}

bool are_isomorphic(const OrientedGraph& a, const OrientedGraph& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    if (n == 0) return true;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = 0; v < n; ++v)
                if (a.has_arc(u, v) != b.has_arc(perm[std::size_t(u)], perm[std::size_t(v)])) {
                    match = false;
                    break;
                }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Tournament> enumerate_tournaments(int n, ClassOrder order, int jobs) {
    if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
    const int m = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t(1) << m;

    // edge slot idx -> (i, j), i < j, lexicographic
    std::array<std::pair<std::uint8_t, std::uint8_t>, 28> slot{};
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slot[std::size_t(idx++)] = {std::uint8_t(i), std::uint8_t(j)};
    }

    auto decode = [&](std::uint64_t bits) {
        SmallAdj a;
        a.n = n;
        for (int idx = 0; idx < m; ++idx) {
            const auto [i, j] = slot[std::size_t(idx)];
            if (bits >> idx & 1)
                a.row[i] |= std::uint8_t(1) << j;
            else
                a.row[j] |= std::uint8_t(1) << i;
        }
        return a;
    };

    // key -> smallest orientation bits realizing it (the first-seen one)
    std::map<std::uint64_t, std::uint64_t> classes;

#ifdef _OPENMP
    const int workers = jobs > 0 ? jobs : omp_get_max_threads();
#else
    const int workers = 1;
    (void)jobs;
#endif

    if (workers == 1 || total < 4096) {
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            const SmallAdj a = decode(bits);
            const std::uint64_t key = canonical_key_small(a);
            auto [it, inserted] = classes.try_emplace(key, bits);
            if (!inserted && bits < it->second) it->second = bits;
        }
    } else {
#ifdef _OPENMP
        std::vector<std::map<std::uint64_t, std::uint64_t>> local(static_cast<std::size_t>(workers));
        const std::uint64_t chunks = std::uint64_t(workers) * 16;
        const std::uint64_t chunk = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::int64_t c = 0; c < std::int64_t(chunks); ++c) {
            auto& mine = local[std::size_t(omp_get_thread_num())];
            const std::uint64_t lo = std::uint64_t(c) * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t bits = lo; bits < hi; ++bits) {
                const SmallAdj a = decode(bits);
                const std::uint64_t key = canonical_key_small(a);
                auto [it, inserted] = mine.try_emplace(key, bits);
                if (!inserted && bits < it->second) it->second = bits;
            }
        }
        for (const auto& mine : local)
            for (const auto& [key, bits] : mine) {
                auto [it, inserted] = classes.try_emplace(key, bits);
                if (!inserted && bits < it->second) it->second = bits;
            }
#endif
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(classes.begin(), classes.end());
    if (order == ClassOrder::discovery)
        std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    // by_canonical_key: already ascending by key from the ordered map

    std::vector<Tournament> result;
    result.reserve(rows.size());
    for (const auto& [key, bits] : rows) {
        const SmallAdj raw = decode(bits);
        Tournament t;
        t.canonical_key = key;
        if (order == ClassOrder::discovery) {
            t.graph = to_graph(raw);
        } else {
            std::array<std::uint8_t, 8> perm{};
            canonical_key_small(raw, &perm);
            SmallAdj canon;
            canon.n = n;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (raw.row[perm[i]] >> perm[j] & 1) canon.row[i] |= std::uint8_t(1) << j;
            t.graph = to_graph(canon);
        }
        result.push_back(std::move(t));
    }
    return result;
}

}  // namespace sqdisc
