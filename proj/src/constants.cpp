#include "sqdisc/constants.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sqdisc/slots.hpp"

namespace sqdisc {

namespace {

struct BitAdj {
    int n = 0;
    std::array<std::uint16_t, 16> row{};

    bool arc(int u, int v) const { return row[std::size_t(u)] >> v & 1; }
};

BitAdj to_bits(const OrientedGraph& g) {
    if (g.order() > 16) throw std::invalid_argument("coupling scan supports n <= 16");
    BitAdj b;
    b.n = g.order();
    for (int u = 0; u < b.n; ++u)
        for (int v = 0; v < b.n; ++v)
            if (g.has_arc(u, v)) b.row[std::size_t(u)] |= std::uint16_t(1) << v;
    return b;
}

// forward slots of the cyclic layout; in a tournament sigma_minus = 2n - this
int forward_cycle_slots(const BitAdj& b, const int* order, int n) {
    int fwd = 0;
    for (int i = 0; i < n; ++i) {
        const int u = order[i];
        fwd += b.arc(u, order[(i + 1) % n]);
        fwd += b.arc(u, order[(i + 2) % n]);
    }
    return fwd;
}

int best_value_square_cycle(const BitAdj& b) {
    const int n = b.n;
    const int total = 2 * n;
    std::array<int, 16> order{};
    order[0] = 0;
    std::array<int, 15> rest{};
    for (int i = 0; i < n - 1; ++i) rest[std::size_t(i)] = i + 1;
    int best = 0;
    do {
        if (rest[0] > rest[std::size_t(n - 2)]) continue;  // reflection fold
        for (int i = 0; i < n - 1; ++i) order[std::size_t(i + 1)] = rest[std::size_t(i)];
        const int fwd = forward_cycle_slots(b, order.data(), n);
        best = std::max(best, std::max(fwd, total - fwd));
    } while (std::next_permutation(rest.begin(), rest.begin() + (n - 1)));
    return best;
}

int best_value_clipped_path(const OrientedGraph& g) {
    const int n = g.order();
    const int total = 2 * n;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        const SlotCount c = slot_counts(g, CouplingLayout(order));
        if (c.sigma_plus + c.sigma_minus != total) throw std::logic_error("clipped layout lost slots");
        best = std::max(best, sigma_max(c));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

int best_coupling_value(const OrientedGraph& tournament) {
    if (!is_tournament(tournament)) throw std::invalid_argument("coupling scan needs a tournament");
    const int n = tournament.order();
    if (n < 3) throw std::invalid_argument("couplings need n >= 3");
    if (n < 5) return best_value_clipped_path(tournament);
    return best_value_square_cycle(to_bits(tournament));
}

int worst_coupling_deficit(const OrientedGraph& tournament) {
    return 2 * tournament.order() - best_coupling_value(tournament);
}

int longest_square_directed_path(const OrientedGraph& tournament) {
    if (!is_tournament(tournament)) throw std::invalid_argument("square path scan needs a tournament");
    const int n = tournament.order();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n == 1) return 0;
    const BitAdj b = to_bits(tournament);
    int best = 0;

    // extend (prev, last) while both reach the new vertex forward
    struct Frame {
        int prev, last, used, len;
    };
    std::vector<Frame> stack;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (b.arc(u, v)) stack.push_back({u, v, (1 << u) | (1 << v), 1});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        best = std::max(best, f.len);
        const std::uint16_t reach = b.row[std::size_t(f.prev)] & b.row[std::size_t(f.last)] & std::uint16_t(~f.used);
        for (int w = 0; w < n; ++w)
            if (reach >> w & 1) stack.push_back({f.last, w, f.used | (1 << w), f.len + 1});
    }
    return best;
}

ConstantsTable compute_constants_for(int n, const std::vector<OrientedGraph>& tournaments, int jobs) {
    if (n < 3) throw std::invalid_argument("constants need n >= 3");
    for (const OrientedGraph& g : tournaments) {
        if (g.order() != n) throw std::invalid_argument("tournament order mismatch");
        if (!is_tournament(g)) throw std::invalid_argument("coupling scan needs a tournament");
    }
    ConstantsTable table;
    table.n = n;
    table.rows.resize(tournaments.size());
#ifdef _OPENMP
    const int workers = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#else
    (void)jobs;
#endif
    for (std::int64_t i = 0; i < std::int64_t(tournaments.size()); ++i) {
        const OrientedGraph& g = tournaments[std::size_t(i)];
        ClassConstants row;
        row.index = int(i) + 1;
        row.graph = g;
        row.canonical_key = canonical_key(g);
        row.best = best_coupling_value(g);
        row.deficit = 2 * n - row.best;
        table.rows[std::size_t(i)] = std::move(row);
    }
    table.n_value = table.rows.empty() ? 0 : std::min_element(table.rows.begin(), table.rows.end(),
                                                              [](const ClassConstants& a, const ClassConstants& b) {
                                                                  return a.best < b.best;
                                                              })
                                                ->best;
    table.m_value = 2 * n - table.n_value;
    return table;
}

ConstantsTable compute_constants(int n, ClassOrder order, int jobs) {
    const std::vector<Tournament> classes = enumerate_tournaments(n, order, jobs);
    std::vector<OrientedGraph> graphs;
    graphs.reserve(classes.size());
    for (const Tournament& t : classes) graphs.push_back(t.graph);
    ConstantsTable table = compute_constants_for(n, graphs, jobs);
    table.order = order;
    return table;
}

const NEntry& NTable::at(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) throw std::out_of_range("no table entry for this order");
    return it->second;
}

void NTable::set(int n, NEntry entry) {
    if (entry.n_value + entry.m_value != 2 * n) throw std::invalid_argument("entry must satisfy N + M = 2n");
    entries_[n] = entry;
}

NTable NTable::proved() {
    NTable t;
    for (int n = 3; n <= 5; ++n) t.set(n, {2 * n - 3, 3, Provenance::proved});
    return t;
}

NTable NTable::frozen() {
    NTable t = proved();
    t.set(6, {8, 4, Provenance::computed});
    t.set(7, {10, 4, Provenance::computed});
    return t;
}

NTable NTable::with_computed(int max_n, int jobs) {
    NTable t = proved();
    for (int n = 3; n <= max_n; ++n) {
        const ConstantsTable c = compute_constants(n, ClassOrder::by_canonical_key, jobs);
        if (n <= 5) {
            const NEntry& proved_entry = t.at(n);
            if (c.n_value != proved_entry.n_value || c.m_value != proved_entry.m_value)
                throw std::logic_error("computed constants disagree with the closed-form values");
        } else {
            t.set(n, {c.n_value, c.m_value, Provenance::computed});
        }
    }
    return t;
}

std::string render_constants_compat(const ConstantsTable& table) {
    std::string out;
    for (const ClassConstants& row : table.rows)
        out += "Tournament " + std::to_string(row.index) + ": " + std::to_string(row.deficit) + "\n";
    out += "\nm=" + std::to_string(table.m_value);
    return out;
}

std::string render_constants_report(const ConstantsTable& table) {
    std::string out;
    out += "n=" + std::to_string(table.n) + " classes=" + std::to_string(table.rows.size()) + "\n";
    for (const ClassConstants& row : table.rows) {
        out += "class " + std::to_string(row.index) + " key=" + key_bit_string(row.canonical_key, table.n) +
               " best=" + std::to_string(row.best) + " deficit=" + std::to_string(row.deficit) + "\n";
    }
    out += "N=" + std::to_string(table.n_value) + " M=" + std::to_string(table.m_value) + "\n";
    return out;
}

}  // namespace sqdisc
