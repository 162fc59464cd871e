// Benchmark: main kernels against their serial reference implementations.
// Each row reports wall time for both sides and checks they agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "sqdisc/constants.hpp"
#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/reference.hpp"
#include "sqdisc/search.hpp"
#include "sqdisc/tournament.hpp"

using namespace sqdisc;

namespace {

double timed(const std::function<void()>& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double main_s, double ref_s, bool agree) {
    std::printf("%-34s %10.3fs %12.3fs %8.1fx  %s\n", name.c_str(), main_s, ref_s,
                main_s > 0 ? ref_s / main_s : 0.0, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main() {
    std::printf("%-34s %11s %13s %9s\n", "kernel", "main", "reference", "ratio");

    {
        std::vector<Tournament> fast;
        std::vector<OrientedGraph> slow;
        const double tf = timed([&] { fast = enumerate_tournaments(6); });
        const double ts = timed([&] { slow = reference::enumerate_by_pairwise_iso(6); });
        row("class enumeration n=6", tf, ts, fast.size() == slow.size());
    }

    {
        const std::vector<Tournament> classes = enumerate_tournaments(7);
        bool agree = true;
        double tf = 0, ts = 0;
        for (const Tournament& t : classes) {
            int fast = 0, slow = 0;
            tf += timed([&] { fast = best_coupling_value(t.graph); });
            ts += timed([&] { slow = reference::coupling_extremes_exhaustive(t.graph).best; });
            agree = agree && fast == slow;
        }
        row("coupling scan, 456 classes n=7", tf, ts, agree);
    }

    {
        const OrientedGraph g = random_min_degree_graph(10, 9, 0xbe9c);
        SearchResult fast;
        std::optional<int> slow;
        const double tf = timed([&] { fast = max_discrepancy_square_hamilton(g); });
        const double ts = timed([&] { slow = reference::square_hamilton_bruteforce(g); });
        row("layout optimum n=10 tournament", tf, ts,
            fast.value.has_value() == slow.has_value() && (!slow || *fast.value == *slow));
    }

    {
        const OrientedGraph g = random_min_degree_graph(12, 10, 0xc0ffee);
        const auto edges = underlying(g).edges();
        const Arc from = edges.front();
        Arc to = from;
        for (const Arc& e : edges)
            if (e.first != from.first && e.first != from.second && e.second != from.first &&
                e.second != from.second) {
                to = e;
                break;
            }
        std::optional<std::vector<int>> fast, slow;
        const double tf = timed([&] { fast = connect_edges(g, from, to); });
        const double ts = timed([&] { slow = reference::connect_shortest_exhaustive(g, from, to); });
        row("edge connection n=12", tf, ts,
            fast.has_value() == slow.has_value() && (!slow || fast->size() == slow->size()));
    }

    return 0;
}
