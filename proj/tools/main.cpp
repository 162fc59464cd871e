// Command-line front end: enumeration, coupling constants, bound tables,
// extremal-layout search, tilings, square-path connections, and seeded random
// instances.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <stdexcept>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqdisc/bounds.hpp"
#include "sqdisc/constants.hpp"
#include "sqdisc/manifest.hpp"
#include "sqdisc/oriented_graph.hpp"
#include "sqdisc/search.hpp"
#include "sqdisc/slots.hpp"
#include "sqdisc/tournament.hpp"

using namespace sqdisc;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct CommonOut {
    std::string out_path;  // empty = stdout
};

// default reports embed the manifest as a '#' header; compat bytes never do
void emit(const CommonOut& where, const RunManifest& manifest, const std::string& body, bool with_header) {
    const std::string payload = with_header ? manifest.header_line() + body : body;
    if (where.out_path.empty()) {
        std::cout << payload;
        return;
    }
    write_with_manifest(where.out_path, payload, manifest);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<OrientedGraph> load_graphs(const std::string& path, RunManifest& manifest) {
    const std::string bytes = slurp(path);
    manifest.record_input(path, bytes);
    std::istringstream stream(bytes);
    std::vector<OrientedGraph> graphs = read_graph_stream(stream);
    if (graphs.empty()) throw std::invalid_argument("no graphs in '" + path + "'");
    return graphs;
}

std::string serialize_graphs(const std::vector<OrientedGraph>& graphs, const std::string& format) {
    std::string out;
    for (const OrientedGraph& g : graphs)
        out += (format == "json" ? serialize_json_line(g) : serialize_matrix_line(g)) + "\n";
    return out;
}

ClassOrder parse_order(const std::string& name) {
    return name == "discovery" ? ClassOrder::discovery : ClassOrder::by_canonical_key;
}

void gate_big(int n, bool allow_big) {
    if (n >= 8 && !allow_big)
        throw std::invalid_argument("n >= 8 enumerates hundreds of millions of orientations; pass --allow-big");
}

Arc parse_edge(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("edge must be 'u,v'");
    std::size_t p1 = 0, p2 = 0;
    const int u = std::stoi(text.substr(0, comma), &p1);
    const int v = std::stoi(text.substr(comma + 1), &p2);
    if (p1 != comma || p2 != text.size() - comma - 1) throw std::invalid_argument("edge must be 'u,v'");
    return {u, v};
}

// -------------------- subcommands --------------------

int run_enumerate(int n, std::string order, std::string format, bool compat, bool allow_big, int jobs,
                  const CommonOut& where) {
    gate_big(n, allow_big);
    if (compat) {  // the legacy listing is the first-seen matrices, byte for byte
        order = "discovery";
        format = "matrix";
    }
    RunManifest manifest;
    manifest.subcommand = "enumerate";
    manifest.parameters = {{"n", std::to_string(n)}, {"order", order}, {"format", format},
                           {"compat", compat ? "true" : "false"}, {"jobs", std::to_string(jobs)}};
    const auto classes = enumerate_tournaments(n, parse_order(order), jobs);
    std::vector<OrientedGraph> graphs;
    graphs.reserve(classes.size());
    for (const Tournament& t : classes) graphs.push_back(t.graph);
    emit(where, manifest, serialize_graphs(graphs, format), !compat);
    return 0;
}

int run_constants(int n, std::string order, bool compat, const std::string& in_path, bool allow_big,
                  int jobs, const CommonOut& where) {
    if (compat) order = "discovery";  // the legacy listing indexes classes by discovery
    RunManifest manifest;
    manifest.subcommand = "constants";
    manifest.parameters = {{"order", order}, {"compat", compat ? "true" : "false"},
                           {"jobs", std::to_string(jobs)}};
    ConstantsTable table;
    if (!in_path.empty()) {
        const std::vector<OrientedGraph> graphs = load_graphs(in_path, manifest);
        const int order_n = n > 0 ? n : graphs.front().order();
        manifest.parameters["n"] = std::to_string(order_n);
        table = compute_constants_for(order_n, graphs, jobs);
    } else {
        if (n <= 0) throw std::invalid_argument("constants needs --n or --in");
        gate_big(n, allow_big);
        manifest.parameters["n"] = std::to_string(n);
        table = compute_constants(n, parse_order(order), jobs);
    }
    if (compat)
        emit(where, manifest, render_constants_compat(table), false);
    else
        emit(where, manifest, render_constants_report(table), true);
    return 0;
}

int run_verify_appendix(const std::string& t5_path, const std::string& results_path, int jobs) {
    const std::string t5_bytes = slurp(t5_path);
    const std::string results_bytes = slurp(results_path);

    const ConstantsTable table = compute_constants(5, ClassOrder::discovery, jobs);
    std::string t5_expect;
    for (const ClassConstants& row : table.rows) t5_expect += serialize_matrix_line(row.graph) + "\n";
    const std::string results_expect = render_constants_compat(table);

    bool ok = true;
    if (t5_bytes == t5_expect) {
        std::cout << "tournament listing: OK (" << t5_bytes.size() << " bytes)\n";
    } else {
        std::cout << "tournament listing: MISMATCH (got " << t5_bytes.size() << " bytes, expected "
                  << t5_expect.size() << ")\n";
        ok = false;
    }
    if (results_bytes == results_expect) {
        std::cout << "results listing: OK (" << results_bytes.size() << " bytes)\n";
    } else {
        std::cout << "results listing: MISMATCH (got " << results_bytes.size() << " bytes, expected "
                  << results_expect.size() << ")\n";
        ok = false;
    }
    return ok ? 0 : kExitVerification;
}

int run_bounds(long long n_min, long long n_max, const std::string& alpha_text, const std::string& xi_text,
               const CommonOut& where) {
    const Rational alpha = Rational::parse(alpha_text);
    if (!(Rational(0) < alpha) || !(alpha < Rational(1, 4)))
        throw std::invalid_argument("alpha must lie in (0, 1/4)");
    const bool with_xi = !xi_text.empty();
    const Rational xi = with_xi ? Rational::parse(xi_text) : Rational(0);
    if (n_min < 3 || n_max < n_min) throw std::invalid_argument("need 3 <= n-min <= n-max");

    RunManifest manifest;
    manifest.subcommand = "bounds";
    manifest.parameters = {{"n-min", std::to_string(n_min)}, {"n-max", std::to_string(n_max)},
                           {"alpha", alpha.str()}};
    if (with_xi) manifest.parameters["xi"] = xi.str();

    const NTable table = NTable::frozen();
    std::string csv = "n,delta,r,A_r,Abar_r,g,f,regime,N_min";
    if (with_xi) csv += ",f_minus_xi";
    csv += "\n";
    for (long long n = n_min; n <= n_max; ++n) {
        for (long long delta = (2 * n + 2) / 3; delta < n; ++delta) {
            const TilingProfile p = tiling_profile(n, delta);
            const bool near =
                3 * alpha.den() * delta <= (2 * alpha.den() + 4 * alpha.num()) * n;
            std::string g_cell, n_min_cell, f_cell;
            try {
                g_cell = std::to_string(g_bound(n, delta, table));
            } catch (const std::out_of_range&) {
            }
            if (table.contains(p.r) && table.contains(p.r - 1))
                n_min_cell = std::to_string(n_min_check(p.r, table));
            if (near)
                f_cell = std::to_string(3 * delta - n);
            else if (!g_cell.empty())
                f_cell = g_cell;
            csv += std::to_string(n) + "," + std::to_string(delta) + "," + std::to_string(p.r) + "," +
                   std::to_string(p.a_r) + "," + std::to_string(p.a_bar_r) + "," + g_cell + "," + f_cell +
                   "," + (near ? "near-threshold" : "general") + "," + n_min_cell;
            if (with_xi) {
                csv += ",";
                if (!f_cell.empty()) csv += (Rational(std::stoll(f_cell)) - xi * Rational(n)).str();
            }
            csv += "\n";
        }
    }
    emit(where, manifest, csv, true);
    return 0;
}

int run_search(const std::string& in_path, std::uint64_t budget_nodes, double budget_seconds, int jobs,
               const CommonOut& where) {
    RunManifest manifest;
    manifest.subcommand = "search";
    manifest.parameters = {{"jobs", std::to_string(jobs)}};
    if (budget_nodes) manifest.parameters["budget-nodes"] = std::to_string(budget_nodes);
    if (budget_seconds > 0) manifest.parameters["budget-seconds"] = std::to_string(budget_seconds);
    const std::vector<OrientedGraph> graphs = load_graphs(in_path, manifest);

    SearchBudget budget;
    if (budget_nodes) budget.max_nodes = budget_nodes;
    budget.max_seconds = budget_seconds;

    std::string body;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const SearchResult r = max_discrepancy_square_hamilton(graphs[i], budget, jobs);
        nlohmann::ordered_json line;
        line["graph"] = i;
        line["n"] = graphs[i].order();
        if (r.ordering) {
            const SlotCount counts = slot_counts(graphs[i], CouplingLayout(*r.ordering));
            line["ordering"] = *r.ordering;
            line["sigma_plus"] = counts.sigma_plus;
            line["sigma_minus"] = counts.sigma_minus;
        } else {
            line["ordering"] = nullptr;
        }
        line["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
        line["certified_optimal"] = r.certified_optimal;
        line["nodes"] = r.nodes;
        body += line.dump() + "\n";
    }
    emit(where, manifest, body, true);
    return 0;
}

int run_tiling(const std::string& in_path, long long delta_override, const CommonOut& where) {
    RunManifest manifest;
    manifest.subcommand = "tiling";
    if (delta_override >= 0) manifest.parameters["delta"] = std::to_string(delta_override);
    const std::vector<OrientedGraph> graphs = load_graphs(in_path, manifest);

    std::string body;
    bool consistent = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const OrientedGraph& g = graphs[i];
        const long long delta = delta_override >= 0 ? delta_override : min_total_degree(g);
        const TilingProfile p = tiling_profile(g.order(), delta);
        const auto cert = find_mixed_tiling(g, p.r, p.a_r, p.a_bar_r);
        nlohmann::ordered_json line;
        line["graph"] = i;
        line["n"] = g.order();
        line["delta"] = delta;
        line["r"] = p.r;
        line["count_r"] = p.a_r;
        line["count_r1"] = p.a_bar_r;
        if (cert) {
            if (verify_tiling(g, *cert, p.r, p.a_r, p.a_bar_r) != TilingDefect::none) consistent = false;
            line["tiles"] = cert->tiles;
        } else {
            line["tiles"] = nullptr;
        }
        body += line.dump() + "\n";
    }
    emit(where, manifest, body, true);
    return consistent ? 0 : kExitVerification;
}

int run_connect(const std::string& in_path, const std::vector<std::string>& edges,
                const std::vector<int>& forbidden, const CommonOut& where) {
    if (edges.size() != 2) throw std::invalid_argument("connect needs exactly two --edge u,v flags");
    const Arc from = parse_edge(edges[0]);
    const Arc to = parse_edge(edges[1]);

    RunManifest manifest;
    manifest.subcommand = "connect";
    manifest.parameters = {{"from", edges[0]}, {"to", edges[1]}};
    const std::vector<OrientedGraph> graphs = load_graphs(in_path, manifest);

    std::string body;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto seq = connect_edges(graphs[i], from, to, forbidden);
        nlohmann::ordered_json line;
        line["graph"] = i;
        line["from"] = {from.first, from.second};
        line["to"] = {to.first, to.second};
        line["sequence"] = seq ? nlohmann::ordered_json(*seq) : nlohmann::ordered_json(nullptr);
        if (seq) line["internal"] = seq->size() - 4;
        body += line.dump() + "\n";
    }
    emit(where, manifest, body, true);
    return 0;
}

int run_square_path(const std::string& in_path, const CommonOut& where) {
    RunManifest manifest;
    manifest.subcommand = "square-path";
    const std::vector<OrientedGraph> graphs = load_graphs(in_path, manifest);

    std::string body;
    bool ok = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const int n = graphs[i].order();
        const int longest = longest_square_directed_path(graphs[i]);
        const int guarantee = n >= 3 ? (2 * n + 2) / 3 - 1 : 0;
        const bool meets = longest >= guarantee;
        ok = ok && meets;
        body += "graph " + std::to_string(i) + ": n=" + std::to_string(n) +
                " longest=" + std::to_string(longest) + " guarantee=" + std::to_string(guarantee) +
                (meets ? " ok" : " VIOLATION") + "\n";
    }
    emit(where, manifest, body, true);
    return ok ? 0 : kExitVerification;
}

int run_random(int n, int delta, std::uint64_t seed, const std::string& format, const CommonOut& where) {
    RunManifest manifest;
    manifest.subcommand = "random";
    manifest.parameters = {{"n", std::to_string(n)}, {"delta", std::to_string(delta)},
                           {"seed", std::to_string(seed)}, {"rng", kRngName}, {"format", format}};
    const OrientedGraph g = random_min_degree_graph(n, delta, seed);
    emit(where, manifest, serialize_graphs({g}, format), true);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oriented-discrepancy toolkit: tournament enumeration, coupling constants, "
                 "tiling bounds, and certified searches"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list tournament classes, one graph per line");
    int en_n = 5;
    std::string en_order = "key", en_format = "matrix";
    bool en_compat = false, en_big = false;
    int en_jobs = 0;
    CommonOut en_out;
    enumerate->add_option("--n", en_n, "number of vertices (1-8)")->required()->check(CLI::Range(1, 8));
    enumerate->add_option("--order", en_order, "class order: key or discovery")
        ->check(CLI::IsMember({"key", "discovery"}));
    enumerate->add_option("--format", en_format, "matrix or json")->check(CLI::IsMember({"matrix", "json"}));
    enumerate->add_flag("--compat", en_compat, "emit the legacy listing byte for byte");
    enumerate->add_flag("--allow-big", en_big, "permit the n=8 scan");
    enumerate->add_option("--jobs", en_jobs, "worker count (0 = all)");
    enumerate->add_option("--out", en_out.out_path, "output file (default stdout)");

    // constants
    auto* constants = app.add_subcommand("constants", "per-class coupling values and the N/M summary");
    int co_n = 0;
    std::string co_order = "key", co_in;
    bool co_compat = false, co_big = false;
    int co_jobs = 0;
    CommonOut co_out;
    constants->add_option("--n", co_n, "number of vertices (3-8)")->check(CLI::Range(3, 8));
    constants->add_option("--order", co_order, "class order: key or discovery")
        ->check(CLI::IsMember({"key", "discovery"}));
    constants->add_flag("--compat", co_compat, "emit the legacy results listing byte for byte");
    constants->add_option("--in", co_in, "read classes from a graph file instead of enumerating");
    constants->add_flag("--allow-big", co_big, "permit the n=8 scan");
    constants->add_option("--jobs", co_jobs, "worker count (0 = all)");
    constants->add_option("--out", co_out.out_path, "output file (default stdout)");

    // verify-appendix
    auto* verify = app.add_subcommand("verify-appendix", "recompute and byte-compare the legacy listings");
    std::string ve_t5, ve_results;
    int ve_jobs = 0;
    verify->add_option("--t5", ve_t5, "legacy 5-vertex tournament listing")->required();
    verify->add_option("--results", ve_results, "legacy per-class results listing")->required();
    verify->add_option("--jobs", ve_jobs, "worker count (0 = all)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "CSV of tiling profiles and bound values");
    long long bo_min = 6, bo_max = 0;
    std::string bo_alpha, bo_xi;
    CommonOut bo_out;
    bounds->add_option("--n-min", bo_min, "smallest n (default 6)");
    bounds->add_option("--n-max", bo_max, "largest n")->required();
    bounds->add_option("--alpha", bo_alpha, "density parameter in (0, 1/4), e.g. 1/20")->required();
    bounds->add_option("--xi", bo_xi, "emit f - xi*n as an extra exact column");
    bounds->add_option("--out", bo_out.out_path, "output file (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "certified extremal Hamilton-square layouts");
    std::string se_in;
    std::uint64_t se_nodes = 0;
    double se_seconds = 0;
    int se_jobs = 0;
    CommonOut se_out;
    search->add_option("--in", se_in, "graph file (matrix or json lines)")->required();
    search->add_option("--budget-nodes", se_nodes, "node budget (0 = unlimited)");
    search->add_option("--budget-seconds", se_seconds, "time budget (0 = unlimited)");
    search->add_option("--jobs", se_jobs, "worker count (0 = all)");
    search->add_option("--out", se_out.out_path, "output file (default stdout)");

    // tiling
    auto* tiling = app.add_subcommand("tiling", "mixed clique tilings from the degree window");
    std::string ti_in;
    long long ti_delta = -1;
    CommonOut ti_out;
    tiling->add_option("--in", ti_in, "graph file (matrix or json lines)")->required();
    tiling->add_option("--delta", ti_delta, "override the minimum-degree window");
    tiling->add_option("--out", ti_out.out_path, "output file (default stdout)");

    // connect
    auto* connect = app.add_subcommand("connect", "shortest square-path connection between two edges");
    std::string cn_in;
    std::vector<std::string> cn_edges;
    std::vector<int> cn_forbid;
    CommonOut cn_out;
    connect->add_option("--in", cn_in, "graph file (matrix or json lines)")->required();
    connect->add_option("--edge", cn_edges, "endpoint edge 'u,v' (give exactly twice)")->expected(-1);
    connect->add_option("--forbid", cn_forbid, "vertex the connection must avoid (repeatable)");
    connect->add_option("--out", cn_out.out_path, "output file (default stdout)");

    // square-path
    auto* sqpath = app.add_subcommand("square-path", "longest squared directed path per tournament");
    std::string sp_in;
    CommonOut sp_out;
    sqpath->add_option("--in", sp_in, "tournament file (matrix or json lines)")->required();
    sqpath->add_option("--out", sp_out.out_path, "output file (default stdout)");

    // random
    auto* random = app.add_subcommand("random", "seeded random instance with a degree floor");
    int ra_n = 0, ra_delta = 0;
    std::uint64_t ra_seed = 0;
    std::string ra_format = "matrix";
    CommonOut ra_out;
    random->add_option("--n", ra_n, "number of vertices")->required();
    random->add_option("--delta", ra_delta, "minimum total degree")->required();
    random->add_option("--seed", ra_seed, "rng seed")->required();
    random->add_option("--format", ra_format, "matrix or json")->check(CLI::IsMember({"matrix", "json"}));
    random->add_option("--out", ra_out.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(enumerate))
            return run_enumerate(en_n, en_order, en_format, en_compat, en_big, en_jobs, en_out);
        if (app.got_subcommand(constants))
            return run_constants(co_n, co_order, co_compat, co_in, co_big, co_jobs, co_out);
        if (app.got_subcommand(verify)) return run_verify_appendix(ve_t5, ve_results, ve_jobs);
        if (app.got_subcommand(bounds)) return run_bounds(bo_min, bo_max, bo_alpha, bo_xi, bo_out);
        if (app.got_subcommand(search)) return run_search(se_in, se_nodes, se_seconds, se_jobs, se_out);
        if (app.got_subcommand(tiling)) return run_tiling(ti_in, ti_delta, ti_out);
        if (app.got_subcommand(connect)) return run_connect(cn_in, cn_edges, cn_forbid, cn_out);
        if (app.got_subcommand(sqpath)) return run_square_path(sp_in, sp_out);
        if (app.got_subcommand(random)) return run_random(ra_n, ra_delta, ra_seed, ra_format, ra_out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitVerification;
    }
}
