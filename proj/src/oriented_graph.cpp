#include "sqdisc/oriented_graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sqdisc {

namespace {

int checked_order(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    return n;
}

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& rows, int words, int r, int c) {
    rows[std::size_t(r) * words + std::size_t(c) / 64] |= std::uint64_t(1) << (c % 64);
}

}  // namespace

OrientedGraph::OrientedGraph(int n)
    : n_(checked_order(n)),
      words_(words_for(n)),
      out_(std::size_t(n_) * words_, 0),
      in_(std::size_t(n_) * words_, 0) {}

OrientedGraph::OrientedGraph(int n, const std::vector<Arc>& arcs) : OrientedGraph(n) {
    for (const auto& [u, v] : arcs) add_arc(u, v);
}

void OrientedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

void OrientedGraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop rejected");
    const std::uint64_t u_to_v = out_[std::size_t(u) * words_ + v / 64] >> (v % 64) & 1;
    const std::uint64_t v_to_u = out_[std::size_t(v) * words_ + u / 64] >> (u % 64) & 1;
    if (v_to_u) throw std::invalid_argument("digon rejected");
    if (u_to_v) throw std::invalid_argument("duplicate arc rejected");
    set_bit(out_, words_, u, v);
    set_bit(in_, words_, v, u);
    ++arc_count_;
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(std::size_t(arc_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (out_[std::size_t(u) * words_ + v / 64] >> (v % 64) & 1) result.emplace_back(u, v);
    return result;
}

UnderlyingGraph::UnderlyingGraph(int n)
    : n_(checked_order(n)), words_(words_for(n)), adj_(std::size_t(n_) * words_, 0) {}

void UnderlyingGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

void UnderlyingGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop rejected");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
    set_bit(adj_, words_, u, v);
    set_bit(adj_, words_, v, u);
    ++edge_count_;
}

bool UnderlyingGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[std::size_t(u) * words_ + v / 64] >> (v % 64) & 1;
}

int UnderlyingGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(adj_[std::size_t(v) * words_ + w]);
    return d;
}

std::vector<Arc> UnderlyingGraph::edges() const {
    std::vector<Arc> result;
    result.reserve(std::size_t(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) result.emplace_back(u, v);
    return result;
}

DegreeTriple degrees(const OrientedGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex id out of range");
    int out = 0;
    int in = 0;
    for (int w = 0; w < g.words_per_row(); ++w) {
        out += __builtin_popcountll(g.out_row(v)[w]);
        in += __builtin_popcountll(g.in_row(v)[w]);
    }
    return {out, in, out + in};
}

int min_total_degree(const OrientedGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("empty graph has no minimum degree");
    int best = degrees(g, 0).total;
    for (int v = 1; v < g.order(); ++v) best = std::min(best, degrees(g, v).total);
    return best;
}

UnderlyingGraph underlying(const OrientedGraph& g) {
    UnderlyingGraph u(g.order());
    for (const auto& [a, b] : g.arcs()) u.add_edge(a, b);
    return u;
}

OrientedGraph blow_up(const OrientedGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("blow-up factor must be at least 1");
    const int n = g.order();
    OrientedGraph result(n * t);
    for (const auto& [v, w] : g.arcs())
        for (int mv = 0; mv < t; ++mv)
            for (int mw = 0; mw < t; ++mw) result.add_arc(mv * n + v, mw * n + w);
    return result;
}

std::string serialize_matrix_line(const OrientedGraph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("cannot serialize the empty graph");
    std::string s;
    s.reserve(std::size_t(n) * (2 * n));
    for (int i = 0; i < n; ++i) {
        if (i) s += ';';
        for (int j = 0; j < n; ++j) {
            if (j) s += ',';
            s += g.has_arc(i, j) ? '1' : '0';
        }
    }
    return s;
}

OrientedGraph parse_matrix_line(const std::string& line) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t semi = line.find(';', pos);
        if (semi == std::string::npos) semi = line.size();
        std::vector<int> row;
        std::size_t p = pos;
        while (p <= semi) {
            std::size_t comma = line.find(',', p);
            if (comma == std::string::npos || comma > semi) comma = semi;
            const std::string tok = line.substr(p, comma - p);
            if (tok == "0")
                row.push_back(0);
            else if (tok == "1")
                row.push_back(1);
            else
                throw std::invalid_argument("non-binary entry '" + tok + "'");
            p = comma + 1;
            if (comma == semi) break;
        }
        rows.push_back(std::move(row));
        pos = semi + 1;
        if (semi == line.size()) break;
    }
    const int n = int(rows.size());
    for (const auto& row : rows)
        if (int(row.size()) != n) throw std::invalid_argument("ragged matrix line");
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (rows[i][i] != 0) throw std::invalid_argument("loop rejected");
        for (int j = 0; j < n; ++j)
            if (rows[i][j]) g.add_arc(i, j);  // add_arc rejects digons
    }
    return g;
}

std::string serialize_json_line(const OrientedGraph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto arcs = nlohmann::json::array();
    for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
    j["arcs"] = std::move(arcs);
    return j.dump();
}

OrientedGraph parse_json_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad json graph line: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
        throw std::invalid_argument("json graph line needs fields 'n' and 'arcs'");
    OrientedGraph g(j.at("n").get<int>());
    for (const auto& arc : j.at("arcs")) {
        if (!arc.is_array() || arc.size() != 2)
            throw std::invalid_argument("arc entries must be [u, v] pairs");
        g.add_arc(arc.at(0).get<int>(), arc.at(1).get<int>());
    }
    return g;
}

std::vector<OrientedGraph> read_graph_stream(std::istream& in) {
    std::vector<OrientedGraph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (line[first] == '{')
            graphs.push_back(parse_json_line(line));
        else
            graphs.push_back(parse_matrix_line(line.substr(first)));
    }
    return graphs;
}

}  // namespace sqdisc
