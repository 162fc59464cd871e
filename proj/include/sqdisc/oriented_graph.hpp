#pragma once

// Oriented graphs: directed graphs with no loops and no 2-cycles (digons).
// Dense bit-packed adjacency, one or more 64-bit words per row.  Values are
// treated as immutable once built; concurrent readers need no locking.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sqdisc {

using Arc = std::pair<int, int>;

class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n);
    OrientedGraph(int n, const std::vector<Arc>& arcs);

    int order() const { return n_; }
    int arc_count() const { return arc_count_; }

    // Inserts arc u->v.  Rejects loops, digons, duplicates, out-of-range ids.
    void add_arc(int u, int v);

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return out_[std::size_t(u) * words_ + std::size_t(v) / 64] >> (v % 64) & 1;
    }

    std::vector<Arc> arcs() const;

    // Raw row words, little-endian bit order within each word; word w of row v
    // holds vertices [64w, 64w+63].  Hot loops index these directly.
    const std::uint64_t* out_row(int v) const { return out_.data() + std::size_t(v) * words_; }
    const std::uint64_t* in_row(int v) const { return in_.data() + std::size_t(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const OrientedGraph& other) const {
        return n_ == other.n_ && out_ == other.out_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    int arc_count_ = 0;
    std::vector<std::uint64_t> out_;  // out_[v] bit w set  <=>  arc v->w
    std::vector<std::uint64_t> in_;   // transpose, kept for degree queries
};

// Undirected companion: vertex set plus the edge set {u,v} obtained by
// forgetting arc orientations.
class UnderlyingGraph {
public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int n);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    // Degree of v; neighbourhood row words in the same layout as OrientedGraph.
    int degree(int v) const;
    const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v) * words_; }
    int words_per_row() const { return words_; }

    std::vector<Arc> edges() const;  // each as (u, v) with u < v

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Ordered pair of vertex subsets used by the sparse-pair witness checks.
struct VertexSetPair {
    std::vector<int> a;
    std::vector<int> b;
};

struct DegreeTriple {
    int out;
    int in;
    int total;  // out + in
};

DegreeTriple degrees(const OrientedGraph& g, int v);

// Minimum of total degree over all vertices; rejects the empty graph.
int min_total_degree(const OrientedGraph& g);

UnderlyingGraph underlying(const OrientedGraph& g);

// t disjoint copies of every vertex; copy m of v gets id m*n + v.  Arc from
// copy of v to copy of w iff v->w in g; no arcs inside a copy class.
OrientedGraph blow_up(const OrientedGraph& g, int t);

// Matrix-line format: rows joined by ';', 0/1 entries joined by ','.
// "0,1;0,0" is the single arc 0->1.
std::string serialize_matrix_line(const OrientedGraph& g);
OrientedGraph parse_matrix_line(const std::string& line);

// JSON-lines format: {"n": int, "arcs": [[u,v], ...]} per line.
std::string serialize_json_line(const OrientedGraph& g);
OrientedGraph parse_json_line(const std::string& line);

// Reads a whole stream in either format (auto-detected per first line).
std::vector<OrientedGraph> read_graph_stream(std::istream& in);

}  // namespace sqdisc
