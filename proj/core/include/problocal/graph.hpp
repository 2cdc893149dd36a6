#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "problocal/rational.hpp"

namespace problocal {

using Vertex = std::uint32_t; // 1..n
using Port = std::uint32_t;   // 1..deg(v)

/// Undirected edge with canonical endpoint order (u < v). An edge equals its
/// reversal by construction.
struct EdgeRef {
    Vertex u = 0;
    Vertex v = 0;

    EdgeRef() = default;
    EdgeRef(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const EdgeRef& a, const EdgeRef& b) = default;
    friend auto operator<=>(const EdgeRef& a, const EdgeRef& b) = default;

    std::string str() const { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }
};

struct EdgeRefHash {
    std::size_t operator()(const EdgeRef& e) const {
        return (static_cast<std::size_t>(e.u) << 32) ^ e.v;
    }
};

/// Immutable port-labeled undirected graph: vertex IDs 1..n, each vertex holds
/// an ordered list of neighbor IDs (position = 1-based port). Every algorithm
/// in this library reads the graph only through probes of these port lists.
///
/// Construction validates: port reciprocity (port i of v points to u iff
/// exactly one port of u points back to v), no self-loops, no parallel edges.
class LabeledGraph {
public:
    /// ports[i] is the port list of vertex i+1.
    explicit LabeledGraph(std::vector<std::vector<Vertex>> ports,
                          std::map<EdgeRef, Rational> weights = {});

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(ports_.size()); }
    std::uint32_t max_degree() const { return max_degree_; }
    std::size_t edge_count() const { return edge_count_; }
    bool weighted() const { return !weights_.empty(); }

    std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(port_list(v).size()); }
    const std::vector<Vertex>& port_list(Vertex v) const;

    /// Port of u pointing at v; InputError if {u,v} is not an edge.
    Port port_towards(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    const std::map<EdgeRef, Rational>& weights() const { return weights_; }
    Rational weight(const EdgeRef& e) const;

    std::vector<EdgeRef> edges() const;

    void check_vertex(Vertex v) const;

private:
    std::vector<std::vector<Vertex>> ports_;
    std::map<EdgeRef, Rational> weights_;
    std::uint32_t max_degree_ = 0;
    std::size_t edge_count_ = 0;
};

/// Text format:
///   line 1: "n m"
///   lines 2..n+1: "v: u1 u2 ... u_deg"   (position = port index)
///   optional block: "weights:" then one "u v p/q" line per edge.
LabeledGraph load_graph(const std::string& path);
LabeledGraph read_graph(std::istream& in);
void write_graph(const LabeledGraph& g, std::ostream& out);
void save_graph(const LabeledGraph& g, const std::string& path);

/// Deterministic generators; ports are assigned by sorting neighbor IDs.
LabeledGraph make_ring(std::uint32_t n);
LabeledGraph make_grid(std::uint32_t rows, std::uint32_t cols);
LabeledGraph make_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);
/// Random graph with max degree at most max_deg and at most max_edges edges.
LabeledGraph make_random_bounded(std::uint32_t n, std::uint32_t max_deg, std::size_t max_edges,
                                 std::uint64_t seed);

/// Attaches deterministic rational weights in (0,1] (multiples of 1/denom).
LabeledGraph with_random_weights(const LabeledGraph& g, std::uint64_t seed,
                                 std::int64_t denom = 16);

/// Parses generator specs like "ring:10", "grid:3x4", "rr:10:3:1",
/// "rand:12:4:20:7"; anything else is treated as a file path.
LabeledGraph load_graph_or_generate(const std::string& spec);

} // namespace problocal
