#pragma once

#include <map>
#include <set>
#include <vector>

#include "problocal/coloring.hpp"
#include "problocal/views.hpp"

namespace problocal {

/// Acyclic orientation induced by the vertex coloring: every edge points from
/// the strictly larger color to the smaller one. A proper coloring never
/// leaves ties; seeing one indicates a coloring bug and raises
/// VerificationError.
template <class View>
class OrientOracle {
public:
    using Node = typename View::Node;

    explicit OrientOracle(ColorOracle<View>& colors) : colors_(&colors) {}

    /// True iff the edge {a, b} is directed a -> b (a has the larger color).
    bool directed_from(const Node& a, const Node& b) {
        int cmp = colors_->color(a).compare(colors_->color(b));
        if (cmp == 0) {
            throw VerificationError("equal colors across an edge: improper coloring");
        }
        return cmp > 0;
    }

    /// Out-neighbors of v, in port order.
    std::vector<Node> out_neighbors(const Node& v) {
        std::vector<Node> out;
        for (const auto& [nb, back] : colors_->ports_of(v)) {
            if (directed_from(v, nb)) out.push_back(nb);
        }
        return out;
    }

    /// Exact reachability set of v under the orientation (includes v).
    /// Traversal expands outward edges only, out-neighbors in port order.
    std::set<Node> reach_set(const Node& v) {
        std::set<Node> seen{v};
        std::vector<Node> stack{v};
        while (!stack.empty()) {
            Node cur = stack.back();
            stack.pop_back();
            for (const Node& nb : out_neighbors(cur)) {
                if (seen.insert(nb).second) stack.push_back(nb);
            }
        }
        return seen;
    }

    ColorOracle<View>& colors() { return *colors_; }

private:
    ColorOracle<View>* colors_;
};

/// Per-edge direction for the input graph.
struct OrientedEdge {
    Vertex tail = 0;
    Vertex head = 0;
};

OrientedEdge orient_edge(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e);

/// Reachability statistics of the assembled orientation (test scale: sweeps
/// the whole graph through the probe interface).
struct ReachStats {
    std::uint32_t rad = 0;          // longest directed path length
    std::uint64_t reach = 0;        // max |Reach(v)|
    std::vector<std::uint64_t> reach_sizes; // per vertex, 1-based offset
    BigUint palette;                // coloring palette bound used by the orientation
};

/// Assembles the full digraph, computes rad and reach exactly, and checks
/// rad <= palette - 1 plus the degree-based reachability bound
/// reach <= 1 + Delta * sum_{i=1..rad} (Delta-1)^(i-1)
/// (equal to 2*rad+1 when Delta = 2). Violations raise VerificationError
/// naming a witness vertex.
ReachStats verify_orientation_bounds(const LabeledGraph& g);

} // namespace problocal
