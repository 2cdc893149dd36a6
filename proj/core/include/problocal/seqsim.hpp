#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "problocal/coloring.hpp"
#include "problocal/errors.hpp"
#include "problocal/probe.hpp"

namespace problocal {

/// Localized simulation of the sequential greedy scheme: scan elements in
/// some order, decide each one from the already-decided neighbor values. The
/// decision function receives the decided values as a sorted vector, so it
/// structurally cannot depend on identities or arrival order.
///
/// The scan order is the ascending rank order; the rank must be a proper
/// "coloring" (adjacent nodes never share a rank), so ranks induce an acyclic
/// orientation and any linear extension of it yields the same output. A query
/// is answered by a DFS along descending-rank edges, deciding each node on
/// backtrack.
template <class View, class RankFn, class Value>
class SeqSimulator {
public:
    using Node = typename View::Node;
    using Rank = decltype(std::declval<RankFn>()(std::declval<const Node&>()));
    using Rule = std::function<Value(const std::vector<Value>&)>;

    SeqSimulator(View& view, RankFn rank, Rule rule)
        : view_(&view), rank_(std::move(rank)), rule_(std::move(rule)) {}

    Value simulate(const Node& v) {
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
        const Rank rv = rank_of(v);
        std::vector<Value> decided;
        for (const auto& nb : neighbors(v)) {
            const Rank rn = rank_of(nb);
            if (rn < rv) {
                decided.push_back(simulate(nb));
            } else if (!(rv < rn)) {
                throw VerificationError("equal ranks across an edge: scan order not proper");
            }
        }
        std::sort(decided.begin(), decided.end());
        Value out = rule_(decided);
        memo_.emplace(v, out);
        return out;
    }

private:
    const Rank& rank_of(const Node& v) {
        auto it = rank_memo_.find(v);
        if (it != rank_memo_.end()) return it->second;
        return rank_memo_.emplace(v, rank_(v)).first->second;
    }

    const std::vector<Node>& neighbors(const Node& v) {
        auto it = nbr_memo_.find(v);
        if (it != nbr_memo_.end()) return it->second;
        std::vector<Node> out;
        for (Port i = 1;; ++i) {
            auto ans = view_->probe_port(v, i);
            if (!ans) break;
            out.push_back(ans->first);
        }
        return nbr_memo_.emplace(v, std::move(out)).first->second;
    }

    View* view_;
    RankFn rank_;
    Rule rule_;
    std::map<Node, Value> memo_;
    std::map<Node, Rank> rank_memo_;
    std::map<Node, std::vector<Node>> nbr_memo_;
};

/// Decision rules of the three shipped instantiations.
inline bool mis_rule(const std::vector<char>& decided) {
    for (char c : decided) {
        if (c) return false;
    }
    return true;
}

inline std::uint32_t first_fit_rule(const std::vector<std::uint32_t>& decided) {
    std::uint32_t c = 1;
    for (std::uint32_t used : decided) {
        if (used == c) {
            ++c;
        } else if (used > c) {
            break;
        }
    }
    return c;
}

/// Runs the sequential scheme directly on an explicit node order (the global
/// reference side of the equality oracle). `neighbors` must list, for each
/// node, its adjacent nodes. Returns the value per node.
template <class Node, class Value>
std::map<Node, Value> run_sequential(const std::vector<Node>& order,
                                     const std::map<Node, std::vector<Node>>& neighbors,
                                     const std::function<Value(const std::vector<Value>&)>& rule) {
    std::map<Node, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::map<Node, Value> g;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Node& v = order[i];
        std::vector<Value> decided;
        auto it = neighbors.find(v);
        if (it != neighbors.end()) {
            for (const Node& nb : it->second) {
                auto pos = position.find(nb);
                if (pos != position.end() && pos->second < i) decided.push_back(g.at(nb));
            }
        }
        std::sort(decided.begin(), decided.end());
        g.emplace(v, rule(decided));
    }
    return g;
}

/// Boolean MIS membership for a vertex of the input graph, localized through
/// the color-induced orientation.
bool l_mis(const LabeledGraph& g, ProbeSession& s, Vertex v);

/// First-fit (max degree + 1) coloring of the input graph.
std::uint32_t l_color_greedy(const LabeledGraph& g, ProbeSession& s, Vertex v);

/// Maximal-matching membership: MIS on the line graph (see linegraph.hpp).
bool l_mm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e);

} // namespace problocal
