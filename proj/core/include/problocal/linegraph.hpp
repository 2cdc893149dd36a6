#pragma once

#include <map>
#include <optional>
#include <vector>

#include "problocal/biguint.hpp"
#include "problocal/graph.hpp"
#include "problocal/probe.hpp"

namespace problocal {

/// Probe view of the line graph: nodes are edges of G, adjacent when sharing
/// an endpoint. A node's virtual port list enumerates incident edges at its
/// smaller endpoint first (in that endpoint's port order), then at the larger
/// endpoint. Every virtual probe decomposes into base probes on G.
class LineGraphView {
public:
    using Node = EdgeRef;

    LineGraphView(const LabeledGraph& g, ProbeSession& s)
        : g_(&g), session_(&s),
          id_space_(BigUint(g.vertex_count() + 1) *
                    static_cast<std::uint64_t>(g.vertex_count() + 1)),
          degree_bound_(g.max_degree() >= 1 ? 2ull * (g.max_degree() - 1) : 0) {}

    std::optional<std::pair<Node, Port>> probe_port(const Node& e, Port i) {
        const auto& inc = incident(e);
        if (i == 0) throw InputError("ports are 1-based");
        if (i > inc.size()) return std::nullopt;
        const Node& other = inc[i - 1];
        const auto& back = incident(other);
        for (std::size_t j = 0; j < back.size(); ++j) {
            if (back[j] == e) return std::make_pair(other, static_cast<Port>(j + 1));
        }
        throw std::logic_error("line graph lost port reciprocity");
    }

    BigUint id_number(const Node& e) const {
        BigUint id(e.u);
        id.mul_small(g_->vertex_count() + 1);
        id += BigUint(e.v);
        return id;
    }
    const BigUint& id_space() const { return id_space_; }
    std::uint64_t degree_bound() const { return degree_bound_; }

    const std::vector<Node>& incident(const Node& e) {
        auto it = incident_memo_.find(e);
        if (it != incident_memo_.end()) return it->second;
        std::vector<Node> out;
        auto side = [&](Vertex a, Vertex skip) {
            for (Port i = 1;; ++i) {
                auto ans = probe(*g_, *session_, a, i);
                if (!ans) break;
                if (ans->neighbor != skip) out.emplace_back(a, ans->neighbor);
            }
        };
        side(e.u, e.v);
        side(e.v, e.u);
        return incident_memo_.emplace(e, std::move(out)).first->second;
    }

private:
    const LabeledGraph* g_;
    ProbeSession* session_;
    BigUint id_space_;
    std::uint64_t degree_bound_;
    std::map<Node, std::vector<Node>> incident_memo_;
};

} // namespace problocal
