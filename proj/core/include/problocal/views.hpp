#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "problocal/biguint.hpp"
#include "problocal/errors.hpp"
#include "problocal/graph.hpp"
#include "problocal/probe.hpp"

namespace problocal {

/// A "view" is what the generic algorithms (coloring, orientation, sequential
/// simulation) run against. Views expose:
///   using Node = ...;                                  // regular, ordered
///   std::optional<std::pair<Node, Port>> probe_port(const Node&, Port);
///   BigUint id_number(const Node&) const;              // distinct, 1-based
///   const BigUint& id_space() const;                   // IDs <= id_space
///   std::uint64_t degree_bound() const;
/// The base view probes the input graph; virtual views over intersection
/// graphs decompose their probes into base probes.

class BaseView {
public:
    using Node = Vertex;

    BaseView(const LabeledGraph& g, ProbeSession& s)
        : g_(&g), session_(&s), id_space_(g.vertex_count()) {}

    std::optional<std::pair<Node, Port>> probe_port(Node v, Port i) {
        auto ans = probe(*g_, *session_, v, i);
        if (!ans) return std::nullopt;
        return std::make_pair(ans->neighbor, ans->reciprocal);
    }

    BigUint id_number(Node v) const { return BigUint(v); }
    const BigUint& id_space() const { return id_space_; }
    std::uint64_t degree_bound() const { return g_->max_degree(); }

    const LabeledGraph& graph() const { return *g_; }
    ProbeSession& session() { return *session_; }

private:
    const LabeledGraph* g_;
    ProbeSession* session_;
    BigUint id_space_;
};

/// Fully materialized view used by the global reference implementations: the
/// node set and ordered adjacency are explicit, but the interface (and the
/// ID/degree-bound parameters, which the caller must supply with the same
/// formulas the probe-backed view uses) is identical, so the same coloring
/// and simulation code runs on it.
template <class NodeT>
class MaterializedView {
public:
    using Node = NodeT;

    MaterializedView(std::map<Node, std::vector<Node>> adjacency,
                     std::map<Node, BigUint> id_numbers, BigUint id_space,
                     std::uint64_t degree_bound)
        : ids_(std::move(id_numbers)), id_space_(std::move(id_space)),
          degree_bound_(degree_bound) {
        for (auto& [node, nbrs] : adjacency) adj_.emplace(node, std::move(nbrs));
    }

    std::optional<std::pair<Node, Port>> probe_port(const Node& v, Port i) {
        const auto& nbrs = neighbors(v);
        if (i == 0) throw InputError("ports are 1-based");
        if (i > nbrs.size()) return std::nullopt;
        const Node& u = nbrs[i - 1];
        const auto& back = neighbors(u);
        for (std::size_t j = 0; j < back.size(); ++j) {
            if (back[j] == v) return std::make_pair(u, static_cast<Port>(j + 1));
        }
        throw std::logic_error("materialized view lost port reciprocity");
    }

    const std::vector<Node>& neighbors(const Node& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw InputError("unknown node in materialized view");
        return it->second;
    }

    BigUint id_number(const Node& v) const {
        auto it = ids_.find(v);
        if (it == ids_.end()) throw InputError("unknown node in materialized view");
        return it->second;
    }
    const BigUint& id_space() const { return id_space_; }
    std::uint64_t degree_bound() const { return degree_bound_; }

    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (const auto& [node, _] : adj_) out.push_back(node);
        return out;
    }

private:
    std::map<Node, std::vector<Node>> adj_;
    std::map<Node, BigUint> ids_;
    BigUint id_space_;
    std::uint64_t degree_bound_;
};

} // namespace problocal
