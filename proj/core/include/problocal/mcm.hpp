#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "problocal/augenum.hpp"
#include "problocal/augstruct.hpp"
#include "problocal/coloring.hpp"
#include "problocal/probe.hpp"
#include "problocal/rational.hpp"
#include "problocal/seqsim.hpp"
#include "problocal/views.hpp"

namespace problocal {

/// k = ceil(1/eps); the oracle answers membership in M_{k+1}.
std::uint32_t mcm_phase_count(const Rational& eps);

/// ID space shared by probe-backed and materialized intersection views:
/// encodings of [kind, v_1..v_maxlen] stay below 3*(n+1)^maxlen.
BigUint intersection_id_space(std::uint32_t n, std::uint32_t maxlen);

/// Degree bound (2*level)^2 * Delta^(2*level-1) of the level intersection
/// graph, saturating at UINT64_MAX.
std::uint64_t mcm_intersection_degree_bound(std::uint32_t level, std::uint32_t delta);

/// Vertex-sharing adjacency among augmenting structures, neighbor lists in
/// canonical order (the virtual port order).
std::map<AugStruct, std::vector<AugStruct>> intersection_adjacency(
    const std::vector<AugStruct>& nodes);

class McmOracle;

/// Probe view of the level intersection graph: nodes are the augmenting paths
/// of length 2*level-1 w.r.t. M_{level-1}; adjacency is vertex sharing. Every
/// virtual probe decomposes into base probes and membership-oracle calls.
class PathIntersectionView {
public:
    using Node = AugStruct;

    PathIntersectionView(McmOracle& oracle, std::uint32_t level);

    std::optional<std::pair<Node, Port>> probe_port(const Node& p, Port i);
    BigUint id_number(const Node& p) const;
    const BigUint& id_space() const { return id_space_; }
    std::uint64_t degree_bound() const { return degree_bound_; }

private:
    McmOracle* oracle_;
    std::uint32_t level_;
    std::uint32_t n_;
    BigUint id_space_;
    std::uint64_t degree_bound_;
};

/// The recursive approximate-MCM membership oracle. One instance serves one
/// query; every cache inside is query-local.
class McmOracle {
public:
    McmOracle(const LabeledGraph& g, ProbeSession& s, std::uint32_t phases);

    std::uint32_t top_level() const { return phases_ + 1; }

    /// Membership of e in M_level (level 0 is the empty matching).
    bool member(std::uint32_t level, const EdgeRef& e);

    /// Membership of e in the selected path set of this level.
    bool in_selected(std::uint32_t level, const EdgeRef& e);

    /// Listing step: all level paths through e.
    std::vector<AugStruct> paths_through_edge(std::uint32_t level, const EdgeRef& e);

    /// All level paths containing the vertex x.
    const std::vector<AugStruct>& paths_at_vertex(std::uint32_t level, Vertex x);

    /// Simulated probe to the level intersection graph: all neighbors of p in
    /// canonical order. InputError if p is not a valid node at this level.
    const std::vector<AugStruct>& intersection_neighbors(std::uint32_t level, const AugStruct& p);

    /// MIS membership of p in the level intersection graph.
    bool mis_member(std::uint32_t level, const AugStruct& p);

    const LabeledGraph& graph() const { return *g_; }
    ProbeSession& session() { return *session_; }

private:
    struct LevelState {
        std::unique_ptr<PathIntersectionView> view;
        std::unique_ptr<ColorOracle<PathIntersectionView>> colors;
        std::unique_ptr<SeqSimulator<PathIntersectionView,
                                     std::function<VertexColor(const AugStruct&)>, char>>
            mis;
        std::map<Vertex, std::vector<AugStruct>> at_vertex;
        std::map<AugStruct, std::vector<AugStruct>> neighbors;
        std::map<EdgeRef, char> selected;
    };
    LevelState& level_state(std::uint32_t level);

    const LabeledGraph* g_;
    ProbeSession* session_;
    std::uint32_t phases_;
    std::vector<LevelState> levels_;
    std::map<std::pair<std::uint32_t, EdgeRef>, char> member_memo_;
};

/// Deterministic stateless membership in the (1-eps)-approximate maximum
/// cardinality matching.
bool apx_mcm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const Rational& eps);

/// Global reference: the same phase iteration executed on explicitly built
/// intersection graphs; the per-phase MIS runs the sequential scheme on a
/// topological order of the same rank function the local oracle uses.
struct McmGlobalTrace {
    std::uint32_t phases = 0;
    std::vector<std::set<EdgeRef>> matchings;               // M_1 .. M_{phases+1}
    std::vector<std::vector<AugStruct>> level_nodes;        // per level
    std::vector<std::set<AugStruct>> level_selected;        // per level
    const std::set<EdgeRef>& final_matching() const { return matchings.back(); }
};
McmGlobalTrace global_apx_mcm(const LabeledGraph& g, const Rational& eps);

} // namespace problocal
