#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "problocal/augstruct.hpp"
#include "problocal/graph.hpp"
#include "problocal/rational.hpp"

namespace problocal {

/// Exhaustive verification oracles. Each refuses (BudgetError) beyond its
/// stated budget rather than approximating silently.

constexpr std::size_t kBruteEdgeBudget = 22;
constexpr std::size_t kBruteVertexBudget = 22;

/// Exact maximum-cardinality matching size by enumerating edge subsets
/// (compatible-extension order, so only matchings are visited). |E| <= 22.
std::uint64_t brute_max_matching_size(const LabeledGraph& g);

/// Exact maximum-weight matching under the given weights. |E| <= 22.
Rational brute_max_matching_weight(const LabeledGraph& g,
                                   const std::map<EdgeRef, Rational>& weights);

/// Exact maximum-weight matching in integer units over the surviving edges.
std::int64_t brute_max_matching_units(const LabeledGraph& g,
                                      const std::map<EdgeRef, std::int64_t>& units);

/// Length of a shortest M-augmenting path (unweighted sense: alternating,
/// both endpoints free), by exhaustive alternating DFS. nullopt if none.
std::optional<std::uint32_t> shortest_augmenting_path_length(const LabeledGraph& g,
                                                             const std::set<EdgeRef>& matching);

/// Maximum total gain over vertex-disjoint subsets of the given structures
/// (subset DP over vertices; n <= 22).
std::int64_t brute_max_gain_set_units(std::uint32_t n, const std::vector<AugStruct>& nodes,
                                      const std::map<AugStruct, std::int64_t>& gains);

// Solution predicates.
bool is_matching(const LabeledGraph& g, const std::set<EdgeRef>& m);
bool is_maximal_matching(const LabeledGraph& g, const std::set<EdgeRef>& m);
bool is_independent_set(const LabeledGraph& g, const std::set<Vertex>& s);
bool is_maximal_independent_set(const LabeledGraph& g, const std::set<Vertex>& s);
/// Empty result = proper; otherwise a violating edge.
std::optional<EdgeRef> improper_edge(const LabeledGraph& g,
                                     const std::map<Vertex, std::string>& color_by_vertex);

/// Reference BFS ball (adjacency walked directly, no probes).
std::set<Vertex> reference_ball(const LabeledGraph& g, Vertex center, std::uint32_t r);

} // namespace problocal
