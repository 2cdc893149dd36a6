#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "problocal/augstruct.hpp"
#include "problocal/graph.hpp"

namespace problocal {

/// Adjacency and matching-membership callbacks the enumerators run against.
/// The local oracles back them with a collected ball and the recursive
/// membership oracle; the global references back them with the full graph and
/// an explicit matching. Both enumerate the same structure sets.
struct EnumAccess {
    std::function<std::vector<Vertex>(Vertex)> neighbors;      // full port-order list
    std::function<bool(const EdgeRef&)> in_matching;           // membership in M
    std::function<bool(const EdgeRef&)> alive = {};            // edge usable (default: all)

    bool edge_alive(const EdgeRef& e) const { return !alive || alive(e); }
};

/// All alternating augmenting paths of exactly 2*level - 1 edges that contain
/// the vertex x: edges at odd positions are outside M, even positions inside,
/// both endpoints M-free. Deduplicated canonical forms, sorted.
std::vector<AugStruct> enumerate_fixed_length_paths_at(const EnumAccess& access,
                                                       std::uint32_t level, Vertex x);

/// All (M,[1,k])-augmenting structures containing x: alternating simple paths
/// or cycles with at most k non-matching edges and positive gain (in rounded
/// weight units); a path end on a non-matching edge requires that endpoint to
/// be M-free. Deduplicated canonical forms, sorted.
std::vector<AugStruct> enumerate_bounded_gain_structs_at(
    const EnumAccess& access, const std::map<EdgeRef, std::int64_t>& units, std::uint32_t k,
    Vertex x);

/// Exact gain of an alternating structure in rounded weight units:
/// sum over non-matching edges minus sum over matching edges.
std::int64_t gain_units(const AugStruct& s, const std::function<bool(const EdgeRef&)>& in_matching,
                        const std::map<EdgeRef, std::int64_t>& units);

} // namespace problocal
