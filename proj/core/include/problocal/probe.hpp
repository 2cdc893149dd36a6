#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "problocal/graph.hpp"

namespace problocal {

struct ProbeAnswer {
    Vertex neighbor = 0;
    Port reciprocal = 0; // port of `neighbor` pointing back at the probed vertex
};

/// Per-query probe accountant. A query owns exactly one session; nothing in a
/// session ever outlives the query (statelessness between queries).
///
/// probe_count counts probe invocations; with the session-local cache enabled
/// (the default) repeated probes of the same (v, port) are answered from the
/// cache and counted once. Distances are tracked by parent relaxation from the
/// seeded origin: probing (v, i) -> u records dist(u) <= dist(v) + 1. This is
/// exact for BFS-shaped exploration and an upper bound otherwise; radius is
/// the max recorded distance over probed vertices.
class ProbeSession {
public:
    ProbeSession() = default;

    static ProbeSession for_vertex(Vertex v) {
        ProbeSession s;
        s.seed(v, 0);
        return s;
    }
    static ProbeSession for_edge(const EdgeRef& e) {
        ProbeSession s;
        s.seed(e.u, 0);
        s.seed(e.v, 0);
        return s;
    }
    /// Untracked session: counts probes but keeps no radius (used by global
    /// reference implementations and brute-force oracles).
    static ProbeSession untracked() { return ProbeSession(); }

    void seed(Vertex v, std::uint32_t dist) {
        tracking_ = true;
        auto it = dist_.find(v);
        if (it == dist_.end() || it->second > dist) dist_[v] = dist;
    }

    void set_cache_enabled(bool on) { cache_enabled_ = on; }
    bool cache_enabled() const { return cache_enabled_; }

    /// Restricts probes to an allowed vertex set (the ball a distributed node
    /// collected). Probing outside it raises RadiusViolation. The set must
    /// outlive the session.
    void restrict_to(const std::set<Vertex>* allowed) { allowed_ = allowed; }

    std::uint64_t probe_count() const { return probe_count_; }
    std::uint32_t radius() const { return radius_; }
    std::size_t probed_pairs() const { return probed_.size(); }
    bool tracking() const { return tracking_; }

    std::optional<std::uint32_t> distance(Vertex v) const {
        auto it = dist_.find(v);
        if (it == dist_.end()) return std::nullopt;
        return it->second;
    }

    friend std::optional<ProbeAnswer> probe(const LabeledGraph& g, ProbeSession& s, Vertex v,
                                            Port i);

private:
    std::uint64_t key(Vertex v, Port i) const {
        return (static_cast<std::uint64_t>(v) << 32) | i;
    }

    bool cache_enabled_ = true;
    bool tracking_ = false;
    std::uint64_t probe_count_ = 0;
    std::uint32_t radius_ = 0;
    const std::set<Vertex>* allowed_ = nullptr;
    std::unordered_set<std::uint64_t> probed_;
    std::unordered_map<std::uint64_t, std::optional<ProbeAnswer>> cache_;
    std::unordered_map<Vertex, std::uint32_t> dist_;
};

/// The probe primitive: "who is the i-th neighbor of v?". Returns nullopt
/// when deg(v) < i; the answer otherwise carries the neighbor and its port
/// back to v. Unknown vertex IDs are an input error, distinct from null.
std::optional<ProbeAnswer> probe(const LabeledGraph& g, ProbeSession& s, Vertex v, Port i);

/// Subgraph on the ball B_r(center), extracted purely through probe() so the
/// session accounting is exact. Knows each ball vertex's full port list.
struct Ball {
    Vertex center = 0;
    std::uint32_t radius = 0;
    std::map<Vertex, std::uint32_t> dist;              // ball vertices -> distance
    std::map<Vertex, std::vector<Vertex>> ports;       // full port lists of ball vertices

    bool contains(Vertex v) const { return dist.count(v) != 0; }
    /// Edges of G with both endpoints inside the ball.
    std::vector<EdgeRef> edges_inside() const;
    /// Edges with at least one endpoint inside the ball.
    std::vector<EdgeRef> edges_touching() const;
    void merge(const Ball& other);
};

Ball collect_ball(const LabeledGraph& g, ProbeSession& s, Vertex center, std::uint32_t r);

} // namespace problocal
