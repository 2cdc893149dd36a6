#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "problocal/biguint.hpp"
#include "problocal/errors.hpp"
#include "problocal/graph.hpp"

namespace problocal {

/// An alternating augmenting structure: a simple path (vertex sequence) or a
/// simple cycle (vertex sequence around the cycle, closing edge implied).
/// Canonical form fixes identity: paths list the smaller endpoint first;
/// cycles are rotated so the smallest vertex leads and directed toward the
/// smaller of its two cycle neighbors.
struct AugStruct {
    bool cycle = false;
    std::vector<Vertex> seq;

    static AugStruct path(std::vector<Vertex> s) {
        if (s.size() < 2) throw InputError("path structure needs at least one edge");
        if (s.front() > s.back()) std::reverse(s.begin(), s.end());
        return AugStruct{false, std::move(s)};
    }

    static AugStruct ring(std::vector<Vertex> s) {
        if (s.size() < 4) throw InputError("alternating cycle needs at least four edges");
        auto min_it = std::min_element(s.begin(), s.end());
        std::rotate(s.begin(), min_it, s.end());
        if (s[1] > s.back()) {
            std::reverse(s.begin() + 1, s.end());
        }
        return AugStruct{true, std::move(s)};
    }

    std::size_t edge_count() const { return cycle ? seq.size() : seq.size() - 1; }

    std::vector<EdgeRef> edges() const {
        std::vector<EdgeRef> out;
        out.reserve(edge_count());
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.emplace_back(seq[i], seq[i + 1]);
        if (cycle) out.emplace_back(seq.back(), seq.front());
        return out;
    }

    bool contains_vertex(Vertex v) const {
        return std::find(seq.begin(), seq.end(), v) != seq.end();
    }

    bool contains_edge(const EdgeRef& e) const {
        for (const auto& f : edges()) {
            if (f == e) return true;
        }
        return false;
    }

    friend bool operator==(const AugStruct& a, const AugStruct& b) = default;
    friend bool operator<(const AugStruct& a, const AugStruct& b) {
        if (a.seq != b.seq) return a.seq < b.seq;
        return a.cycle < b.cycle;
    }

    /// Injective numeric encoding: base-(n+1) digits [kind, v_1, ..., v_m]
    /// with kind 1 for paths and 2 for cycles. Used as the node ID by the
    /// coloring of intersection graphs.
    BigUint encode(std::uint32_t n) const {
        BigUint val(cycle ? 2u : 1u);
        for (Vertex v : seq) {
            val.mul_small(n + 1);
            val += BigUint(v);
        }
        return val;
    }

    std::string str() const {
        std::string s = cycle ? "cycle(" : "path(";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) s += "-";
            s += std::to_string(seq[i]);
        }
        return s + ")";
    }
};

} // namespace problocal
