#include "problocal/brute.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "problocal/errors.hpp"

namespace problocal {

namespace {

void check_edge_budget(const LabeledGraph& g, const char* what) {
    if (g.edge_count() > kBruteEdgeBudget) {
        throw BudgetError(std::string(what) + ": instance has " +
                          std::to_string(g.edge_count()) + " edges, budget is " +
                          std::to_string(kBruteEdgeBudget));
    }
}

// Enumerates matchings by include/exclude over the edge list, skipping
// extensions that clash with used vertices.
template <class Visit>
void enumerate_matchings(const std::vector<EdgeRef>& edges, Visit&& visit) {
    std::vector<char> used_vertex(1 << 16, 0); // vertex ids at brute scale are small
    std::vector<EdgeRef> current;
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
        visit(current);
        for (std::size_t i = idx; i < edges.size(); ++i) {
            const EdgeRef& e = edges[i];
            if (used_vertex[e.u] || used_vertex[e.v]) continue;
            used_vertex[e.u] = used_vertex[e.v] = 1;
            current.push_back(e);
            go(i + 1);
            current.pop_back();
            used_vertex[e.u] = used_vertex[e.v] = 0;
        }
    };
    go(0);
}

} // namespace

std::uint64_t brute_max_matching_size(const LabeledGraph& g) {
    check_edge_budget(g, "brute max matching");
    std::uint64_t best = 0;
    enumerate_matchings(g.edges(), [&](const std::vector<EdgeRef>& m) {
        best = std::max<std::uint64_t>(best, m.size());
    });
    return best;
}

Rational brute_max_matching_weight(const LabeledGraph& g,
                                   const std::map<EdgeRef, Rational>& weights) {
    check_edge_budget(g, "brute max weight matching");
    Rational best(0);
    enumerate_matchings(g.edges(), [&](const std::vector<EdgeRef>& m) {
        Rational total(0);
        for (const auto& e : m) total = total + weights.at(e);
        if (best < total) best = total;
    });
    return best;
}

std::int64_t brute_max_matching_units(const LabeledGraph& g,
                                      const std::map<EdgeRef, std::int64_t>& units) {
    check_edge_budget(g, "brute max weight matching");
    std::int64_t best = 0;
    std::vector<EdgeRef> alive;
    for (const auto& e : g.edges()) {
        if (units.count(e)) alive.push_back(e);
    }
    enumerate_matchings(alive, [&](const std::vector<EdgeRef>& m) {
        std::int64_t total = 0;
        for (const auto& e : m) total += units.at(e);
        best = std::max(best, total);
    });
    return best;
}

std::optional<std::uint32_t> shortest_augmenting_path_length(const LabeledGraph& g,
                                                             const std::set<EdgeRef>& matching) {
    check_edge_budget(g, "shortest augmenting path search");
    std::set<Vertex> matched;
    for (const auto& e : matching) {
        matched.insert(e.u);
        matched.insert(e.v);
    }
    std::optional<std::uint32_t> best;
    std::vector<char> used(g.vertex_count() + 1, 0);

    // Alternating DFS: edge at (1-based) position j is non-matching iff j odd;
    // a free vertex reached after an odd number of edges closes a path.
    std::function<void(Vertex, std::uint32_t, bool)> walk = [&](Vertex v, std::uint32_t len,
                                                                bool next_in_matching) {
        if (best && len >= *best) return;
        for (Vertex w : g.port_list(v)) {
            EdgeRef e(v, w);
            if (used[w]) continue;
            if ((matching.count(e) != 0) != next_in_matching) continue;
            if (!next_in_matching && !matched.count(w)) {
                if (!best || len + 1 < *best) best = len + 1;
                continue;
            }
            used[w] = 1;
            walk(w, len + 1, !next_in_matching);
            used[w] = 0;
        }
    };
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (matched.count(v)) continue; // paths start at a free vertex
        std::fill(used.begin(), used.end(), 0);
        used[v] = 1;
        walk(v, 0, false);
    }
    return best;
}

std::int64_t brute_max_gain_set_units(std::uint32_t n, const std::vector<AugStruct>& nodes,
                                      const std::map<AugStruct, std::int64_t>& gains) {
    if (n > kBruteVertexBudget) {
        throw BudgetError("brute max gain set: " + std::to_string(n) + " vertices, budget is " +
                          std::to_string(kBruteVertexBudget));
    }
    struct Entry {
        std::uint32_t mask;
        std::int64_t gain;
    };
    // Structures bucketed by their lowest vertex.
    std::vector<std::vector<Entry>> by_lowest(n + 1);
    for (const auto& p : nodes) {
        std::uint32_t mask = 0;
        Vertex lowest = p.seq.front();
        for (Vertex v : p.seq) {
            mask |= 1u << (v - 1);
            lowest = std::min(lowest, v);
        }
        by_lowest[lowest].push_back(Entry{mask, gains.at(p)});
    }
    std::vector<std::int64_t> memo(1ull << n, INT64_MIN);
    std::function<std::int64_t(std::uint32_t)> best = [&](std::uint32_t avail) -> std::int64_t {
        if (avail == 0) return 0;
        if (memo[avail] != INT64_MIN) return memo[avail];
        std::uint32_t low_bit = avail & (~avail + 1);
        Vertex x = static_cast<Vertex>(__builtin_ctz(avail) + 1);
        std::int64_t out = best(avail & ~low_bit); // leave x uncovered
        for (const Entry& entry : by_lowest[x]) {
            if ((entry.mask & avail) != entry.mask) continue;
            out = std::max(out, entry.gain + best(avail & ~entry.mask));
        }
        memo[avail] = out;
        return out;
    };
    return best(static_cast<std::uint32_t>((1ull << n) - 1));
}

bool is_matching(const LabeledGraph& g, const std::set<EdgeRef>& m) {
    std::set<Vertex> used;
    for (const auto& e : m) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
    }
    return true;
}

bool is_maximal_matching(const LabeledGraph& g, const std::set<EdgeRef>& m) {
    if (!is_matching(g, m)) return false;
    std::set<Vertex> used;
    for (const auto& e : m) {
        used.insert(e.u);
        used.insert(e.v);
    }
    for (const auto& e : g.edges()) {
        if (!used.count(e.u) && !used.count(e.v)) return false;
    }
    return true;
}

bool is_independent_set(const LabeledGraph& g, const std::set<Vertex>& s) {
    for (Vertex v : s) {
        for (Vertex u : g.port_list(v)) {
            if (u > v && s.count(u)) return false;
        }
    }
    return true;
}

bool is_maximal_independent_set(const LabeledGraph& g, const std::set<Vertex>& s) {
    if (!is_independent_set(g, s)) return false;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (s.count(v)) continue;
        bool blocked = false;
        for (Vertex u : g.port_list(v)) {
            if (s.count(u)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return false;
    }
    return true;
}

std::optional<EdgeRef> improper_edge(const LabeledGraph& g,
                                     const std::map<Vertex, std::string>& color_by_vertex) {
    for (const auto& e : g.edges()) {
        if (color_by_vertex.at(e.u) == color_by_vertex.at(e.v)) return e;
    }
    return std::nullopt;
}

std::set<Vertex> reference_ball(const LabeledGraph& g, Vertex center, std::uint32_t r) {
    std::set<Vertex> seen{center};
    std::deque<std::pair<Vertex, std::uint32_t>> queue{{center, 0}};
    while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (d == r) continue;
        for (Vertex u : g.port_list(v)) {
            if (seen.insert(u).second) queue.emplace_back(u, d + 1);
        }
    }
    return seen;
}

} // namespace problocal
