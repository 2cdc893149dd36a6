#include "problocal/seqsim.hpp"

#include <algorithm>

#include "problocal/linegraph.hpp"
#include "problocal/orientation.hpp"
#include "problocal/views.hpp"

namespace problocal {

namespace {

template <class View>
auto color_rank(ColorOracle<View>& colors) {
    return [&colors](const typename View::Node& v) { return colors.color(v); };
}

} // namespace

bool l_mis(const LabeledGraph& g, ProbeSession& s, Vertex v) {
    g.check_vertex(v);
    BaseView view(g, s);
    ColorOracle<BaseView> colors(view);
    SeqSimulator<BaseView, decltype(color_rank(colors)), char> sim(view, color_rank(colors),
                                                                   mis_rule);
    return sim.simulate(v) != 0;
}

std::uint32_t l_color_greedy(const LabeledGraph& g, ProbeSession& s, Vertex v) {
    g.check_vertex(v);
    BaseView view(g, s);
    ColorOracle<BaseView> colors(view);
    SeqSimulator<BaseView, decltype(color_rank(colors)), std::uint32_t> sim(
        view, color_rank(colors), first_fit_rule);
    return sim.simulate(v);
}

bool l_mm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e) {
    if (!g.has_edge(e.u, e.v)) throw InputError("not an edge: " + e.str());
    LineGraphView view(g, s);
    ColorOracle<LineGraphView> colors(view);
    SeqSimulator<LineGraphView, decltype(color_rank(colors)), char> sim(view, color_rank(colors),
                                                                        mis_rule);
    return sim.simulate(e) != 0;
}

OrientedEdge orient_edge(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e) {
    if (!g.has_edge(e.u, e.v)) throw InputError("not an edge: " + e.str());
    BaseView view(g, s);
    ColorOracle<BaseView> colors(view);
    OrientOracle<BaseView> orient(colors);
    if (orient.directed_from(e.u, e.v)) return OrientedEdge{e.u, e.v};
    return OrientedEdge{e.v, e.u};
}

ReachStats verify_orientation_bounds(const LabeledGraph& g) {
    const std::uint32_t n = g.vertex_count();
    ProbeSession session = ProbeSession::untracked();
    BaseView view(g, session);
    ColorOracle<BaseView> colors(view);
    OrientOracle<BaseView> orient(colors);

    // Assemble the digraph: out_adj[v] in port order.
    std::vector<std::vector<Vertex>> out_adj(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex u : g.port_list(v)) {
            if (orient.directed_from(v, u)) out_adj[v].push_back(u);
        }
    }

    // Ascending color order is a topological order of the reversed digraph:
    // every edge points from larger color to smaller.
    std::vector<Vertex> order(n);
    for (Vertex v = 1; v <= n; ++v) order[v - 1] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return colors.color(a) < colors.color(b);
    });

    ReachStats stats;
    stats.palette = colors.plan().numeric_pipeline ? colors.plan().final_palette
                                                   : colors.plan().combined_palette;
    std::vector<std::uint32_t> longest(n + 1, 0);
    for (Vertex v : order) { // out-neighbors have smaller colors, already done
        for (Vertex u : out_adj[v]) {
            longest[v] = std::max(longest[v], longest[u] + 1);
        }
        stats.rad = std::max(stats.rad, longest[v]);
    }

    stats.reach_sizes.assign(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<char> seen(n + 1, 0);
        std::vector<Vertex> stack{v};
        seen[v] = 1;
        std::uint64_t count = 0;
        while (!stack.empty()) {
            Vertex cur = stack.back();
            stack.pop_back();
            ++count;
            for (Vertex u : out_adj[cur]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        stats.reach_sizes[v] = count;
        stats.reach = std::max(stats.reach, count);
    }

    // rad <= palette - 1: directed paths descend strictly through the palette.
    BigUint palette_minus_1 = stats.palette;
    palette_minus_1 -= BigUint(1);
    if (BigUint(stats.rad) > palette_minus_1) {
        throw VerificationError("orientation radius " + std::to_string(stats.rad) +
                                " exceeds palette-1 = " + palette_minus_1.to_decimal());
    }

    // reach(v) <= 1 + Delta * sum_{i=1..rad} (Delta-1)^(i-1), saturating.
    const std::uint64_t delta = g.max_degree();
    std::uint64_t bound = 1;
    if (delta > 0) {
        std::uint64_t term = 1; // (Delta-1)^(i-1), i starting at 1
        for (std::uint32_t i = 1; i <= stats.rad; ++i) {
            std::uint64_t add = delta;
            if (term > UINT64_MAX / delta) {
                bound = UINT64_MAX;
                break;
            }
            add = delta * term;
            if (bound > UINT64_MAX - add) {
                bound = UINT64_MAX;
                break;
            }
            bound += add;
            if (delta >= 2 && term > UINT64_MAX / (delta - 1)) {
                bound = UINT64_MAX;
                break;
            }
            term = delta >= 2 ? term * (delta - 1) : 0;
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (stats.reach_sizes[v] > bound) {
            throw VerificationError("reachability bound violated at vertex " + std::to_string(v) +
                                    ": reach " + std::to_string(stats.reach_sizes[v]) +
                                    " > bound " + std::to_string(bound));
        }
    }
    return stats;
}

} // namespace problocal
