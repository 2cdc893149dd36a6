#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "problocal/graph.hpp"
#include "problocal/orientation.hpp"
#include "problocal/probe.hpp"
#include "problocal/views.hpp"

using namespace problocal;

TEST_CASE("orient_edge") {
    SUBCASE("single edge direction is forced by the colors") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}});
        ProbeSession s = ProbeSession::for_edge(EdgeRef(1, 2));
        OrientedEdge oe = orient_edge(g, s, EdgeRef(1, 2));
        ProbeSession s2 = ProbeSession::untracked();
        BaseView view(g, s2);
        ColorOracle<BaseView> colors(view);
        bool one_bigger = colors.color(1u) > colors.color(2u);
        CHECK(oe.tail == (one_bigger ? 1u : 2u));
        CHECK(oe.head == (one_bigger ? 2u : 1u));
    }
    SUBCASE("repeated queries give identical directions") {
        auto g = make_random_regular(18, 3, 4);
        for (const auto& e : g.edges()) {
            ProbeSession s1 = ProbeSession::for_edge(e);
            ProbeSession s2 = ProbeSession::for_edge(e);
            OrientedEdge a = orient_edge(g, s1, e);
            OrientedEdge b = orient_edge(g, s2, e);
            CHECK(a.tail == b.tail);
            CHECK(a.head == b.head);
        }
    }
    SUBCASE("non-edge is an input error") {
        auto g = make_ring(6);
        ProbeSession s = ProbeSession::untracked();
        CHECK_THROWS_AS(orient_edge(g, s, EdgeRef(1, 4)), InputError);
    }
    SUBCASE("assembled 30-ring digraph is acyclic") {
        auto g = make_ring(30);
        // verify_orientation_bounds assembles the digraph and computes rad by
        // DAG programming; it would loop forever or throw on a cycle.
        ReachStats stats = verify_orientation_bounds(g);
        CHECK(stats.rad >= 1);
    }
}

TEST_CASE("reach_set") {
    auto g = make_ring(20);
    ProbeSession sweep = ProbeSession::untracked();
    BaseView view(g, sweep);
    ColorOracle<BaseView> colors(view);
    OrientOracle<BaseView> orient(colors);

    std::map<Vertex, std::vector<Vertex>> out_adj;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        for (Vertex u : g.port_list(v)) {
            if (orient.directed_from(v, u)) out_adj[v].push_back(u);
        }
    }
    auto reference_reach = [&](Vertex v) {
        std::set<Vertex> seen{v};
        std::vector<Vertex> stack{v};
        while (!stack.empty()) {
            Vertex cur = stack.back();
            stack.pop_back();
            for (Vertex u : out_adj[cur]) {
                if (seen.insert(u).second) stack.push_back(u);
            }
        }
        return seen;
    };

    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        ProbeSession s = ProbeSession::for_vertex(v);
        BaseView qview(g, s);
        ColorOracle<BaseView> qcolors(qview);
        OrientOracle<BaseView> qorient(qcolors);
        CHECK(qorient.reach_set(v) == reference_reach(v));
        if (out_adj[v].empty()) {
            CHECK(qorient.reach_set(v) == std::set<Vertex>{v}); // local color minimum
        }
    }

    SUBCASE("single edge: tail reaches both, head only itself") {
        LabeledGraph g2(std::vector<std::vector<Vertex>>{{2}, {1}});
        ProbeSession s = ProbeSession::for_edge(EdgeRef(1, 2));
        OrientedEdge oe = orient_edge(g2, s, EdgeRef(1, 2));
        ProbeSession st = ProbeSession::for_vertex(oe.tail);
        BaseView vt(g2, st);
        ColorOracle<BaseView> ct(vt);
        OrientOracle<BaseView> ot(ct);
        CHECK(ot.reach_set(oe.tail) == std::set<Vertex>{1, 2});
        ProbeSession sh = ProbeSession::for_vertex(oe.head);
        BaseView vh(g2, sh);
        ColorOracle<BaseView> ch(vh);
        OrientOracle<BaseView> oh(ch);
        CHECK(oh.reach_set(oe.head) == std::set<Vertex>{oe.head});
    }
}

TEST_CASE("radius and reachability bounds") {
    SUBCASE("single edge: rad 1, reach 2 within 1 + Delta") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}});
        ReachStats stats = verify_orientation_bounds(g);
        CHECK(stats.rad == 1);
        CHECK(stats.reach == 2);
    }
    SUBCASE("rings satisfy reach <= 2 rad + 1") {
        for (std::uint32_t n : {10u, 37u, 100u}) {
            ReachStats stats = verify_orientation_bounds(make_ring(n));
            CHECK(stats.reach <= 2 * stats.rad + 1);
            CHECK(BigUint(stats.rad) <= stats.palette - BigUint(1));
        }
    }
    SUBCASE("random 3-regular n=100 satisfies the degree bound exactly") {
        auto g = make_random_regular(100, 3, 8);
        ReachStats stats = verify_orientation_bounds(g);
        // 1 + 3 * sum_{i=1..rad} 2^(i-1) = 1 + 3 (2^rad - 1).
        long double bound = 1.0L + 3.0L * (std::pow(2.0L, stats.rad) - 1);
        CHECK(static_cast<long double>(stats.reach) <= bound);
        CHECK(BigUint(stats.rad) <= stats.palette - BigUint(1));
    }
    SUBCASE("grids (Delta=4) pass the checks") {
        verify_orientation_bounds(make_grid(5, 8));
    }
}
