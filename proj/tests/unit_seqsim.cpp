#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "problocal/brute.hpp"
#include "problocal/graph.hpp"
#include "problocal/linegraph.hpp"
#include "problocal/orientation.hpp"
#include "problocal/seqsim.hpp"
#include "problocal/views.hpp"

using namespace problocal;

namespace {

// Assembled rank order of the base graph: a linear extension of the
// color-induced orientation, with tie-breaks shuffled by the seed (equal
// colors never sit on an edge, so any tie-break is a valid extension).
std::vector<Vertex> linear_extension(const LabeledGraph& g, std::uint64_t seed) {
    ProbeSession s = ProbeSession::untracked();
    BaseView view(g, s);
    ColorOracle<BaseView> colors(view);
    std::vector<Vertex> order(g.vertex_count());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) order[v - 1] = v;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return colors.color(a) < colors.color(b);
    });
    return order;
}

std::map<Vertex, std::vector<Vertex>> adjacency_of(const LabeledGraph& g) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) adj[v] = g.port_list(v);
    return adj;
}

} // namespace

TEST_CASE("simulate() equals the sequential run under a linear extension") {
    for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
        auto g = make_random_bounded(30, 4, 45, seed);
        auto adj = adjacency_of(g);
        auto order = linear_extension(g, seed * 7 + 1);

        auto seq_mis = run_sequential<Vertex, char>(
            order, adj, std::function<char(const std::vector<char>&)>([](const auto& d) {
                return static_cast<char>(mis_rule(d));
            }));
        auto seq_color = run_sequential<Vertex, std::uint32_t>(
            order, adj,
            std::function<std::uint32_t(const std::vector<std::uint32_t>&)>(first_fit_rule));

        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            ProbeSession s1 = ProbeSession::for_vertex(v);
            CHECK(l_mis(g, s1, v) == (seq_mis.at(v) != 0));
            ProbeSession s2 = ProbeSession::for_vertex(v);
            CHECK(l_color_greedy(g, s2, v) == seq_color.at(v));
        }
    }
}

TEST_CASE("two linear extensions give identical sequential outputs") {
    auto g = make_random_bounded(40, 4, 70, 99);
    auto adj = adjacency_of(g);
    auto a = run_sequential<Vertex, char>(
        linear_extension(g, 1), adj,
        std::function<char(const std::vector<char>&)>(
            [](const auto& d) { return static_cast<char>(mis_rule(d)); }));
    auto b = run_sequential<Vertex, char>(
        linear_extension(g, 2), adj,
        std::function<char(const std::vector<char>&)>(
            [](const auto& d) { return static_cast<char>(mis_rule(d)); }));
    CHECK(a == b);
}

TEST_CASE("l_mis") {
    SUBCASE("isolated vertex is in the MIS") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}, {}});
        ProbeSession s = ProbeSession::for_vertex(3);
        CHECK(l_mis(g, s, 3));
    }
    SUBCASE("single edge: exactly one endpoint in") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}});
        ProbeSession s1 = ProbeSession::for_vertex(1);
        ProbeSession s2 = ProbeSession::for_vertex(2);
        CHECK((l_mis(g, s1, 1) ^ l_mis(g, s2, 2)));
    }
    SUBCASE("random degree-4 graphs: independent and maximal") {
        for (std::uint64_t seed = 40; seed < 44; ++seed) {
            auto g = make_random_bounded(60, 4, 110, seed);
            std::set<Vertex> members;
            for (Vertex v = 1; v <= g.vertex_count(); ++v) {
                ProbeSession s = ProbeSession::for_vertex(v);
                if (l_mis(g, s, v)) members.insert(v);
            }
            CHECK(is_maximal_independent_set(g, members));
        }
    }
}

TEST_CASE("l_mm") {
    SUBCASE("single edge is matched") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}});
        ProbeSession s = ProbeSession::for_edge(EdgeRef(1, 2));
        CHECK(l_mm(g, s, EdgeRef(1, 2)));
    }
    SUBCASE("path on three vertices: exactly one edge selected") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1, 3}, {2}});
        ProbeSession s1 = ProbeSession::for_edge(EdgeRef(1, 2));
        ProbeSession s2 = ProbeSession::for_edge(EdgeRef(2, 3));
        CHECK((l_mm(g, s1, EdgeRef(1, 2)) ^ l_mm(g, s2, EdgeRef(2, 3))));
    }
    SUBCASE("non-edge query is an input error") {
        auto g = make_ring(5);
        ProbeSession s = ProbeSession::untracked();
        CHECK_THROWS_AS(l_mm(g, s, EdgeRef(1, 3)), InputError);
    }
    SUBCASE("random degree-4 graphs: matching and maximal") {
        for (std::uint64_t seed = 50; seed < 54; ++seed) {
            auto g = make_random_bounded(60, 4, 110, seed);
            std::set<EdgeRef> members;
            for (const auto& e : g.edges()) {
                ProbeSession s = ProbeSession::for_edge(e);
                if (l_mm(g, s, e)) members.insert(e);
            }
            CHECK(is_maximal_matching(g, members));
        }
    }
    SUBCASE("line-graph answers equal the sequential run on the line graph") {
        auto g = make_random_bounded(20, 4, 32, 77);
        ProbeSession sweep = ProbeSession::untracked();
        LineGraphView lv(g, sweep);
        ColorOracle<LineGraphView> colors(lv);

        std::map<EdgeRef, std::vector<EdgeRef>> adj;
        for (const auto& e : g.edges()) adj[e] = lv.incident(e);
        std::vector<EdgeRef> order = g.edges();
        std::stable_sort(order.begin(), order.end(), [&](const EdgeRef& a, const EdgeRef& b) {
            return colors.color(a) < colors.color(b);
        });
        auto seq = run_sequential<EdgeRef, char>(
            order, adj, std::function<char(const std::vector<char>&)>([](const auto& d) {
                return static_cast<char>(mis_rule(d));
            }));
        for (const auto& e : g.edges()) {
            ProbeSession s = ProbeSession::for_edge(e);
            CHECK(l_mm(g, s, e) == (seq.at(e) != 0));
        }
    }
}

TEST_CASE("first-fit coloring stays within max degree + 1") {
    SUBCASE("isolated vertex gets color 1") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}, {}});
        ProbeSession s = ProbeSession::for_vertex(3);
        CHECK(l_color_greedy(g, s, 3) == 1);
    }
    SUBCASE("single edge colors are {1, 2}") {
        LabeledGraph g(std::vector<std::vector<Vertex>>{{2}, {1}});
        ProbeSession s1 = ProbeSession::for_vertex(1);
        ProbeSession s2 = ProbeSession::for_vertex(2);
        std::set<std::uint32_t> got{l_color_greedy(g, s1, 1), l_color_greedy(g, s2, 2)};
        CHECK(got == std::set<std::uint32_t>{1, 2});
    }
    SUBCASE("random 3-regular n=100: proper within 4 colors") {
        auto g = make_random_regular(100, 3, 31);
        std::map<Vertex, std::string> colors;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            ProbeSession s = ProbeSession::for_vertex(v);
            std::uint32_t c = l_color_greedy(g, s, v);
            CHECK(c >= 1);
            CHECK(c <= 4);
            colors[v] = std::to_string(c);
        }
        CHECK_FALSE(improper_edge(g, colors).has_value());
    }
}

TEST_CASE("l_mis probe radius obeys the coloring-radius + rad bound") {
    for (std::uint64_t seed = 60; seed < 63; ++seed) {
        auto g = make_random_bounded(40, 4, 70, seed);
        std::uint32_t color_radius = 0;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            ProbeSession s = ProbeSession::for_vertex(v);
            BaseView view(g, s);
            ColorOracle<BaseView> colors(view);
            colors.color(v);
            color_radius = std::max(color_radius, s.radius());
        }
        std::uint32_t rad = verify_orientation_bounds(g).rad;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            ProbeSession s = ProbeSession::for_vertex(v);
            l_mis(g, s, v);
            CHECK(s.radius() <= color_radius + rad);
        }
    }
}
