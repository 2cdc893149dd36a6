#include <doctest.h>

#include <sstream>
#include <thread>

#include "problocal/biguint.hpp"
#include "problocal/brute.hpp"
#include "problocal/errors.hpp"
#include "problocal/graph.hpp"
#include "problocal/probe.hpp"
#include "problocal/rational.hpp"

using namespace problocal;

TEST_CASE("biguint arithmetic") {
    BigUint a = BigUint::pow(3, 40);
    CHECK(a.to_decimal() == "12157665459056928801");
    BigUint b = a;
    b += a;
    b -= a;
    CHECK(b == a);
    CHECK(BigUint::pow(2, 64) > BigUint(UINT64_MAX));
    auto digits = BigUint(5 * 49 + 12).digits(49, 2);
    CHECK(digits[0] == 12);
    CHECK(digits[1] == 5);
    CHECK(BigUint::from_decimal("340282366920938463463374607431768211456") ==
          BigUint::pow(2, 128));
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 4) < Rational(1));
    CHECK(ceil_log2(Rational(1)) == 0);
    CHECK(ceil_log2(Rational(3, 4)) == 0);
    CHECK(ceil_log2(Rational(3, 2)) == 1);
    CHECK(ceil_log2(Rational(1, 8)) == -3);
    CHECK(ceil_log2(Rational(5)) == 3);
}

TEST_CASE("generators satisfy the graph invariants") {
    auto ring = make_ring(3);
    CHECK(ring.vertex_count() == 3);
    CHECK(ring.edge_count() == 3);
    CHECK(ring.max_degree() == 2);

    auto grid = make_grid(2, 2);
    CHECK(grid.vertex_count() == 4);
    CHECK(grid.edge_count() == 4);

    auto a = make_random_regular(10, 3, 1);
    auto b = make_random_regular(10, 3, 1);
    std::ostringstream sa, sb;
    write_graph(a, sa);
    write_graph(b, sb);
    CHECK(sa.str() == sb.str()); // deterministic in the seed

    CHECK_THROWS_AS(make_random_regular(5, 3, 1), InputError); // odd degree sum
    CHECK_THROWS_AS(make_random_regular(4, 4, 1), InputError);
}

TEST_CASE("probe answers and accounting") {
    // Single edge {1,2}.
    LabeledGraph g({{2}, {1}});
    ProbeSession s = ProbeSession::for_vertex(1);

    auto a = probe(g, s, 1, 1);
    REQUIRE(a.has_value());
    CHECK(a->neighbor == 2);
    CHECK(a->reciprocal == 1);

    CHECK_FALSE(probe(g, s, 1, 2).has_value()); // deg < port: null
    CHECK_THROWS_AS(probe(g, s, 7, 1), InputError);

    CHECK(s.probe_count() == 2);
    auto again = probe(g, s, 1, 1); // cached: counted once
    CHECK(again->neighbor == 2);
    CHECK(s.probe_count() == 2);

    ProbeSession strict = ProbeSession::for_vertex(1);
    strict.set_cache_enabled(false);
    probe(g, strict, 1, 1);
    probe(g, strict, 1, 1);
    CHECK(strict.probe_count() == 2);
}

TEST_CASE("ring probe wiring") {
    auto g = make_ring(3);
    ProbeSession s = ProbeSession::for_vertex(2);
    // Vertex 2's ports are sorted by ID: port 1 -> 1, port 2 -> 3.
    auto a = probe(g, s, 2, 2);
    REQUIRE(a.has_value());
    CHECK(a->neighbor == 3);
    CHECK(g.port_list(3)[a->reciprocal - 1] == 2);
}

TEST_CASE("collect_ball matches the reference BFS ball") {
    SUBCASE("radius 0") {
        auto g = make_ring(5);
        ProbeSession s = ProbeSession::for_vertex(3);
        Ball b = collect_ball(g, s, 3, 0);
        CHECK(b.dist.size() == 1);
        CHECK(b.edges_inside().empty());
    }
    SUBCASE("ring radius 2 is a 5-vertex path") {
        auto g = make_ring(10);
        ProbeSession s = ProbeSession::for_vertex(4);
        Ball b = collect_ball(g, s, 4, 2);
        CHECK(b.dist.size() == 5);
        CHECK(b.edges_inside().size() == 4);
        CHECK(s.radius() <= 2);
    }
    SUBCASE("random degree-3 graphs vs direct BFS") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto g = make_random_regular(16, 3, seed + 10);
            for (Vertex v = 1; v <= g.vertex_count(); v += 3) {
                for (std::uint32_t r = 0; r <= 3; ++r) {
                    ProbeSession s = ProbeSession::for_vertex(v);
                    Ball b = collect_ball(g, s, v, r);
                    auto ref = reference_ball(g, v, r);
                    std::set<Vertex> got;
                    for (const auto& [u, d] : b.dist) got.insert(u);
                    CHECK(got == ref);
                }
            }
        }
    }
}

TEST_CASE("graph file round trip and parse errors") {
    auto g = with_random_weights(make_grid(2, 3), 7);
    std::ostringstream out;
    write_graph(g, out);
    std::istringstream in(out.str());
    auto g2 = read_graph(in);
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edge_count() == g.edge_count());
    CHECK(g2.weights() == g.weights());

    auto expect_parse_error = [](const std::string& text, std::size_t line) {
        std::istringstream bad(text);
        try {
            read_graph(bad);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_parse_error("2 1\n1: 2\n1: 1\n", 3);         // bad vertex label
    expect_parse_error("2 1\n1: 2\n2: 1 x\n", 3);       // bad token
    expect_parse_error("2 2\n1: 2\n2: 1\n", 1);         // edge count mismatch
    expect_parse_error("2 1\n1: 2\n2: 1\nweights:\n1 2 0.5 9\n", 5);

    // Reciprocity violations are input errors at construction.
    using Ports = std::vector<std::vector<Vertex>>;
    CHECK_THROWS_AS(LabeledGraph(Ports{{2}, {}}), InputError);
    CHECK_THROWS_AS(LabeledGraph(Ports{{2, 2}, {1, 1}}), InputError);
    CHECK_THROWS_AS(LabeledGraph(Ports{{1}}), InputError); // self loop
}

TEST_CASE("parallel sessions on a shared graph agree with serial answers") {
    auto g = make_random_regular(60, 3, 3);
    std::vector<std::optional<ProbeAnswer>> serial(g.vertex_count());
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        ProbeSession s = ProbeSession::for_vertex(v);
        serial[v - 1] = probe(g, s, v, 2);
    }
    std::vector<std::optional<ProbeAnswer>> parallel(g.vertex_count());
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t]() {
            for (Vertex v = t + 1; v <= g.vertex_count(); v += 4) {
                ProbeSession s = ProbeSession::for_vertex(v);
                parallel[v - 1] = probe(g, s, v, 2);
            }
        });
    }
    for (auto& th : threads) th.join();
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        REQUIRE(parallel[v - 1].has_value());
        CHECK(parallel[v - 1]->neighbor == serial[v - 1]->neighbor);
    }
}
