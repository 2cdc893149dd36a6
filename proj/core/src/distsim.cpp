#include "problocal/distsim.hpp"

#include "problocal/coloring.hpp"
#include "problocal/mcm.hpp"
#include "problocal/mwm.hpp"
#include "problocal/orientation.hpp"
#include "problocal/seqsim.hpp"
#include "problocal/views.hpp"

namespace problocal {

NodeLocalInput local_input_of(const LabeledGraph& g, Vertex v) {
    NodeLocalInput in;
    in.id = v;
    in.degree = g.degree(v);
    in.n = g.vertex_count();
    in.max_degree = g.max_degree();
    for (Vertex u : g.port_list(v)) in.ports.emplace_back(u, g.port_towards(u, v));
    return in;
}

BallKnowledge collect_knowledge(const LabeledGraph& g, Vertex v, std::uint32_t r) {
    ProbeSession s = ProbeSession::for_vertex(v);
    Ball ball = collect_ball(g, s, v, r);
    BallKnowledge knowledge;
    for (const auto& [u, list] : ball.ports) {
        VertexRecord rec;
        rec.reserve(list.size());
        for (Vertex w : list) rec.emplace_back(w, g.port_towards(w, u));
        knowledge.emplace(u, std::move(rec));
    }
    return knowledge;
}

namespace {

struct QueryPlan {
    std::vector<Vertex> vertices;      // vertex queries
    std::vector<EdgeRef> edges;        // edge queries (computed at smaller endpoint)
};

ProbeSession session_for(const DistAlgorithm& alg, Vertex v) {
    return ProbeSession::for_vertex(v);
}

ProbeSession session_for_edge(const EdgeRef& e) {
    // Distances from the computing endpoint: e.u runs the query, e.v is one
    // hop away, so the measured radius equals the collection radius e.u needs.
    ProbeSession s;
    s.seed(e.u, 0);
    s.seed(e.v, 1);
    return s;
}

} // namespace

DistResult simulate_distributed(const LabeledGraph& g, const DistAlgorithm& alg,
                                std::optional<std::uint32_t> forced_rounds,
                                std::size_t engine_budget) {
    const std::uint32_t n = g.vertex_count();
    DistResult result;

    // Dry run: direct answers plus the measured probe radius.
    std::uint32_t radius = 0;
    std::map<Vertex, std::string> direct_vertex;
    std::map<EdgeRef, std::string> direct_edge;
    if (alg.edge_query) {
        for (const auto& e : g.edges()) {
            ProbeSession s = session_for_edge(e);
            direct_edge[e] = alg.edge_fn(g, s, e);
            radius = std::max(radius, s.radius());
        }
    } else {
        for (Vertex v = 1; v <= n; ++v) {
            ProbeSession s = session_for(alg, v);
            direct_vertex[v] = alg.vertex_fn(g, s, v);
            radius = std::max(radius, s.radius());
        }
    }
    result.rounds = forced_rounds.value_or(radius);

    // Ball collection: the real message-passing engine when affordable, the
    // probe-based closed form (differentially tested against it) otherwise.
    std::map<Vertex, BallKnowledge> knowledge;
    const std::size_t engine_cost =
        static_cast<std::size_t>(n) * (result.rounds + 1) * (g.max_degree() + 1);
    if (engine_cost <= engine_budget) {
        BallCollectionProgram prog;
        auto run = run_rounds(g, prog, result.rounds);
        knowledge = std::move(run.outputs);
        result.used_message_engine = true;
        for (std::uint64_t u : run.message_units) {
            result.max_message_units = std::max(result.max_message_units, u);
        }
    } else {
        for (Vertex v = 1; v <= n; ++v) knowledge[v] = collect_knowledge(g, v, result.rounds);
    }

    // Local re-execution against the collected ball only; outputs must equal
    // the direct answers exactly.
    auto allowed_of = [&](Vertex v) {
        std::set<Vertex> allowed;
        for (const auto& [u, rec] : knowledge.at(v)) allowed.insert(u);
        return allowed;
    };
    if (alg.edge_query) {
        for (const auto& e : g.edges()) {
            std::set<Vertex> allowed = allowed_of(e.u);
            ProbeSession s = session_for_edge(e);
            s.restrict_to(&allowed);
            std::string out = alg.edge_fn(g, s, e);
            if (out != direct_edge.at(e)) {
                throw VerificationError("distributed output diverges from direct run at edge " +
                                        e.str());
            }
            result.edge_outputs[e] = std::move(out);
        }
    } else {
        for (Vertex v = 1; v <= n; ++v) {
            std::set<Vertex> allowed = allowed_of(v);
            ProbeSession s = session_for(alg, v);
            s.restrict_to(&allowed);
            std::string out = alg.vertex_fn(g, s, v);
            if (out != direct_vertex.at(v)) {
                throw VerificationError("distributed output diverges from direct run at vertex " +
                                        std::to_string(v));
            }
            result.vertex_outputs[v] = std::move(out);
        }
    }
    return result;
}

DistAlgorithm dist_alg_mis() {
    DistAlgorithm alg;
    alg.name = "mis";
    alg.vertex_fn = [](const LabeledGraph& g, ProbeSession& s, Vertex v) {
        return l_mis(g, s, v) ? std::string("1") : std::string("0");
    };
    return alg;
}

DistAlgorithm dist_alg_mm() {
    DistAlgorithm alg;
    alg.name = "mm";
    alg.edge_query = true;
    alg.edge_fn = [](const LabeledGraph& g, ProbeSession& s, const EdgeRef& e) {
        return l_mm(g, s, e) ? std::string("1") : std::string("0");
    };
    return alg;
}

DistAlgorithm dist_alg_color() {
    DistAlgorithm alg;
    alg.name = "color";
    alg.vertex_fn = [](const LabeledGraph& g, ProbeSession& s, Vertex v) {
        BaseView view(g, s);
        ColorOracle<BaseView> colors(view);
        return colors.color(v).str();
    };
    return alg;
}

DistAlgorithm dist_alg_color_greedy() {
    DistAlgorithm alg;
    alg.name = "color-seq";
    alg.vertex_fn = [](const LabeledGraph& g, ProbeSession& s, Vertex v) {
        return std::to_string(l_color_greedy(g, s, v));
    };
    return alg;
}

DistAlgorithm dist_alg_orient() {
    DistAlgorithm alg;
    alg.name = "orient";
    alg.edge_query = true;
    alg.edge_fn = [](const LabeledGraph& g, ProbeSession& s, const EdgeRef& e) {
        OrientedEdge oe = orient_edge(g, s, e);
        return std::to_string(oe.tail) + ">" + std::to_string(oe.head);
    };
    return alg;
}

DistAlgorithm dist_alg_mcm(const Rational& eps) {
    DistAlgorithm alg;
    alg.name = "mcm";
    alg.edge_query = true;
    alg.edge_fn = [eps](const LabeledGraph& g, ProbeSession& s, const EdgeRef& e) {
        return apx_mcm(g, s, e, eps) ? std::string("1") : std::string("0");
    };
    return alg;
}

DistAlgorithm dist_alg_mwm(const Rational& eps, const LabeledGraph& g) {
    DistAlgorithm alg;
    alg.name = "mwm";
    alg.edge_query = true;
    // The normalization baseline (max edge weight) is part of the model's
    // known globals, so the rounded-weight table is precomputed once.
    auto setup = std::make_shared<MwmSetup>(preprocess_weights(g, eps));
    alg.edge_fn = [setup](const LabeledGraph& graph, ProbeSession& s, const EdgeRef& e) {
        return apx_mwm(graph, s, e, *setup) ? std::string("1") : std::string("0");
    };
    return alg;
}

} // namespace problocal
