#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "problocal/errors.hpp"
#include "problocal/graph.hpp"
#include "problocal/probe.hpp"
#include "problocal/rational.hpp"

namespace problocal {

/// Local input of a node: its ID, degree, the global n and max degree, and
/// its port list. Each port entry carries the neighbor's port back, mirroring
/// the probe answer format, so a collected ball answers any probe of its
/// vertices without an extra round.
struct NodeLocalInput {
    Vertex id = 0;
    std::uint32_t degree = 0;
    std::uint32_t n = 0;
    std::uint32_t max_degree = 0;
    std::vector<std::pair<Vertex, Port>> ports;
};

NodeLocalInput local_input_of(const LabeledGraph& g, Vertex v);

/// What a node knows about another vertex: that vertex's port list (with
/// reciprocal ports).
using VertexRecord = std::vector<std::pair<Vertex, Port>>;
using BallKnowledge = std::map<Vertex, VertexRecord>;

/// Per-run trace of the synchronous engine.
template <class Output>
struct ProgramRun {
    std::uint32_t rounds = 0;
    std::vector<std::uint64_t> message_units; // total payload units per round
    std::map<Vertex, Output> outputs;
};

/// Synchronous message-passing engine. Round t: every node builds one message
/// per port from its round-(t-1) state, then every node consumes the messages
/// arriving on its ports. Messages sent at the end of round t are received at
/// the beginning of round t+1; all nodes advance in lockstep. Node handlers
/// may be evaluated in any order within a round (the engine shuffles by
/// schedule_seed); the trace must not depend on it.
///
/// Program requirements:
///   using State = ...; using Message = ...; using Output = ...;
///   State init(const NodeLocalInput&);
///   Message message(const State&, Port port) const;
///   void receive(State&, const Message&) const;
///   Output output(const State&) const;
///   static std::uint64_t message_units(const Message&);
template <class Program>
ProgramRun<typename Program::Output> run_rounds(const LabeledGraph& g, const Program& prog,
                                                std::uint32_t rounds,
                                                std::uint64_t schedule_seed = 0);

/// The ball-collection program: each node floods everything it knows each
/// round; after r rounds a node knows the records of exactly B_r(v).
struct BallCollectionProgram {
    using State = BallKnowledge;
    using Message = BallKnowledge;
    using Output = BallKnowledge;

    State init(const NodeLocalInput& in) const {
        return {{in.id, in.ports}};
    }
    Message message(const State& s, Port) const { return s; }
    void receive(State& s, const Message& m) const {
        for (const auto& [v, rec] : m) s.emplace(v, rec);
    }
    Output output(const State& s) const { return s; }
    static std::uint64_t message_units(const Message& m) { return m.size(); }
};

/// Closed form of the ball-collection output (differentially tested against
/// the engine): the records of B_r(v), read through probes.
BallKnowledge collect_knowledge(const LabeledGraph& g, Vertex v, std::uint32_t r);

/// A stateless query algorithm packaged for distributed simulation. Vertex
/// algorithms output at every vertex; edge algorithms output at every edge,
/// computed by the smaller endpoint.
struct DistAlgorithm {
    std::string name;
    bool edge_query = false;
    std::function<std::string(const LabeledGraph&, ProbeSession&, Vertex)> vertex_fn;
    std::function<std::string(const LabeledGraph&, ProbeSession&, const EdgeRef&)> edge_fn;
};

struct DistResult {
    std::uint32_t rounds = 0; // ball-collection rounds = measured probe radius
    bool used_message_engine = false;
    std::uint64_t max_message_units = 0; // engine runs only
    std::map<Vertex, std::string> vertex_outputs;
    std::map<EdgeRef, std::string> edge_outputs;
};

/// Simulates a stateless query algorithm in the synchronous-round model:
/// (1) dry-runs every query to measure the probe radius r (for edge queries
/// distances are measured from the computing endpoint), (2) collects balls of
/// radius r = rounds, (3) re-runs every query against its collected ball only
/// and checks the answers match the direct run exactly. A forced round budget
/// below r raises RadiusViolation on instances where r is tight.
DistResult simulate_distributed(const LabeledGraph& g, const DistAlgorithm& alg,
                                std::optional<std::uint32_t> forced_rounds = std::nullopt,
                                std::size_t engine_budget = 2'000'000);

DistAlgorithm dist_alg_mis();
DistAlgorithm dist_alg_mm();
DistAlgorithm dist_alg_color();
DistAlgorithm dist_alg_color_greedy();
DistAlgorithm dist_alg_orient();
DistAlgorithm dist_alg_mcm(const Rational& eps);
DistAlgorithm dist_alg_mwm(const Rational& eps, const LabeledGraph& g);

// --- engine implementation ---

template <class Program>
ProgramRun<typename Program::Output> run_rounds(const LabeledGraph& g, const Program& prog,
                                                std::uint32_t rounds,
                                                std::uint64_t schedule_seed) {
    const std::uint32_t n = g.vertex_count();
    std::vector<typename Program::State> state(n + 1);
    for (Vertex v = 1; v <= n; ++v) state[v] = prog.init(local_input_of(g, v));

    ProgramRun<typename Program::Output> run;
    run.rounds = rounds;

    std::vector<Vertex> schedule(n);
    for (Vertex v = 1; v <= n; ++v) schedule[v - 1] = v;
    std::mt19937_64 rng(schedule_seed);

    for (std::uint32_t t = 1; t <= rounds; ++t) {
        // Send phase: messages are built from the round-(t-1) snapshot.
        std::vector<std::vector<typename Program::Message>> outbox(n + 1);
        std::uint64_t units = 0;
        for (Vertex v = 1; v <= n; ++v) {
            const auto& ports = g.port_list(v);
            outbox[v].reserve(ports.size());
            for (Port i = 1; i <= ports.size(); ++i) {
                outbox[v].push_back(prog.message(state[v], i));
                units += Program::message_units(outbox[v].back());
            }
        }
        run.message_units.push_back(units);
        // Receive phase, in a shuffled node order; results go to a fresh
        // state vector so the order cannot matter.
        std::shuffle(schedule.begin(), schedule.end(), rng);
        std::vector<typename Program::State> next = state;
        for (Vertex v : schedule) {
            const auto& ports = g.port_list(v);
            for (Port i = 1; i <= ports.size(); ++i) {
                Vertex u = ports[i - 1];
                Port back = g.port_towards(u, v);
                try {
                    prog.receive(next[v], outbox[u][back - 1]);
                } catch (const std::exception& ex) {
                    throw SimulationError("node " + std::to_string(v) + ", round " +
                                          std::to_string(t) + ": " + ex.what());
                }
            }
        }
        state = std::move(next);
    }
    for (Vertex v = 1; v <= n; ++v) run.outputs.emplace(v, prog.output(state[v]));
    return run;
}

} // namespace problocal
