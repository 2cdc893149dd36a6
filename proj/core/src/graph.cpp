#include "problocal/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "problocal/errors.hpp"

namespace problocal {

LabeledGraph::LabeledGraph(std::vector<std::vector<Vertex>> ports,
                           std::map<EdgeRef, Rational> weights)
    : ports_(std::move(ports)), weights_(std::move(weights)) {
    const std::uint32_t n = static_cast<std::uint32_t>(ports_.size());
    for (Vertex v = 1; v <= n; ++v) {
        const auto& list = ports_[v - 1];
        std::set<Vertex> seen;
        for (Vertex u : list) {
            if (u == 0 || u > n) {
                throw InputError("vertex " + std::to_string(v) + " points at out-of-range vertex " +
                                 std::to_string(u));
            }
            if (u == v) throw InputError("self-loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second) {
                throw InputError("parallel edge between " + std::to_string(v) + " and " +
                                 std::to_string(u));
            }
        }
        max_degree_ = std::max<std::uint32_t>(max_degree_, static_cast<std::uint32_t>(list.size()));
    }
    // Port reciprocity: every directed port entry must be mirrored exactly once.
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex u : ports_[v - 1]) {
            const auto& back = ports_[u - 1];
            if (std::count(back.begin(), back.end(), v) != 1) {
                throw InputError("port reciprocity violated on edge {" + std::to_string(v) + "," +
                                 std::to_string(u) + "}");
            }
        }
        edge_count_ += ports_[v - 1].size();
    }
    edge_count_ /= 2;
    for (const auto& [e, w] : weights_) {
        if (!has_edge(e.u, e.v)) throw InputError("weight given for non-edge " + e.str());
        if (!w.positive()) throw InputError("non-positive weight on edge " + e.str());
    }
    if (!weights_.empty() && weights_.size() != edge_count_) {
        throw InputError("weighted graph must weight every edge");
    }
}

void LabeledGraph::check_vertex(Vertex v) const {
    if (v == 0 || v > vertex_count()) {
        throw InputError("unknown vertex ID " + std::to_string(v));
    }
}

const std::vector<Vertex>& LabeledGraph::port_list(Vertex v) const {
    check_vertex(v);
    return ports_[v - 1];
}

Port LabeledGraph::port_towards(Vertex u, Vertex v) const {
    const auto& list = port_list(u);
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == v) return static_cast<Port>(i + 1);
    }
    throw InputError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
    if (u == 0 || v == 0 || u > vertex_count() || v > vertex_count() || u == v) return false;
    const auto& list = ports_[u - 1];
    return std::find(list.begin(), list.end(), v) != list.end();
}

Rational LabeledGraph::weight(const EdgeRef& e) const {
    if (weights_.empty()) return Rational(1);
    auto it = weights_.find(e);
    if (it == weights_.end()) throw InputError("no weight for edge " + e.str());
    return it->second;
}

std::vector<EdgeRef> LabeledGraph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(edge_count_);
    for (Vertex v = 1; v <= vertex_count(); ++v) {
        for (Vertex u : ports_[v - 1]) {
            if (v < u) out.emplace_back(v, u);
        }
    }
    return out;
}

LabeledGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("missing header", 1);
    std::uint64_t n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("header must be 'n m'", lineno);
    }
    std::vector<std::vector<Vertex>> ports(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (!next_line()) throw ParseError("expected port list for vertex " + std::to_string(i), lineno + 1);
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head != std::to_string(i) + ":") {
            throw ParseError("expected '" + std::to_string(i) + ":' at start of port list", lineno);
        }
        std::uint64_t u;
        while (ls >> u) {
            if (u == 0 || u > n) throw ParseError("neighbor ID out of range: " + std::to_string(u), lineno);
            ports[i - 1].push_back(static_cast<Vertex>(u));
        }
        if (!ls.eof()) throw ParseError("bad token in port list", lineno);
    }
    std::map<EdgeRef, Rational> weights;
    if (next_line()) {
        if (line != "weights:") throw ParseError("expected 'weights:' block or end of file", lineno);
        while (next_line()) {
            std::istringstream ws(line);
            std::uint64_t u, v;
            std::string w;
            std::string extra;
            if (!(ws >> u >> v >> w) || (ws >> extra)) throw ParseError("weight line must be 'u v p/q'", lineno);
            if (u == 0 || v == 0 || u > n || v > n || u == v) throw ParseError("bad edge in weight line", lineno);
            EdgeRef e(static_cast<Vertex>(u), static_cast<Vertex>(v));
            Rational r;
            try {
                r = Rational::parse(w);
            } catch (const InputError& err) {
                throw ParseError(err.what(), lineno);
            }
            if (!weights.emplace(e, r).second) throw ParseError("duplicate weight for edge " + e.str(), lineno);
        }
    }
    LabeledGraph g(std::move(ports), std::move(weights));
    if (g.edge_count() != m) {
        throw ParseError("header claims " + std::to_string(m) + " edges but port lists define " +
                             std::to_string(g.edge_count()),
                         1);
    }
    return g;
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const LabeledGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        out << v << ':';
        for (Vertex u : g.port_list(v)) out << ' ' << u;
        out << '\n';
    }
    if (g.weighted()) {
        out << "weights:\n";
        for (const auto& [e, w] : g.weights()) {
            out << e.u << ' ' << e.v << ' ' << w.str() << '\n';
        }
    }
}

void save_graph(const LabeledGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file: " + path);
    write_graph(g, out);
}

namespace {

LabeledGraph from_edge_set(std::uint32_t n, const std::set<EdgeRef>& edges) {
    std::vector<std::vector<Vertex>> ports(n);
    for (const auto& e : edges) {
        ports[e.u - 1].push_back(e.v);
        ports[e.v - 1].push_back(e.u);
    }
    // Fixed port rule for generated graphs: neighbors sorted by ID.
    for (auto& list : ports) std::sort(list.begin(), list.end());
    return LabeledGraph(std::move(ports));
}

} // namespace

LabeledGraph make_ring(std::uint32_t n) {
    if (n < 3) throw InputError("ring needs at least 3 vertices");
    std::set<EdgeRef> edges;
    for (std::uint32_t v = 1; v <= n; ++v) edges.insert(EdgeRef(v, v % n + 1));
    return from_edge_set(n, edges);
}

LabeledGraph make_grid(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols == 0) throw InputError("grid needs positive dimensions");
    auto id = [&](std::uint32_t r, std::uint32_t c) { return r * cols + c + 1; };
    std::set<EdgeRef> edges;
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.insert(EdgeRef(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) edges.insert(EdgeRef(id(r, c), id(r + 1, c)));
        }
    }
    return from_edge_set(rows * cols, edges);
}

LabeledGraph make_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
    if (d >= n || (static_cast<std::uint64_t>(n) * d) % 2 != 0) {
        throw InputError("degree sequence not realizable: n=" + std::to_string(n) +
                         " d=" + std::to_string(d));
    }
    std::mt19937_64 rng(seed);
    // Configuration model with restarts; deterministic in the seed.
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Vertex> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (Vertex v = 1; v <= n; ++v) {
            for (std::uint32_t i = 0; i < d; ++i) stubs.push_back(v);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<EdgeRef> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            Vertex a = stubs[i], b = stubs[i + 1];
            if (a == b || !edges.insert(EdgeRef(a, b)).second) {
                ok = false;
                break;
            }
        }
        if (ok) return from_edge_set(n, edges);
    }
    throw InputError("random-regular generation failed; try another seed");
}

LabeledGraph make_random_bounded(std::uint32_t n, std::uint32_t max_deg, std::size_t max_edges,
                                 std::uint64_t seed) {
    if (n == 0) throw InputError("graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> deg(n + 1, 0);
    std::set<EdgeRef> edges;
    std::vector<EdgeRef> candidates;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) candidates.emplace_back(u, v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (const auto& e : candidates) {
        if (edges.size() >= max_edges) break;
        if (deg[e.u] >= max_deg || deg[e.v] >= max_deg) continue;
        edges.insert(e);
        ++deg[e.u];
        ++deg[e.v];
    }
    return from_edge_set(n, edges);
}

LabeledGraph with_random_weights(const LabeledGraph& g, std::uint64_t seed, std::int64_t denom) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, denom);
    std::map<EdgeRef, Rational> weights;
    for (const auto& e : g.edges()) weights.emplace(e, Rational(dist(rng), denom));
    std::vector<std::vector<Vertex>> ports;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) ports.push_back(g.port_list(v));
    return LabeledGraph(std::move(ports), std::move(weights));
}

LabeledGraph load_graph_or_generate(const std::string& spec) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        parts.push_back(cur);
        return parts;
    };
    auto to_u = [](const std::string& s) -> std::uint64_t {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError("bad number in generator spec: " + s);
        }
    };
    if (spec.rfind("ring:", 0) == 0) {
        return make_ring(static_cast<std::uint32_t>(to_u(spec.substr(5))));
    }
    if (spec.rfind("grid:", 0) == 0) {
        auto parts = split(spec.substr(5), 'x');
        if (parts.size() != 2) throw InputError("grid spec must be grid:RxC");
        return make_grid(static_cast<std::uint32_t>(to_u(parts[0])),
                         static_cast<std::uint32_t>(to_u(parts[1])));
    }
    if (spec.rfind("rr:", 0) == 0) {
        auto parts = split(spec.substr(3), ':');
        if (parts.size() != 3) throw InputError("random-regular spec must be rr:n:d:seed");
        return make_random_regular(static_cast<std::uint32_t>(to_u(parts[0])),
                                   static_cast<std::uint32_t>(to_u(parts[1])), to_u(parts[2]));
    }
    if (spec.rfind("rand:", 0) == 0) {
        auto parts = split(spec.substr(5), ':');
        if (parts.size() != 4) throw InputError("random spec must be rand:n:maxdeg:maxedges:seed");
        return make_random_bounded(static_cast<std::uint32_t>(to_u(parts[0])),
                                   static_cast<std::uint32_t>(to_u(parts[1])), to_u(parts[2]),
                                   to_u(parts[3]));
    }
    return load_graph(spec);
}

} // namespace problocal
