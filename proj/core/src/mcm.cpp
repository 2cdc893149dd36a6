#include "problocal/mcm.hpp"

#include <algorithm>

#include "problocal/errors.hpp"

namespace problocal {

std::uint32_t mcm_phase_count(const Rational& eps) {
    if (!eps.positive() || eps > Rational(1)) {
        throw InputError("eps must be in (0, 1]: " + eps.str());
    }
    // ceil(1/eps) for eps = num/den: ceil(den/num).
    return static_cast<std::uint32_t>((eps.den + eps.num - 1) / eps.num);
}

BigUint intersection_id_space(std::uint32_t n, std::uint32_t maxlen) {
    BigUint space = BigUint::pow(n + 1, maxlen);
    space.mul_small(3);
    return space;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    for (std::uint32_t i = 0; i < exp; ++i) out = sat_mul(out, base);
    return out;
}

} // namespace

std::uint64_t mcm_intersection_degree_bound(std::uint32_t level, std::uint32_t delta) {
    return sat_mul(sat_mul(2ull * level, 2ull * level), sat_pow(delta, 2 * level - 1));
}

std::map<AugStruct, std::vector<AugStruct>> intersection_adjacency(
    const std::vector<AugStruct>& nodes) {
    std::map<Vertex, std::vector<std::size_t>> by_vertex;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (Vertex v : nodes[i].seq) by_vertex[v].push_back(i);
    }
    std::vector<std::set<std::size_t>> nbr_idx(nodes.size());
    for (const auto& [v, bucket] : by_vertex) {
        for (std::size_t a : bucket) {
            for (std::size_t b : bucket) {
                if (a != b) nbr_idx[a].insert(b);
            }
        }
    }
    std::map<AugStruct, std::vector<AugStruct>> adj;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<AugStruct> nbrs;
        nbrs.reserve(nbr_idx[i].size());
        for (std::size_t j : nbr_idx[i]) nbrs.push_back(nodes[j]);
        std::sort(nbrs.begin(), nbrs.end());
        adj.emplace(nodes[i], std::move(nbrs));
    }
    return adj;
}

PathIntersectionView::PathIntersectionView(McmOracle& oracle, std::uint32_t level)
    : oracle_(&oracle), level_(level), n_(oracle.graph().vertex_count()),
      id_space_(intersection_id_space(n_, 2 * level)),
      degree_bound_(mcm_intersection_degree_bound(level, oracle.graph().max_degree())) {}

std::optional<std::pair<AugStruct, Port>> PathIntersectionView::probe_port(const AugStruct& p,
                                                                           Port i) {
    if (i == 0) throw InputError("ports are 1-based");
    const auto& nbrs = oracle_->intersection_neighbors(level_, p);
    if (i > nbrs.size()) return std::nullopt;
    const AugStruct& q = nbrs[i - 1];
    const auto& back = oracle_->intersection_neighbors(level_, q);
    auto it = std::lower_bound(back.begin(), back.end(), p);
    if (it == back.end() || !(*it == p)) {
        throw std::logic_error("intersection graph lost adjacency symmetry");
    }
    return std::make_pair(q, static_cast<Port>(it - back.begin() + 1));
}

BigUint PathIntersectionView::id_number(const AugStruct& p) const { return p.encode(n_); }

McmOracle::McmOracle(const LabeledGraph& g, ProbeSession& s, std::uint32_t phases)
    : g_(&g), session_(&s), phases_(phases), levels_(phases + 2) {}

McmOracle::LevelState& McmOracle::level_state(std::uint32_t level) {
    LevelState& st = levels_.at(level);
    if (!st.view) {
        st.view = std::make_unique<PathIntersectionView>(*this, level);
        st.colors = std::make_unique<ColorOracle<PathIntersectionView>>(*st.view);
        auto rank = std::function<VertexColor(const AugStruct&)>(
            [&colors = *st.colors](const AugStruct& p) { return colors.color(p); });
        st.mis = std::make_unique<
            SeqSimulator<PathIntersectionView, std::function<VertexColor(const AugStruct&)>, char>>(
            *st.view, std::move(rank), mis_rule);
    }
    return st;
}

const std::vector<AugStruct>& McmOracle::paths_at_vertex(std::uint32_t level, Vertex x) {
    LevelState& st = levels_.at(level);
    auto it = st.at_vertex.find(x);
    if (it != st.at_vertex.end()) return it->second;

    Ball ball = collect_ball(*g_, *session_, x, 2 * level - 1);
    EnumAccess access;
    access.neighbors = [ball = std::move(ball)](Vertex v) -> std::vector<Vertex> {
        auto pit = ball.ports.find(v);
        if (pit == ball.ports.end()) {
            throw std::logic_error("enumeration left the collected ball");
        }
        return pit->second;
    };
    access.in_matching = [this, level](const EdgeRef& e) { return member(level - 1, e); };
    auto paths = enumerate_fixed_length_paths_at(access, level, x);
    return levels_.at(level).at_vertex.emplace(x, std::move(paths)).first->second;
}

std::vector<AugStruct> McmOracle::paths_through_edge(std::uint32_t level, const EdgeRef& e) {
    std::vector<AugStruct> out;
    for (const auto& p : paths_at_vertex(level, e.u)) {
        if (p.contains_edge(e)) out.push_back(p);
    }
    return out;
}

const std::vector<AugStruct>& McmOracle::intersection_neighbors(std::uint32_t level,
                                                                const AugStruct& p) {
    LevelState& st = levels_.at(level);
    auto it = st.neighbors.find(p);
    if (it != st.neighbors.end()) return it->second;

    if (p.cycle || p.seq.size() != 2 * level) {
        throw InputError("not a valid augmenting path at level " + std::to_string(level) + ": " +
                         p.str());
    }
    const auto& anchored = paths_at_vertex(level, p.seq.front());
    if (!std::binary_search(anchored.begin(), anchored.end(), p)) {
        throw InputError("not a valid augmenting path at level " + std::to_string(level) + ": " +
                         p.str());
    }
    std::set<AugStruct> all;
    for (Vertex x : p.seq) {
        const auto& through = paths_at_vertex(level, x);
        all.insert(through.begin(), through.end());
    }
    all.erase(p);
    std::vector<AugStruct> nbrs(all.begin(), all.end());
    return levels_.at(level).neighbors.emplace(p, std::move(nbrs)).first->second;
}

bool McmOracle::mis_member(std::uint32_t level, const AugStruct& p) {
    return level_state(level).mis->simulate(p) != 0;
}

bool McmOracle::in_selected(std::uint32_t level, const EdgeRef& e) {
    LevelState& st = levels_.at(level);
    auto it = st.selected.find(e);
    if (it != st.selected.end()) return it->second != 0;
    bool found = false;
    for (const auto& p : paths_through_edge(level, e)) {
        if (mis_member(level, p)) {
            found = true;
            break;
        }
    }
    levels_.at(level).selected.emplace(e, found ? 1 : 0);
    return found;
}

bool McmOracle::member(std::uint32_t level, const EdgeRef& e) {
    if (level == 0) return false;
    auto key = std::make_pair(level, e);
    auto it = member_memo_.find(key);
    if (it != member_memo_.end()) return it->second != 0;
    bool tau = member(level - 1, e);
    bool rho = in_selected(level, e);
    bool res = tau != rho;
    member_memo_.emplace(key, res ? 1 : 0);
    return res;
}

bool apx_mcm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const Rational& eps) {
    if (!g.has_edge(e.u, e.v)) throw InputError("not an edge: " + e.str());
    McmOracle oracle(g, s, mcm_phase_count(eps));
    return oracle.member(oracle.top_level(), e);
}

McmGlobalTrace global_apx_mcm(const LabeledGraph& g, const Rational& eps) {
    const std::uint32_t n = g.vertex_count();
    McmGlobalTrace trace;
    trace.phases = mcm_phase_count(eps);
    std::set<EdgeRef> matching;

    for (std::uint32_t level = 1; level <= trace.phases + 1; ++level) {
        EnumAccess access;
        access.neighbors = [&g](Vertex v) { return g.port_list(v); };
        access.in_matching = [&matching](const EdgeRef& e) { return matching.count(e) != 0; };

        std::set<AugStruct> node_set;
        for (Vertex x = 1; x <= n; ++x) {
            for (auto& p : enumerate_fixed_length_paths_at(access, level, x)) {
                node_set.insert(std::move(p));
            }
        }
        std::vector<AugStruct> nodes(node_set.begin(), node_set.end());
        auto adj = intersection_adjacency(nodes);

        std::map<AugStruct, BigUint> ids;
        for (const auto& p : nodes) ids.emplace(p, p.encode(n));
        MaterializedView<AugStruct> view(adj, std::move(ids),
                                         intersection_id_space(n, 2 * level),
                                         mcm_intersection_degree_bound(level, g.max_degree()));
        ColorOracle<MaterializedView<AugStruct>> colors(view);

        std::map<AugStruct, VertexColor> rank;
        for (const auto& p : nodes) rank.emplace(p, colors.color(p));
        std::vector<AugStruct> order = nodes;
        std::sort(order.begin(), order.end(), [&](const AugStruct& a, const AugStruct& b) {
            int c = rank.at(a).compare(rank.at(b));
            if (c != 0) return c < 0;
            return a < b;
        });
        auto mis = run_sequential<AugStruct, char>(order, adj,
                                                   std::function<char(const std::vector<char>&)>(
                                                       [](const std::vector<char>& d) {
                                                           return static_cast<char>(mis_rule(d));
                                                       }));

        std::set<AugStruct> selected;
        for (const auto& p : nodes) {
            if (mis.at(p)) selected.insert(p);
        }
        for (const auto& p : selected) {
            for (const auto& e : p.edges()) {
                if (!matching.erase(e)) matching.insert(e);
            }
        }
        trace.level_nodes.push_back(std::move(nodes));
        trace.level_selected.push_back(std::move(selected));
        trace.matchings.push_back(matching);
    }
    return trace;
}

} // namespace problocal
