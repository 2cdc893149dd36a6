#include "problocal/mwm.hpp"

#include <algorithm>
#include <cmath>

#include "problocal/errors.hpp"
#include "problocal/mcm.hpp"

namespace problocal {

MwmSetup preprocess_weights(const LabeledGraph& g, const Rational& eps) {
    if (!eps.positive() || !(eps < Rational(1))) {
        throw InputError("eps must be in (0, 1): " + eps.str());
    }
    if (g.edge_count() == 0) throw InputError("weighted matching needs at least one edge");

    MwmSetup setup;
    setup.eps = eps;
    setup.k = static_cast<std::uint32_t>((2 * eps.den) / eps.num);
    const long double two_over_eps =
        2.0L * static_cast<long double>(eps.den) / static_cast<long double>(eps.num);
    setup.rounds = static_cast<std::uint32_t>(
        std::ceil(2.0L * (2 * setup.k + 1) * std::log(two_over_eps)));
    setup.unit = eps / Rational(static_cast<std::int64_t>(g.vertex_count()));

    // Normalize so the maximum weight is exactly 1 (unweighted graphs read as
    // all-ones and stay all-ones).
    Rational w_max(0);
    for (const auto& e : g.edges()) w_max = std::max(w_max, g.weight(e));
    bool have_min = false;
    for (const auto& e : g.edges()) {
        Rational w = g.weight(e) / w_max;
        setup.normalized.emplace(e, w);
        Rational q = w / setup.unit;
        std::int64_t whole = q.num / q.den; // exact floor for positive q
        if (whole == 0) {
            setup.dropped.push_back(e);
            continue;
        }
        setup.units.emplace(e, whole);
        if (!have_min || w < setup.w_min_eps) {
            setup.w_min_eps = w;
            have_min = true;
        }
    }
    if (!have_min) throw InputError("all edges rounded to zero; eps too small for this graph");
    return setup;
}

std::uint64_t mwm_intersection_degree_bound(std::uint32_t k, std::uint32_t delta) {
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
        if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
        return a * b;
    };
    std::uint64_t pow = 1;
    for (std::uint32_t i = 0; i < 2 * k + 1; ++i) pow = sat_mul(pow, delta);
    std::uint64_t out = sat_mul(3ull * (2 * k + 2), 2 * k + 2);
    return sat_mul(out, pow);
}

StructIntersectionView::StructIntersectionView(MwmOracle& oracle, std::uint32_t level)
    : oracle_(&oracle), level_(level), n_(oracle.graph().vertex_count()),
      id_space_(intersection_id_space(n_, 2 * oracle.setup().k + 2)),
      degree_bound_(mwm_intersection_degree_bound(oracle.setup().k, oracle.graph().max_degree())) {}

std::optional<std::pair<AugStruct, Port>> StructIntersectionView::probe_port(const AugStruct& p,
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

BigUint StructIntersectionView::id_number(const AugStruct& p) const { return p.encode(n_); }

MwmOracle::MwmOracle(const LabeledGraph& g, ProbeSession& s, MwmSetup setup)
    : g_(&g), session_(&s), setup_(std::move(setup)), levels_(setup_.rounds + 1) {}

MwmOracle::LevelState& MwmOracle::level_state(std::uint32_t level) {
    LevelState& st = levels_.at(level);
    if (!st.view) {
        st.view = std::make_unique<StructIntersectionView>(*this, level);
        st.colors = std::make_unique<ColorOracle<StructIntersectionView>>(*st.view);
        auto rank = std::function<IgRank(const AugStruct&)>(
            [this, level, &colors = *st.colors](const AugStruct& p) {
                return IgRank{-gamma(level, p), colors.color(p)};
            });
        st.mis = std::make_unique<SeqSimulator<StructIntersectionView,
                                               std::function<IgRank(const AugStruct&)>, char>>(
            *st.view, std::move(rank), mis_rule);
    }
    return st;
}

const std::vector<AugStruct>& MwmOracle::structs_at_vertex(std::uint32_t level, Vertex x) {
    LevelState& st = levels_.at(level);
    auto it = st.at_vertex.find(x);
    if (it != st.at_vertex.end()) return it->second;

    Ball ball = collect_ball(*g_, *session_, x, 2 * setup_.k + 1);
    EnumAccess access;
    access.neighbors = [ball = std::move(ball)](Vertex v) -> std::vector<Vertex> {
        auto pit = ball.ports.find(v);
        if (pit == ball.ports.end()) {
            throw std::logic_error("enumeration left the collected ball");
        }
        return pit->second;
    };
    access.in_matching = [this, level](const EdgeRef& e) { return member(level - 1, e); };
    access.alive = [this](const EdgeRef& e) { return setup_.alive(e); };
    auto structs = enumerate_bounded_gain_structs_at(access, setup_.units, setup_.k, x);
    return levels_.at(level).at_vertex.emplace(x, std::move(structs)).first->second;
}

std::vector<AugStruct> MwmOracle::structs_through_edge(std::uint32_t level, const EdgeRef& e) {
    std::vector<AugStruct> out;
    for (const auto& p : structs_at_vertex(level, e.u)) {
        if (p.contains_edge(e)) out.push_back(p);
    }
    return out;
}

const std::vector<AugStruct>& MwmOracle::intersection_neighbors(std::uint32_t level,
                                                                const AugStruct& p) {
    LevelState& st = levels_.at(level);
    auto it = st.neighbors.find(p);
    if (it != st.neighbors.end()) return it->second;

    const auto& anchored = structs_at_vertex(level, p.seq.front());
    if (!std::binary_search(anchored.begin(), anchored.end(), p)) {
        throw InputError("not a valid augmenting structure at level " + std::to_string(level) +
                         ": " + p.str());
    }
    std::set<AugStruct> all;
    for (Vertex x : p.seq) {
        const auto& through = structs_at_vertex(level, x);
        all.insert(through.begin(), through.end());
    }
    all.erase(p);
    std::vector<AugStruct> nbrs(all.begin(), all.end());
    return levels_.at(level).neighbors.emplace(p, std::move(nbrs)).first->second;
}

std::int64_t MwmOracle::gain_units_of(std::uint32_t level, const AugStruct& p) {
    LevelState& st = levels_.at(level);
    auto it = st.gains.find(p);
    if (it != st.gains.end()) return it->second;
    std::int64_t units = gain_units(
        p, [this, level](const EdgeRef& e) { return member(level - 1, e); }, setup_.units);
    levels_.at(level).gains.emplace(p, units);
    return units;
}

std::int64_t MwmOracle::gamma(std::uint32_t level, const AugStruct& p) {
    std::int64_t units = gain_units_of(level, p);
    if (units <= 0) {
        throw InputError("structure is not augmenting (gain <= 0): " + p.str());
    }
    return ceil_log2(Rational(units) * setup_.unit);
}

bool MwmOracle::igmis_member(std::uint32_t level, const AugStruct& p) {
    return level_state(level).mis->simulate(p) != 0;
}

bool MwmOracle::in_selected(std::uint32_t level, const EdgeRef& e) {
    LevelState& st = levels_.at(level);
    auto it = st.selected.find(e);
    if (it != st.selected.end()) return it->second != 0;
    bool found = false;
    for (const auto& p : structs_through_edge(level, e)) {
        if (igmis_member(level, p)) {
            found = true;
            break;
        }
    }
    levels_.at(level).selected.emplace(e, found ? 1 : 0);
    return found;
}

bool MwmOracle::member(std::uint32_t level, const EdgeRef& e) {
    if (level == 0) return false;
    if (!setup_.alive(e)) return false;
    auto key = std::make_pair(level, e);
    auto it = member_memo_.find(key);
    if (it != member_memo_.end()) return it->second != 0;
    bool tau = member(level - 1, e);
    bool rho = in_selected(level, e);
    bool res = tau != rho;
    member_memo_.emplace(key, res ? 1 : 0);
    return res;
}

bool apx_mwm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const MwmSetup& setup) {
    if (!g.has_edge(e.u, e.v)) throw InputError("not an edge: " + e.str());
    MwmOracle oracle(g, s, setup);
    return oracle.member(oracle.top_level(), e);
}

bool apx_mwm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const Rational& eps) {
    return apx_mwm(g, s, e, preprocess_weights(g, eps));
}

MwmGlobalTrace global_apx_mwm(const LabeledGraph& g, const Rational& eps) {
    const std::uint32_t n = g.vertex_count();
    MwmGlobalTrace trace;
    trace.setup = preprocess_weights(g, eps);
    const MwmSetup& setup = trace.setup;
    std::set<EdgeRef> matching;

    for (std::uint32_t level = 1; level <= setup.rounds; ++level) {
        EnumAccess access;
        access.neighbors = [&g](Vertex v) { return g.port_list(v); };
        access.in_matching = [&matching](const EdgeRef& e) { return matching.count(e) != 0; };
        access.alive = [&setup](const EdgeRef& e) { return setup.alive(e); };

        std::set<AugStruct> node_set;
        for (Vertex x = 1; x <= n; ++x) {
            for (auto& p : enumerate_bounded_gain_structs_at(access, setup.units, setup.k, x)) {
                node_set.insert(std::move(p));
            }
        }
        std::vector<AugStruct> nodes(node_set.begin(), node_set.end());
        std::map<AugStruct, std::int64_t> gains;
        for (const auto& p : nodes) gains.emplace(p, gain_units(p, access.in_matching, setup.units));

        std::set<AugStruct> selected;
        if (!nodes.empty()) {
            auto adj = intersection_adjacency(nodes);
            std::map<AugStruct, BigUint> ids;
            for (const auto& p : nodes) ids.emplace(p, p.encode(n));
            MaterializedView<AugStruct> view(adj, std::move(ids),
                                             intersection_id_space(n, 2 * setup.k + 2),
                                             mwm_intersection_degree_bound(setup.k, g.max_degree()));
            ColorOracle<MaterializedView<AugStruct>> colors(view);

            std::map<AugStruct, IgRank> rank;
            for (const auto& p : nodes) {
                std::int64_t gamma = ceil_log2(Rational(gains.at(p)) * setup.unit);
                rank.emplace(p, IgRank{-gamma, colors.color(p)});
            }
            std::vector<AugStruct> order = nodes;
            std::sort(order.begin(), order.end(), [&](const AugStruct& a, const AugStruct& b) {
                const IgRank& ra = rank.at(a);
                const IgRank& rb = rank.at(b);
                if (ra < rb) return true;
                if (rb < ra) return false;
                return a < b;
            });
            auto mis = run_sequential<AugStruct, char>(
                order, adj, std::function<char(const std::vector<char>&)>([](const std::vector<char>& d) {
                    return static_cast<char>(mis_rule(d));
                }));
            for (const auto& p : nodes) {
                if (mis.at(p)) selected.insert(p);
            }
        }
        for (const auto& p : selected) {
            for (const auto& e : p.edges()) {
                if (!matching.erase(e)) matching.insert(e);
            }
        }
        trace.level_nodes.push_back(std::move(nodes));
        trace.level_gains.push_back(std::move(gains));
        trace.level_selected.push_back(std::move(selected));
        trace.matchings.push_back(matching);
    }
    return trace;
}

} // namespace problocal
