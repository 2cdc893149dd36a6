#include "problocal/augenum.hpp"

#include <set>

namespace problocal {

namespace {

bool endpoint_free(const EnumAccess& access, Vertex v) {
    for (Vertex w : access.neighbors(v)) {
        EdgeRef e(v, w);
        if (access.edge_alive(e) && access.in_matching(e)) return false;
    }
    return true;
}

} // namespace

std::int64_t gain_units(const AugStruct& s, const std::function<bool(const EdgeRef&)>& in_matching,
                        const std::map<EdgeRef, std::int64_t>& units) {
    std::int64_t total = 0;
    for (const auto& e : s.edges()) {
        auto it = units.find(e);
        if (it == units.end()) throw InputError("structure uses an edge without a weight: " + e.str());
        total += in_matching(e) ? -it->second : it->second;
    }
    return total;
}

std::vector<AugStruct> enumerate_fixed_length_paths_at(const EnumAccess& access,
                                                       std::uint32_t level, Vertex x) {
    const int edges = 2 * static_cast<int>(level) - 1;
    std::set<AugStruct> found;
    std::vector<Vertex> seq(edges + 1, 0);
    std::set<Vertex> used;

    // 1-based edge position j carries a matching edge iff j is even.
    auto want_matched = [](int j) { return j % 2 == 0; };

    auto finish = [&]() {
        if (!endpoint_free(access, seq.front()) || !endpoint_free(access, seq.back())) return;
        found.insert(AugStruct::path(seq));
    };

    std::function<void(int)> fill_right = [&](int idx) { // next vertex slot, growing right
        if (idx > edges) {
            finish();
            return;
        }
        Vertex prev = seq[idx - 1];
        for (Vertex w : access.neighbors(prev)) {
            EdgeRef e(prev, w);
            if (!access.edge_alive(e) || used.count(w)) continue;
            if (access.in_matching(e) != want_matched(idx)) continue; // edge position idx
            seq[idx] = w;
            used.insert(w);
            fill_right(idx + 1);
            used.erase(w);
        }
    };

    std::function<void(int, int)> fill_left = [&](int idx, int t0) {
        if (idx < 0) {
            fill_right(t0 + 1);
            return;
        }
        Vertex next = seq[idx + 1];
        for (Vertex w : access.neighbors(next)) {
            EdgeRef e(next, w);
            if (!access.edge_alive(e) || used.count(w)) continue;
            if (access.in_matching(e) != want_matched(idx + 1)) continue;
            seq[idx] = w;
            used.insert(w);
            fill_left(idx - 1, t0);
            used.erase(w);
        }
    };

    for (int t0 = 0; t0 <= edges; ++t0) { // position of x in the path
        seq.assign(edges + 1, 0);
        seq[t0] = x;
        used = {x};
        fill_left(t0 - 1, t0);
    }
    return {found.begin(), found.end()};
}

std::vector<AugStruct> enumerate_bounded_gain_structs_at(
    const EnumAccess& access, const std::map<EdgeRef, std::int64_t>& units, std::uint32_t k,
    Vertex x) {
    // An arm is a simple alternating walk leaving x. Structures through x are
    // single arms (x an endpoint), pairs of vertex-disjoint arms whose first
    // edges alternate at x, or arms closed back to x by one more edge.
    struct Arm {
        std::vector<Vertex> seq; // vertices after x, in walk order
        bool first_matched = false;
        bool last_matched = false;
        std::uint32_t non_matching = 0;
    };
    std::vector<Arm> arms;
    {
        std::vector<Vertex> cur;
        std::set<Vertex> used;
        std::function<void(Vertex, bool, bool, std::uint32_t)> extend =
            [&](Vertex tip, bool first_m, bool last_m, std::uint32_t nonm) {
                for (Vertex w : access.neighbors(tip)) {
                    EdgeRef e(tip, w);
                    if (!access.edge_alive(e) || used.count(w)) continue;
                    bool m = access.in_matching(e);
                    if (m == last_m) continue; // edges must alternate
                    std::uint32_t nonm2 = nonm + (m ? 0 : 1);
                    if (nonm2 > k) continue;
                    cur.push_back(w);
                    used.insert(w);
                    arms.push_back(Arm{cur, first_m, m, nonm2});
                    extend(w, first_m, m, nonm2);
                    used.erase(w);
                    cur.pop_back();
                }
            };
        for (Vertex w : access.neighbors(x)) {
            EdgeRef e(x, w);
            if (!access.edge_alive(e)) continue;
            bool m = access.in_matching(e);
            std::uint32_t nonm = m ? 0 : 1;
            if (nonm > k) continue;
            cur = {w};
            used = {x, w};
            arms.push_back(Arm{cur, m, m, nonm});
            extend(w, m, m, nonm);
        }
    }

    std::set<AugStruct> found;
    auto keep_if_augmenting = [&](AugStruct s, bool start_matched, bool end_matched) {
        // A path end on a non-matching edge must sit at an M-free vertex; here
        // start/end refer to the sequence before canonicalization.
        if (!s.cycle) {
            if (!start_matched && !endpoint_free(access, s.seq.front())) return;
            if (!end_matched && !endpoint_free(access, s.seq.back())) return;
        }
        if (gain_units(s, access.in_matching, units) <= 0) return;
        found.insert(s.cycle ? std::move(s) : AugStruct::path(std::move(s.seq)));
    };

    // x as an endpoint.
    for (const Arm& a : arms) {
        std::vector<Vertex> seq{x};
        seq.insert(seq.end(), a.seq.begin(), a.seq.end());
        keep_if_augmenting(AugStruct{false, std::move(seq)}, a.first_matched, a.last_matched);
    }

    // x internal: two disjoint arms alternating at x.
    for (std::size_t i = 0; i < arms.size(); ++i) {
        for (std::size_t j = i + 1; j < arms.size(); ++j) {
            const Arm& a = arms[i];
            const Arm& b = arms[j];
            if (a.first_matched == b.first_matched) continue;
            if (a.non_matching + b.non_matching > k) continue;
            bool disjoint = true;
            for (Vertex v : a.seq) {
                if (std::find(b.seq.begin(), b.seq.end(), v) != b.seq.end()) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            std::vector<Vertex> seq(a.seq.rbegin(), a.seq.rend());
            seq.push_back(x);
            seq.insert(seq.end(), b.seq.begin(), b.seq.end());
            keep_if_augmenting(AugStruct{false, std::move(seq)}, a.last_matched, b.last_matched);
        }
    }

    // Cycles through x: close an arm of >= 3 edges back to x.
    std::vector<Vertex> x_neighbors = access.neighbors(x);
    for (const Arm& a : arms) {
        if (a.seq.size() < 3) continue;
        Vertex tip = a.seq.back();
        if (std::find(x_neighbors.begin(), x_neighbors.end(), tip) == x_neighbors.end()) continue;
        EdgeRef close(tip, x);
        if (!access.edge_alive(close)) continue;
        bool mc = access.in_matching(close);
        if (mc == a.last_matched || mc == a.first_matched) continue; // alternate at both joints
        if (a.non_matching + (mc ? 0 : 1) > k) continue;
        std::vector<Vertex> seq{x};
        seq.insert(seq.end(), a.seq.begin(), a.seq.end());
        keep_if_augmenting(AugStruct::ring(std::move(seq)), true, true);
    }

    return {found.begin(), found.end()};
}

} // namespace problocal
