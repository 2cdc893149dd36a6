#include "problocal/probe.hpp"

#include <algorithm>
#include <deque>

#include "problocal/errors.hpp"

namespace problocal {

std::optional<ProbeAnswer> probe(const LabeledGraph& g, ProbeSession& s, Vertex v, Port i) {
    g.check_vertex(v);
    if (i == 0) throw InputError("ports are 1-based");
    if (s.allowed_ && !s.allowed_->count(v)) {
        throw RadiusViolation("probe of vertex " + std::to_string(v) +
                              " escapes the collected ball");
    }
    const std::uint64_t k = s.key(v, i);
    if (s.cache_enabled_) {
        auto it = s.cache_.find(k);
        if (it != s.cache_.end()) return it->second;
    }
    ++s.probe_count_;
    s.probed_.insert(k);
    std::optional<ProbeAnswer> answer;
    const auto& list = g.port_list(v);
    if (i <= list.size()) {
        Vertex u = list[i - 1];
        answer = ProbeAnswer{u, g.port_towards(u, v)};
    }
    if (s.tracking_) {
        auto dv = s.dist_.find(v);
        if (dv == s.dist_.end()) {
            throw std::logic_error("probe of vertex with unknown distance from the query origin");
        }
        s.radius_ = std::max(s.radius_, dv->second);
        if (answer) {
            auto du = s.dist_.find(answer->neighbor);
            std::uint32_t through = dv->second + 1;
            if (du == s.dist_.end() || du->second > through) s.dist_[answer->neighbor] = through;
        }
    }
    if (s.cache_enabled_) s.cache_.emplace(k, answer);
    return answer;
}

std::vector<EdgeRef> Ball::edges_inside() const {
    std::vector<EdgeRef> out;
    for (const auto& [v, list] : ports) {
        for (Vertex u : list) {
            if (v < u && dist.count(u)) out.emplace_back(v, u);
        }
    }
    return out;
}

std::vector<EdgeRef> Ball::edges_touching() const {
    std::vector<EdgeRef> out;
    for (const auto& [v, list] : ports) {
        for (Vertex u : list) {
            if (v < u || !dist.count(u)) out.emplace_back(v, u);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Ball::merge(const Ball& other) {
    for (const auto& [v, d] : other.dist) {
        auto it = dist.find(v);
        if (it == dist.end() || it->second > d) dist[v] = d;
    }
    for (const auto& [v, list] : other.ports) ports.emplace(v, list);
}

Ball collect_ball(const LabeledGraph& g, ProbeSession& s, Vertex center, std::uint32_t r) {
    g.check_vertex(center);
    Ball ball;
    ball.center = center;
    ball.radius = r;
    ball.dist[center] = 0;
    std::deque<Vertex> queue{center};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        std::uint32_t d = ball.dist[v];
        auto& list = ball.ports[v];
        for (Port i = 1;; ++i) {
            auto ans = probe(g, s, v, i);
            if (!ans) break;
            list.push_back(ans->neighbor);
            if (d < r && !ball.dist.count(ans->neighbor)) {
                ball.dist[ans->neighbor] = d + 1;
                queue.push_back(ans->neighbor);
            }
        }
    }
    return ball;
}

} // namespace problocal
