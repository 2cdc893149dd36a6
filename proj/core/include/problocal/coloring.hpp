#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "problocal/coloring_plan.hpp"
#include "problocal/errors.hpp"
#include "problocal/graph.hpp"

namespace problocal {

/// Unordered reciprocal-port pair identifying an edge-partition part.
struct PortPair {
    Port a = 0, b = 0; // a <= b
    PortPair() = default;
    PortPair(Port x, Port y) : a(std::min(x, y)), b(std::max(x, y)) {}
    friend bool operator==(const PortPair&, const PortPair&) = default;
    friend auto operator<=>(const PortPair&, const PortPair&) = default;
    std::uint64_t index(std::uint64_t degree_bound) const {
        return static_cast<std::uint64_t>(a - 1) * degree_bound + (b - 1);
    }
    std::string str() const { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }
};

/// A vertex color. On the numeric pipeline it is a 1-based integer below the
/// plan's palette bound. On the sparse pipeline it is the combined-stage
/// vector itself: the per-part 3-colors that differ from 1, keyed by part
/// index, compared lexicographically with absent parts reading as 1. Both
/// forms are totally ordered, which is all the orientation needs.
struct VertexColor {
    bool numeric = true;
    BigUint value;                                             // numeric route
    std::vector<std::pair<std::uint64_t, std::uint8_t>> parts; // sparse route, sorted by part index

    static VertexColor number(BigUint v) {
        VertexColor c;
        c.numeric = true;
        c.value = std::move(v);
        return c;
    }

    int compare(const VertexColor& o) const {
        if (numeric != o.numeric) {
            throw std::logic_error("comparing colors from different pipeline modes");
        }
        if (numeric) return value.compare(o.value);
        std::size_t i = 0, j = 0;
        while (i < parts.size() || j < o.parts.size()) {
            std::uint64_t pi = i < parts.size() ? parts[i].first : UINT64_MAX;
            std::uint64_t pj = j < o.parts.size() ? o.parts[j].first : UINT64_MAX;
            if (pi < pj) return 1;  // this has color>1 where other has 1
            if (pj < pi) return -1;
            if (parts[i].second != o.parts[j].second) {
                return parts[i].second < o.parts[j].second ? -1 : 1;
            }
            ++i;
            ++j;
        }
        return 0;
    }
    friend bool operator==(const VertexColor& x, const VertexColor& y) { return x.compare(y) == 0; }
    friend bool operator!=(const VertexColor& x, const VertexColor& y) { return x.compare(y) != 0; }
    friend bool operator<(const VertexColor& x, const VertexColor& y) { return x.compare(y) < 0; }
    friend bool operator>(const VertexColor& x, const VertexColor& y) { return x.compare(y) > 0; }

    std::string str() const {
        if (numeric) return value.to_decimal();
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i].first) + ":" + std::to_string(parts[i].second);
        }
        return s + "]";
    }
};

/// Evaluates one cover-free reduction step for a vertex given its own prior
/// color and its neighbors' prior colors. Colors are 1-based.
inline BigUint reduce_step_eval(const ReduceStep& st, const BigUint& self,
                                const std::vector<BigUint>& neighbors) {
    const std::size_t coeffs = st.degree + 1;
    BigUint self0 = self;
    self0 -= BigUint(1);
    auto own = self0.digits(st.q, coeffs);
    std::vector<std::vector<std::uint64_t>> others;
    others.reserve(neighbors.size());
    for (const auto& nb : neighbors) {
        BigUint nb0 = nb;
        nb0 -= BigUint(1);
        others.push_back(nb0.digits(st.q, coeffs));
    }
    auto horner = [&](const std::vector<std::uint64_t>& poly, std::uint64_t x) {
        std::uint64_t acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) {
            acc = (static_cast<unsigned __int128>(acc) * x + poly[i]) % st.q;
        }
        return acc;
    };
    for (std::uint64_t a = 0; a < st.q; ++a) {
        std::uint64_t pv = horner(own, a);
        bool covered = false;
        for (const auto& other : others) {
            if (horner(other, a) == pv) {
                covered = true;
                break;
            }
        }
        if (!covered) return BigUint(a * st.q + pv + 1);
    }
    // Reachable only if two adjacent vertices carried equal prior colors.
    throw VerificationError("palette reduction found no free point: prior coloring not proper");
}

/// The vertex-coloring oracle over any probe view. All memoization lives in
/// the oracle instance, which is created per query and dies with it.
///
/// Pipeline: (1) partition edges by reciprocal-port pair, every part has max
/// degree 2; (2) 3-color each part by iterated palette reduction from
/// ID-colors plus greedy local-max rounds; (3) combine the per-part colors
/// into one vector; (4) on the numeric route, reduce the combined palette to
/// at most kPaletteConstant * degree_bound^2.
template <class View>
class ColorOracle {
public:
    using Node = typename View::Node;

    explicit ColorOracle(View& view)
        : view_(view), plan_(ColoringPlan::get(view.id_space(), view.degree_bound())) {}

    const ColoringPlan& plan() const { return *plan_; }

    /// Ordered (neighbor, reciprocal port) pairs for every port of v.
    const std::vector<std::pair<Node, Port>>& ports_of(const Node& v) {
        auto it = ports_memo_.find(v);
        if (it != ports_memo_.end()) return it->second;
        std::vector<std::pair<Node, Port>> out;
        for (Port i = 1;; ++i) {
            auto ans = view_.probe_port(v, i);
            if (!ans) break;
            out.push_back(*ans);
        }
        return ports_memo_.emplace(v, std::move(out)).first->second;
    }

    /// Part of the edge leaving v through port i.
    PortPair part_of_port(const Node& v, Port i) {
        const auto& ports = ports_of(v);
        if (i == 0 || i > ports.size()) throw InputError("no such port: " + std::to_string(i));
        return PortPair(i, ports[i - 1].second);
    }

    /// Part of the edge {u, v}. Costs at most the probes of u's port scan
    /// (zero extra when those ports were already probed this query).
    PortPair part_of_edge(const Node& u, const Node& v) {
        const auto& ports = ports_of(u);
        for (Port i = 1; i <= ports.size(); ++i) {
            if (ports[i - 1].first == v) return PortPair(i, ports[i - 1].second);
        }
        throw InputError("no edge between the given nodes");
    }

    /// Proper 3-coloring of the degree-<=2 part graph; isolated vertices get 1.
    std::uint8_t three_color_part(const PortPair& part, const Node& v) {
        if (part_neighbors(part, v).empty()) return 1;
        BigUint c = part_stage(part, plan_->part_stage_count(), v);
        std::uint64_t val = c.as_u64();
        if (val > 3) throw std::logic_error("part coloring did not reach 3 colors");
        return static_cast<std::uint8_t>(val);
    }

    /// Combined-stage color: one 3-color component per part.
    VertexColor combined_color(const Node& v) {
        auto it = combined_memo_.find(v);
        if (it != combined_memo_.end()) return it->second;
        const auto& ports = ports_of(v);
        std::vector<PortPair> parts;
        for (Port i = 1; i <= ports.size(); ++i) parts.emplace_back(i, ports[i - 1].second);
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

        VertexColor color;
        color.numeric = plan_->numeric_pipeline;
        std::vector<std::pair<std::uint64_t, std::uint8_t>> sparse;
        for (const auto& part : parts) {
            std::uint8_t c = three_color_part(part, v);
            if (c != 1) sparse.emplace_back(part.index(plan_->degree_bound), c);
        }
        std::sort(sparse.begin(), sparse.end());
        if (plan_->numeric_pipeline) {
            BigUint folded(0);
            for (const auto& [idx, c] : sparse) {
                BigUint term = BigUint::pow(3, idx);
                term.mul_small(c - 1);
                folded += term;
            }
            folded += BigUint(1);
            color.value = std::move(folded);
        } else {
            color.parts = std::move(sparse);
        }
        return combined_memo_.emplace(v, std::move(color)).first->second;
    }

    /// One palette reduction on top of an arbitrary prior coloring oracle.
    /// Returns the new color and the new palette bound; when no constructible
    /// step shrinks the palette the prior color passes through unchanged.
    template <class PriorFn>
    std::pair<BigUint, BigUint> reduce_once(const BigUint& prior_palette, PriorFn&& prior,
                                            const Node& v) {
        if (prior_palette.is_zero()) throw InputError("prior palette must be positive");
        auto step = choose_reduction(prior_palette, plan_->degree_bound);
        if (!step) return {prior(v), prior_palette};
        std::vector<BigUint> nbr_colors;
        for (const auto& [nb, back] : ports_of(v)) nbr_colors.push_back(prior(nb));
        return {reduce_step_eval(*step, prior(v), nbr_colors), BigUint(step->palette_after)};
    }

    /// Final color. Numeric route: palette <= kPaletteConstant * Δb².
    VertexColor color(const Node& v) {
        if (!plan_->numeric_pipeline) return combined_color(v);
        if (plan_->reduce_steps.empty()) return combined_color(v);
        return VertexColor::number(
            reduce_stage(static_cast<std::uint32_t>(plan_->reduce_steps.size()), v));
    }

private:
    // Probes only the two ports the part can use, so exploration inside a
    // part costs two probes per path vertex.
    const std::vector<Node>& part_neighbors(const PortPair& part, const Node& v) {
        auto key = std::make_pair(part, v);
        auto it = part_nbr_memo_.find(key);
        if (it != part_nbr_memo_.end()) return it->second;
        std::vector<Node> out;
        auto try_port = [&](Port i, Port expect_back) {
            auto ans = view_.probe_port(v, i);
            if (ans && ans->second == expect_back) out.push_back(ans->first);
        };
        try_port(part.a, part.b);
        if (part.a != part.b) try_port(part.b, part.a);
        return part_nbr_memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    BigUint part_stage(const PortPair& part, std::uint32_t stage, const Node& v) {
        if (stage == 0) return view_.id_number(v);
        auto key = std::make_tuple(part, stage, v);
        auto it = part_stage_memo_.find(key);
        if (it != part_stage_memo_.end()) return it->second;

        BigUint self = part_stage(part, stage - 1, v);
        const auto& nbrs = part_neighbors(part, v);
        std::vector<BigUint> nbr_colors;
        nbr_colors.reserve(nbrs.size());
        for (const auto& nb : nbrs) nbr_colors.push_back(part_stage(part, stage - 1, nb));

        BigUint result;
        if (stage <= plan_->part_steps.size()) {
            result = reduce_step_eval(plan_->part_steps[stage - 1], self, nbr_colors);
        } else {
            // Greedy finish round: a vertex holding a local-maximum color > 3
            // recolors to the smallest free color in {1,2,3}.
            bool local_max = self > BigUint(3);
            for (const auto& nc : nbr_colors) {
                if (!(self > nc)) local_max = false;
            }
            if (local_max) {
                for (std::uint64_t c = 1; c <= 3; ++c) {
                    bool used = false;
                    for (const auto& nc : nbr_colors) {
                        if (nc == BigUint(c)) used = true;
                    }
                    if (!used) {
                        result = BigUint(c);
                        break;
                    }
                }
                if (result.is_zero()) throw std::logic_error("no free color in a degree-2 part");
            } else {
                result = self;
            }
        }
        return part_stage_memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    BigUint reduce_stage(std::uint32_t stage, const Node& v) {
        if (stage == 0) return combined_color(v).value;
        auto key = std::make_pair(stage, v);
        auto it = reduce_memo_.find(key);
        if (it != reduce_memo_.end()) return it->second;
        const ReduceStep& st = plan_->reduce_steps[stage - 1];
        BigUint self = reduce_stage(stage - 1, v);
        std::vector<BigUint> nbr_colors;
        for (const auto& [nb, back] : ports_of(v)) nbr_colors.push_back(reduce_stage(stage - 1, nb));
        BigUint result = reduce_step_eval(st, self, nbr_colors);
        return reduce_memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    View& view_;
    std::shared_ptr<const ColoringPlan> plan_;
    std::map<Node, std::vector<std::pair<Node, Port>>> ports_memo_;
    std::map<std::pair<PortPair, Node>, std::vector<Node>> part_nbr_memo_;
    std::map<std::tuple<PortPair, std::uint32_t, Node>, BigUint> part_stage_memo_;
    std::map<Node, VertexColor> combined_memo_;
    std::map<std::pair<std::uint32_t, Node>, BigUint> reduce_memo_;
};

} // namespace problocal
