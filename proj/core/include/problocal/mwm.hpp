#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "problocal/augenum.hpp"
#include "problocal/augstruct.hpp"
#include "problocal/coloring.hpp"
#include "problocal/probe.hpp"
#include "problocal/rational.hpp"
#include "problocal/seqsim.hpp"
#include "problocal/views.hpp"

namespace problocal {

/// Weight preprocessing: normalize so the maximum weight is exactly 1, round
/// every weight down to the nearest multiple of eps/n, and drop edges that
/// round to zero. Rounded weights are kept as integer multiples of eps/n so
/// all gain arithmetic is exact.
struct MwmSetup {
    Rational eps;
    std::uint32_t k = 0;      // floor(2/eps): non-matching edge budget per structure
    std::uint32_t rounds = 0; // L = ceil(2*(2k+1)*ln(2/eps)): augmentation phases
    Rational unit;            // eps/n
    std::map<EdgeRef, Rational> normalized;  // original weights after normalization
    std::map<EdgeRef, std::int64_t> units;   // surviving edges -> rounded weight / unit
    std::vector<EdgeRef> dropped;            // rounded to zero
    Rational w_min_eps;                      // min normalized weight >= eps/n among survivors

    bool alive(const EdgeRef& e) const { return units.count(e) != 0; }
    Rational rounded(const EdgeRef& e) const {
        auto it = units.find(e);
        return it == units.end() ? Rational(0) : Rational(it->second) * unit;
    }
    Rational rounded_weight_of(const std::set<EdgeRef>& m) const {
        Rational total(0);
        for (const auto& e : m) total = total + rounded(e);
        return total;
    }
    Rational normalized_weight_of(const std::set<EdgeRef>& m) const {
        Rational total(0);
        for (const auto& e : m) total = total + normalized.at(e);
        return total;
    }
};

MwmSetup preprocess_weights(const LabeledGraph& g, const Rational& eps);

/// Scan rank of the index-greedy MIS: structures with higher gain-index come
/// first; ties inside a gain-index class break by the intersection-graph
/// coloring.
struct IgRank {
    std::int64_t neg_gamma = 0;
    VertexColor color;
    friend bool operator<(const IgRank& a, const IgRank& b) {
        if (a.neg_gamma != b.neg_gamma) return a.neg_gamma < b.neg_gamma;
        return a.color < b.color;
    }
};

std::uint64_t mwm_intersection_degree_bound(std::uint32_t k, std::uint32_t delta);

class MwmOracle;

/// Probe view of the intersection graph of (M_{level-1},[1,k])-augmenting
/// structures.
class StructIntersectionView {
public:
    using Node = AugStruct;

    StructIntersectionView(MwmOracle& oracle, std::uint32_t level);

    std::optional<std::pair<Node, Port>> probe_port(const Node& p, Port i);
    BigUint id_number(const Node& p) const;
    const BigUint& id_space() const { return id_space_; }
    std::uint64_t degree_bound() const { return degree_bound_; }

private:
    MwmOracle* oracle_;
    std::uint32_t level_;
    std::uint32_t n_;
    BigUint id_space_;
    std::uint64_t degree_bound_;
};

/// Recursive membership oracle for the approximate maximum-weight matching.
class MwmOracle {
public:
    MwmOracle(const LabeledGraph& g, ProbeSession& s, MwmSetup setup);

    const MwmSetup& setup() const { return setup_; }
    std::uint32_t top_level() const { return setup_.rounds; }

    bool member(std::uint32_t level, const EdgeRef& e);
    bool in_selected(std::uint32_t level, const EdgeRef& e);

    const std::vector<AugStruct>& structs_at_vertex(std::uint32_t level, Vertex x);
    std::vector<AugStruct> structs_through_edge(std::uint32_t level, const EdgeRef& e);
    const std::vector<AugStruct>& intersection_neighbors(std::uint32_t level, const AugStruct& p);

    std::int64_t gain_units_of(std::uint32_t level, const AugStruct& p);
    std::int64_t gamma(std::uint32_t level, const AugStruct& p);

    /// Index-greedy MIS membership over I(M_{level-1}).
    bool igmis_member(std::uint32_t level, const AugStruct& p);

    const LabeledGraph& graph() const { return *g_; }
    ProbeSession& session() { return *session_; }

private:
    struct LevelState {
        std::unique_ptr<StructIntersectionView> view;
        std::unique_ptr<ColorOracle<StructIntersectionView>> colors;
        std::unique_ptr<
            SeqSimulator<StructIntersectionView, std::function<IgRank(const AugStruct&)>, char>>
            mis;
        std::map<Vertex, std::vector<AugStruct>> at_vertex;
        std::map<AugStruct, std::vector<AugStruct>> neighbors;
        std::map<AugStruct, std::int64_t> gains;
        std::map<EdgeRef, char> selected;
    };
    LevelState& level_state(std::uint32_t level);

    const LabeledGraph* g_;
    ProbeSession* session_;
    MwmSetup setup_;
    std::vector<LevelState> levels_;
    std::map<std::pair<std::uint32_t, EdgeRef>, char> member_memo_;
};

/// Membership of e in M_L for the given preprocessing.
bool apx_mwm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const MwmSetup& setup);
bool apx_mwm(const LabeledGraph& g, ProbeSession& s, const EdgeRef& e, const Rational& eps);

struct MwmGlobalTrace {
    MwmSetup setup;
    std::vector<std::set<EdgeRef>> matchings;              // M_1 .. M_L
    std::vector<std::vector<AugStruct>> level_nodes;       // nodes of I(M_{i-1})
    std::vector<std::map<AugStruct, std::int64_t>> level_gains;
    std::vector<std::set<AugStruct>> level_selected;       // the applied augmentation set
    const std::set<EdgeRef>& final_matching() const { return matchings.back(); }
};
MwmGlobalTrace global_apx_mwm(const LabeledGraph& g, const Rational& eps);

} // namespace problocal
