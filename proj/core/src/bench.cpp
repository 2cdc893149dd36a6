#include "problocal/bench.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "problocal/brute.hpp"
#include "problocal/coloring.hpp"
#include "problocal/distsim.hpp"
#include "problocal/errors.hpp"
#include "problocal/mcm.hpp"
#include "problocal/mwm.hpp"
#include "problocal/orientation.hpp"
#include "problocal/seqsim.hpp"
#include "problocal/views.hpp"

namespace problocal {

namespace {

struct ProbeStats {
    std::uint64_t queries = 0;
    std::uint64_t max = 0;
    std::uint64_t total = 0;
    std::uint32_t radius_max = 0;

    void add(const ProbeSession& s) {
        ++queries;
        max = std::max(max, s.probe_count());
        total += s.probe_count();
        radius_max = std::max(radius_max, s.radius());
    }
    double mean() const { return queries == 0 ? 0.0 : static_cast<double>(total) / queries; }
};

template <class T>
std::vector<T> sample_queries(std::vector<T> all, const std::string& plan, std::uint64_t seed) {
    if (plan == "all" || plan.empty()) return all;
    if (plan.rfind("sample:", 0) == 0) {
        std::size_t want = std::stoull(plan.substr(7));
        std::mt19937_64 rng(seed);
        std::shuffle(all.begin(), all.end(), rng);
        if (all.size() > want) all.resize(want);
        std::sort(all.begin(), all.end());
        return all;
    }
    throw InputError("bad query plan: " + plan);
}

} // namespace

BenchRow run_experiment(const ExperimentSpec& spec) {
    LabeledGraph g = load_graph_or_generate(spec.graph);
    if (spec.random_weights && !g.weighted()) {
        g = with_random_weights(g, spec.weight_seed);
    }
    BenchRow row;
    row.algorithm = spec.algorithm;
    row.n = g.vertex_count();
    row.delta = g.max_degree();
    row.eps = spec.eps;

    ProbeStats stats;
    auto vertices_all = [&]() {
        std::vector<Vertex> out(g.vertex_count());
        for (Vertex v = 1; v <= g.vertex_count(); ++v) out[v - 1] = v;
        return sample_queries(std::move(out), spec.queries, spec.seed);
    };
    auto edges_all = [&]() { return sample_queries(g.edges(), spec.queries, spec.seed); };

    if (spec.algorithm == "color") {
        std::map<Vertex, std::string> colors;
        BigUint palette;
        for (Vertex v : vertices_all()) {
            ProbeSession s = ProbeSession::for_vertex(v);
            BaseView view(g, s);
            ColorOracle<BaseView> oracle(view);
            colors[v] = oracle.color(v).str();
            palette = oracle.plan().numeric_pipeline ? oracle.plan().final_palette
                                                     : oracle.plan().combined_palette;
            stats.add(s);
        }
        row.value = "palette<=" + palette.to_decimal();
        if (spec.verify) {
            if (colors.size() == g.vertex_count()) {
                if (auto bad = improper_edge(g, colors)) {
                    throw VerificationError("improper coloring on edge " + bad->str());
                }
            }
            row.optimum = "proper";
        }
    } else if (spec.algorithm == "color-seq") {
        std::map<Vertex, std::string> colors;
        std::uint32_t max_color = 0;
        for (Vertex v : vertices_all()) {
            ProbeSession s = ProbeSession::for_vertex(v);
            std::uint32_t c = l_color_greedy(g, s, v);
            colors[v] = std::to_string(c);
            max_color = std::max(max_color, c);
            stats.add(s);
        }
        row.value = "colors<=" + std::to_string(max_color);
        if (spec.verify && colors.size() == g.vertex_count()) {
            if (auto bad = improper_edge(g, colors)) {
                throw VerificationError("improper coloring on edge " + bad->str());
            }
            if (max_color > g.max_degree() + 1) {
                throw VerificationError("palette exceeds max degree + 1");
            }
            row.optimum = "proper";
        }
    } else if (spec.algorithm == "mis") {
        std::set<Vertex> members;
        for (Vertex v : vertices_all()) {
            ProbeSession s = ProbeSession::for_vertex(v);
            if (l_mis(g, s, v)) members.insert(v);
            stats.add(s);
        }
        row.value = std::to_string(members.size());
        if (spec.verify) {
            if (stats.queries == g.vertex_count() && !is_maximal_independent_set(g, members)) {
                throw VerificationError("MIS answers violate independence or maximality");
            }
            row.optimum = "maximal";
        }
    } else if (spec.algorithm == "mm") {
        std::set<EdgeRef> members;
        for (const EdgeRef& e : edges_all()) {
            ProbeSession s = ProbeSession::for_edge(e);
            if (l_mm(g, s, e)) members.insert(e);
            stats.add(s);
        }
        row.value = std::to_string(members.size());
        if (spec.verify) {
            if (stats.queries == g.edge_count() && !is_maximal_matching(g, members)) {
                throw VerificationError("MM answers violate matching or maximality");
            }
            row.optimum = "maximal";
        }
    } else if (spec.algorithm == "orient") {
        for (const EdgeRef& e : edges_all()) {
            ProbeSession s = ProbeSession::for_edge(e);
            orient_edge(g, s, e);
            stats.add(s);
        }
        if (spec.verify) {
            ReachStats rs = verify_orientation_bounds(g);
            row.value = "rad=" + std::to_string(rs.rad) + ";reach=" + std::to_string(rs.reach);
            row.optimum = "acyclic";
        }
    } else if (spec.algorithm == "mcm") {
        Rational eps = Rational::parse(spec.eps);
        std::set<EdgeRef> members;
        for (const EdgeRef& e : edges_all()) {
            ProbeSession s = ProbeSession::for_edge(e);
            if (apx_mcm(g, s, e, eps)) members.insert(e);
            stats.add(s);
        }
        row.value = std::to_string(members.size());
        if (spec.verify) {
            if (!is_matching(g, members)) throw VerificationError("mcm answers are not a matching");
            std::uint64_t opt = brute_max_matching_size(g);
            row.optimum = std::to_string(opt);
            if (opt > 0) {
                std::ostringstream r;
                r << static_cast<double>(members.size()) / static_cast<double>(opt);
                row.ratio = r.str();
            }
        }
    } else if (spec.algorithm == "mwm") {
        Rational eps = Rational::parse(spec.eps);
        MwmSetup setup = preprocess_weights(g, eps);
        std::set<EdgeRef> members;
        for (const EdgeRef& e : edges_all()) {
            ProbeSession s = ProbeSession::for_edge(e);
            if (apx_mwm(g, s, e, setup)) members.insert(e);
            stats.add(s);
        }
        Rational w = setup.normalized_weight_of(members);
        row.value = w.str();
        if (spec.verify) {
            if (!is_matching(g, members)) throw VerificationError("mwm answers are not a matching");
            Rational opt = brute_max_matching_weight(g, setup.normalized);
            row.optimum = opt.str();
            if (opt.positive()) {
                std::ostringstream r;
                r << (w / opt).to_double();
                row.ratio = r.str();
            }
        }
    } else if (spec.algorithm.rfind("dist:", 0) == 0) {
        std::string inner = spec.algorithm.substr(5);
        DistAlgorithm alg;
        if (inner == "mis") {
            alg = dist_alg_mis();
        } else if (inner == "mm") {
            alg = dist_alg_mm();
        } else if (inner == "color") {
            alg = dist_alg_color();
        } else if (inner == "orient") {
            alg = dist_alg_orient();
        } else if (inner == "mcm") {
            alg = dist_alg_mcm(Rational::parse(spec.eps));
        } else if (inner == "mwm") {
            alg = dist_alg_mwm(Rational::parse(spec.eps), g);
        } else {
            throw InputError("unknown distributed algorithm: " + inner);
        }
        DistResult res = simulate_distributed(g, alg);
        row.rounds = res.rounds;
        row.value = alg.edge_query ? std::to_string(res.edge_outputs.size())
                                   : std::to_string(res.vertex_outputs.size());
    } else {
        throw InputError("unknown algorithm: " + spec.algorithm);
    }

    row.queries = stats.queries;
    row.probes_max = stats.max;
    row.probes_mean = stats.mean();
    row.radius_max = stats.radius_max;
    return row;
}

std::string bench_csv_header() {
    return "algorithm,n,delta,eps,queries,probes_max,probes_mean,radius_max,rounds,value,optimum,"
           "ratio";
}

std::string bench_row_csv(const BenchRow& row) {
    std::ostringstream out;
    out << row.algorithm << ',' << row.n << ',' << row.delta << ',' << row.eps << ','
        << row.queries << ',' << row.probes_max << ',' << row.probes_mean << ','
        << row.radius_max << ',' << row.rounds << ',' << row.value << ',' << row.optimum << ','
        << row.ratio;
    return out.str();
}

std::string bench_rows_json(const std::vector<BenchRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        arr.push_back({{"algorithm", row.algorithm},
                       {"n", row.n},
                       {"delta", row.delta},
                       {"eps", row.eps},
                       {"queries", row.queries},
                       {"probes_max", row.probes_max},
                       {"probes_mean", row.probes_mean},
                       {"radius_max", row.radius_max},
                       {"rounds", row.rounds},
                       {"value", row.value},
                       {"optimum", row.optimum},
                       {"ratio", row.ratio}});
    }
    return arr.dump(2);
}

std::vector<ExperimentSpec> parse_experiment_specs(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("bad experiment spec JSON: ") + ex.what());
    }
    if (!doc.is_array()) throw InputError("experiment spec file must hold a JSON array");
    std::vector<ExperimentSpec> specs;
    for (const auto& item : doc) {
        ExperimentSpec spec;
        spec.algorithm = item.at("algorithm").get<std::string>();
        spec.graph = item.at("graph").get<std::string>();
        spec.eps = item.value("eps", std::string());
        spec.queries = item.value("queries", std::string("all"));
        spec.seed = item.value("seed", 0ull);
        spec.verify = item.value("verify", false);
        spec.random_weights = item.value("random_weights", false);
        spec.weight_seed = item.value("weight_seed", 1ull);
        specs.push_back(std::move(spec));
    }
    return specs;
}

} // namespace problocal
