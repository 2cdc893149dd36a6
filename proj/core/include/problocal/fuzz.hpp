#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "problocal/graph.hpp"

namespace problocal {

/// One query of a stateless algorithm under test.
struct FuzzQuery {
    bool is_edge = false;
    Vertex v = 0;
    EdgeRef e;

    static FuzzQuery vertex(Vertex x) { return FuzzQuery{false, x, {}}; }
    static FuzzQuery edge(const EdgeRef& x) { return FuzzQuery{true, 0, x}; }

    std::string str() const { return is_edge ? e.str() : std::to_string(v); }
    friend bool operator<(const FuzzQuery& a, const FuzzQuery& b) {
        if (a.is_edge != b.is_edge) return a.is_edge < b.is_edge;
        if (a.is_edge) return a.e < b.e;
        return a.v < b.v;
    }
};

struct FuzzReport {
    bool pass = true;
    std::uint32_t trials = 0;
    std::string detail; // witness on failure
};

/// Query-order-obliviousness fuzz: evaluates the whole query set under
/// `trials` random permutations; every query must answer identically in every
/// order, and the assembled answer map must satisfy the problem's solution
/// predicate (when given). `answer` receives queries one at a time and must
/// treat each as an independent stateless evaluation.
FuzzReport consistency_fuzz(
    const std::vector<FuzzQuery>& queries,
    const std::function<std::string(const FuzzQuery&)>& answer,
    const std::function<std::optional<std::string>(const std::map<FuzzQuery, std::string>&)>&
        validate,
    std::uint32_t trials, std::uint64_t seed);

} // namespace problocal
