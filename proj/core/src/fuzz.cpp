#include "problocal/fuzz.hpp"

#include <algorithm>
#include <random>

namespace problocal {

FuzzReport consistency_fuzz(
    const std::vector<FuzzQuery>& queries,
    const std::function<std::string(const FuzzQuery&)>& answer,
    const std::function<std::optional<std::string>(const std::map<FuzzQuery, std::string>&)>&
        validate,
    std::uint32_t trials, std::uint64_t seed) {
    FuzzReport report;
    report.trials = trials;

    std::mt19937_64 rng(seed);
    std::map<FuzzQuery, std::string> baseline;
    std::vector<FuzzQuery> order = queries;

    for (std::uint32_t t = 0; t < trials; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        std::map<FuzzQuery, std::string> answers;
        for (const auto& q : order) answers[q] = answer(q);
        if (t == 0) {
            baseline = std::move(answers);
            continue;
        }
        for (const auto& [q, a] : answers) {
            if (a != baseline.at(q)) {
                report.pass = false;
                report.detail = "query " + q.str() + " answered '" + baseline.at(q) +
                                "' first but '" + a + "' in permutation " + std::to_string(t + 1);
                return report;
            }
        }
    }
    if (validate) {
        if (auto bad = validate(baseline)) {
            report.pass = false;
            report.detail = "solution predicate failed: " + *bad;
        }
    }
    return report;
}

} // namespace problocal
