#include "problocal/coloring_plan.hpp"

#include <map>
#include <mutex>
#include <string>

#include "problocal/errors.hpp"
#include "problocal/primes.hpp"

namespace problocal {

namespace {

/// Smallest q with q^(d+1) >= c, or nullopt when that q would exceed 2^31
/// (such degrees are simply not usable for this palette).
std::optional<std::uint64_t> min_base_for(const BigUint& c, std::uint32_t d) {
    auto pow_ge = [&](std::uint64_t q) { return BigUint::pow(q, d + 1) >= c; };
    std::uint64_t lo = 2, hi = 2;
    while (!pow_ge(hi)) {
        if (hi >= (1ull << 31)) return std::nullopt;
        hi *= 2;
    }
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_ge(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

} // namespace

std::optional<ReduceStep> choose_reduction(const BigUint& c, std::uint64_t delta) {
    if (c <= BigUint(4)) return std::nullopt;
    std::optional<ReduceStep> best;
    const std::size_t d_cap = c.bit_length() + 2;
    for (std::uint32_t d = 1; d <= d_cap; ++d) {
        // Once the q >= delta*d+1 floor alone exceeds the best q found, larger
        // degrees cannot help.
        std::uint64_t floor_q = delta * static_cast<std::uint64_t>(d) + 1;
        if (best && floor_q * floor_q >= best->palette_after) break;
        auto base = min_base_for(c, d);
        if (!base) continue;
        std::uint64_t q = next_prime(std::max<std::uint64_t>(floor_q, *base));
        if (q >= (1ull << 31)) continue;
        std::uint64_t after = q * q;
        if (BigUint(after) >= c) continue;
        if (!best || after < best->palette_after) {
            best = ReduceStep{q, d, c, after};
        }
    }
    return best;
}

std::shared_ptr<const ColoringPlan> ColoringPlan::get(const BigUint& id_space,
                                                      std::uint64_t degree_bound) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const ColoringPlan>>
        cache;
    const auto key = std::make_pair(id_space.to_decimal(), degree_bound);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    auto plan = std::make_shared<ColoringPlan>();
    plan->id_space = id_space;
    plan->degree_bound = degree_bound;

    // Per-part cascade at degree bound 2.
    BigUint c = id_space;
    while (auto step = choose_reduction(c, 2)) {
        plan->part_steps.push_back(*step);
        c = BigUint(step->palette_after);
    }
    plan->part_fixed_palette = c.fits_u64() ? c.as_u64() : UINT64_MAX;
    if (!c.fits_u64() || plan->part_fixed_palette > (1ull << 20)) {
        throw InputError("per-part palette failed to reach a small fixed point");
    }
    plan->finish_rounds = plan->part_fixed_palette > 3
                              ? static_cast<std::uint32_t>(plan->part_fixed_palette - 3)
                              : 0;

    plan->numeric_pipeline = degree_bound <= kNumericPipelineMaxDegree;
    if (plan->numeric_pipeline) {
        plan->combined_palette = BigUint::pow(3, degree_bound * degree_bound);
        BigUint cur = plan->combined_palette;
        // Two general reductions followed by one more application; no-gain
        // applications are skipped (short-circuit for small palettes).
        for (int i = 0; i < 3; ++i) {
            auto step = choose_reduction(cur, degree_bound);
            if (!step) break;
            plan->reduce_steps.push_back(*step);
            cur = BigUint(step->palette_after);
        }
        plan->final_palette = cur;
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, _] = cache.emplace(key, std::move(plan));
    return it->second;
}

} // namespace problocal
