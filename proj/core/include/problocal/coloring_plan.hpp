#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "problocal/biguint.hpp"

namespace problocal {

/// One application of the one-round palette reduction built from a
/// degree-bounded cover-free family: colors in [1..before] are mapped to
/// polynomials of degree <= d over F_q (coefficients = base-q digits of the
/// color), and the new color is the first point of the polynomial's graph not
/// covered by any neighbor's polynomial. Requires q >= delta*d + 1 and
/// q^(d+1) >= before; the new palette is q^2.
struct ReduceStep {
    std::uint64_t q = 0;
    std::uint32_t degree = 0;
    BigUint palette_before;
    std::uint64_t palette_after = 0; // q^2, always fits u64 (q < 2^31)
};

/// Smallest-q^2 reduction step for palette c and degree bound delta, or
/// nullopt when no step strictly shrinks the palette.
std::optional<ReduceStep> choose_reduction(const BigUint& c, std::uint64_t delta);

/// Everything the coloring pipeline precomputes from (id_space, degree_bound).
/// A plan is a pure function of those two values; all queries against the same
/// graph view share it, which is what makes answers query-order independent.
struct ColoringPlan {
    BigUint id_space;            // IDs live in [1 .. id_space]
    std::uint64_t degree_bound = 0;

    // Per-part 3-coloring (parts have max degree 2): reduction cascade from
    // ID-colors down to a fixed point, then greedy local-max rounds to 3.
    std::vector<ReduceStep> part_steps;
    std::uint64_t part_fixed_palette = 0;
    std::uint32_t finish_rounds = 0;
    std::uint32_t part_stage_count() const {
        return static_cast<std::uint32_t>(part_steps.size()) + finish_rounds;
    }

    // Combined stage: one 3-color component per part, 3^(degree_bound^2)
    // conceptual palette. Folding that vector into a number (and then
    // reducing) is only done when the degree bound keeps the arithmetic sane;
    // otherwise colors stay sparse vectors under lexicographic order.
    bool numeric_pipeline = false;
    BigUint combined_palette; // numeric route only

    std::vector<ReduceStep> reduce_steps; // at most 3 applications
    BigUint final_palette;                // numeric route: after reduce_steps

    /// Documented palette guarantee of the full pipeline: final palette is at
    /// most kPaletteConstant * degree_bound^2 (numeric route).
    static constexpr std::uint64_t kPaletteConstant = 16;

    /// Shared, memoized plan lookup (plans are pure functions of the key).
    static std::shared_ptr<const ColoringPlan> get(const BigUint& id_space,
                                                   std::uint64_t degree_bound);
};

/// Degree bound above which the combined stage is not folded into a numeric
/// color. Intersection graphs of augmenting structures exceed this
/// immediately; base graphs at desk scale never do.
constexpr std::uint64_t kNumericPipelineMaxDegree = 64;

} // namespace problocal
