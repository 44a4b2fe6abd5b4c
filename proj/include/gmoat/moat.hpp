#pragma once

// Moat measurement on point sets. Every distance is an exact squared integer.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gmoat/gaussian.hpp"
#include "gmoat/sieve.hpp"

namespace gmoat {

using Component = std::vector<GaussInt>;

struct MoatReport {
    std::int64_t norm_max = 0;
    std::int64_t threshold_sq = 0;  ///< steps of squared length < threshold_sq join components
    std::int64_t width_sq = 0;      ///< min squared distance left-right; 0 when nothing separates
    std::vector<Component> components;
    std::vector<GaussInt> left;   ///< everything not reachable from the origin side
    std::vector<GaussInt> right;  ///< component of the smallest-norm point
};

/// min |p - q|^2 over p in a, q in b. Throws std::invalid_argument if either
/// side is empty or the sides share a point.
std::int64_t min_crossing_distance_sq(std::span<const GaussInt> a, std::span<const GaussInt> b);

/// Connected components of the graph joining points at squared distance
/// <= threshold_sq. Members sorted by (norm, re, im); components ordered by
/// their first member.
std::vector<Component> components_at_threshold(std::span<const GaussInt> points,
                                               std::int64_t threshold_sq);
std::vector<Component> components_at_threshold(const PrimeSet& set, std::int64_t threshold_sq);

/// Smallest squared step bound under which source reaches a point of norm
/// >= target_norm (minimax edge over all walks). 0 when source already
/// qualifies, nullopt when no point of the set qualifies.
std::optional<std::int64_t> bottleneck_width_sq(std::span<const GaussInt> points,
                                                const GaussInt& source, std::int64_t target_norm);
std::optional<std::int64_t> bottleneck_width_sq(const PrimeSet& set, const GaussInt& source,
                                                std::int64_t target_norm);

struct Exploration {
    Component component;   ///< sorted by (norm, re, im)
    GaussInt farthest;     ///< maximum norm, ties to the smaller point
    bool certified_bounded = false;  ///< |m| + sqrt(step_sq) <= sqrt(norm_max) for all members
};

/// Breadth-first component of source under steps of squared length <= step_sq.
/// Throws std::invalid_argument if source is not among the points.
Exploration explore_component(std::span<const GaussInt> points, std::int64_t norm_max,
                              std::int64_t step_sq, const GaussInt& source);
Exploration explore_component(const PrimeSet& set, std::int64_t step_sq, const GaussInt& source);

/// Components under steps shorter than threshold_sq, with the origin side
/// (component of the smallest-norm point) on the right and the rest on the left.
MoatReport moat_report(std::span<const GaussInt> points, std::int64_t norm_max,
                       std::int64_t threshold_sq);

/// Path-partition form: the threshold is the longest consecutive step of
/// the walked paths; the point set is the union of path members.
struct Path;
MoatReport moat_from_paths(std::span<const Path> paths, std::int64_t norm_max);

}  // namespace gmoat
