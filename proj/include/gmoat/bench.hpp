#pragma once

// Primality-check counters for three ways of finding the primes of norm
// <= norm_max. Only the check counts are deterministic; wall time is
// informational.

#include <cstdint>
#include <string>
#include <vector>

#include "gmoat/gaussian.hpp"
#include "gmoat/walker.hpp"

namespace gmoat {

enum class BenchMethod {
    exhaustive,  ///< every (x, y) with x, y >= 1 in the quarter disk
    gww_filter,  ///< exhaustive minus coordinate pairs that are both prime with even norm
    walker,      ///< lattice points probed by walk_all's search regions, deduplicated
};

std::string to_string(BenchMethod method);
/// Throws std::invalid_argument for an unknown name.
BenchMethod parse_bench_method(const std::string& name);

struct BenchResult {
    BenchMethod method = BenchMethod::exhaustive;
    std::int64_t norm_max = 0;
    std::int64_t checks = 0;
    std::int64_t wall_ns = 0;
    /// Primes the method found, folded into the first octant, off-axis,
    /// sorted by (norm, re, im).
    std::vector<GaussInt> found;
};

BenchResult run_bench(BenchMethod method, std::int64_t norm_max, Ratio c = {});

}  // namespace gmoat
