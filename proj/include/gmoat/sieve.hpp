#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gmoat/gaussian.hpp"

namespace gmoat {

/// First-octant Gaussian primes (re >= im >= 0) with norm <= norm_max, sorted
/// by (norm, re, im). Immutable once built.
///
/// Axis primes (p, 0) with p = 3 (mod 4) are carried only when include_axes
/// is set; otherwise every member has im >= 1 and the diagonal contributes
/// exactly (1, 1).
class PrimeSet {
public:
    PrimeSet() = default;

    /// Validates every invariant (primality, octant, norm bound, order,
    /// axis flag) and throws std::invalid_argument on the first violation.
    /// Completeness is not checked here.
    PrimeSet(std::int64_t norm_max, bool include_axes, std::vector<GaussInt> primes);

    std::int64_t norm_max() const { return norm_max_; }
    bool include_axes() const { return include_axes_; }
    std::span<const GaussInt> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }

    bool contains(const GaussInt& z) const;

    /// Members strictly off the real axis, in set order.
    std::vector<GaussInt> interior() const;

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

private:
    std::int64_t norm_max_ = 0;
    bool include_axes_ = false;
    std::vector<GaussInt> primes_;
};

/// Enumerates the first octant line by line (im = 1, 2, ...) testing each
/// re^2 + im^2 for rational primality, then appends axis primes if asked.
/// Throws std::invalid_argument when norm_max < 2 and std::range_error when
/// norm_max exceeds kMaxNorm.
PrimeSet sieve_octant(std::int64_t norm_max, bool include_axes);

/// Number of members with norm <= radius_sq. Throws std::range_error when
/// radius_sq lies beyond the sieved range.
std::size_t count_in_disk(const PrimeSet& set, std::int64_t radius_sq);

struct Path;

/// (path index, |path|) for each path, in input order.
std::vector<std::pair<int, std::size_t>> count_per_slice(std::span<const Path> paths);

/// The set members plus their reflections across re = im (first quadrant,
/// both octants), sorted by (norm, re, im).
std::vector<GaussInt> mirrored(const PrimeSet& set);

}  // namespace gmoat
