#pragma once

// Exact Gaussian-integer arithmetic and the primality predicate every other
// module builds on. All functions are pure and safe to call concurrently.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gmoat {

/// Largest norm accepted anywhere in the library. Leaves headroom so that
/// a^2 + b^2 and the squared distances derived from it never wrap.
inline constexpr std::int64_t kMaxNorm = std::int64_t{1} << 62;

/// A lattice point re + im*i.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
    /// Lexicographic on (re, im).
    friend constexpr auto operator<=>(const GaussInt&, const GaussInt&) = default;
};

std::string to_string(const GaussInt& z);

/// re^2 + im^2. Throws std::range_error when the result exceeds kMaxNorm.
std::int64_t norm(const GaussInt& z);

/// Squared Euclidean distance between two lattice points (exact).
std::int64_t distance_sq(const GaussInt& p, const GaussInt& q);

/// Orders points by (norm, re, im); the canonical order of prime sets.
struct NormOrder {
    bool operator()(const GaussInt& lhs, const GaussInt& rhs) const;
};

/// Deterministic primality for every 64-bit unsigned value.
bool is_rational_prime(std::uint64_t n);

/// Gaussian primality by the three-case characterisation:
///   re, im both nonzero: norm is a rational prime;
///   one coordinate zero: the other's absolute value is a prime = 3 (mod 4).
/// Zero and the units are not prime.
bool is_gaussian_prime(const GaussInt& z);

/// Ring product. Throws std::range_error if the result leaves the
/// supported range.
GaussInt gaussian_mul(const GaussInt& z, const GaussInt& w);

GaussInt conjugate(const GaussInt& z);

/// The associates and their reflections {(+-re, +-im), (+-im, +-re)},
/// deduplicated and sorted lexicographically. Throws std::invalid_argument
/// for the origin.
std::vector<GaussInt> eightfold_orbit(const GaussInt& z);

/// Reflection across the line re = im.
constexpr GaussInt reflect(const GaussInt& z) { return {z.im, z.re}; }

/// Image of z in the first octant (re >= im >= 0) under the eightfold
/// symmetry.
GaussInt canonical_octant(const GaussInt& z);

/// floor(sqrt(n)) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

}  // namespace gmoat
