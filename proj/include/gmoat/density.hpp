#pragma once

// Lattice-point counts in disks, the square-region prime-count model, and
// empirical density profiles. Exact counts stay in integers; only the
// model values are floating point (compare with kRelTolerance).

#include <cstdint>
#include <string>
#include <vector>

#include "gmoat/sieve.hpp"

namespace gmoat {

inline constexpr double kRelTolerance = 1e-9;

/// Elementary lattice-count error bound: |N(r) - pi r^2| <= 2 sqrt(2) pi r.
/// (Huxley's exponent 131/208 is the best known, but is not asserted.)
double gauss_error_bound(std::int64_t radius);

struct LatticeCount {
    std::int64_t radius = 0;
    std::int64_t exact = 0;   ///< #{(x, y) in Z^2 : x^2 + y^2 <= r^2}
    double estimate = 0.0;    ///< pi r^2
    double error = 0.0;       ///< exact - estimate
};

LatticeCount lattice_count_disk(std::int64_t radius);

/// Prime-count model for the square [a, a+r] x [b, b+r].
struct DensityEstimate {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t r = 0;
    std::int64_t n1 = 0;  ///< (a+r)^2 + (b+r)^2
    std::int64_t n2 = 0;  ///< a^2 + b^2
    double predicted = 0.0;     ///< 2r(a+b+r) / ln(n1)
    std::int64_t empirical = 0;  ///< Gaussian primes in the closed square
};

/// Throws std::invalid_argument when a or b is negative, both are zero, or
/// r < 1.
DensityEstimate expected_primes_square(std::int64_t a, std::int64_t b, std::int64_t r);

struct AreaProbability {
    double probability = 0.0;  ///< 0.7 / ln(n1)
    double area = 0.0;         ///< 0.7 r^2
    double area_error_bound = 0.0;  ///< lattice error bound at r, reported separately
};

AreaProbability considered_area_probability(std::int64_t n1, std::int64_t radius);

struct DensityBand {
    int band = 0;  ///< 1-based
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    std::int64_t lattice = 0;  ///< first-octant lattice points in the band
    std::int64_t primes = 0;
    double density = 0.0;      ///< primes / lattice, 0 for an empty band
};

/// Splits moduli [0, sqrt(norm_max)] into equal-width annuli (inner, outer];
/// the first band also holds modulus 0. Lattice points follow the set's
/// octant convention: re >= im >= 1, or im >= 0 without the origin when the
/// set carries axis primes.
std::vector<DensityBand> annulus_density_profile(const PrimeSet& set, int bands);

/// True iff n is not of the form 4^k (8m + 7), i.e. n is a sum of three squares.
bool three_square_eligible(std::uint64_t n);

}  // namespace gmoat
