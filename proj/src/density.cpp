#include "gmoat/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmoat {

namespace {

__extension__ typedef __int128 i128;

bool in_square(const GaussInt& z, std::int64_t a, std::int64_t b, std::int64_t r) {
    return z.re >= a && z.re <= a + r && z.im >= b && z.im <= b + r;
}

}  // namespace

double gauss_error_bound(std::int64_t radius) {
    return 2.0 * std::numbers::sqrt2 * std::numbers::pi * static_cast<double>(radius);
}

LatticeCount lattice_count_disk(std::int64_t radius) {
    if (radius < 0) throw std::invalid_argument("lattice_count_disk: negative radius");
    if (static_cast<i128>(radius) * radius > kMaxNorm) {
        throw std::range_error("lattice_count_disk: radius " + std::to_string(radius) +
                               " squared exceeds 2^62");
    }
    const std::int64_t r_sq = radius * radius;
    std::int64_t exact = 0;
    for (std::int64_t x = -radius; x <= radius; ++x) exact += 2 * isqrt(r_sq - x * x) + 1;

    LatticeCount out;
    out.radius = radius;
    out.exact = exact;
    out.estimate = std::numbers::pi * static_cast<double>(r_sq);
    out.error = static_cast<double>(exact) - out.estimate;
    return out;
}

DensityEstimate expected_primes_square(std::int64_t a, std::int64_t b, std::int64_t r) {
    if (a < 0 || b < 0) throw std::invalid_argument("square corner must be in the first quadrant");
    if (a == 0 && b == 0) throw std::invalid_argument("square at the origin: ln(n2) is undefined");
    if (r < 1) throw std::invalid_argument("square side must be >= 1");

    DensityEstimate est;
    est.a = a;
    est.b = b;
    est.r = r;
    est.n1 = norm({a + r, b + r});
    est.n2 = norm({a, b});
    est.predicted = 2.0 * static_cast<double>(r) * static_cast<double>(a + b + r) /
                    std::log(static_cast<double>(est.n1));

    // Every point of the square has norm <= n1, so the octant sieve at n1
    // plus the reflection sees all of them.
    const auto set = sieve_octant(std::max<std::int64_t>(est.n1, 2), true);
    for (const auto& z : set.primes()) {
        if (in_square(z, a, b, r)) ++est.empirical;
        if (z.re != z.im && in_square(reflect(z), a, b, r)) ++est.empirical;
    }
    return est;
}

AreaProbability considered_area_probability(std::int64_t n1, std::int64_t radius) {
    if (n1 < 2) throw std::invalid_argument("considered_area_probability needs n1 >= 2");
    AreaProbability out;
    out.probability = 0.7 / std::log(static_cast<double>(n1));
    out.area = 0.7 * static_cast<double>(radius) * static_cast<double>(radius);
    out.area_error_bound = gauss_error_bound(radius);
    return out;
}

std::vector<DensityBand> annulus_density_profile(const PrimeSet& set, int bands) {
    if (bands < 1) throw std::invalid_argument("need at least one band");
    const std::int64_t limit = set.norm_max();
    const i128 b_sq = static_cast<i128>(bands) * bands;

    // Band k holds moduli in ((k-1) R / B, k R / B] with R^2 = norm_max, i.e.
    // (k-1)^2 N < n B^2 <= k^2 N.
    auto band_of = [&](std::int64_t n) -> int {
        if (n == 0) return 0;
        auto k = static_cast<std::int64_t>(
            std::ceil(std::sqrt(static_cast<double>(n) * bands * bands / static_cast<double>(limit))));
        k = std::max<std::int64_t>(k, 1);
        while (k > 1 && static_cast<i128>(n) * b_sq <= static_cast<i128>(k - 1) * (k - 1) * limit) --k;
        while (static_cast<i128>(n) * b_sq > static_cast<i128>(k) * k * limit) ++k;
        return static_cast<int>(k - 1);
    };

    const double outer = std::sqrt(static_cast<double>(limit));
    std::vector<DensityBand> out(static_cast<std::size_t>(bands));
    for (int k = 0; k < bands; ++k) {
        out[k].band = k + 1;
        out[k].inner_radius = outer * k / bands;
        out[k].outer_radius = outer * (k + 1) / bands;
    }

    const std::int64_t min_im = set.include_axes() ? 0 : 1;
    for (std::int64_t im = min_im; 2 * im * im <= limit; ++im) {
        for (std::int64_t re = std::max<std::int64_t>(im, 1); re * re + im * im <= limit; ++re) {
            ++out[band_of(re * re + im * im)].lattice;
        }
    }
    for (const auto& z : set.primes()) ++out[band_of(norm(z))].primes;
    for (auto& band : out) {
        band.density = band.lattice == 0
                           ? 0.0
                           : static_cast<double>(band.primes) / static_cast<double>(band.lattice);
    }
    return out;
}

bool three_square_eligible(std::uint64_t n) {
    if (n == 0) return true;
    while (n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

}  // namespace gmoat
