#include "gmoat/sieve.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmoat/walker.hpp"

namespace gmoat {

PrimeSet::PrimeSet(std::int64_t norm_max, bool include_axes, std::vector<GaussInt> primes)
    : norm_max_(norm_max), include_axes_(include_axes), primes_(std::move(primes)) {
    NormOrder order;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const auto& z = primes_[i];
        if (z.im < 0 || z.re < z.im) {
            throw std::invalid_argument("prime set member " + to_string(z) +
                                        " is outside the first octant");
        }
        if (!include_axes_ && z.im == 0) {
            throw std::invalid_argument("axis prime " + to_string(z) +
                                        " in a set built without axes");
        }
        if (norm(z) > norm_max_) {
            throw std::invalid_argument("prime set member " + to_string(z) +
                                        " exceeds the norm bound");
        }
        if (!is_gaussian_prime(z)) {
            throw std::invalid_argument(to_string(z) + " is not a Gaussian prime");
        }
        if (i > 0 && !order(primes_[i - 1], z)) {
            throw std::invalid_argument("prime set is not strictly sorted at " + to_string(z));
        }
    }
}

bool PrimeSet::contains(const GaussInt& z) const {
    return std::binary_search(primes_.begin(), primes_.end(), z, NormOrder{});
}

std::vector<GaussInt> PrimeSet::interior() const {
    std::vector<GaussInt> out;
    out.reserve(primes_.size());
    std::copy_if(primes_.begin(), primes_.end(), std::back_inserter(out),
                 [](const GaussInt& z) { return z.im != 0; });
    return out;
}

PrimeSet sieve_octant(std::int64_t norm_max, bool include_axes) {
    if (norm_max < 2) throw std::invalid_argument("norm-max must be >= 2");
    if (norm_max > kMaxNorm) throw std::range_error("norm-max exceeds 2^62");

    std::vector<GaussInt> primes;
    for (std::int64_t im = 1; 2 * im * im <= norm_max; ++im) {
        const std::int64_t im_sq = im * im;
        for (std::int64_t re = im; re * re <= norm_max - im_sq; ++re) {
            if (is_rational_prime(static_cast<std::uint64_t>(re * re + im_sq))) {
                primes.push_back({re, im});
            }
        }
    }
    if (include_axes) {
        const std::int64_t limit = isqrt(norm_max);
        for (std::int64_t p = 3; p <= limit; p += 4) {
            if (is_rational_prime(static_cast<std::uint64_t>(p))) primes.push_back({p, 0});
        }
    }
    std::sort(primes.begin(), primes.end(), NormOrder{});
    return PrimeSet(norm_max, include_axes, std::move(primes));
}

std::size_t count_in_disk(const PrimeSet& set, std::int64_t radius_sq) {
    if (radius_sq > set.norm_max()) {
        throw std::range_error("disk of squared radius " + std::to_string(radius_sq) +
                               " exceeds the sieved norm bound " +
                               std::to_string(set.norm_max()));
    }
    auto primes = set.primes();
    auto it = std::partition_point(primes.begin(), primes.end(),
                                   [&](const GaussInt& z) { return norm(z) <= radius_sq; });
    return static_cast<std::size_t>(it - primes.begin());
}

std::vector<std::pair<int, std::size_t>> count_per_slice(std::span<const Path> paths) {
    std::vector<std::pair<int, std::size_t>> counts;
    counts.reserve(paths.size());
    for (const auto& path : paths) counts.emplace_back(path.index, path.members.size());
    return counts;
}

std::vector<GaussInt> mirrored(const PrimeSet& set) {
    std::vector<GaussInt> out;
    out.reserve(2 * set.size());
    for (const auto& z : set.primes()) {
        out.push_back(z);
        if (z.re != z.im) out.push_back(reflect(z));
    }
    std::sort(out.begin(), out.end(), NormOrder{});
    return out;
}

}  // namespace gmoat
