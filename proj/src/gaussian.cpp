#include "gmoat/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmoat {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong-probable-prime round; n odd, n - 1 = d * 2^s.
bool strong_probable_prime(u64 n, u64 witness, u64 d, int s) {
    u64 x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<u64, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::int64_t checked_norm(i128 re, i128 im, const GaussInt& z) {
    i128 n = re * re + im * im;
    if (n > kMaxNorm) {
        throw std::range_error("norm of " + to_string(z) + " exceeds 2^62");
    }
    return static_cast<std::int64_t>(n);
}

}  // namespace

std::string to_string(const GaussInt& z) {
    return "(" + std::to_string(z.re) + "," + std::to_string(z.im) + ")";
}

std::int64_t norm(const GaussInt& z) {
    return checked_norm(z.re, z.im, z);
}

std::int64_t distance_sq(const GaussInt& p, const GaussInt& q) {
    i128 dx = static_cast<i128>(q.re) - p.re;
    i128 dy = static_cast<i128>(q.im) - p.im;
    i128 d = dx * dx + dy * dy;
    if (d > std::numeric_limits<std::int64_t>::max()) {
        throw std::range_error("distance between " + to_string(p) + " and " + to_string(q) +
                               " is not representable");
    }
    return static_cast<std::int64_t>(d);
}

bool NormOrder::operator()(const GaussInt& lhs, const GaussInt& rhs) const {
    auto nl = norm(lhs);
    auto nr = norm(rhs);
    if (nl != nr) return nl < nr;
    return lhs < rhs;
}

bool is_rational_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes are a complete witness set below 3.3e24.
    for (u64 a : kSmallPrimes) {
        if (!strong_probable_prime(n, a, d, s)) return false;
    }
    return true;
}

bool is_gaussian_prime(const GaussInt& z) {
    auto n = norm(z);
    if (z.re != 0 && z.im != 0) return is_rational_prime(static_cast<u64>(n));
    // On an axis; the origin has norm 0 and fails below.
    u64 magnitude = static_cast<u64>(z.re != 0 ? (z.re < 0 ? -z.re : z.re)
                                               : (z.im < 0 ? -z.im : z.im));
    return magnitude % 4 == 3 && is_rational_prime(magnitude);
}

GaussInt gaussian_mul(const GaussInt& z, const GaussInt& w) {
    i128 re = static_cast<i128>(z.re) * w.re - static_cast<i128>(z.im) * w.im;
    i128 im = static_cast<i128>(z.re) * w.im + static_cast<i128>(w.re) * z.im;
    constexpr i128 limit = i128{1} << 31;
    if (re > limit || re < -limit || im > limit || im < -limit) {
        throw std::range_error("product " + to_string(z) + "*" + to_string(w) +
                               " leaves the supported range");
    }
    GaussInt product{static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
    checked_norm(re, im, product);
    return product;
}

GaussInt conjugate(const GaussInt& z) { return {z.re, -z.im}; }

std::vector<GaussInt> eightfold_orbit(const GaussInt& z) {
    if (z.re == 0 && z.im == 0) {
        throw std::invalid_argument("eightfold_orbit: the origin has no orbit");
    }
    std::vector<GaussInt> orbit;
    orbit.reserve(8);
    for (int sr : {-1, 1}) {
        for (int si : {-1, 1}) {
            orbit.push_back({sr * z.re, si * z.im});
            orbit.push_back({sr * z.im, si * z.re});
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

GaussInt canonical_octant(const GaussInt& z) {
    std::int64_t x = z.re < 0 ? -z.re : z.re;
    std::int64_t y = z.im < 0 ? -z.im : z.im;
    return x >= y ? GaussInt{x, y} : GaussInt{y, x};
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of a negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace gmoat
