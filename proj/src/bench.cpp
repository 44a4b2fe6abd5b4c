#include "gmoat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "gmoat/sieve.hpp"

namespace gmoat {

namespace {

// Counts checks and records the primes among the checked points.
class Checker {
public:
    void check(const GaussInt& z) {
        ++checks_;
        if (is_rational_prime(static_cast<std::uint64_t>(norm(z)))) {
            found_.push_back(canonical_octant(z));
        }
    }

    std::int64_t checks() const { return checks_; }

    std::vector<GaussInt> take_found() {
        std::sort(found_.begin(), found_.end(), NormOrder{});
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return std::move(found_);
    }

private:
    std::int64_t checks_ = 0;
    std::vector<GaussInt> found_;
};

bool both_prime_even_norm(std::int64_t x, std::int64_t y) {
    // x^2 + y^2 is even (> 2) when x and y share parity, so never prime.
    return x % 2 == y % 2 && is_rational_prime(static_cast<std::uint64_t>(x)) &&
           is_rational_prime(static_cast<std::uint64_t>(y));
}

}  // namespace

std::string to_string(BenchMethod method) {
    switch (method) {
        case BenchMethod::exhaustive: return "exhaustive";
        case BenchMethod::gww_filter: return "gww_filter";
        case BenchMethod::walker: return "walker";
    }
    return "unknown";
}

BenchMethod parse_bench_method(const std::string& name) {
    if (name == "exhaustive") return BenchMethod::exhaustive;
    if (name == "gww_filter") return BenchMethod::gww_filter;
    if (name == "walker") return BenchMethod::walker;
    throw std::invalid_argument("unknown bench method '" + name + "'");
}

BenchResult run_bench(BenchMethod method, std::int64_t norm_max, Ratio c) {
    if (norm_max < 2) throw std::invalid_argument("norm-max must be >= 2");
    const auto started = std::chrono::steady_clock::now();
    Checker checker;

    switch (method) {
        case BenchMethod::exhaustive:
        case BenchMethod::gww_filter:
            for (std::int64_t x = 1; x * x < norm_max; ++x) {
                for (std::int64_t y = 1; x * x + y * y <= norm_max; ++y) {
                    if (method == BenchMethod::gww_filter && both_prime_even_norm(x, y)) continue;
                    checker.check({x, y});
                }
            }
            break;
        case BenchMethod::walker: {
            const auto set = sieve_octant(norm_max, false);
            const std::int64_t side = isqrt(norm_max) + 1;
            std::vector<bool> probed(static_cast<std::size_t>(side * side), false);
            walk_all(set, c, [&](const GaussInt& z) {
                auto slot = static_cast<std::size_t>(z.re * side + z.im);
                if (probed[slot]) return;
                probed[slot] = true;
                checker.check(z);
            });
            break;
        }
    }

    BenchResult result;
    result.method = method;
    result.norm_max = norm_max;
    result.checks = checker.checks();
    result.found = checker.take_found();
    result.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return result;
}

}  // namespace gmoat
