#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gmoat/density.hpp"
#include "gmoat/sieve.hpp"
#include "oracles.hpp"

TEST_CASE("lattice counts") {
    CHECK(gmoat::lattice_count_disk(0).exact == 1);
    CHECK(gmoat::lattice_count_disk(1).exact == 5);
    CHECK(gmoat::lattice_count_disk(10).exact == 317);
    for (std::int64_t r = 0; r <= 60; ++r) REQUIRE(gmoat::lattice_count_disk(r).exact == oracle::lattice_disk(r));
    auto c = gmoat::lattice_count_disk(10);
    CHECK(c.estimate == doctest::Approx(100 * std::numbers::pi).epsilon(gmoat::kRelTolerance));
    CHECK(c.error == doctest::Approx(317 - 100 * std::numbers::pi).epsilon(gmoat::kRelTolerance));
    CHECK_THROWS_AS(gmoat::lattice_count_disk(-1), std::invalid_argument);
}

TEST_CASE("Gauss bound holds") {
    for (std::int64_t r = 1; r <= 2000; ++r) {
        auto c = gmoat::lattice_count_disk(r);
        REQUIRE(std::abs(c.error) <= gmoat::gauss_error_bound(r));
    }
}

TEST_CASE("square prime-count model") {
    auto est = gmoat::expected_primes_square(5, 4, 21);
    CHECK(est.n1 == 1301);
    CHECK(est.n2 == 41);
    CHECK(est.predicted == doctest::Approx(1260.0 / std::log(1301.0)).epsilon(gmoat::kRelTolerance));
    CHECK(est.predicted == doctest::Approx(175.7104).epsilon(1e-6));

    std::int64_t brute = 0;
    for (std::int64_t x = 5; x <= 26; ++x) {
        for (std::int64_t y = 4; y <= 25; ++y) brute += oracle::divisor_prime(x, y) ? 1 : 0;
    }
    CHECK(est.empirical == brute);
    CHECK(est.empirical == 105);

    // Squares touching an axis count axis primes too.
    auto axis = gmoat::expected_primes_square(0, 1, 10);
    std::int64_t axis_brute = 0;
    for (std::int64_t x = 0; x <= 10; ++x) {
        for (std::int64_t y = 1; y <= 11; ++y) axis_brute += oracle::divisor_prime(x, y) ? 1 : 0;
    }
    CHECK(axis.empirical == axis_brute);

    CHECK_THROWS_AS(gmoat::expected_primes_square(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::expected_primes_square(-1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::expected_primes_square(1, 2, 0), std::invalid_argument);
}

TEST_CASE("considered area probability") {
    auto p = gmoat::considered_area_probability(7, 3);
    CHECK(p.probability == doctest::Approx(0.359729).epsilon(1e-6));
    CHECK(p.area == doctest::Approx(6.3).epsilon(gmoat::kRelTolerance));
    CHECK(p.area_error_bound == doctest::Approx(gmoat::gauss_error_bound(3)));
    CHECK(gmoat::considered_area_probability(1301, 1).probability == doctest::Approx(0.097617).epsilon(1e-6));
    CHECK_THROWS_AS(gmoat::considered_area_probability(1, 1), std::invalid_argument);
}

TEST_CASE("annulus profile counts") {
    auto set = gmoat::sieve_octant(100, false);
    auto one = gmoat::annulus_density_profile(set, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lattice == 38);
    CHECK(one[0].primes == 12);
    CHECK(one[0].density == doctest::Approx(12.0 / 38.0));

    for (std::int64_t n : {100, 997, 5000}) {
        for (bool axes : {false, true}) {
            auto s = gmoat::sieve_octant(n, axes);
            for (int bands : {1, 2, 3, 7}) {
                auto profile = gmoat::annulus_density_profile(s, bands);
                REQUIRE(profile.size() == static_cast<std::size_t>(bands));
                // Brute-force band membership with exact integers: n B^2 <= k^2 N.
                std::vector<std::int64_t> lattice(bands, 0), primes(bands, 0);
                for (std::int64_t re = 1; re * re <= n; ++re) {
                    for (std::int64_t im = axes ? 0 : 1; im <= re && re * re + im * im <= n; ++im) {
                        const std::int64_t m = re * re + im * im;
                        int k = 1;
                        while (m * bands * bands > static_cast<std::int64_t>(k) * k * n) ++k;
                        ++lattice[k - 1];
                        if (s.contains({re, im})) ++primes[k - 1];
                    }
                }
                std::int64_t total = 0;
                for (int k = 0; k < bands; ++k) {
                    REQUIRE(profile[k].band == k + 1);
                    REQUIRE(profile[k].lattice == lattice[k]);
                    REQUIRE(profile[k].primes == primes[k]);
                    total += profile[k].primes;
                }
                REQUIRE(total == static_cast<std::int64_t>(s.size()));
            }
        }
    }
    CHECK_THROWS_AS(gmoat::annulus_density_profile(set, 0), std::invalid_argument);
}

TEST_CASE("density thins out with the modulus") {
    auto set = gmoat::sieve_octant(90000, false);
    auto profile = gmoat::annulus_density_profile(set, 2);
    CHECK(profile[0].density > profile[1].density);
    CHECK(profile[0].outer_radius == doctest::Approx(150.0));
    CHECK(profile[1].outer_radius == doctest::Approx(300.0));
}

TEST_CASE("three square theorem") {
    for (std::uint64_t n = 0; n <= 3000; ++n) {
        REQUIRE(gmoat::three_square_eligible(n) == oracle::three_squares(static_cast<std::int64_t>(n)));
    }
    CHECK_FALSE(gmoat::three_square_eligible(7));
    CHECK_FALSE(gmoat::three_square_eligible(28));
    CHECK_FALSE(gmoat::three_square_eligible(112));
    CHECK(gmoat::three_square_eligible(14));
}
