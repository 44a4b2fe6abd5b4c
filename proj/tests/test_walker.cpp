#include <doctest.h>

#include <cmath>
#include <set>

#include "gmoat/sieve.hpp"
#include "gmoat/walker.hpp"

using gmoat::BoundaryLine;
using gmoat::GaussInt;

namespace {

std::vector<std::int64_t> steps(const gmoat::Path& path) {
    std::vector<std::int64_t> out;
    auto walked = path.walked();
    for (std::size_t i = 1; i < walked.size(); ++i) {
        out.push_back(gmoat::distance_sq(walked[i - 1], walked[i]));
    }
    return out;
}

}  // namespace

TEST_CASE("cramer radius") {
    CHECK(gmoat::cramer_radius(2) == 1);
    CHECK(gmoat::cramer_radius(13) == 7);
    CHECK(gmoat::cramer_radius(89) == 21);
    CHECK(gmoat::cramer_radius(89, {2, 1}) == 41);
    CHECK(gmoat::cramer_radius(89, {1, 100}) == 1);
    CHECK_THROWS_AS(gmoat::cramer_radius(1), std::invalid_argument);
    // Agrees with the floating formula away from integer boundaries.
    for (std::int64_t n = 2; n < 5000; n += 7) {
        const double l = std::log(static_cast<double>(n));
        const double f = l * l;
        if (std::abs(f - std::round(f)) < 1e-6) continue;
        REQUIRE(gmoat::cramer_radius(n) == std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(f))));
    }
}

TEST_CASE("parse ratio") {
    CHECK(gmoat::parse_ratio("3") == gmoat::Ratio{3, 1});
    CHECK(gmoat::parse_ratio("6/4") == gmoat::Ratio{3, 2});
    CHECK(gmoat::parse_ratio("1.5") == gmoat::Ratio{3, 2});
    CHECK(gmoat::parse_ratio("0.25") == gmoat::Ratio{1, 4});
    CHECK_THROWS_AS(gmoat::parse_ratio("0"), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::parse_ratio("-1"), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::parse_ratio("x"), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::parse_ratio("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(gmoat::parse_ratio(""), std::invalid_argument);
}

TEST_CASE("boundary line") {
    auto diag = BoundaryLine::diagonal();
    CHECK(diag.strictly_below({2, 1}));
    CHECK_FALSE(diag.strictly_below({1, 1}));
    CHECK_FALSE(diag.strictly_below({1, 2}));
    BoundaryLine l{1, 2, 5};
    CHECK(l.strictly_below({6, 1}));
    CHECK_FALSE(l.strictly_below({5, 2}));
    CHECK(l.scaled_offset({5, 2}) == 0);
    CHECK(l.scaled_offset({8, 3}) == 1);
}

TEST_CASE("candidate region from (3,2)") {
    auto set = gmoat::sieve_octant(100, false);
    gmoat::VisitSet visited(set);
    for (GaussInt z : {GaussInt{1, 1}, GaussInt{2, 1}, GaussInt{3, 2}}) visited.insert(z);
    auto region = gmoat::candidate_region({3, 2}, 7, BoundaryLine::diagonal(), set, visited);
    const std::vector<GaussInt> expected{{5, 2}, {5, 4}, {6, 5}, {7, 2}, {8, 3}, {8, 5}, {9, 4}};
    CHECK(region == expected);
    CHECK(gmoat::select_next(region, {3, 2}, BoundaryLine::diagonal()) == GaussInt{5, 2});

    auto small = gmoat::candidate_region({3, 2}, 2, BoundaryLine::diagonal(), set, visited);
    CHECK(small == std::vector<GaussInt>{{5, 2}});
    auto below = gmoat::candidate_region({3, 2}, 7, BoundaryLine{1, 2, 5}, set, visited);
    CHECK(below == std::vector<GaussInt>{{7, 2}, {8, 3}});
}

TEST_CASE("candidate region properties") {
    auto set = gmoat::sieve_octant(3000, false);
    gmoat::VisitSet visited(set);
    const BoundaryLine bound{1, 3, 5};
    for (std::size_t i = 0; i < set.size(); i += 3) visited.insert(set.primes()[i]);
    for (const auto& center : set.primes()) {
        for (std::int64_t r : {1, 4, 9}) {
            auto region = gmoat::candidate_region(center, r, bound, set, visited);
            REQUIRE(std::is_sorted(region.begin(), region.end()));
            std::size_t brute = 0;
            for (const auto& q : set.primes()) {
                if (q != center && q.re >= center.re && q.im >= center.im &&
                    gmoat::distance_sq(q, center) <= r * r && bound.strictly_below(q) &&
                    !visited.contains(q)) {
                    ++brute;
                }
            }
            REQUIRE(region.size() == brute);
        }
    }
}

TEST_CASE("select_next tie breaks") {
    const GaussInt c{0, 0};
    const BoundaryLine diag = BoundaryLine::diagonal();
    // Equal distance: the point nearer the bound line wins.
    std::vector<GaussInt> a{{5, 0}, {4, 3}};
    CHECK(gmoat::select_next(a, c, diag) == GaussInt{4, 3});
    // Equal distance and offset: lexicographically smaller.
    std::vector<GaussInt> b{{3, 4}, {4, 3}};
    CHECK(gmoat::select_next(b, c, diag) == GaussInt{3, 4});
    CHECK_FALSE(gmoat::select_next({}, c, diag).has_value());
}

TEST_CASE("walk of the norm <= 100 set") {
    auto set = gmoat::sieve_octant(100, false);
    auto paths = gmoat::walk_all(set);
    REQUIRE(paths.size() == 2);

    const std::vector<GaussInt> p1{{1, 1}, {2, 1}, {3, 2}, {5, 2}, {5, 4}, {6, 5}, {8, 5}};
    const std::vector<GaussInt> p2{{4, 1}, {6, 1}, {7, 2}, {8, 3}};
    auto w1 = paths[0].walked();
    auto w2 = paths[1].walked();
    CHECK(std::vector<GaussInt>(w1.begin(), w1.end()) == p1);
    CHECK(std::vector<GaussInt>(w2.begin(), w2.end()) == p2);
    CHECK(steps(paths[0]) == std::vector<std::int64_t>{1, 2, 4, 4, 2, 4});
    CHECK(steps(paths[1]) == std::vector<std::int64_t>{4, 2, 2});
    CHECK(paths[0].orphans_absorbed == std::vector<GaussInt>{{9, 4}});
    CHECK(paths[1].orphans_absorbed.empty());
    CHECK(paths[0].members.back() == GaussInt{9, 4});

    CHECK(paths[0].bound == BoundaryLine::diagonal());
    REQUIRE(paths[0].line.has_value());
    CHECK(paths[0].line->num == 2);
    CHECK(paths[0].line->den == 5);
    CHECK(paths[1].bound == *paths[0].line);
    REQUIRE(paths[1].line.has_value());
    CHECK(paths[1].line->num == 1);
    CHECK(paths[1].line->den == 6);

    CHECK(paths[0].disks.size() == 6);
    CHECK(paths[0].disks[0].center == GaussInt{1, 1});
    CHECK(paths[0].disks[0].radius == 1);

    auto report = gmoat::verify_coverage(paths, set);
    CHECK(report.partitions());
    CHECK(report.orphan_count == 1);
}

TEST_CASE("fit_line") {
    gmoat::Path path;
    path.index = 3;
    path.members = {{4, 1}, {6, 1}, {7, 2}};
    auto line = gmoat::fit_line(path, BoundaryLine{2, 2, 5});
    CHECK(line.index == 3);
    CHECK(line.num == 1);
    CHECK(line.den == 6);
    CHECK_THROWS_AS(gmoat::fit_line(path, BoundaryLine{2, 1, 6}), gmoat::ConstructionError);
    CHECK_THROWS_AS(gmoat::fit_line(path, BoundaryLine{2, 1, 7}), gmoat::ConstructionError);
}

TEST_CASE("build_path rejects bad starts") {
    auto set = gmoat::sieve_octant(100, false);
    gmoat::VisitSet visited(set);
    CHECK_THROWS_AS(gmoat::build_path({7, 1}, BoundaryLine::diagonal(), set, visited),
                    std::invalid_argument);
    visited.insert({2, 1});
    CHECK_THROWS_AS(gmoat::build_path({2, 1}, BoundaryLine::diagonal(), set, visited),
                    std::invalid_argument);
}

TEST_CASE("walk partitions the set at several scales") {
    for (std::int64_t n : {2, 10, 100, 500, 1000, 5000, 10000}) {
        for (gmoat::Ratio c : {gmoat::Ratio{1, 1}, gmoat::Ratio{1, 2}, gmoat::Ratio{2, 1}}) {
            INFO(n << " c=" << c.num << "/" << c.den);
            auto set = gmoat::sieve_octant(n, n % 2 == 0);
            auto paths = gmoat::walk_all(set, c);
            auto report = gmoat::verify_coverage(paths, set);
            REQUIRE(report.partitions());

            std::size_t orphans = 0;
            std::optional<BoundaryLine> last;
            for (std::size_t i = 0; i < paths.size(); ++i) {
                const auto& p = paths[i];
                REQUIRE(p.index == static_cast<int>(i + 1));
                orphans += p.orphans_absorbed.size();
                auto walked = p.walked();
                REQUIRE(p.disks.size() + 1 == walked.size());
                for (std::size_t k = 1; k < walked.size(); ++k) {
                    // Forward quadrant, below the bound, inside the final disk.
                    REQUIRE(walked[k].re >= walked[k - 1].re);
                    REQUIRE(walked[k].im >= walked[k - 1].im);
                    REQUIRE(p.disks[k - 1].center == walked[k - 1]);
                    const auto r = p.disks[k - 1].radius;
                    REQUIRE(gmoat::distance_sq(walked[k], walked[k - 1]) <= r * r);
                    REQUIRE(p.bound.strictly_below(walked[k]));
                }
                if (i > 0 && last) REQUIRE(p.bound == *last);
                if (p.line) {
                    REQUIRE(p.line->num * p.bound.den < p.bound.num * p.line->den);
                    last = p.line;
                }
            }
            REQUIRE(orphans == report.orphan_count);
        }
    }
}

TEST_CASE("walk is deterministic") {
    auto set = gmoat::sieve_octant(3000, false);
    CHECK(gmoat::walk_all(set) == gmoat::walk_all(set));
}

TEST_CASE("coverage detects gaps and repeats") {
    auto set = gmoat::sieve_octant(100, false);
    auto paths = gmoat::walk_all(set);
    paths[1].members.pop_back();
    paths[0].members.push_back({4, 1});
    auto report = gmoat::verify_coverage(paths, set);
    CHECK_FALSE(report.partitions());
    CHECK(report.missing == std::vector<GaussInt>{{8, 3}});
    CHECK(report.duplicated == std::vector<GaussInt>{{4, 1}});
}
