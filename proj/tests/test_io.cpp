#include <doctest.h>

#include <filesystem>

#include "gmoat/io.hpp"
#include "gmoat/moat.hpp"
#include "gmoat/plot.hpp"
#include "gmoat/sieve.hpp"
#include "gmoat/walker.hpp"

using gmoat::GaussInt;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gmoat_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("prime csv round trip") {
    auto set = gmoat::sieve_octant(100, false);
    auto text = gmoat::prime_csv(set.primes());
    CHECK(text.rfind("a,b,norm\n1,1,2\n2,1,5\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    auto back = gmoat::parse_prime_csv(text);
    CHECK(std::equal(back.begin(), back.end(), set.primes().begin(), set.primes().end()));
}

TEST_CASE("prime csv errors name the line") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            gmoat::parse_prime_csv(text);
            FAIL("no error for " << text);
        } catch (const gmoat::FormatError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("a,b\n", "line 1");
    expect_error("a,b,norm\n1,1,2\n2,1\n", "line 3");
    expect_error("a,b,norm\n1,x,2\n", "line 2");
    expect_error("a,b,norm\n1,1,3\n", "line 2");
}

TEST_CASE("cache") {
    auto dir = scratch("cache");
    auto set = gmoat::sieve_cached(dir, 1000, true);
    CHECK(set == gmoat::sieve_octant(1000, true));
    const auto file = dir / "octant_1000_axes.csv";
    REQUIRE(std::filesystem::exists(file));
    auto text = gmoat::read_file(file);
    CHECK(gmoat::parse_cache(text, 1000, true).has_value());
    CHECK_FALSE(gmoat::parse_cache(text, 1000, false).has_value());
    CHECK_FALSE(gmoat::parse_cache(text, 999, true).has_value());

    // A corrupted body fails the checksum and is rebuilt.
    auto broken = text;
    broken.replace(broken.find("2,1,5"), 5, "1,2,5");
    CHECK_FALSE(gmoat::parse_cache(broken, 1000, true).has_value());
    gmoat::write_atomically(file, broken);
    CHECK(gmoat::sieve_cached(dir, 1000, true) == set);
    CHECK(gmoat::read_file(file) == text);
    std::filesystem::remove_all(dir);
}

TEST_CASE("paths json round trip") {
    auto set = gmoat::sieve_octant(1000, false);
    auto paths = gmoat::walk_all(set);
    auto back = gmoat::parse_paths_json(gmoat::paths_json(paths));
    REQUIRE(back.size() == paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        CHECK(back[i].index == paths[i].index);
        CHECK(back[i].members == paths[i].members);
        CHECK(back[i].orphans_absorbed == paths[i].orphans_absorbed);
        CHECK(back[i].line.has_value() == paths[i].line.has_value());
        if (back[i].line) {
            CHECK(back[i].line->num == paths[i].line->num);
            CHECK(back[i].line->den == paths[i].line->den);
        }
    }
    CHECK_THROWS_AS(gmoat::parse_paths_json("{}"), gmoat::FormatError);
    CHECK_THROWS_AS(gmoat::parse_paths_json("[{\"index\":1}]"), gmoat::FormatError);
    CHECK_THROWS_AS(gmoat::parse_paths_json(
                        "[{\"index\":1,\"members\":[[1,1]],\"orphans\":[[2,1]],\"line\":null}]"),
                    gmoat::FormatError);
    CHECK_THROWS_AS(gmoat::parse_paths_json("[1,"), gmoat::FormatError);
}

TEST_CASE("moat json round trip") {
    auto set = gmoat::sieve_octant(100, false);
    auto report = gmoat::moat_report(std::vector<GaussInt>(set.primes().begin(), set.primes().end()), 100, 4);
    auto back = gmoat::parse_moat_json(gmoat::moat_json(report));
    CHECK(back.norm_max == 100);
    CHECK(back.threshold_sq == 4);
    CHECK(back.width_sq == 4);
    CHECK(back.left == report.left);
    CHECK(back.right == report.right);
    CHECK(back.components == report.components);
    CHECK_THROWS_AS(gmoat::parse_moat_json("{\"norm_max\":1}"), gmoat::FormatError);
}

TEST_CASE("csv reports") {
    auto set = gmoat::sieve_octant(100, false);
    auto csv = gmoat::density_csv(gmoat::annulus_density_profile(set, 2));
    CHECK(csv.rfind("band,inner_radius,outer_radius,lattice,primes,density\n1,0.000000,5.000000,", 0) == 0);
    std::vector<gmoat::BenchResult> rows(1);
    rows[0].norm_max = 100;
    rows[0].checks = 69;
    rows[0].wall_ns = 5;
    CHECK(gmoat::bench_csv(rows) == "method,norm_max,checks,wall_ns\nexhaustive,100,69,5\n");
}

TEST_CASE("atomic writes") {
    auto dir = scratch("atomic");
    gmoat::write_atomically(dir / "x.txt", "one");
    gmoat::write_atomically(dir / "x.txt", "two");
    CHECK(gmoat::read_file(dir / "x.txt") == "two");
    CHECK_FALSE(std::filesystem::exists(dir / "x.txt.tmp"));
    CHECK_THROWS_AS(gmoat::write_atomically(dir / "missing" / "x.txt", "z"), std::runtime_error);
    CHECK_THROWS_AS(gmoat::read_file(dir / "nope"), std::runtime_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("plot scenes") {
    auto set = gmoat::sieve_octant(100, false);
    auto csv_scene = gmoat::load_plot_scene(gmoat::prime_csv(set.primes()));
    CHECK(csv_scene.primes.size() == 12);
    auto svg = gmoat::render_svg(csv_scene);
    auto second = svg.substr(svg.find('\n') + 1);
    CHECK(second.rfind(gmoat::kPlotVersionComment, 0) == 0);
    CHECK(svg.find("data-z=\"9,4\"") != std::string::npos);
    CHECK(svg.find("class=\"path\"") == std::string::npos);
    CHECK(svg.find("width=\"200.000\"") != std::string::npos);

    auto paths_scene = gmoat::load_plot_scene(gmoat::paths_json(gmoat::walk_all(set)));
    CHECK(paths_scene.paths.size() == 2);
    CHECK(paths_scene.primes.size() == 12);
    auto psvg = gmoat::render_svg(paths_scene);
    CHECK(psvg.find("class=\"path\" data-index=\"2\"") != std::string::npos);
    CHECK(psvg.find("class=\"boundary\" data-index=\"0\"") != std::string::npos);

    auto report = gmoat::moat_report(std::vector<GaussInt>(set.primes().begin(), set.primes().end()), 100, 4);
    auto msvg = gmoat::render_svg(gmoat::load_plot_scene(gmoat::moat_json(report)));
    CHECK(msvg.find("class=\"moat-left\" data-z=\"5,4\"") != std::string::npos);
    CHECK(msvg.find("class=\"moat-right\" data-z=\"1,1\"") != std::string::npos);

    // Same input, same bytes.
    CHECK(gmoat::render_svg(csv_scene) == svg);
    CHECK_THROWS_AS(gmoat::load_plot_scene("hello\n"), gmoat::FormatError);
    CHECK_THROWS_AS(gmoat::load_plot_scene(""), gmoat::FormatError);

    auto big = gmoat::sieve_octant(10000, false);
    auto bsvg = gmoat::render_svg(gmoat::load_plot_scene(gmoat::prime_csv(big.primes())));
    CHECK(bsvg.find("width=\"200.000\"") != std::string::npos);  // 100 units at 1.6 px
}
