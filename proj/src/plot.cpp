#include "gmoat/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "gmoat/io.hpp"

namespace gmoat {

namespace {

constexpr double kUnitPx = 16.0;
constexpr double kMarginPx = 20.0;
constexpr std::int64_t kBaseExtent = 10;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

class Canvas {
public:
    explicit Canvas(std::int64_t extent)
        : extent_(extent),
          px_(kUnitPx * static_cast<double>(kBaseExtent) / static_cast<double>(extent)) {}

    double x(double re) const { return kMarginPx + re * px_; }
    double y(double im) const { return kMarginPx + (static_cast<double>(extent_) - im) * px_; }
    double size() const { return 2 * kMarginPx + static_cast<double>(extent_) * px_; }
    double dot_radius() const { return std::max(0.75, 0.25 * px_); }
    std::int64_t extent() const { return extent_; }

private:
    std::int64_t extent_;
    double px_;
};

std::string first_line(const std::string& text) {
    auto nl = text.find('\n');
    return text.substr(0, nl);
}

}  // namespace

PlotScene load_plot_scene(const std::string& text) {
    PlotScene scene;
    auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw FormatError("line 1: empty input");

    if (text[start] == '[') {
        scene.paths = parse_paths_json(text);
        for (const auto& path : scene.paths) {
            scene.primes.insert(scene.primes.end(), path.members.begin(), path.members.end());
        }
    } else if (text[start] == '{') {
        auto report = parse_moat_json(text);
        scene.norm_max = report.norm_max;
        for (const auto& c : report.components) {
            scene.primes.insert(scene.primes.end(), c.begin(), c.end());
        }
        scene.left = std::move(report.left);
        scene.right = std::move(report.right);
    } else if (first_line(text) == "a,b,norm") {
        scene.primes = parse_prime_csv(text);
    } else {
        throw FormatError("line 1: not a prime CSV, paths JSON or moat JSON: '" +
                          first_line(text) + "'");
    }
    std::sort(scene.primes.begin(), scene.primes.end(), NormOrder{});
    scene.primes.erase(std::unique(scene.primes.begin(), scene.primes.end()), scene.primes.end());
    return scene;
}

std::string render_svg(const PlotScene& scene) {
    std::int64_t top_norm = scene.norm_max;
    for (const auto& z : scene.primes) top_norm = std::max(top_norm, norm(z));
    std::int64_t extent = isqrt(top_norm);
    if (extent * extent < top_norm) ++extent;
    const Canvas canvas(std::max(kBaseExtent, extent));

    std::string svg;
    const auto size = num(canvas.size());
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    svg += std::string(kPlotVersionComment) + "\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const auto ext = static_cast<double>(canvas.extent());
    svg += "<line class=\"axis\" x1=\"" + num(canvas.x(0)) + "\" y1=\"" + num(canvas.y(0)) +
           "\" x2=\"" + num(canvas.x(ext)) + "\" y2=\"" + num(canvas.y(0)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + num(canvas.x(0)) + "\" y1=\"" + num(canvas.y(0)) +
           "\" x2=\"" + num(canvas.x(0)) + "\" y2=\"" + num(canvas.y(ext)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Boundary rays: the diagonal plus every fitted line.
    std::vector<BoundaryLine> rays;
    if (!scene.paths.empty()) rays.push_back(BoundaryLine::diagonal());
    for (const auto& path : scene.paths) {
        if (path.line) rays.push_back(*path.line);
    }
    for (const auto& ray : rays) {
        double end_re = ext;
        double end_im = ext * static_cast<double>(ray.num) / static_cast<double>(ray.den);
        if (end_im > ext) {
            end_re = ext * static_cast<double>(ray.den) / static_cast<double>(ray.num);
            end_im = ext;
        }
        svg += "<line class=\"boundary\" data-index=\"" + std::to_string(ray.index) + "\" x1=\"" +
               num(canvas.x(0)) + "\" y1=\"" + num(canvas.y(0)) + "\" x2=\"" + num(canvas.x(end_re)) +
               "\" y2=\"" + num(canvas.y(end_im)) +
               "\" stroke=\"#888888\" stroke-dasharray=\"4 2\"/>\n";
    }

    for (const auto& path : scene.paths) {
        svg += "<polyline class=\"path\" data-index=\"" + std::to_string(path.index) + "\" points=\"";
        for (std::size_t i = 0; i < path.members.size(); ++i) {
            const auto& z = path.members[i];
            if (i > 0) svg += ' ';
            svg += num(canvas.x(static_cast<double>(z.re))) + "," +
                   num(canvas.y(static_cast<double>(z.im)));
        }
        svg += "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
    }

    const std::set<GaussInt> left(scene.left.begin(), scene.left.end());
    const std::set<GaussInt> right(scene.right.begin(), scene.right.end());
    for (const auto& z : scene.primes) {
        const char* cls = "prime";
        const char* fill = "black";
        if (left.contains(z)) {
            cls = "moat-left";
            fill = "#d62728";
        } else if (right.contains(z)) {
            cls = "moat-right";
            fill = "#1f77b4";
        }
        svg += std::string("<circle class=\"") + cls + "\" data-z=\"" + std::to_string(z.re) + "," +
               std::to_string(z.im) + "\" cx=\"" + num(canvas.x(static_cast<double>(z.re))) +
               "\" cy=\"" + num(canvas.y(static_cast<double>(z.im))) + "\" r=\"" +
               num(canvas.dot_radius()) + "\" fill=\"" + fill + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace gmoat
