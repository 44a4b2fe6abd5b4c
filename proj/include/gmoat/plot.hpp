#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmoat/gaussian.hpp"
#include "gmoat/walker.hpp"

namespace gmoat {

inline constexpr const char* kPlotVersionComment = "<!-- gmoat-plot 0.1.0 -->";

struct PlotScene {
    std::vector<GaussInt> primes;
    std::vector<Path> paths;
    std::vector<GaussInt> left;   ///< moat side drawn in the left fill
    std::vector<GaussInt> right;  ///< moat side drawn in the right fill
    std::int64_t norm_max = 0;    ///< 0: derived from the largest plotted norm
};

/// Recognises a prime CSV, a paths JSON array or a moat JSON object.
/// Throws FormatError naming the first offending line or field.
PlotScene load_plot_scene(const std::string& text);

/// SVG in mathematical orientation: 16 px per lattice unit up to radius 10,
/// scaled down proportionally beyond. The second line is kPlotVersionComment.
std::string render_svg(const PlotScene& scene);

}  // namespace gmoat
