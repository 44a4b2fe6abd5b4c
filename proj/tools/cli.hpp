#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmoat/walker.hpp"

namespace gmoat::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kMalformed = 3,
};

struct RunConfig {
    std::int64_t norm_max = 100;
    Ratio cramer_c{1, 1};
    bool include_axes = false;
    bool reflect_octant = true;
    std::int64_t step_sq = 0;   ///< 0: not given
    std::string paths_file;
    int bands = 2;
    std::string methods = "exhaustive,gww_filter,walker";
    std::string format;  ///< empty: the subcommand's natural format
    std::string output_path;  ///< empty: stdout
    std::string input_path;   ///< plot only
};

/// Subcommands: sieve, walk, moat, density, bench, plot. `args` excludes the
/// program name. `--config FILE` supplies `key = value` lines for any flag;
/// flags on the command line win.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmoat::cli
