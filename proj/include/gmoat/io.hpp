#pragma once

// Report formats. CSV files use LF line endings and unpadded decimals.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmoat/bench.hpp"
#include "gmoat/density.hpp"
#include "gmoat/moat.hpp"
#include "gmoat/sieve.hpp"
#include "gmoat/walker.hpp"

namespace gmoat {

/// Malformed input; what() names the first offending line or field.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "a,b,norm" header then one row per prime in set order.
std::string prime_csv(std::span<const GaussInt> primes);
/// Parses prime_csv output. Rows must carry a consistent norm.
std::vector<GaussInt> parse_prime_csv(const std::string& text);

/// Cache: the prime CSV followed by one trailer line
/// "#cache,<norm_max>,<include_axes 0|1>,<fnv1a-64 of the CSV body, hex>".
std::string cache_text(const PrimeSet& set);
/// nullopt when the key does not match or the checksum fails.
std::optional<PrimeSet> parse_cache(const std::string& text, std::int64_t norm_max,
                                    bool include_axes);
PrimeSet sieve_cached(const std::filesystem::path& dir, std::int64_t norm_max, bool include_axes);

std::uint64_t fnv1a64(const std::string& bytes);

/// [{index, members, orphans, line: {num, den} | null}, ...]
std::string paths_json(std::span<const Path> paths);
std::vector<Path> parse_paths_json(const std::string& text);

/// {norm_max, threshold_sq, width_sq, left, right, components}
std::string moat_json(const MoatReport& report);
MoatReport parse_moat_json(const std::string& text);

/// band,inner_radius,outer_radius,lattice,primes,density
std::string density_csv(std::span<const DensityBand> bands);

/// method,norm_max,checks,wall_ns
std::string bench_csv(std::span<const BenchResult> results);

/// Writes through a sibling temporary file and renames it into place.
/// Throws std::runtime_error when the target cannot be written.
void write_atomically(const std::filesystem::path& target, const std::string& contents);

std::string read_file(const std::filesystem::path& source);

}  // namespace gmoat
