#pragma once

// Path construction over the first octant.
//
// A path starts at an unvisited prime and repeatedly steps to the nearest
// unvisited prime in its forward quadrant (re >= current.re, im >= current.im)
// that lies strictly below the bounding ray of the previous path. The search
// disk radius is ceil(c * ln(norm)^2); an empty disk grows by that base
// radius (ring expansion) until it covers every forward point of the sieve,
// at which point the path ends. Each finished path fixes the ray through its
// minimum-slope member, which bounds the next path.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmoat/gaussian.hpp"
#include "gmoat/sieve.hpp"

namespace gmoat {

/// Positive rational num/den.
struct Ratio {
    std::int64_t num = 1;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Parses "3", "3/2" or "1.5" into a reduced positive ratio.
Ratio parse_ratio(const std::string& text);

/// Ray from the origin with exact slope num/den (im/re). Line 0 is re = im.
struct BoundaryLine {
    int index = 0;
    std::int64_t num = 1;
    std::int64_t den = 1;

    static BoundaryLine diagonal() { return {0, 1, 1}; }

    /// im * den < re * num.
    bool strictly_below(const GaussInt& z) const;
    /// |num*re - den*im|: perpendicular distance scaled by sqrt(num^2 + den^2).
    std::int64_t scaled_offset(const GaussInt& z) const;

    friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
};

struct SearchDisk {
    GaussInt center;
    std::int64_t radius = 0;   ///< final radius, (ring_count + 1) * base
    int ring_count = 0;        ///< expansions before a candidate appeared
    bool touches_bound = false;  ///< disk meets the bounding ray (diagnostic only)

    friend bool operator==(const SearchDisk&, const SearchDisk&) = default;
};

struct Path {
    int index = 0;
    /// Selection order; absorbed orphans are appended after the walked prefix.
    std::vector<GaussInt> members;
    /// One disk per accepted step: disks[i] produced members[i + 1].
    std::vector<SearchDisk> disks;
    std::vector<GaussInt> orphans_absorbed;
    BoundaryLine bound;  ///< line the path was confined below
    std::optional<BoundaryLine> line;  ///< fitted line; absent if none could be fitted

    std::span<const GaussInt> walked() const {
        return std::span<const GaussInt>(members).first(members.size() - orphans_absorbed.size());
    }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Thrown when a path cannot produce a line strictly below its bound.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ceil(c * ln(p_norm)^2), at least 1. Requires p_norm >= 2.
std::int64_t cramer_radius(std::int64_t p_norm, Ratio c = {});

/// Visited markers indexed like the prime set.
class VisitSet {
public:
    explicit VisitSet(const PrimeSet& set);
    bool contains(const GaussInt& z) const;
    void insert(const GaussInt& z);
    std::size_t size() const { return count_; }

private:
    const PrimeSet* set_;
    std::vector<bool> seen_;
    std::size_t count_ = 0;
};

/// Receives every lattice point a search region examines (used to count
/// primality checks). Points may repeat across expansions.
using ProbeFn = std::function<void(const GaussInt&)>;

/// Unvisited members q != center with q.re >= center.re, q.im >= center.im,
/// |q - center| <= radius and q strictly below bound. Sorted by (re, im).
std::vector<GaussInt> candidate_region(const GaussInt& center, std::int64_t radius,
                                       const BoundaryLine& bound, const PrimeSet& set,
                                       const VisitSet& visited);

/// Nearest candidate; ties go to the smaller offset from the bound line,
/// then to the lexicographically smaller point.
std::optional<GaussInt> select_next(std::span<const GaussInt> candidates, const GaussInt& center,
                                    const BoundaryLine& bound);

/// Walks one path from start. Marks every member visited. Throws
/// std::invalid_argument if start is not an unvisited member of the set.
Path build_path(const GaussInt& start, const BoundaryLine& bound, const PrimeSet& set,
                VisitSet& visited, Ratio c = {}, int index = 1, const ProbeFn& probe = {});

/// Ray through the walked member of minimum slope im/re. Throws
/// ConstructionError unless that slope is strictly below previous.
BoundaryLine fit_line(const Path& path, const BoundaryLine& previous);

/// Partitions the off-axis members of the set into paths, then appends each
/// prime no path reached to the path holding its nearest walked member
/// (ties: lower path index, then smaller member).
std::vector<Path> walk_all(const PrimeSet& set, Ratio c = {}, const ProbeFn& probe = {});

struct CoverageReport {
    std::vector<GaussInt> missing;
    std::vector<GaussInt> duplicated;
    std::size_t orphan_count = 0;

    bool partitions() const { return missing.empty() && duplicated.empty(); }
};

/// Compares the union of paths with the off-axis members of the set.
CoverageReport verify_coverage(std::span<const Path> paths, const PrimeSet& set);

}  // namespace gmoat
