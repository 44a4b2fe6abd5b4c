#include "gmoat/walker.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

namespace gmoat {

namespace {

__extension__ typedef __int128 i128;

/// Off-axis members grouped by imaginary part, each row sorted by re.
class RowIndex {
public:
    explicit RowIndex(const PrimeSet& set) {
        for (const auto& z : set.primes()) {
            if (z.im == 0) continue;
            if (static_cast<std::size_t>(z.im) >= rows_.size()) rows_.resize(z.im + 1);
            rows_[z.im].push_back(z.re);
        }
        for (auto& row : rows_) std::sort(row.begin(), row.end());
    }

    template <class Fn>
    void for_each_in_disk(const GaussInt& center, std::int64_t radius, Fn&& fn) const {
        const std::int64_t r_sq = radius * radius;
        const std::int64_t top =
            std::min<std::int64_t>(center.im + radius, static_cast<std::int64_t>(rows_.size()) - 1);
        for (std::int64_t im = center.im; im <= top; ++im) {
            const std::int64_t dy = im - center.im;
            const std::int64_t reach = isqrt(r_sq - dy * dy);
            const auto& row = rows_[im];
            auto lo = std::lower_bound(row.begin(), row.end(), center.re);
            auto hi = std::upper_bound(lo, row.end(), center.re + reach);
            for (auto it = lo; it != hi; ++it) fn(GaussInt{*it, im});
        }
    }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

std::vector<GaussInt> region(const RowIndex& rows, const GaussInt& center, std::int64_t radius,
                             const BoundaryLine& bound, const VisitSet& visited) {
    std::vector<GaussInt> out;
    rows.for_each_in_disk(center, radius, [&](const GaussInt& q) {
        if (q == center || visited.contains(q) || !bound.strictly_below(q)) return;
        out.push_back(q);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Every lattice point of the forward quarter-disk below the bound and inside
// the sieve horizon, excluding the centre.
void probe_region(const GaussInt& center, std::int64_t radius, const BoundaryLine& bound,
                  std::int64_t norm_max, const ProbeFn& probe) {
    if (bound.num == 0) return;
    const std::int64_t r_sq = radius * radius;
    for (std::int64_t dy = 0; dy <= radius; ++dy) {
        const std::int64_t im = center.im + dy;
        if (im * im > norm_max) break;
        const std::int64_t x_hi =
            std::min(center.re + isqrt(r_sq - dy * dy), isqrt(norm_max - im * im));
        // strictly below: im * den < re * num
        const std::int64_t x_lo = std::max(center.re, im * bound.den / bound.num + 1);
        for (std::int64_t re = x_lo; re <= x_hi; ++re) {
            GaussInt q{re, im};
            if (q != center) probe(q);
        }
    }
}

bool disk_touches(const GaussInt& center, std::int64_t radius, const BoundaryLine& line) {
    i128 offset = line.scaled_offset(center);
    i128 scale = static_cast<i128>(line.num) * line.num + static_cast<i128>(line.den) * line.den;
    return offset * offset <= static_cast<i128>(radius) * radius * scale;
}

Path walk_from(const GaussInt& start, const BoundaryLine& bound, const PrimeSet& set,
               const RowIndex& rows, VisitSet& visited, Ratio c, int index,
               const ProbeFn& probe) {
    if (!set.contains(start) || start.im == 0) {
        throw std::invalid_argument("path start " + to_string(start) +
                                    " is not an off-axis member of the prime set");
    }
    if (visited.contains(start)) {
        throw std::invalid_argument("path start " + to_string(start) + " was already visited");
    }

    Path path;
    path.index = index;
    path.bound = bound;
    path.members.push_back(start);
    visited.insert(start);
    if (probe) probe(start);

    const std::int64_t horizon = isqrt(set.norm_max());
    GaussInt current = start;
    for (;;) {
        const std::int64_t base = cramer_radius(norm(current), c);
        // Squared distance to the far corner of the sieve's forward box; a
        // disk this large has seen every prime the path could still reach.
        const std::int64_t fx = horizon - current.re;
        const std::int64_t fy = horizon - current.im;
        const std::int64_t cover_sq = fx * fx + fy * fy;

        std::optional<GaussInt> next;
        std::int64_t radius = base;
        int rings = 0;
        for (;;) {
            if (probe) probe_region(current, radius, bound, set.norm_max(), probe);
            auto candidates = region(rows, current, radius, bound, visited);
            next = select_next(candidates, current, bound);
            if (next || radius * radius >= cover_sq) break;
            radius += base;
            ++rings;
        }
        if (!next) break;

        path.disks.push_back({current, radius, rings, disk_touches(current, radius, bound)});
        path.members.push_back(*next);
        visited.insert(*next);
        current = *next;
    }
    return path;
}

}  // namespace

Ratio parse_ratio(const std::string& text) {
    auto fail = [&] { return std::invalid_argument("not a positive rational: '" + text + "'"); };
    if (text.empty()) throw fail();
    std::int64_t num = 0;
    std::int64_t den = 1;
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used = 0;
            num = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw fail();
            auto rest = text.substr(slash + 1);
            den = std::stoll(rest, &used);
            if (used != rest.size()) throw fail();
        } else {
            auto dot = text.find('.');
            auto digits = text;
            if (dot != std::string::npos) {
                auto frac = text.substr(dot + 1);
                if (frac.size() > 12) throw fail();
                for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
                digits = text.substr(0, dot) + frac;
            }
            std::size_t used = 0;
            num = std::stoll(digits, &used);
            if (used != digits.size()) throw fail();
        }
    } catch (const std::logic_error&) {
        throw fail();
    }
    if (num <= 0 || den <= 0) throw fail();
    auto g = std::gcd(num, den);
    return {num / g, den / g};
}

bool BoundaryLine::strictly_below(const GaussInt& z) const {
    return static_cast<i128>(z.im) * den < static_cast<i128>(z.re) * num;
}

std::int64_t BoundaryLine::scaled_offset(const GaussInt& z) const {
    i128 v = static_cast<i128>(num) * z.re - static_cast<i128>(den) * z.im;
    return static_cast<std::int64_t>(v < 0 ? -v : v);
}

std::int64_t cramer_radius(std::int64_t p_norm, Ratio c) {
    if (p_norm < 2) throw std::invalid_argument("cramer_radius needs a norm >= 2");
    const double log_norm = std::log(static_cast<double>(p_norm));
    const double r = std::ceil(c.value() * log_norm * log_norm);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
}

VisitSet::VisitSet(const PrimeSet& set) : set_(&set), seen_(set.size(), false) {}

bool VisitSet::contains(const GaussInt& z) const {
    auto primes = set_->primes();
    auto it = std::lower_bound(primes.begin(), primes.end(), z, NormOrder{});
    return it != primes.end() && *it == z && seen_[it - primes.begin()];
}

void VisitSet::insert(const GaussInt& z) {
    auto primes = set_->primes();
    auto it = std::lower_bound(primes.begin(), primes.end(), z, NormOrder{});
    if (it == primes.end() || *it != z) {
        throw std::invalid_argument(to_string(z) + " is not in the prime set");
    }
    const auto slot = static_cast<std::size_t>(it - primes.begin());
    if (!seen_[slot]) {
        seen_[slot] = true;
        ++count_;
    }
}

std::vector<GaussInt> candidate_region(const GaussInt& center, std::int64_t radius,
                                       const BoundaryLine& bound, const PrimeSet& set,
                                       const VisitSet& visited) {
    return region(RowIndex(set), center, radius, bound, visited);
}

std::optional<GaussInt> select_next(std::span<const GaussInt> candidates, const GaussInt& center,
                                    const BoundaryLine& bound) {
    if (candidates.empty()) return std::nullopt;
    auto key = [&](const GaussInt& q) {
        return std::make_tuple(distance_sq(center, q), bound.scaled_offset(q), q.re, q.im);
    };
    return *std::min_element(candidates.begin(), candidates.end(),
                             [&](const GaussInt& l, const GaussInt& r) { return key(l) < key(r); });
}

Path build_path(const GaussInt& start, const BoundaryLine& bound, const PrimeSet& set,
                VisitSet& visited, Ratio c, int index, const ProbeFn& probe) {
    return walk_from(start, bound, set, RowIndex(set), visited, c, index, probe);
}

BoundaryLine fit_line(const Path& path, const BoundaryLine& previous) {
    auto walked = path.walked();
    if (walked.empty()) throw std::invalid_argument("fit_line: empty path");
    auto flattest = *std::min_element(walked.begin(), walked.end(),
                                      [](const GaussInt& l, const GaussInt& r) {
                                          return static_cast<i128>(l.im) * r.re <
                                                 static_cast<i128>(r.im) * l.re;
                                      });
    if (!previous.strictly_below(flattest)) {
        throw ConstructionError("path " + std::to_string(path.index) + ": flattest member " +
                                to_string(flattest) + " does not lie below line " +
                                std::to_string(previous.index));
    }
    auto g = std::gcd(flattest.im, flattest.re);
    return {path.index, flattest.im / g, flattest.re / g};
}

std::vector<Path> walk_all(const PrimeSet& set, Ratio c, const ProbeFn& probe) {
    const auto walkable = set.interior();
    std::vector<Path> paths;
    if (walkable.empty()) return paths;

    const RowIndex rows(set);
    VisitSet visited(set);
    BoundaryLine bound = BoundaryLine::diagonal();
    // The first path may start on the diagonal itself: (1, 1) lies on re = im.
    std::optional<GaussInt> start = walkable.front();
    while (start) {
        Path path = walk_from(*start, bound, set, rows, visited, c,
                              static_cast<int>(paths.size()) + 1, probe);
        try {
            path.line = fit_line(path, bound);
        } catch (const ConstructionError&) {
            paths.push_back(std::move(path));
            break;
        }
        bound = *path.line;
        paths.push_back(std::move(path));

        start.reset();
        for (const auto& z : walkable) {
            if (!visited.contains(z) && bound.strictly_below(z)) {
                start = z;
                break;
            }
        }
    }

    // Primes no path reached join the path of their nearest walked member.
    std::vector<GaussInt> orphans;
    for (const auto& z : walkable) {
        if (!visited.contains(z)) orphans.push_back(z);
    }
    for (const auto& orphan : orphans) {
        std::size_t best_path = 0;
        GaussInt best_member{};
        std::int64_t best_d = -1;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (const auto& m : paths[i].walked()) {
                auto d = distance_sq(orphan, m);
                bool better = best_d < 0 || d < best_d ||
                              (d == best_d && i == best_path && m < best_member);
                if (better) {
                    best_d = d;
                    best_path = i;
                    best_member = m;
                }
            }
        }
        paths[best_path].members.push_back(orphan);
        paths[best_path].orphans_absorbed.push_back(orphan);
    }
    return paths;
}

CoverageReport verify_coverage(std::span<const Path> paths, const PrimeSet& set) {
    std::map<GaussInt, int> seen;
    CoverageReport report;
    for (const auto& path : paths) {
        for (const auto& m : path.members) ++seen[m];
        report.orphan_count += path.orphans_absorbed.size();
    }
    for (const auto& z : set.interior()) {
        if (!seen.contains(z)) report.missing.push_back(z);
    }
    for (const auto& [z, n] : seen) {
        if (n > 1) report.duplicated.push_back(z);
    }
    std::sort(report.duplicated.begin(), report.duplicated.end(), NormOrder{});
    return report;
}

}  // namespace gmoat
