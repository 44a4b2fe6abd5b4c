#include "gmoat/moat.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "gmoat/walker.hpp"

namespace gmoat {

namespace {

__extension__ typedef __int128 i128;

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns the surviving root.
    std::size_t unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// Buckets points into square cells of side ceil(sqrt(reach_sq)), so every
// neighbour within the reach sits in the surrounding 3x3 block of cells.
class Grid {
public:
    Grid(std::span<const GaussInt> points, std::int64_t reach_sq) : points_(points) {
        side_ = std::max<std::int64_t>(1, isqrt(reach_sq));
        if (side_ * side_ < reach_sq) ++side_;
        for (std::size_t i = 0; i < points.size(); ++i) cells_[key(cell_of(points[i]))].push_back(i);
    }

    template <class Fn>
    void for_each_near(const GaussInt& p, Fn&& fn) const {
        auto [cx, cy] = cell_of(p);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(key({cx + dx, cy + dy}));
                if (it == cells_.end()) continue;
                for (auto j : it->second) fn(j);
            }
        }
    }

private:
    std::pair<std::int64_t, std::int64_t> cell_of(const GaussInt& p) const {
        auto floor_div = [](std::int64_t v, std::int64_t d) {
            return v >= 0 ? v / d : -((-v + d - 1) / d);
        };
        return {floor_div(p.re, side_), floor_div(p.im, side_)};
    }
    static std::uint64_t key(std::pair<std::int64_t, std::int64_t> c) {
        return (static_cast<std::uint64_t>(c.first) << 32) ^
               (static_cast<std::uint64_t>(c.second) & 0xffffffffu);
    }

    std::span<const GaussInt> points_;
    std::int64_t side_ = 1;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

std::vector<GaussInt> sorted_unique(std::span<const GaussInt> points) {
    std::vector<GaussInt> out(points.begin(), points.end());
    std::sort(out.begin(), out.end(), NormOrder{});
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::invalid_argument("point set contains duplicates");
    }
    return out;
}

std::size_t index_of(std::span<const GaussInt> sorted, const GaussInt& z) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), z, NormOrder{});
    if (it == sorted.end() || *it != z) {
        throw std::invalid_argument(to_string(z) + " is not among the points");
    }
    return static_cast<std::size_t>(it - sorted.begin());
}

std::int64_t bounding_diameter_sq(std::span<const GaussInt> points) {
    auto [min_re, max_re] = std::minmax_element(
        points.begin(), points.end(), [](auto& l, auto& r) { return l.re < r.re; });
    auto [min_im, max_im] = std::minmax_element(
        points.begin(), points.end(), [](auto& l, auto& r) { return l.im < r.im; });
    return distance_sq({min_re->re, min_im->im}, {max_re->re, max_im->im});
}

}  // namespace

std::int64_t min_crossing_distance_sq(std::span<const GaussInt> a, std::span<const GaussInt> b) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("min_crossing_distance_sq needs two non-empty sides");
    }
    std::set<GaussInt> left(a.begin(), a.end());
    std::int64_t best = -1;
    for (const auto& q : b) {
        if (left.contains(q)) {
            throw std::invalid_argument("sides overlap at " + to_string(q));
        }
        for (const auto& p : a) {
            auto d = distance_sq(p, q);
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

std::vector<Component> components_at_threshold(std::span<const GaussInt> points,
                                               std::int64_t threshold_sq) {
    const auto sorted = sorted_unique(points);
    DisjointSets sets(sorted.size());
    if (threshold_sq > 0) {
        Grid grid(sorted, threshold_sq);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            grid.for_each_near(sorted[i], [&](std::size_t j) {
                if (j > i && distance_sq(sorted[i], sorted[j]) <= threshold_sq) sets.unite(i, j);
            });
        }
    }
    // Points are visited in (norm, re, im) order, so components come out
    // ordered by their first member and already internally sorted.
    std::vector<Component> components;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto root = sets.find(i);
        auto [it, fresh] = slot.emplace(root, components.size());
        if (fresh) components.emplace_back();
        components[it->second].push_back(sorted[i]);
    }
    return components;
}

std::vector<Component> components_at_threshold(const PrimeSet& set, std::int64_t threshold_sq) {
    return components_at_threshold(set.primes(), threshold_sq);
}

std::optional<std::int64_t> bottleneck_width_sq(std::span<const GaussInt> points,
                                                const GaussInt& source, std::int64_t target_norm) {
    const auto sorted = sorted_unique(points);
    const auto src = index_of(sorted, source);
    if (norm(source) >= target_norm) return 0;
    auto qualifies = [&](std::size_t i) { return norm(sorted[i]) >= target_norm; };
    if (std::none_of(sorted.begin(), sorted.end(),
                     [&](const GaussInt& z) { return norm(z) >= target_norm; })) {
        return std::nullopt;
    }

    const std::int64_t diameter_sq = bounding_diameter_sq(sorted);
    for (std::int64_t cap = 2;; cap = std::min(diameter_sq, cap * 4)) {
        struct Edge {
            std::int64_t d;
            std::size_t i, j;
        };
        std::vector<Edge> edges;
        Grid grid(sorted, cap);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            grid.for_each_near(sorted[i], [&](std::size_t j) {
                if (j <= i) return;
                auto d = distance_sq(sorted[i], sorted[j]);
                if (d <= cap) edges.push_back({d, i, j});
            });
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
            return std::tie(l.d, l.i, l.j) < std::tie(r.d, r.i, r.j);
        });

        DisjointSets sets(sorted.size());
        std::vector<bool> reaches(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i) reaches[i] = qualifies(i);
        for (const auto& e : edges) {
            auto a = sets.find(e.i);
            auto b = sets.find(e.j);
            if (a == b) continue;
            bool merged_flag = reaches[a] || reaches[b];
            auto root = sets.unite(a, b);
            reaches[root] = merged_flag;
            if (reaches[root] && sets.find(src) == root) return e.d;
        }
        if (cap >= diameter_sq) return std::nullopt;
    }
}

std::optional<std::int64_t> bottleneck_width_sq(const PrimeSet& set, const GaussInt& source,
                                                std::int64_t target_norm) {
    return bottleneck_width_sq(set.primes(), source, target_norm);
}

Exploration explore_component(std::span<const GaussInt> points, std::int64_t norm_max,
                              std::int64_t step_sq, const GaussInt& source) {
    const auto sorted = sorted_unique(points);
    const auto src = index_of(sorted, source);

    std::vector<bool> seen(sorted.size(), false);
    std::vector<std::size_t> order{src};
    seen[src] = true;
    if (step_sq > 0) {
        Grid grid(sorted, step_sq);
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            grid.for_each_near(sorted[i], [&](std::size_t j) {
                if (seen[j] || distance_sq(sorted[i], sorted[j]) > step_sq) return;
                seen[j] = true;
                order.push_back(j);
                queue.push_back(j);
            });
        }
    }

    Exploration out;
    std::sort(order.begin(), order.end());
    for (auto i : order) out.component.push_back(sorted[i]);

    const std::int64_t top = norm(out.component.back());
    out.farthest = *std::find_if(out.component.begin(), out.component.end(),
                                 [&](const GaussInt& z) { return norm(z) == top; });

    out.certified_bounded = std::all_of(out.component.begin(), out.component.end(), [&](auto& m) {
        // sqrt(n) + sqrt(s) <= sqrt(N)  <=>  N - n - s >= 0 and 4ns <= (N - n - s)^2
        i128 n = norm(m);
        i128 slack = static_cast<i128>(norm_max) - n - step_sq;
        return slack >= 0 && 4 * n * step_sq <= slack * slack;
    });
    return out;
}

Exploration explore_component(const PrimeSet& set, std::int64_t step_sq, const GaussInt& source) {
    return explore_component(set.primes(), set.norm_max(), step_sq, source);
}

MoatReport moat_report(std::span<const GaussInt> points, std::int64_t norm_max,
                       std::int64_t threshold_sq) {
    if (threshold_sq < 1) throw std::invalid_argument("moat threshold must be >= 1");
    MoatReport report;
    report.norm_max = norm_max;
    report.threshold_sq = threshold_sq;
    report.components = components_at_threshold(points, threshold_sq - 1);
    if (report.components.empty()) return report;

    report.right = report.components.front();
    for (std::size_t i = 1; i < report.components.size(); ++i) {
        const auto& c = report.components[i];
        report.left.insert(report.left.end(), c.begin(), c.end());
    }
    std::sort(report.left.begin(), report.left.end(), NormOrder{});
    if (!report.left.empty()) report.width_sq = min_crossing_distance_sq(report.left, report.right);
    return report;
}

MoatReport moat_from_paths(std::span<const Path> paths, std::int64_t norm_max) {
    std::vector<GaussInt> points;
    std::int64_t longest = 0;
    for (const auto& path : paths) {
        points.insert(points.end(), path.members.begin(), path.members.end());
        auto walked = path.walked();
        for (std::size_t i = 1; i < walked.size(); ++i) {
            longest = std::max(longest, distance_sq(walked[i - 1], walked[i]));
        }
    }
    if (points.empty()) {
        MoatReport empty;
        empty.norm_max = norm_max;
        return empty;
    }
    return moat_report(points, norm_max, std::max<std::int64_t>(longest, 1));
}

}  // namespace gmoat
