#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hauscover/interval_union.hpp"
#include "hauscover/metric_space.hpp"

namespace hauscover {

/// Deterministic cross-platform randomness: std::mt19937_64 (fully specified
/// by the standard) with doubles taken from the top 53 bits. Identical seeds
/// give bit-identical streams everywhere.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double range(double a, double b) { return a + (b - a) * unit(); }

    /// Uniform index in [0, n); n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(bits() % n); }

private:
    std::mt19937_64 gen_;
};

/// Middle-interval Cantor construction: at each step every component [a, b]
/// keeps its two outer sub-intervals of relative length `ratio`.
struct CantorSpec {
    double ratio = 1.0 / 3.0; // must lie strictly in (0, 1/2)
    int depth = 0;
    double origin = 0.0;
    double scale = 1.0;
    int depth_cap = 16;
};

inline IntervalUnion cantor(const CantorSpec& spec) {
    if (!(spec.ratio > 0.0 && spec.ratio < 0.5)) {
        throw std::invalid_argument("cantor: ratio must lie strictly in (0, 1/2)");
    }
    if (spec.depth < 0) {
        throw std::invalid_argument("cantor: depth must be >= 0");
    }
    if (spec.depth > spec.depth_cap) {
        throw std::length_error("cantor: depth " + std::to_string(spec.depth) +
                                " exceeds the cap " + std::to_string(spec.depth_cap));
    }
    if (!(std::isfinite(spec.origin) && std::isfinite(spec.scale) && spec.scale > 0.0)) {
        throw std::invalid_argument("cantor: origin must be finite and scale positive");
    }
    std::vector<ClosedInterval> comps{{spec.origin, spec.origin + spec.scale}};
    for (int d = 0; d < spec.depth; ++d) {
        std::vector<ClosedInterval> next;
        next.reserve(comps.size() * 2);
        for (const auto& c : comps) {
            const double len = c.length();
            next.push_back({c.lo, c.lo + spec.ratio * len});
            next.push_back({c.hi - spec.ratio * len, c.hi});
        }
        comps = std::move(next);
    }
    return IntervalUnion(std::move(comps));
}

/// A finite metric space cut out of the real line, remembering where its
/// points sit.
struct LineSample {
    std::shared_ptr<const FiniteMetricSpace> space;
    std::vector<double> coords; // sorted, distinct; coords[i] is point i
};

namespace detail {
inline LineSample line_space_from_coords(std::vector<double> coords) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    const std::size_t n = coords.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist[i][j] = std::fabs(coords[i] - coords[j]);
        }
    }
    shortest_path_fixpoint(dist);
    return {std::make_shared<const FiniteMetricSpace>(std::move(dist)), std::move(coords)};
}
} // namespace detail

enum class SampleMode { endpoints, net };

/// Discretizes a nonempty interval union into a finite line space. Mode
/// endpoints emits every component endpoint. Mode net additionally grids each
/// component at pitch <= delta (both endpoints always included), so every
/// point of U lies within delta of a sample.
inline LineSample sample_space(const IntervalUnion& u, SampleMode mode, double delta = 0.0) {
    if (u.empty()) {
        throw std::invalid_argument("sample_space: U must be nonempty");
    }
    std::vector<double> coords;
    if (mode == SampleMode::endpoints) {
        for (const auto& c : u.components()) {
            coords.push_back(c.lo);
            if (c.hi != c.lo) coords.push_back(c.hi);
        }
    } else {
        if (!(delta > 0.0)) {
            throw std::invalid_argument("sample_space: net mode needs delta > 0");
        }
        for (const auto& c : u.components()) {
            const double len = c.length();
            if (len == 0.0) {
                coords.push_back(c.lo);
                continue;
            }
            const long k = std::max(1L, static_cast<long>(std::ceil(len / delta)));
            for (long i = 0; i <= k; ++i) {
                coords.push_back(i == k ? c.hi : c.lo + static_cast<double>(i) * (len / static_cast<double>(k)));
            }
        }
    }
    return detail::line_space_from_coords(std::move(coords));
}

/// Seeded test-space construction. ambient_dim >= 1 draws n uniform points in
/// the unit cube with Euclidean distances; ambient_dim = 0 ("synthetic") draws
/// a symmetric positive matrix and repairs it into a metric with all-pairs
/// shortest paths. Equal specs produce bit-identical spaces.
struct RandomSpec {
    std::uint64_t seed = 0;
    std::size_t n = 1;
    int ambient_dim = 0; // 0 => synthetic mode
};

/// The seeded coordinates behind ambient mode, exposed so tests and maps can
/// recompute them.
inline std::vector<std::vector<double>> ambient_points(const RandomSpec& spec) {
    if (spec.n < 1) {
        throw std::invalid_argument("ambient_points: n must be >= 1");
    }
    if (spec.ambient_dim < 1) {
        throw std::invalid_argument("ambient_points: ambient_dim must be >= 1");
    }
    SeededRng rng(spec.seed);
    std::vector<std::vector<double>> pts(spec.n, std::vector<double>(spec.ambient_dim));
    for (auto& p : pts) {
        for (double& x : p) x = rng.unit();
    }
    return pts;
}

inline FiniteMetricSpace random_space(const RandomSpec& spec) {
    if (spec.n < 1) {
        throw std::invalid_argument("random_space: n must be >= 1");
    }
    std::vector<std::vector<double>> dist(spec.n, std::vector<double>(spec.n, 0.0));
    if (spec.ambient_dim >= 1) {
        const auto pts = ambient_points(spec);
        for (std::size_t i = 0; i < spec.n; ++i) {
            for (std::size_t j = i + 1; j < spec.n; ++j) {
                double sq = 0.0;
                for (int c = 0; c < spec.ambient_dim; ++c) {
                    const double diff = pts[i][c] - pts[j][c];
                    sq += diff * diff;
                }
                dist[i][j] = dist[j][i] = std::sqrt(sq);
            }
        }
    } else {
        SeededRng rng(spec.seed);
        for (std::size_t i = 0; i < spec.n; ++i) {
            for (std::size_t j = i + 1; j < spec.n; ++j) {
                dist[i][j] = dist[j][i] = rng.range(0.1, 2.0);
            }
        }
    }
    detail::shortest_path_fixpoint(dist);
    return FiniteMetricSpace(std::move(dist));
}

} // namespace hauscover
