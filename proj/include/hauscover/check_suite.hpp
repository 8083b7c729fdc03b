#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hauscover/coarea.hpp"
#include "hauscover/covering.hpp"
#include "hauscover/generators.hpp"
#include "hauscover/interval_content.hpp"
#include "hauscover/interval_union.hpp"
#include "hauscover/metric_map.hpp"
#include "hauscover/metric_space.hpp"

namespace hauscover {

struct CheckViolation {
    std::string property;
    std::size_t case_index = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<CheckViolation> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

// lhs <= rhs + tol, recorded.
inline void expect_le(SuiteReport& report, std::size_t case_index, const char* property,
                      double lhs, double rhs, double tol) {
    ++report.checks;
    if (!(lhs <= rhs + tol)) {
        report.violations.push_back({property, case_index, lhs, rhs});
    }
}

inline void expect_eq(SuiteReport& report, std::size_t case_index, const char* property,
                      double lhs, double rhs, double tol) {
    ++report.checks;
    if (!(std::fabs(lhs - rhs) <= tol)) {
        report.violations.push_back({property, case_index, lhs, rhs});
    }
}

inline void expect_true(SuiteReport& report, std::size_t case_index, const char* property,
                        bool value, double lhs = 0.0, double rhs = 0.0) {
    ++report.checks;
    if (!value) {
        report.violations.push_back({property, case_index, lhs, rhs});
    }
}

// Random interval union of up to max_comps components inside [0, 4], with a
// sprinkling of degenerate (point) components.
inline IntervalUnion random_union(SeededRng& rng, std::size_t max_comps) {
    const std::size_t m = 1 + rng.index(max_comps);
    std::vector<double> cuts;
    for (;;) {
        cuts.clear();
        for (std::size_t i = 0; i < 2 * m; ++i) cuts.push_back(rng.range(0.0, 4.0));
        std::sort(cuts.begin(), cuts.end());
        if (std::adjacent_find(cuts.begin(), cuts.end()) == cuts.end()) break;
    }
    std::vector<ClosedInterval> comps;
    for (std::size_t i = 0; i < m; ++i) {
        ClosedInterval c{cuts[2 * i], cuts[2 * i + 1]};
        if (rng.unit() < 0.15) c.hi = c.lo;
        comps.push_back(c);
    }
    return IntervalUnion(std::move(comps));
}

// Componentwise subset: drop some components, shrink the rest inward.
inline IntervalUnion random_subunion(SeededRng& rng, const IntervalUnion& u) {
    std::vector<ClosedInterval> comps;
    for (const auto& c : u.components()) {
        if (rng.unit() < 1.0 / 3.0) continue;
        const double len = c.length();
        double lo = c.lo + rng.unit() * 0.3 * len;
        double hi = c.hi - rng.unit() * 0.3 * len;
        if (lo > hi) std::swap(lo, hi);
        comps.push_back({lo, hi});
    }
    return IntervalUnion(std::move(comps));
}

inline IntervalUnion shift_union(const IntervalUnion& u, double offset) {
    std::vector<ClosedInterval> comps;
    for (const auto& c : u.components()) comps.push_back({c.lo + offset, c.hi + offset});
    return IntervalUnion(std::move(comps));
}

// Sample k distinct indices out of [0, n).
inline PointSet random_subset(SeededRng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j = i + rng.index(n - i);
        std::swap(all[i], all[j]);
    }
    all.resize(std::min(k, n));
    return PointSet(std::move(all));
}

inline PointSet random_subset_of(SeededRng& rng, const PointSet& base) {
    std::vector<std::size_t> members;
    for (std::size_t p : base) {
        if (rng.unit() < 0.5) members.push_back(p);
    }
    return PointSet(std::move(members));
}

inline void inequality_case_intervals(SuiteReport& report, std::size_t case_index, SeededRng& rng,
                                      double tol) {
    const IntervalUnion u = random_union(rng, 8);
    const IntervalUnion sub = random_subunion(rng, u);
    const IntervalUnion other = random_union(rng, 4);

    const double alpha = 0.3 + 2.2 * rng.unit();
    const double beta = alpha + 1.5 * rng.unit();
    const double eps1 = 0.05 + 0.6 * rng.unit();
    const double eps2 = eps1 + 0.05 + rng.unit();

    expect_le(report, case_index, "interval/diameter-monotone", diameter_u(sub), diameter_u(u), tol);
    expect_le(report, case_index, "interval/self-cover", content_exact(u, alpha).value,
              std::pow(diameter_u(u), alpha), tol);
    expect_le(report, case_index, "interval/content-monotone", content_exact(sub, alpha).value,
              content_exact(u, alpha).value, tol);
    expect_le(report, case_index, "interval/content-subadditive",
              content_exact(normalize_union(u, other), alpha).value,
              content_exact(u, alpha).value + content_exact(other, alpha).value, tol);
    expect_le(report, case_index, "interval/eps-monotone", hausdorff_eps(u, alpha, eps2).value,
              hausdorff_eps(u, alpha, eps1).value, tol);
    expect_le(report, case_index, "interval/content-below-premeasure", content_exact(u, alpha).value,
              hausdorff_eps(u, alpha, eps1).value, tol);
    expect_le(report, case_index, "interval/exponent-comparison",
              hausdorff_eps(u, beta, eps1).value,
              std::pow(eps1, beta - alpha) * hausdorff_eps(u, alpha, eps1).value, tol);

    // Separated additivity: push the second union past u by more than eps2.
    const double offset = u.components().back().hi + eps2 + 0.1 - other.components().front().lo;
    const IntervalUnion far = shift_union(other, offset);
    const IntervalUnion joined = normalize_union(u, far);
    expect_eq(report, case_index, "interval/separated-additivity",
              hausdorff_eps(joined, alpha, eps2).value,
              hausdorff_eps(u, alpha, eps2).value + hausdorff_eps(far, alpha, eps2).value, tol);
}

inline void inequality_case_finite(SuiteReport& report, std::size_t case_index, SeededRng& rng,
                                   double tol) {
    RandomSpec spec;
    spec.seed = rng.bits();
    spec.n = 5 + rng.index(6);
    spec.ambient_dim = (case_index % 4 == 1) ? 0 : 1 + static_cast<int>(rng.index(3));
    auto space = std::make_shared<const FiniteMetricSpace>(random_space(spec));
    const std::size_t n = space->size();

    const PointSet e = random_subset(rng, n, 3 + rng.index(3));
    const PointSet sub = random_subset_of(rng, e);
    // Up to three points outside E, for subadditivity and separated additivity.
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n && rest.size() < 3; ++p) {
        if (!e.contains(p)) rest.push_back(p);
    }
    const PointSet other(std::move(rest));

    const double dmax = std::max(space->max_distance(), 1e-6);
    const double alpha = 0.3 + 2.2 * rng.unit();
    const double beta = alpha + 1.5 * rng.unit();
    const double delta = (rng.unit() < 0.5) ? 0.0 : (0.05 + 0.3 * rng.unit()) * dmax;
    const double eps1 = (0.1 + 0.4 * rng.unit()) * dmax;
    const double eps2 = eps1 + (0.05 + 0.5 * rng.unit()) * dmax;

    const CoverQuery plain{alpha, delta, std::nullopt, CoverMethod::exact, 12};
    const CoverQuery cap1{alpha, delta, eps1, CoverMethod::exact, 12};
    const CoverQuery cap2{alpha, delta, eps2, CoverMethod::exact, 12};

    expect_le(report, case_index, "finite/diameter-monotone", diameter(*space, sub),
              diameter(*space, e), tol);
    expect_le(report, case_index, "finite/self-cover",
              exact_cover(*space, e, {alpha, 0.0, std::nullopt, CoverMethod::exact, 12}).value,
              std::pow(diameter(*space, e), alpha), tol);
    expect_le(report, case_index, "finite/content-monotone", exact_cover(*space, sub, plain).value,
              exact_cover(*space, e, plain).value, tol);
    expect_le(report, case_index, "finite/capped-monotone", exact_cover(*space, sub, cap1).value,
              exact_cover(*space, e, cap1).value, tol);
    expect_le(report, case_index, "finite/content-subadditive",
              exact_cover(*space, e.united(other), plain).value,
              exact_cover(*space, e, plain).value + exact_cover(*space, other, plain).value, tol);
    expect_le(report, case_index, "finite/eps-monotone", exact_cover(*space, e, cap2).value,
              exact_cover(*space, e, cap1).value, tol);
    expect_le(report, case_index, "finite/content-below-premeasure",
              exact_cover(*space, e, plain).value, exact_cover(*space, e, cap1).value, tol);
    expect_le(report, case_index, "finite/exponent-comparison",
              exact_cover(*space, e, {beta, 0.0, eps1, CoverMethod::exact, 12}).value,
              std::pow(eps1, beta - alpha) *
                  exact_cover(*space, e, {alpha, 0.0, eps1, CoverMethod::exact, 12}).value,
              tol);
    expect_le(report, case_index, "finite/greedy-dominates",
              exact_cover(*space, e, plain).value, greedy_cover(*space, e, plain).value, tol);

    if (!other.empty()) {
        double sep = std::numeric_limits<double>::infinity();
        for (std::size_t a : e) {
            for (std::size_t b : other) sep = std::min(sep, space->distance(a, b));
        }
        const CoverQuery capsep{alpha, delta, sep, CoverMethod::exact, 12};
        expect_eq(report, case_index, "finite/separated-additivity",
                  exact_cover(*space, e.united(other), capsep).value,
                  exact_cover(*space, e, capsep).value + exact_cover(*space, other, capsep).value,
                  tol);
    }

    // Pushforward bounds, with and without the eps cap.
    MetricMap map = [&]() {
        switch (rng.index(3)) {
        case 0: { // identity
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            return MetricMap(space, space, std::move(idx));
        }
        case 1: { // dilation by 2
            std::vector<std::vector<double>> scaled = space->matrix();
            for (auto& row : scaled) {
                for (double& v : row) v *= 2.0;
            }
            auto codomain = std::make_shared<const FiniteMetricSpace>(std::move(scaled));
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            return MetricMap(space, codomain, std::move(idx));
        }
        default: { // distance to a seeded base point
            const std::size_t p = rng.index(n);
            std::vector<double> values(n);
            for (std::size_t i = 0; i < n; ++i) values[i] = space->distance(i, p);
            return MetricMap::to_real_line(space, values);
        }
        }
    }();
    const PushforwardReport push_plain = pushforward_check(map, e, alpha, delta);
    expect_le(report, case_index, "finite/pushforward-content", push_plain.image_value,
              push_plain.bound, tol);
    const PushforwardReport push_capped = pushforward_check(map, e, alpha, delta, eps1);
    expect_le(report, case_index, "finite/pushforward-premeasure", push_capped.image_value,
              push_capped.bound, tol);
}

} // namespace detail

/// The seeded inequality catalogue: diameter monotonicity, the self-cover
/// bound, monotonicity and subadditivity of content, eps-monotonicity of the
/// premeasure, content below premeasure, separated additivity with equality,
/// the exponent comparison, greedy dominance, and both Lipschitz pushforward
/// bounds — alternating between the interval engine and finite-space covers.
inline SuiteReport run_inequality_suite(std::uint64_t seed, std::size_t cases, double tol = 1e-9) {
    SuiteReport report;
    report.seed = seed;
    report.cases = cases;
    for (std::size_t i = 0; i < cases; ++i) {
        SeededRng rng(detail::mix_seed(seed, i));
        if (i % 2 == 0) {
            detail::inequality_case_intervals(report, i, rng, tol);
        } else {
            detail::inequality_case_finite(report, i, rng, tol);
        }
    }
    return report;
}

namespace detail {

// Consecutive blocks of a line sample: hulls stay disjoint, so the slicing
// profile sums in the same order on both sides of the integral bound.
inline CoveringFamily consecutive_blocks(const PointSet& pts, SeededRng& rng) {
    CoveringFamily family;
    std::vector<std::size_t> current;
    for (std::size_t p : pts) {
        current.push_back(p);
        if (rng.unit() < 0.4) {
            family.blocks.emplace_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) family.blocks.emplace_back(std::move(current));
    return family;
}

inline CoveringFamily random_partition(const PointSet& pts, SeededRng& rng, std::size_t buckets) {
    std::vector<std::vector<std::size_t>> raw(std::max<std::size_t>(buckets, 1));
    for (std::size_t p : pts) raw[rng.index(raw.size())].push_back(p);
    CoveringFamily family;
    for (auto& b : raw) {
        if (!b.empty()) family.blocks.emplace_back(std::move(b));
    }
    return family;
}

// Dyadic coordinates make every subtraction exact, so identity and dilation
// maps hit the integral bound with exact equality.
inline std::vector<double> dyadic_grid(SeededRng& rng, std::size_t count) {
    std::vector<double> coords;
    const double pitch = 1.0 / 64.0;
    std::vector<std::size_t> offsets(128);
    for (std::size_t i = 0; i < offsets.size(); ++i) offsets[i] = i;
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
        const std::size_t j = i + rng.index(offsets.size() - i);
        std::swap(offsets[i], offsets[j]);
    }
    for (std::size_t i = 0; i < count; ++i) coords.push_back(static_cast<double>(offsets[i]) * pitch);
    return coords;
}

inline void coarea_case(SuiteReport& report, std::size_t case_index, SeededRng& rng,
                        std::size_t samples_per_case) {
    const std::size_t flavor = case_index % 4;

    std::shared_ptr<const FiniteMetricSpace> space;
    MetricMap map = [&]() {
        switch (flavor) {
        case 0: { // identity embedding of a dyadic line sample, exact-equality regime
            LineSample line = line_space_from_coords(dyadic_grid(rng, 6 + rng.index(8)));
            space = line.space;
            return MetricMap::to_real_line(line.space, line.coords);
        }
        case 1: { // dilation of a dyadic line sample by a power of two
            LineSample line = line_space_from_coords(dyadic_grid(rng, 6 + rng.index(8)));
            space = line.space;
            const double factor = (rng.unit() < 0.5) ? 2.0 : 4.0;
            std::vector<double> scaled = line.coords;
            for (double& x : scaled) x *= factor;
            return MetricMap::to_real_line(line.space, scaled);
        }
        case 2: { // coordinate projection of an ambient cloud
            RandomSpec spec{rng.bits(), 8 + rng.index(7), 2 + static_cast<int>(rng.index(2))};
            const auto pts = ambient_points(spec);
            space = std::make_shared<const FiniteMetricSpace>(random_space(spec));
            std::vector<double> values(spec.n);
            const std::size_t axis = rng.index(static_cast<std::size_t>(spec.ambient_dim));
            for (std::size_t i = 0; i < spec.n; ++i) values[i] = pts[i][axis];
            return MetricMap::to_real_line(space, values);
        }
        default: { // distance to a base point on an ambient cloud
            RandomSpec spec{rng.bits(), 8 + rng.index(7), 2 + static_cast<int>(rng.index(2))};
            space = std::make_shared<const FiniteMetricSpace>(random_space(spec));
            const std::size_t p = rng.index(spec.n);
            std::vector<double> values(spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) values[i] = space->distance(i, p);
            return MetricMap::to_real_line(space, values);
        }
        }
    }();

    PointSet target = PointSet::range(space->size());
    if (flavor == 3) {
        // Drop the pair attaining the Lipschitz ratio so every block stays
        // strictly inside the bound.
        double best = -1.0;
        std::size_t ba = 0, bb = 0;
        for (std::size_t a = 0; a < space->size(); ++a) {
            for (std::size_t b = a + 1; b < space->size(); ++b) {
                const double r = map.codomain().distance(map.apply(a), map.apply(b)) /
                                 space->distance(a, b);
                if (r > best) {
                    best = r;
                    ba = a;
                    bb = b;
                }
            }
        }
        std::vector<std::size_t> kept;
        for (std::size_t p = 0; p < space->size(); ++p) {
            if (p != ba && p != bb) kept.push_back(p);
        }
        target = PointSet(std::move(kept));
    }

    const double alpha = (flavor <= 1) ? 2.0 : 1.0 + 2.0 * rng.unit();
    CoveringFamily family = (flavor <= 1) ? consecutive_blocks(target, rng)
                                          : random_partition(target, rng, 3 + rng.index(3));
    if (family.blocks.empty()) family.blocks.push_back(target);

    std::optional<double> eps;
    if (case_index % 2 == 1) {
        double dmax = 0.0;
        for (const auto& b : family.blocks) dmax = std::max(dmax, diameter(*space, b));
        eps = dmax * 1.5 + 0.01;
    }

    std::vector<double> samples;
    for (const auto& b : family.blocks) {
        const ClosedInterval hull = interval_hull(map, b);
        samples.push_back(hull.lo);
        samples.push_back(hull.hi);
    }
    for (std::size_t p : target) samples.push_back(map.real_value(p));
    double lo = samples.front(), hi = samples.front();
    for (double s : samples) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    while (samples.size() < samples_per_case) samples.push_back(rng.range(lo - 0.1, hi + 0.1));
    samples.resize(samples_per_case);

    const CoareaReport r = coarea_report(*space, target, map, family, alpha, eps, samples);
    expect_le(report, case_index, "coarea/integral-bound", r.integral,
              r.lipschitz * r.sum_cost, 0.0);
    for (const auto& s : r.samples) {
        expect_true(report, case_index,
                    eps ? "coarea/eps-slice-bound" : "coarea/slice-bound", s.ok, s.slice_value,
                    s.h_t);
    }
}

} // namespace detail

/// Seeded coarea slicing checks: the integral bound (asserted with no
/// tolerance) and the pointwise slice bounds at `samples_per_case` values of t
/// per case, mixing exact-equality line cases with strict-margin ambient
/// cases.
inline SuiteReport run_coarea_suite(std::uint64_t seed, std::size_t cases,
                                    std::size_t samples_per_case = 50) {
    SuiteReport report;
    report.seed = seed;
    report.cases = cases;
    for (std::size_t i = 0; i < cases; ++i) {
        SeededRng rng(detail::mix_seed(seed, i ^ 0xC0A3EAULL));
        detail::coarea_case(report, i, rng, samples_per_case);
    }
    return report;
}

} // namespace hauscover
