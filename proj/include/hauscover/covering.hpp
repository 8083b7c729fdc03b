#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hauscover/metric_map.hpp"
#include "hauscover/metric_space.hpp"

namespace hauscover {

/// A family of point blocks over one space, used both as a covering of a
/// target set and as a witness for an optimal cost.
struct CoveringFamily {
    std::vector<PointSet> blocks;

    bool covers(const PointSet& target) const {
        PointSet u;
        for (const auto& b : blocks) u = u.united(b);
        return target.subset_of(u);
    }
};

enum class CoverMethod { exact, greedy };

/// Parameters of a covering-cost query. `delta` is the resolution floor: each
/// block costs max(diam, delta)^alpha, so that finite samples can stand in for
/// continuum sets (delta = 0 is the literal definition, where singletons are
/// free). `eps`, when set, caps block diameters strictly below eps.
struct CoverQuery {
    double alpha = 1.0;
    double delta = 0.0;
    std::optional<double> eps;
    CoverMethod method = CoverMethod::exact;
    std::size_t cap = 12; // exact enumeration size limit

    void check() const {
        if (!(alpha > 0.0)) throw std::invalid_argument("CoverQuery: alpha must be > 0");
        if (!(delta >= 0.0)) throw std::invalid_argument("CoverQuery: delta must be >= 0");
        if (eps && !(*eps > 0.0)) throw std::invalid_argument("CoverQuery: eps must be > 0");
    }
};

struct CoverResult {
    double value = 0.0;
    bool attained = true;
    CoveringFamily witness;
    CoverMethod method = CoverMethod::exact;
};

inline double block_cost(double diam, double alpha, double delta) {
    return std::pow(std::max(diam, delta), alpha);
}

inline double family_cost(const FiniteMetricSpace& space, const CoveringFamily& family,
                          double alpha, double delta) {
    double sum = 0.0;
    for (const auto& b : family.blocks) {
        sum += block_cost(diameter(space, b), alpha, delta);
    }
    return sum;
}

/// Visits every set partition of {0..n-1} as a restricted growth string, in
/// lexicographic order (all-in-one-block first, all-singletons last). The
/// visitor receives the RGS: rgs[i] is the block id of element i, block ids
/// appear in first-occurrence order.
template <typename Visitor>
void for_each_partition(std::size_t n, Visitor&& visit) {
    if (n == 0) return;
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0); // max of rgs[0..i]
    for (;;) {
        visit(const_cast<const std::vector<std::size_t>&>(rgs));
        std::size_t i = n;
        while (i-- > 1) {
            if (rgs[i] <= prefix_max[i - 1]) {
                ++rgs[i];
                prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[j - 1];
                }
                break;
            }
            if (i == 1) return;
        }
        if (n == 1) return;
    }
}

/// Exact minimum of sum max(diam(block), delta)^alpha over covers of E.
///
/// Covers reduce to partitions of E: intersecting each covering set with E and
/// assigning every point to a single block never increases any diameter. The
/// search therefore enumerates all set partitions of E (restricted growth
/// strings, lexicographic). With an eps cap, only partitions whose blocks all
/// have diameter strictly below eps count; singletons keep that feasible.
/// Ties are broken by the lexicographically smallest partition. Always
/// attained.
///
/// Throws std::length_error when |E| exceeds the query cap; use greedy_cover
/// for larger sets.
inline CoverResult exact_cover(const FiniteMetricSpace& space, const PointSet& target,
                               const CoverQuery& query) {
    query.check();
    detail::check_subset(space, target, "exact_cover");
    if (target.size() > query.cap) {
        throw std::length_error("exact_cover: |E| = " + std::to_string(target.size()) +
                                " exceeds the enumeration cap " + std::to_string(query.cap) +
                                "; use greedy_cover");
    }
    const auto& pts = target.members();
    const std::size_t n = pts.size();
    if (n == 0) {
        return {0.0, true, {}, CoverMethod::exact};
    }

    std::vector<double> dist(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            dist[a * n + b] = space.distance(pts[a], pts[b]);
        }
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_rgs;
    std::vector<double> block_diam(n);
    for_each_partition(n, [&](const std::vector<std::size_t>& rgs) {
        std::size_t blocks = 0;
        for (std::size_t i = 0; i < n; ++i) {
            blocks = std::max(blocks, rgs[i] + 1);
        }
        std::fill(block_diam.begin(), block_diam.begin() + blocks, 0.0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (rgs[a] == rgs[b]) {
                    block_diam[rgs[a]] = std::max(block_diam[rgs[a]], dist[a * n + b]);
                }
            }
        }
        double cost = 0.0;
        for (std::size_t k = 0; k < blocks; ++k) {
            if (query.eps && !(block_diam[k] < *query.eps)) return;
            cost += block_cost(block_diam[k], query.alpha, query.delta);
        }
        if (cost < best) {
            best = cost;
            best_rgs = rgs;
        }
    });

    std::size_t blocks = 0;
    for (std::size_t id : best_rgs) blocks = std::max(blocks, id + 1);
    std::vector<std::vector<std::size_t>> members(blocks);
    for (std::size_t i = 0; i < n; ++i) members[best_rgs[i]].push_back(pts[i]);
    CoveringFamily witness;
    for (auto& m : members) witness.blocks.emplace_back(std::move(m));
    return {best, true, std::move(witness), CoverMethod::exact};
}

/// Agglomerative upper bound for the same cost: start from singletons and
/// repeatedly apply the merge with the largest strict cost decrease, breaking
/// ties toward the smallest block-index pair (indices are current positions in
/// the block list; the merged block replaces the smaller index). Stops when no
/// merge strictly decreases the cost or every candidate would break the eps
/// cap. Deterministic, and never below the exact value.
inline CoverResult greedy_cover(const FiniteMetricSpace& space, const PointSet& target,
                                const CoverQuery& query) {
    query.check();
    detail::check_subset(space, target, "greedy_cover");
    const auto& pts = target.members();
    if (pts.empty()) {
        return {0.0, true, {}, CoverMethod::greedy};
    }

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<double> diam;
    std::vector<double> cost;
    for (std::size_t p : pts) {
        blocks.push_back({p});
        diam.push_back(0.0);
        cost.push_back(block_cost(0.0, query.alpha, query.delta));
    }

    for (;;) {
        double best_drop = 0.0;
        std::size_t best_i = 0, best_j = 0;
        double best_diam = 0.0, best_cost = 0.0;
        bool found = false;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                double d = std::max(diam[i], diam[j]);
                for (std::size_t a : blocks[i]) {
                    for (std::size_t b : blocks[j]) {
                        d = std::max(d, space.distance(a, b));
                    }
                }
                if (query.eps && !(d < *query.eps)) continue;
                const double merged_cost = block_cost(d, query.alpha, query.delta);
                const double drop = cost[i] + cost[j] - merged_cost;
                if (drop > best_drop) {
                    best_drop = drop;
                    best_i = i;
                    best_j = j;
                    best_diam = d;
                    best_cost = merged_cost;
                    found = true;
                }
            }
        }
        if (!found) break;
        auto& into = blocks[best_i];
        into.insert(into.end(), blocks[best_j].begin(), blocks[best_j].end());
        std::sort(into.begin(), into.end());
        diam[best_i] = best_diam;
        cost[best_i] = best_cost;
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best_j));
        diam.erase(diam.begin() + static_cast<std::ptrdiff_t>(best_j));
        cost.erase(cost.begin() + static_cast<std::ptrdiff_t>(best_j));
    }

    double total = 0.0;
    for (double c : cost) total += c;
    CoveringFamily witness;
    for (auto& b : blocks) witness.blocks.emplace_back(std::move(b));
    return {total, true, std::move(witness), CoverMethod::greedy};
}

inline CoverResult run_cover(const FiniteMetricSpace& space, const PointSet& target,
                             const CoverQuery& query) {
    return query.method == CoverMethod::exact ? exact_cover(space, target, query)
                                              : greedy_cover(space, target, query);
}

/// Cover values along a strictly descending eps grid, at fixed alpha and
/// delta. For the exact method the value sequence is nondecreasing as eps
/// shrinks; the final entry is the measure estimate at resolution delta.
inline std::vector<std::pair<double, double>> measure_profile(
    const FiniteMetricSpace& space, const PointSet& target, double alpha, double delta,
    const std::vector<double>& eps_grid, CoverMethod method, std::size_t cap = 12) {
    if (eps_grid.empty()) {
        throw std::invalid_argument("measure_profile: empty eps grid");
    }
    for (std::size_t i = 1; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] < eps_grid[i - 1])) {
            throw std::invalid_argument("measure_profile: eps grid must be strictly descending");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        CoverQuery q{alpha, delta, eps, method, cap};
        out.emplace_back(eps, run_cover(space, target, q).value);
    }
    return out;
}

/// Both sides of the Lipschitz pushforward bound, exercised through covers:
/// the image set f(E) is covered with the cap scaled to C*eps and the
/// resolution floor scaled to C*delta, and compared against C^alpha times the
/// cover value of E. For a constant map (C = 0) the image is a single point
/// and both sides vanish.
struct PushforwardReport {
    double lipschitz = 0.0;
    double alpha = 1.0;
    double delta = 0.0;
    std::optional<double> eps;
    double domain_value = 0.0;
    double image_value = 0.0;
    double bound = 0.0; // C^alpha * domain_value
    bool holds = true;
    CoverMethod method = CoverMethod::exact;
};

inline PushforwardReport pushforward_check(const MetricMap& map, const PointSet& target,
                                           double alpha, double delta,
                                           std::optional<double> eps = std::nullopt,
                                           CoverMethod method = CoverMethod::exact,
                                           std::size_t cap = 12,
                                           double fp_slack = 1e-12) {
    detail::check_subset(map.domain(), target, "pushforward_check");
    const double c = target.empty() ? 0.0 : lipschitz_constant(map);

    CoverQuery domain_query{alpha, delta, eps, method, cap};
    const CoverResult domain_result = run_cover(map.domain(), target, domain_query);

    std::optional<double> image_eps;
    if (eps && c > 0.0) image_eps = c * *eps;
    CoverQuery image_query{alpha, c * delta, image_eps, method, cap};
    const CoverResult image_result = run_cover(map.codomain(), map.image(target), image_query);

    PushforwardReport report;
    report.lipschitz = c;
    report.alpha = alpha;
    report.delta = delta;
    report.eps = eps;
    report.domain_value = domain_result.value;
    report.image_value = image_result.value;
    report.bound = std::pow(c, alpha) * domain_result.value;
    report.method = method;
    report.holds = report.image_value <= report.bound + fp_slack * std::max(1.0, report.bound);
    return report;
}

} // namespace hauscover
