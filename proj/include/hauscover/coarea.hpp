#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hauscover/covering.hpp"
#include "hauscover/interval_content.hpp"
#include "hauscover/interval_union.hpp"
#include "hauscover/metric_map.hpp"
#include "hauscover/metric_space.hpp"
#include "hauscover/step_function.hpp"

namespace hauscover {

/// {x in E : |f(x) - t| <= tau}; tau = 0 gives the exact level set. f must be
/// real-valued.
inline PointSet level_set(const MetricMap& f, const PointSet& target, double t, double tau = 0.0) {
    if (!(tau >= 0.0)) {
        throw std::invalid_argument("level_set: tau must be >= 0");
    }
    detail::check_subset(f.domain(), target, "level_set");
    std::vector<std::size_t> members;
    for (std::size_t x : target) {
        if (std::fabs(f.real_value(x) - t) <= tau) members.push_back(x);
    }
    return PointSet(std::move(members));
}

/// The blocks of a covering family that meet the level set E_t. The result
/// covers E_t; it is empty exactly when E_t is (vacuously covered).
inline CoveringFamily subfamily_at(const CoveringFamily& family, const MetricMap& f,
                                   const PointSet& target, double t) {
    if (!family.covers(target)) {
        throw std::invalid_argument("subfamily_at: family does not cover E");
    }
    const PointSet cut = level_set(f, target, t);
    CoveringFamily out;
    for (const auto& block : family.blocks) {
        for (std::size_t x : block) {
            if (cut.contains(x)) {
                out.blocks.push_back(block);
                break;
            }
        }
    }
    return out;
}

/// Smallest closed interval containing f(A): [min f(A), max f(A)]. A must be
/// nonempty. Its length is at most lipschitz_constant(f) times diameter(A).
inline ClosedInterval interval_hull(const MetricMap& f, const PointSet& block) {
    if (block.empty()) {
        throw std::invalid_argument("interval_hull: A must be nonempty");
    }
    detail::check_subset(f.domain(), block, "interval_hull");
    double lo = f.real_value(*block.begin());
    double hi = lo;
    for (std::size_t x : block) {
        const double v = f.real_value(x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

/// The slicing function h(t) = sum over blocks of diam(A)^(alpha-1) times the
/// indicator of the interval hull of f(A). Requires alpha > 1 and nonempty
/// blocks. Blocks on which f is constant produce degenerate hulls: they carry
/// their full weight pointwise but are invisible to the integral.
inline StepFunction slice_profile(const FiniteMetricSpace& space, const CoveringFamily& family,
                                  const MetricMap& f, double alpha) {
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("slice_profile: alpha must be > 1");
    }
    std::vector<std::pair<ClosedInterval, double>> hulls;
    hulls.reserve(family.blocks.size());
    for (const auto& block : family.blocks) {
        if (block.empty()) {
            throw std::invalid_argument("slice_profile: blocks must be nonempty");
        }
        const double weight = std::pow(diameter(space, block), alpha - 1.0);
        hulls.emplace_back(interval_hull(f, block), weight);
    }
    return StepFunction::from_weighted_hulls(hulls);
}

struct CoareaSample {
    double t = 0.0;
    double h_t = 0.0;
    double slice_value = 0.0;
    bool ok = true;
};

struct CoareaReport {
    double lipschitz = 0.0;
    double alpha = 0.0;
    std::optional<double> eps;
    double sum_cost = 0.0;  // sum of diam(A)^alpha
    double integral = 0.0;  // integral of h
    double slack = 0.0;     // C * sum_cost - integral
    bool integral_ok = true;
    std::vector<CoareaSample> samples;
    std::size_t family_size = 0;
    bool ok = true;
};

/// Runs the whole slicing pipeline: h from the family, the integral bound
/// against C * sum(diam A)^alpha, and for each requested t the covering value
/// of the level set E_t at exponent alpha - 1 (resolution floor 0) against
/// h(t). When eps is given the family must be a strict eps-family and the
/// slice values are computed with the same cap. Samples are sorted before
/// evaluation so reports do not depend on input order.
inline CoareaReport coarea_report(const FiniteMetricSpace& space, const PointSet& target,
                                  const MetricMap& f, const CoveringFamily& family, double alpha,
                                  std::optional<double> eps, std::vector<double> t_samples,
                                  std::size_t cap = 12) {
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("coarea_report: alpha must be > 1");
    }
    if (!family.covers(target)) {
        throw std::invalid_argument("coarea_report: family does not cover E");
    }
    if (eps) {
        if (!(*eps > 0.0)) {
            throw std::invalid_argument("coarea_report: eps must be > 0");
        }
        for (const auto& block : family.blocks) {
            if (!(diameter(space, block) < *eps)) {
                throw std::invalid_argument(
                    "coarea_report: eps slice bound requested but the family is not an eps-family");
            }
        }
    }

    CoareaReport report;
    report.alpha = alpha;
    report.eps = eps;
    report.family_size = family.blocks.size();
    report.lipschitz = lipschitz_constant(f);

    const StepFunction h = slice_profile(space, family, f, alpha);
    for (const auto& block : family.blocks) {
        report.sum_cost += std::pow(diameter(space, block), alpha);
    }
    report.integral = integrate_step(h);
    const double rhs = report.lipschitz * report.sum_cost;
    report.slack = rhs - report.integral;
    report.integral_ok = report.integral <= rhs;

    std::sort(t_samples.begin(), t_samples.end());
    for (double t : t_samples) {
        CoareaSample sample;
        sample.t = t;
        sample.h_t = h(t);
        const PointSet cut = level_set(f, target, t);
        CoverQuery q{alpha - 1.0, 0.0, eps, CoverMethod::exact, cap};
        if (cut.size() > cap) q.method = CoverMethod::greedy;
        sample.slice_value = run_cover(space, cut, q).value;
        sample.ok = sample.slice_value <= sample.h_t;
        report.samples.push_back(sample);
    }

    report.ok = report.integral_ok;
    for (const auto& s : report.samples) report.ok = report.ok && s.ok;
    return report;
}

// ---- identity-map slicing on interval unions ----
//
// Here E is a union of closed intervals, f is the identity, and the covering
// family is a list of closed pieces. Level sets are single points of the line,
// so their content and premeasure run through the exact interval engine.

/// Pieces meeting the level set E_t = U intersected with {t}: exactly the
/// pieces containing t, when t lies in U.
inline std::vector<ClosedInterval> subfamily_at(const IntervalUnion& u,
                                                const std::vector<ClosedInterval>& pieces,
                                                double t) {
    if (!pieces_cover(pieces, u)) {
        throw std::invalid_argument("subfamily_at: pieces do not cover U");
    }
    std::vector<ClosedInterval> out;
    if (!u.contains(t)) return out;
    for (const auto& p : pieces) {
        if (p.contains(t)) out.push_back(p);
    }
    return out;
}

/// h(t) for the identity map: each piece is its own hull, weighted by
/// length^(alpha-1).
inline StepFunction slice_profile(const std::vector<ClosedInterval>& pieces, double alpha) {
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("slice_profile: alpha must be > 1");
    }
    std::vector<std::pair<ClosedInterval, double>> hulls;
    hulls.reserve(pieces.size());
    for (const auto& p : pieces) {
        hulls.emplace_back(p, std::pow(p.length(), alpha - 1.0));
    }
    return StepFunction::from_weighted_hulls(hulls);
}

/// Slicing report for the identity map on an interval union: the Lipschitz
/// constant is 1, and each slice value is the exact interval content (or
/// eps-premeasure) of the single-point level set at exponent alpha - 1.
inline CoareaReport coarea_report(const IntervalUnion& u,
                                  const std::vector<ClosedInterval>& pieces, double alpha,
                                  std::optional<double> eps, std::vector<double> t_samples) {
    if (!(alpha > 1.0)) {
        throw std::invalid_argument("coarea_report: alpha must be > 1");
    }
    if (!pieces_cover(pieces, u)) {
        throw std::invalid_argument("coarea_report: pieces do not cover U");
    }
    if (eps) {
        if (!(*eps > 0.0)) {
            throw std::invalid_argument("coarea_report: eps must be > 0");
        }
        for (const auto& p : pieces) {
            if (!(p.length() < *eps)) {
                throw std::invalid_argument(
                    "coarea_report: eps slice bound requested but the pieces are not an eps-family");
            }
        }
    }

    CoareaReport report;
    report.alpha = alpha;
    report.eps = eps;
    report.family_size = pieces.size();
    report.lipschitz = u.empty() ? 0.0 : 1.0;

    const StepFunction h = slice_profile(pieces, alpha);
    for (const auto& p : pieces) {
        report.sum_cost += std::pow(p.length(), alpha);
    }
    report.integral = integrate_step(h);
    const double rhs = report.lipschitz * report.sum_cost;
    report.slack = rhs - report.integral;
    report.integral_ok = report.integral <= rhs;

    std::sort(t_samples.begin(), t_samples.end());
    for (double t : t_samples) {
        CoareaSample sample;
        sample.t = t;
        sample.h_t = h(t);
        const IntervalUnion cut =
            u.contains(t) ? IntervalUnion({{t, t}}) : IntervalUnion{};
        sample.slice_value = eps ? hausdorff_eps(cut, alpha - 1.0, *eps).value
                                 : content_exact(cut, alpha - 1.0).value;
        sample.ok = sample.slice_value <= sample.h_t;
        report.samples.push_back(sample);
    }

    report.ok = report.integral_ok;
    for (const auto& s : report.samples) report.ok = report.ok && s.ok;
    return report;
}

} // namespace hauscover
