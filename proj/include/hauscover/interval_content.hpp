#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hauscover/interval_union.hpp"

namespace hauscover {

/// Result of a covering optimization: the infimum value, whether some cover
/// actually achieves it, and the piece layout that certifies it. When the
/// infimum is unattained the layout is the limiting one (it contains pieces of
/// length exactly eps, which a strict eps-family only approaches).
struct ContentResult {
    double value = 0.0;
    bool attained = true;
    std::optional<std::vector<ClosedInterval>> witness;
};

namespace detail {

inline void check_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": alpha must be > 0");
    }
}

// Witness for a zero-length union: each point covers itself.
inline std::vector<ClosedInterval> degenerate_self_cover(const IntervalUnion& u) {
    std::vector<ClosedInterval> pieces;
    pieces.reserve(u.component_count());
    for (const auto& c : u.components()) pieces.push_back(c);
    return pieces;
}

// Cheapest way to cover one interval of length len with pieces of length <= eps,
// for alpha < 1: floor(len/eps) full pieces plus one remainder. The minimum of a
// strictly concave sum under a cap sits at this extreme configuration. Attained
// by a strict eps-family iff no full-length piece is needed.
struct CappedPieceCost {
    double value = 0.0;
    long full_pieces = 0;
    double remainder = 0.0;
    bool attained = true;
};

inline CappedPieceCost capped_piece_cost(double len, double alpha, double eps, double eps_cost) {
    CappedPieceCost out;
    if (len <= 0.0) {
        return out;
    }
    long k = static_cast<long>(std::floor(len / eps));
    double r = len - static_cast<double>(k) * eps;
    if (r < 0.0) {
        --k;
        r = len - static_cast<double>(k) * eps;
    }
    if (r >= eps) {
        ++k;
        r = len - static_cast<double>(k) * eps;
        if (r < 0.0) r = 0.0;
    }
    out.full_pieces = k;
    out.remainder = r;
    out.value = static_cast<double>(k) * eps_cost + (r > 0.0 ? std::pow(r, alpha) : 0.0);
    out.attained = (k == 0);
    return out;
}

} // namespace detail

/// Exact Hausdorff content of U at exponent alpha: the infimum of
/// sum(diam A)^alpha over finite covers.
///
/// alpha > 1: fine subdivision drives the cost to 0, so the value is 0; it is
/// attained only when U has zero total length (points cover themselves).
/// alpha <= 1: one covering interval per consecutive group of components is
/// optimal, because x^alpha is subadditive, so overlapping pieces merge at no
/// extra cost and each covering interval shrinks onto the hull of the
/// components it covers. A dynamic program over consecutive groupings then
/// yields the exact infimum, always attained.
inline ContentResult content_exact(const IntervalUnion& u, double alpha) {
    detail::check_alpha(alpha, "content_exact");
    if (u.empty()) {
        return {0.0, true, std::vector<ClosedInterval>{}};
    }
    if (alpha > 1.0) {
        if (u.total_length() == 0.0) {
            return {0.0, true, detail::degenerate_self_cover(u)};
        }
        return {0.0, false, std::nullopt};
    }

    const auto& comp = u.components();
    const std::size_t m = comp.size();
    std::vector<double> suffix(m + 1, 0.0);
    std::vector<std::size_t> cut(m, 0); // group starting at i ends at cut[i]
    for (std::size_t i = m; i-- > 0;) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = i;
        for (std::size_t j = i; j < m; ++j) {
            const double span = comp[j].hi - comp[i].lo;
            const double cost = std::pow(span, alpha) + suffix[j + 1];
            if (cost < best) {
                best = cost;
                best_j = j;
            }
        }
        suffix[i] = best;
        cut[i] = best_j;
    }

    std::vector<ClosedInterval> witness;
    for (std::size_t i = 0; i < m; i = cut[i] + 1) {
        witness.push_back({comp[i].lo, comp[cut[i]].hi});
    }
    return {suffix[0], true, std::move(witness)};
}

/// Exact eps-restricted premeasure of U at exponent alpha: the infimum of
/// sum(diam A)^alpha over covers whose pieces all have diameter strictly less
/// than eps. Strictness means the infimum may be unattained; the value reported
/// is always the infimum and `attained` tells whether a strict cover reaches it.
///
/// Closed forms: alpha > 1 gives 0 (attained only on zero-length input);
/// alpha = 1 gives the total component length (attained: split each component
/// into equal pieces shorter than eps); alpha < 1 runs the consecutive-grouping
/// dynamic program with the capped per-group piece cost.
inline ContentResult hausdorff_eps(const IntervalUnion& u, double alpha, double eps) {
    detail::check_alpha(alpha, "hausdorff_eps");
    if (!(eps > 0.0)) {
        throw std::invalid_argument("hausdorff_eps: eps must be > 0");
    }
    if (u.empty()) {
        return {0.0, true, std::vector<ClosedInterval>{}};
    }
    if (alpha > 1.0) {
        if (u.total_length() == 0.0) {
            return {0.0, true, detail::degenerate_self_cover(u)};
        }
        return {0.0, false, std::nullopt};
    }
    if (alpha == 1.0) {
        // Any cover's lengths sum to at least the measure it covers, and equal
        // partitions of each component get arbitrarily close from above with
        // pieces strictly shorter than eps. Exact value: the total length.
        std::vector<ClosedInterval> witness;
        for (const auto& c : u.components()) {
            const double len = c.length();
            if (len == 0.0) {
                witness.push_back(c);
                continue;
            }
            const long k = static_cast<long>(std::floor(len / eps)) + 1;
            const double step = len / static_cast<double>(k);
            double left = c.lo;
            // Contiguous near-equal pieces; the nudge keeps every floating-point
            // length strictly under eps.
            while (c.hi - left >= eps) {
                double right = left + step;
                while (right - left >= eps) right = std::nextafter(right, c.lo);
                witness.push_back({left, right});
                left = right;
            }
            if (left < c.hi) witness.push_back({left, c.hi});
        }
        return {u.total_length(), true, std::move(witness)};
    }

    // alpha < 1. Consecutive-grouping DP; each group of span S is covered by
    // floor(S/eps) pieces of length eps plus a remainder piece. Track whether
    // the running optimum needs a full-length piece anywhere; ties in value
    // prefer the attainable grouping.
    const auto& comp = u.components();
    const std::size_t m = comp.size();
    const double eps_cost = std::pow(eps, alpha);

    struct State {
        double value = 0.0;
        bool attained = true;
        std::size_t cut = 0;
    };
    std::vector<State> suffix(m + 1);
    for (std::size_t i = m; i-- > 0;) {
        State best{std::numeric_limits<double>::infinity(), false, i};
        for (std::size_t j = i; j < m; ++j) {
            const double span = comp[j].hi - comp[i].lo;
            const auto piece = detail::capped_piece_cost(span, alpha, eps, eps_cost);
            const double value = piece.value + suffix[j + 1].value;
            const bool attained = piece.attained && suffix[j + 1].attained;
            if (value < best.value || (value == best.value && attained && !best.attained)) {
                best = {value, attained, j};
            }
        }
        suffix[i] = best;
    }

    std::vector<ClosedInterval> witness;
    for (std::size_t i = 0; i < m; i = suffix[i].cut + 1) {
        const std::size_t j = suffix[i].cut;
        const double lo = comp[i].lo;
        const double hi = comp[j].hi;
        // Full-length pieces then the remainder; the nudge keeps each
        // floating-point length at or under eps (the limiting layout).
        double left = lo;
        while (hi - left > eps) {
            double right = left + eps;
            while (right - left > eps) right = std::nextafter(right, lo);
            witness.push_back({left, right});
            left = right;
        }
        witness.push_back({left, hi});
    }
    return {suffix[0].value, suffix[0].attained, std::move(witness)};
}

/// Hausdorff measure of U at exponent alpha: sup over eps > 0 of the
/// eps-premeasure, i.e. the limit as eps shrinks. Closed form on interval
/// unions: 0 above exponent 1, the total length at exponent 1, and +inf below
/// exponent 1 whenever some component has positive length.
inline ContentResult hausdorff_measure(const IntervalUnion& u, double alpha) {
    detail::check_alpha(alpha, "hausdorff_measure");
    if (u.empty()) {
        return {0.0, true, std::vector<ClosedInterval>{}};
    }
    const bool zero_length = (u.total_length() == 0.0);
    if (alpha > 1.0) {
        if (zero_length) return {0.0, true, detail::degenerate_self_cover(u)};
        return {0.0, false, std::nullopt};
    }
    if (alpha == 1.0) {
        std::vector<ClosedInterval> witness(u.components().begin(), u.components().end());
        return {u.total_length(), true, std::move(witness)};
    }
    if (zero_length) {
        return {0.0, true, detail::degenerate_self_cover(u)};
    }
    return {std::numeric_limits<double>::infinity(), false, std::nullopt};
}

} // namespace hauscover
