#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hauscover {

struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    bool contains(double t) const { return lo <= t && t <= hi; }

    bool operator==(const ClosedInterval& other) const {
        return lo == other.lo && hi == other.hi;
    }
};

/// A finite union of closed intervals on the real line, kept sorted with strict
/// positive gaps between consecutive components. Degenerate components (points)
/// are allowed. Immutable after construction.
class IntervalUnion {
public:
    IntervalUnion() = default;

    /// Requires the invariants to hold already; use normalize() for raw input.
    explicit IntervalUnion(std::vector<ClosedInterval> components)
        : components_(std::move(components)) {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto& c = components_[i];
            if (!(std::isfinite(c.lo) && std::isfinite(c.hi)) || c.lo > c.hi) {
                throw std::invalid_argument("IntervalUnion: bad component [" +
                                            std::to_string(c.lo) + ", " + std::to_string(c.hi) + "]");
            }
            if (i > 0 && !(components_[i - 1].hi < c.lo)) {
                throw std::invalid_argument("IntervalUnion: components must be sorted with strict gaps");
            }
        }
    }

    const std::vector<ClosedInterval>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }
    bool empty() const { return components_.empty(); }

    double total_length() const {
        double sum = 0.0;
        for (const auto& c : components_) sum += c.length();
        return sum;
    }

    bool contains(double t) const {
        for (const auto& c : components_) {
            if (c.contains(t)) return true;
        }
        return false;
    }

private:
    std::vector<ClosedInterval> components_;
};

/// Sorts the raw intervals and merges everything that overlaps or touches.
/// Idempotent. Each input pair must be finite with a <= b.
inline IntervalUnion normalize(std::vector<std::pair<double, double>> raw) {
    for (const auto& [a, b] : raw) {
        if (!(std::isfinite(a) && std::isfinite(b))) {
            throw std::invalid_argument("normalize: non-finite endpoint");
        }
        if (a > b) {
            throw std::invalid_argument("normalize: interval with a > b ([" + std::to_string(a) +
                                        ", " + std::to_string(b) + "])");
        }
    }
    std::sort(raw.begin(), raw.end());
    std::vector<ClosedInterval> merged;
    for (const auto& [a, b] : raw) {
        if (!merged.empty() && a <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, b);
        } else {
            merged.push_back({a, b});
        }
    }
    return IntervalUnion(std::move(merged));
}

inline IntervalUnion normalize_union(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<std::pair<double, double>> raw;
    raw.reserve(a.component_count() + b.component_count());
    for (const auto& c : a.components()) raw.emplace_back(c.lo, c.hi);
    for (const auto& c : b.components()) raw.emplace_back(c.lo, c.hi);
    return normalize(std::move(raw));
}

/// Span of the union: last right endpoint minus first left endpoint; 0 when
/// empty or a single point.
inline double diameter_u(const IntervalUnion& u) {
    if (u.empty()) return 0.0;
    return u.components().back().hi - u.components().front().lo;
}

/// Whether the closed pieces cover every point of U (sweep per component).
inline bool pieces_cover(std::vector<ClosedInterval> pieces, const IntervalUnion& u) {
    std::sort(pieces.begin(), pieces.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
    for (const auto& c : u.components()) {
        double reached = c.lo;
        bool start_covered = false;
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (const auto& p : pieces) {
                if (p.lo > reached) break;
                if (p.hi >= reached) {
                    start_covered = true;
                    if (p.hi > reached) {
                        reached = p.hi;
                        progressed = true;
                    }
                }
            }
            if (reached >= c.hi) break;
        }
        if (!start_covered || reached < c.hi) return false;
    }
    return true;
}

} // namespace hauscover
