#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hauscover/interval_union.hpp"

namespace hauscover {

/// A nonnegative piecewise-constant function built from weighted closed
/// intervals, with exact breakpoints and closed-interval point semantics: the
/// value at a breakpoint is the sum over every closed interval containing it,
/// which can exceed the values on both adjacent open gaps. Identically 0
/// outside the breakpoint span. Values may be +inf.
class StepFunction {
public:
    StepFunction() = default; // the zero function

    static StepFunction zero() { return StepFunction(); }

    /// Sum of weight * indicator([lo, hi]) over the given closed intervals.
    /// Degenerate intervals contribute only at their single point.
    static StepFunction from_weighted_hulls(const std::vector<std::pair<ClosedInterval, double>>& hulls) {
        for (const auto& [hull, weight] : hulls) {
            if (!(hull.lo <= hull.hi)) {
                throw std::invalid_argument("StepFunction: hull with lo > hi");
            }
            if (std::isnan(weight) || weight < 0.0) {
                throw std::invalid_argument("StepFunction: weights must be nonnegative");
            }
        }
        StepFunction f;
        for (const auto& [hull, weight] : hulls) {
            f.breakpoints_.push_back(hull.lo);
            f.breakpoints_.push_back(hull.hi);
        }
        std::sort(f.breakpoints_.begin(), f.breakpoints_.end());
        f.breakpoints_.erase(std::unique(f.breakpoints_.begin(), f.breakpoints_.end()),
                             f.breakpoints_.end());
        const std::size_t k = f.breakpoints_.size();
        if (k == 0) return f;
        f.gap_values_.assign(k - 1, 0.0);
        f.point_values_.assign(k, 0.0);
        for (const auto& [hull, weight] : hulls) {
            for (std::size_t i = 0; i < k; ++i) {
                if (hull.contains(f.breakpoints_[i])) f.point_values_[i] += weight;
            }
            for (std::size_t i = 0; i + 1 < k; ++i) {
                if (hull.lo <= f.breakpoints_[i] && f.breakpoints_[i + 1] <= hull.hi) {
                    f.gap_values_[i] += weight;
                }
            }
        }
        return f;
    }

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& gap_values() const { return gap_values_; }
    const std::vector<double>& point_values() const { return point_values_; }
    bool is_zero() const { return breakpoints_.empty(); }

    double operator()(double t) const {
        if (breakpoints_.empty()) return 0.0;
        auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
        if (it != breakpoints_.end() && *it == t) {
            return point_values_[static_cast<std::size_t>(it - breakpoints_.begin())];
        }
        if (it == breakpoints_.begin() || it == breakpoints_.end()) return 0.0;
        return gap_values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
    }

    /// Value on the open gap immediately to the right of coordinate a
    /// (0 outside the span). Exact: indexes the gap, no point evaluation.
    double value_right_of(double a) const {
        auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
        if (it == breakpoints_.begin() || it == breakpoints_.end()) return 0.0;
        return gap_values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
    }

    /// Exact Lebesgue integral: sum of gap value times gap length. Point
    /// masses at breakpoints contribute nothing.
    double integral() const {
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
            if (gap_values_[i] > 0.0) {
                sum += gap_values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
            }
        }
        return sum;
    }

    /// Pointwise minimum over a nonempty list, on the merged breakpoint set.
    static StepFunction pointwise_min(const std::vector<const StepFunction*>& fs) {
        if (fs.empty()) {
            throw std::invalid_argument("StepFunction::pointwise_min: empty list");
        }
        StepFunction out;
        for (const StepFunction* f : fs) {
            out.breakpoints_.insert(out.breakpoints_.end(), f->breakpoints_.begin(),
                                    f->breakpoints_.end());
        }
        std::sort(out.breakpoints_.begin(), out.breakpoints_.end());
        out.breakpoints_.erase(std::unique(out.breakpoints_.begin(), out.breakpoints_.end()),
                               out.breakpoints_.end());
        const std::size_t k = out.breakpoints_.size();
        if (k == 0) return out;
        out.point_values_.assign(k, std::numeric_limits<double>::infinity());
        out.gap_values_.assign(k - 1, std::numeric_limits<double>::infinity());
        for (const StepFunction* f : fs) {
            for (std::size_t i = 0; i < k; ++i) {
                out.point_values_[i] = std::min(out.point_values_[i], (*f)(out.breakpoints_[i]));
            }
            for (std::size_t i = 0; i + 1 < k; ++i) {
                out.gap_values_[i] = std::min(out.gap_values_[i],
                                              f->value_right_of(out.breakpoints_[i]));
            }
        }
        return out;
    }

private:
    std::vector<double> breakpoints_;  // strictly increasing
    std::vector<double> gap_values_;   // value on (b_i, b_{i+1})
    std::vector<double> point_values_; // value at b_i
};

inline double integrate_step(const StepFunction& h) { return h.integral(); }

enum class EnvelopeMode { inf, liminf_tail };

/// Pointwise minimum over the list (mode inf), or over the tail starting at
/// the 1-based index `tail_start` (mode liminf_tail, the finite truncation of
/// a liminf). The list must be nonempty and tail_start within it.
inline StepFunction envelope(const std::vector<StepFunction>& hs, EnvelopeMode mode,
                             std::size_t tail_start = 1) {
    if (hs.empty()) {
        throw std::invalid_argument("envelope: empty list");
    }
    std::size_t first = 0;
    if (mode == EnvelopeMode::liminf_tail) {
        if (tail_start < 1 || tail_start > hs.size()) {
            throw std::invalid_argument("envelope: tail_start must be in [1, list size]");
        }
        first = tail_start - 1;
    }
    std::vector<const StepFunction*> ptrs;
    for (std::size_t j = first; j < hs.size(); ++j) ptrs.push_back(&hs[j]);
    return StepFunction::pointwise_min(ptrs);
}

} // namespace hauscover
