#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hauscover {

/// One axiom failure found by validate_metric.
///
/// Field meaning by axiom:
///   "diagonal"   witness = {i},        magnitude = |d(i,i)|
///   "positivity" witness = {i, j},     magnitude = -d(i,j)  (how far below 0; 0 when d(i,j)=0)
///   "symmetry"   witness = {i, j},     magnitude = |d(i,j) - d(j,i)|, reported once per pair i<j
///   "triangle"   witness = {i, k, j},  magnitude = d(i,k) - d(i,j) - d(j,k), i.e. the
///                detour through j is shorter than the direct entry (i,k)
struct MetricViolation {
    std::string axiom;
    std::vector<std::size_t> witness;
    double magnitude = 0.0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<MetricViolation> violations;
};

/// Checks the metric axioms on a raw square matrix and reports every violation.
///
/// `slack` is an additive tolerance for matrices coming out of floating-point
/// pipelines: the diagonal, symmetry and triangle checks are allowed to miss by
/// up to `slack`. Positivity of off-diagonal entries is always checked strictly,
/// since a zero distance between distinct points is a genuine degeneracy.
///
/// Non-square, empty, or non-finite input is a structural error (throws), not an
/// axiom violation.
inline ValidationReport validate_metric(const std::vector<std::vector<double>>& matrix,
                                        double slack = 0.0) {
    const std::size_t n = matrix.size();
    if (n == 0) {
        throw std::invalid_argument("validate_metric: empty matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            throw std::invalid_argument("validate_metric: matrix is not square (row " +
                                        std::to_string(i) + " has " +
                                        std::to_string(matrix[i].size()) + " entries, expected " +
                                        std::to_string(n) + ")");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(matrix[i][j])) {
                throw std::invalid_argument("validate_metric: non-finite entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    if (!(slack >= 0.0)) {
        throw std::invalid_argument("validate_metric: slack must be >= 0");
    }

    ValidationReport report;
    auto flag = [&report](std::string axiom, std::vector<std::size_t> witness, double magnitude) {
        report.ok = false;
        report.violations.push_back({std::move(axiom), std::move(witness), magnitude});
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(matrix[i][i]) > slack) {
            flag("diagonal", {i}, std::fabs(matrix[i][i]));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(matrix[i][j] > 0.0)) {
                flag("positivity", {i, j}, -matrix[i][j]);
            }
            if (!(matrix[j][i] > 0.0)) {
                flag("positivity", {j, i}, -matrix[j][i]);
            }
            const double asym = std::fabs(matrix[i][j] - matrix[j][i]);
            if (asym > slack) {
                flag("symmetry", {i, j}, asym);
            }
        }
    }
    // All ordered triples (i, j, k) with distinct entries: direct d(i,k) vs the
    // detour d(i,j) + d(j,k).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const double excess = matrix[i][k] - (matrix[i][j] + matrix[j][k]);
                if (excess > slack) {
                    flag("triangle", {i, k, j}, excess);
                }
            }
        }
    }
    return report;
}

/// A finite metric space: n points identified by their index, with a validated
/// symmetric distance matrix. Immutable after construction.
class FiniteMetricSpace {
public:
    /// Throws std::invalid_argument unless `matrix` satisfies the metric axioms
    /// (up to `slack`, see validate_metric).
    explicit FiniteMetricSpace(std::vector<std::vector<double>> matrix, double slack = 0.0)
        : size_(matrix.size()) {
        const ValidationReport report = validate_metric(matrix, slack);
        if (!report.ok) {
            const MetricViolation& v = report.violations.front();
            std::ostringstream msg;
            msg << "FiniteMetricSpace: matrix is not a metric (" << report.violations.size()
                << " violation(s); first: " << v.axiom << " at";
            for (std::size_t idx : v.witness) msg << ' ' << idx;
            msg << ", magnitude " << v.magnitude << ")";
            throw std::invalid_argument(msg.str());
        }
        distances_.reserve(size_ * size_);
        for (const auto& row : matrix) {
            distances_.insert(distances_.end(), row.begin(), row.end());
        }
    }

    std::size_t size() const { return size_; }

    double distance(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return distances_[i * size_ + j];
    }

    /// Largest pairwise distance in the whole space.
    double max_distance() const {
        double best = 0.0;
        for (double d : distances_) best = std::max(best, d);
        return best;
    }

    std::vector<std::vector<double>> matrix() const {
        std::vector<std::vector<double>> out(size_, std::vector<double>(size_));
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                out[i][j] = distances_[i * size_ + j];
            }
        }
        return out;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= size_) {
            throw std::out_of_range("FiniteMetricSpace: point index " + std::to_string(i) +
                                    " out of range (size " + std::to_string(size_) + ")");
        }
    }

    std::size_t size_;
    std::vector<double> distances_; // row-major n x n
};

/// A sorted duplicate-free set of point indices into some FiniteMetricSpace.
class PointSet {
public:
    PointSet() = default;

    /// Sorts and deduplicates.
    explicit PointSet(std::vector<std::size_t> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    /// {0, 1, ..., n-1}
    static PointSet range(std::size_t n) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        return PointSet(std::move(m));
    }

    const std::vector<std::size_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(std::size_t p) const {
        return std::binary_search(members_.begin(), members_.end(), p);
    }

    bool subset_of(const PointSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    PointSet united(const PointSet& other) const {
        std::vector<std::size_t> out;
        out.reserve(members_.size() + other.members_.size());
        std::set_union(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end(), std::back_inserter(out));
        return PointSet(std::move(out));
    }

    bool operator==(const PointSet& other) const { return members_ == other.members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<std::size_t> members_;
};

namespace detail {
inline void check_subset(const FiniteMetricSpace& space, const PointSet& set, const char* who) {
    if (!set.empty() && set.members().back() >= space.size()) {
        throw std::out_of_range(std::string(who) + ": point set contains index " +
                                std::to_string(set.members().back()) +
                                " outside the space (size " + std::to_string(space.size()) + ")");
    }
}

// Floyd-Warshall run to a fixed point. At the fixed point every entry
// satisfies d[i][j] <= fl(d[i][k] + d[k][j]), which is exactly the comparison
// validate_metric makes, so the repaired matrix is validator-clean at slack 0.
// On matrices that already satisfy the axioms this is a no-op; on distance
// matrices computed in floating point it shaves at most ulp-level triangle
// slack.
inline void shortest_path_fixpoint(std::vector<std::vector<double>>& d) {
    const std::size_t n = d.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const double via = d[i][k] + d[k][j];
                    if (via < d[i][j]) {
                        d[i][j] = via;
                        changed = true;
                    }
                }
            }
        }
    }
}
} // namespace detail

/// Largest pairwise distance within E; 0 for the empty set and for singletons.
inline double diameter(const FiniteMetricSpace& space, const PointSet& set) {
    detail::check_subset(space, set, "diameter");
    const auto& m = set.members();
    double best = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            best = std::max(best, space.distance(m[a], m[b]));
        }
    }
    return best;
}

/// min over a in A of d(x, a). A must be nonempty.
inline double dist_to_set(const FiniteMetricSpace& space, std::size_t x, const PointSet& set) {
    detail::check_subset(space, set, "dist_to_set");
    if (set.empty()) {
        throw std::invalid_argument("dist_to_set: A must be nonempty");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a : set) best = std::min(best, space.distance(x, a));
    return best;
}

enum class BallKind { open, closed };

/// Points within distance r of p: strict inequality for open balls, non-strict
/// for closed ones. Requires r > 0.
inline PointSet ball(const FiniteMetricSpace& space, std::size_t p, double r, BallKind kind) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("ball: radius must be > 0");
    }
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < space.size(); ++x) {
        const double d = space.distance(x, p);
        if (kind == BallKind::open ? d < r : d <= r) members.push_back(x);
    }
    return PointSet(std::move(members));
}

/// Open r-neighborhood of A: {x : dist_to_set(x, A) < r}. Always a superset of A,
/// and diameter grows by at most 2r.
inline PointSet neighborhood(const FiniteMetricSpace& space, const PointSet& set, double r) {
    detail::check_subset(space, set, "neighborhood");
    if (set.empty()) {
        throw std::invalid_argument("neighborhood: A must be nonempty");
    }
    if (!(r > 0.0)) {
        throw std::invalid_argument("neighborhood: radius must be > 0");
    }
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (dist_to_set(space, x, set) < r) members.push_back(x);
    }
    return PointSet(std::move(members));
}

} // namespace hauscover
