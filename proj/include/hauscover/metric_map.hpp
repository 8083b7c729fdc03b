#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hauscover/metric_space.hpp"

namespace hauscover {

/// A map between two finite metric spaces, given point by point.
///
/// Real-valued functions are represented as maps into a "real line" codomain:
/// a space whose points are the distinct sampled values with d(u,v) = |u - v|.
/// Such maps additionally expose the numeric value at each domain point.
class MetricMap {
public:
    MetricMap(std::shared_ptr<const FiniteMetricSpace> domain,
              std::shared_ptr<const FiniteMetricSpace> codomain,
              std::vector<std::size_t> assignment)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          assignment_(std::move(assignment)) {
        if (!domain_ || !codomain_) {
            throw std::invalid_argument("MetricMap: null space");
        }
        if (assignment_.size() != domain_->size()) {
            throw std::invalid_argument("MetricMap: assignment must cover every domain point");
        }
        for (std::size_t img : assignment_) {
            if (img >= codomain_->size()) {
                throw std::invalid_argument("MetricMap: image index " + std::to_string(img) +
                                            " outside the codomain");
            }
        }
    }

    /// Builds the map x -> values[x] into a real-line codomain made of the
    /// distinct values (d(u,v) = |u - v|). Values may repeat across points.
    static MetricMap to_real_line(std::shared_ptr<const FiniteMetricSpace> domain,
                                  const std::vector<double>& values) {
        if (!domain) {
            throw std::invalid_argument("MetricMap::to_real_line: null domain");
        }
        if (values.size() != domain->size()) {
            throw std::invalid_argument("MetricMap::to_real_line: one value per domain point required");
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("MetricMap::to_real_line: non-finite value");
            }
        }
        std::vector<double> coords = values;
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

        const std::size_t m = coords.size();
        std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                dist[i][j] = std::fabs(coords[i] - coords[j]);
            }
        }
        // |u - v| can break the triangle inequality by an ulp; repair so the
        // codomain always validates at slack 0.
        detail::shortest_path_fixpoint(dist);
        auto codomain = std::make_shared<const FiniteMetricSpace>(std::move(dist));

        std::vector<std::size_t> assignment(values.size());
        for (std::size_t x = 0; x < values.size(); ++x) {
            assignment[x] = static_cast<std::size_t>(
                std::lower_bound(coords.begin(), coords.end(), values[x]) - coords.begin());
        }
        MetricMap map(std::move(domain), std::move(codomain), std::move(assignment));
        map.codomain_coords_ = std::move(coords);
        return map;
    }

    const FiniteMetricSpace& domain() const { return *domain_; }
    const FiniteMetricSpace& codomain() const { return *codomain_; }
    std::shared_ptr<const FiniteMetricSpace> domain_ptr() const { return domain_; }
    std::shared_ptr<const FiniteMetricSpace> codomain_ptr() const { return codomain_; }

    std::size_t apply(std::size_t x) const {
        if (x >= assignment_.size()) {
            throw std::out_of_range("MetricMap: point index out of range");
        }
        return assignment_[x];
    }

    PointSet image(const PointSet& set) const {
        std::vector<std::size_t> out;
        out.reserve(set.size());
        for (std::size_t x : set) out.push_back(apply(x));
        return PointSet(std::move(out));
    }

    bool is_real_valued() const { return !codomain_coords_.empty(); }

    /// Numeric value f(x) for real-line codomains.
    double real_value(std::size_t x) const {
        if (!is_real_valued()) {
            throw std::logic_error("MetricMap: not a real-valued map");
        }
        return codomain_coords_[apply(x)];
    }

    /// Real-line coordinate of a codomain point (real-valued maps only).
    const std::vector<double>& codomain_coords() const {
        if (!is_real_valued()) {
            throw std::logic_error("MetricMap: not a real-valued map");
        }
        return codomain_coords_;
    }

private:
    std::shared_ptr<const FiniteMetricSpace> domain_;
    std::shared_ptr<const FiniteMetricSpace> codomain_;
    std::vector<std::size_t> assignment_;
    std::vector<double> codomain_coords_; // nonempty iff real-valued
};

/// Smallest C with rho(f(x), f(y)) <= C * d(x, y) over pairs in E (default: the
/// whole domain), computed as the max of the pairwise ratios. 0 for singletons
/// and constant maps.
inline double lipschitz_constant(const MetricMap& map,
                                 const std::optional<PointSet>& subset = std::nullopt) {
    const FiniteMetricSpace& dom = map.domain();
    const PointSet& pts = subset ? *subset : PointSet::range(dom.size());
    detail::check_subset(dom, pts, "lipschitz_constant");
    if (pts.empty()) {
        throw std::invalid_argument("lipschitz_constant: E must have at least one point");
    }
    const auto& m = pts.members();
    double best = 0.0;
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            const double num = map.codomain().distance(map.apply(m[a]), map.apply(m[b]));
            const double den = dom.distance(m[a], m[b]);
            best = std::max(best, num / den);
        }
    }
    return best;
}

} // namespace hauscover
