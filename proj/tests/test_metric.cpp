#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include <hauscover/generators.hpp>
#include <hauscover/metric_map.hpp>
#include <hauscover/metric_space.hpp>

using namespace hauscover;

namespace {

std::shared_ptr<const FiniteMetricSpace> path_space_012() {
    // Path metric 0 - 1 - 2 with unit steps.
    return std::make_shared<const FiniteMetricSpace>(
        std::vector<std::vector<double>>{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

bool has_violation(const ValidationReport& r, const std::string& axiom,
                   const std::vector<std::size_t>& witness) {
    for (const auto& v : r.violations) {
        if (v.axiom == axiom && v.witness == witness) return true;
    }
    return false;
}

} // namespace

TEST_CASE("validate_metric accepts a two-point metric") {
    const auto report = validate_metric({{0, 1}, {1, 0}});
    REQUIRE(report.ok);
    REQUIRE(report.violations.empty());
}

TEST_CASE("validate_metric flags an asymmetric entry") {
    const auto report = validate_metric({{0, 1}, {2, 0}});
    REQUIRE_FALSE(report.ok);
    REQUIRE(has_violation(report, "symmetry", {0, 1}));
}

TEST_CASE("validate_metric finds the triangle violation with its witness") {
    const auto report = validate_metric({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.axiom == "triangle" && v.witness == std::vector<std::size_t>{0, 2, 1}) {
            found = true;
            REQUIRE(v.magnitude == Catch::Approx(1.0));
        }
    }
    REQUIRE(found);
}

TEST_CASE("validate_metric structural errors are thrown, not reported") {
    REQUIRE_THROWS_AS(validate_metric({{0, 1}, {1, 0}, {1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_metric({{0, 1}, {1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_metric({}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(validate_metric({{0, inf}, {inf, 0}}), std::invalid_argument);
}

TEST_CASE("validate_metric diagonal and positivity checks") {
    const auto report = validate_metric({{0.5, 1}, {1, 0}});
    REQUIRE(has_violation(report, "diagonal", {0}));
    const auto zero_off = validate_metric({{0, 0}, {0, 0}});
    REQUIRE(has_violation(zero_off, "positivity", {0, 1}));
}

TEST_CASE("validate_metric slack excuses rounding-level errors") {
    const auto strict = validate_metric({{0, 1, 2.0000001}, {1, 0, 1}, {2.0000001, 1, 0}});
    REQUIRE_FALSE(strict.ok);
    const auto slacked = validate_metric({{0, 1, 2.0000001}, {1, 0, 1}, {2.0000001, 1, 0}}, 1e-6);
    REQUIRE(slacked.ok);
}

TEST_CASE("diameter on empty, singleton, and three-point sets") {
    const auto sp = std::make_shared<const FiniteMetricSpace>(
        std::vector<std::vector<double>>{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
    REQUIRE(diameter(*sp, PointSet{}) == 0.0);
    REQUIRE(diameter(*sp, PointSet{{1}}) == 0.0);
    REQUIRE(diameter(*sp, PointSet::range(3)) == 2.0);
}

TEST_CASE("dist_to_set basics") {
    const auto sp = path_space_012();
    REQUIRE(dist_to_set(*sp, 1, PointSet{{0, 1}}) == 0.0); // x in A
    REQUIRE(dist_to_set(*sp, 2, PointSet{{0}}) == 2.0);    // singleton A
    // Two candidates at distances 1 and 2: the minimum wins.
    REQUIRE(dist_to_set(*sp, 2, PointSet{{0, 1}}) == 1.0);
    REQUIRE_THROWS_AS(dist_to_set(*sp, 0, PointSet{}), std::invalid_argument);
}

TEST_CASE("dist_to_set vanishes exactly on membership") {
    const auto sp = path_space_012();
    const PointSet a{{0, 2}};
    for (std::size_t x = 0; x < 3; ++x) {
        REQUIRE((dist_to_set(*sp, x, a) == 0.0) == a.contains(x));
    }
}

TEST_CASE("balls: strict versus closed thresholds") {
    const auto sp = path_space_012();
    REQUIRE(ball(*sp, 1, 10.0, BallKind::open) == PointSet::range(3));
    // r equal to the minimum positive distance out of p.
    REQUIRE(ball(*sp, 0, 1.0, BallKind::open) == PointSet{{0}});
    REQUIRE(ball(*sp, 0, 1.0, BallKind::closed) == PointSet{{0, 1}});
    REQUIRE_THROWS_AS(ball(*sp, 0, 0.0, BallKind::open), std::invalid_argument);
}

TEST_CASE("neighborhood examples") {
    const auto sp = path_space_012();
    REQUIRE(neighborhood(*sp, PointSet{{0}}, 0.5) == PointSet{{0}});
    REQUIRE(neighborhood(*sp, PointSet{{0}}, 10.0) == PointSet::range(3));
    REQUIRE(neighborhood(*sp, PointSet{{0}}, 1.5) == PointSet{{0, 1}});
    REQUIRE_THROWS_AS(neighborhood(*sp, PointSet{}, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(neighborhood(*sp, PointSet{{0}}, -1.0), std::invalid_argument);
}

TEST_CASE("lipschitz_constant on constant, identity, and distance maps") {
    const auto sp = path_space_012();
    std::vector<std::size_t> id{0, 1, 2};

    const MetricMap identity(sp, sp, id);
    REQUIRE(lipschitz_constant(identity) == 1.0);

    const MetricMap constant = MetricMap::to_real_line(sp, {0.5, 0.5, 0.5});
    REQUIRE(lipschitz_constant(constant) == 0.0);

    // f_p(x) = d(x, p) is 1-Lipschitz.
    for (std::size_t p = 0; p < 3; ++p) {
        std::vector<double> values(3);
        for (std::size_t x = 0; x < 3; ++x) values[x] = sp->distance(x, p);
        const MetricMap fp = MetricMap::to_real_line(sp, values);
        REQUIRE(lipschitz_constant(fp) <= 1.0 + 1e-12);
    }

    REQUIRE(lipschitz_constant(identity, PointSet{{1}}) == 0.0);
    REQUIRE_THROWS_AS(lipschitz_constant(identity, PointSet{}), std::invalid_argument);
}

TEST_CASE("metric properties on seeded spaces") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RandomSpec spec{seed, 8, (seed % 2 == 0) ? 0 : 2};
        const auto sp = std::make_shared<const FiniteMetricSpace>(random_space(spec));
        SeededRng rng(seed * 977);

        // Diameter monotonicity over nested subsets.
        std::vector<std::size_t> big, small;
        for (std::size_t p = 0; p < sp->size(); ++p) {
            if (rng.unit() < 0.7) {
                big.push_back(p);
                if (rng.unit() < 0.6) small.push_back(p);
            }
        }
        const PointSet big_set(big), small_set(small);
        REQUIRE(diameter(*sp, small_set) <= diameter(*sp, big_set));

        if (!big_set.empty()) {
            // dist(., A) is 1-Lipschitz.
            for (std::size_t x = 0; x < sp->size(); ++x) {
                for (std::size_t y = 0; y < sp->size(); ++y) {
                    const double lhs =
                        std::fabs(dist_to_set(*sp, x, big_set) - dist_to_set(*sp, y, big_set));
                    REQUIRE(lhs <= sp->distance(x, y) + 1e-12);
                }
            }
            // diam A(r) <= diam A + 2r.
            for (double r : {0.05, 0.2, 0.7}) {
                const PointSet grown = neighborhood(*sp, big_set, r);
                REQUIRE(big_set.subset_of(grown));
                REQUIRE(diameter(*sp, grown) <= diameter(*sp, big_set) + 2 * r + 1e-12);
            }
        }

        // Image diameter bound, and the two-point characterization of C.
        const std::size_t p = rng.index(sp->size());
        std::vector<double> values(sp->size());
        for (std::size_t x = 0; x < sp->size(); ++x) values[x] = sp->distance(x, p);
        const MetricMap fp = MetricMap::to_real_line(sp, values);
        const double c = lipschitz_constant(fp);
        REQUIRE(diameter(fp.codomain(), fp.image(big_set)) <= c * diameter(*sp, big_set) + 1e-12);

        double two_point = 0.0;
        for (std::size_t x = 0; x < sp->size(); ++x) {
            for (std::size_t y = x + 1; y < sp->size(); ++y) {
                const PointSet pair{{x, y}};
                two_point = std::max(two_point, diameter(fp.codomain(), fp.image(pair)) /
                                                    diameter(*sp, pair));
            }
        }
        REQUIRE(two_point == c);
    }
}
