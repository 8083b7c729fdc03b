#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include <hauscover/coarea.hpp>
#include <hauscover/check_suite.hpp>
#include <hauscover/generators.hpp>

using namespace hauscover;

namespace {

struct CantorCase {
    LineSample line;
    MetricMap f;       // identity embedding
    CoveringFamily family; // one block per Cantor component
};

CantorCase cantor_endpoints_case(int depth) {
    const IntervalUnion u = cantor(CantorSpec{1.0 / 3.0, depth});
    LineSample line = sample_space(u, SampleMode::endpoints);
    MetricMap f = MetricMap::to_real_line(line.space, line.coords);
    CoveringFamily family;
    for (const auto& c : u.components()) {
        std::vector<std::size_t> block;
        for (std::size_t i = 0; i < line.coords.size(); ++i) {
            if (c.contains(line.coords[i])) block.push_back(i);
        }
        family.blocks.emplace_back(std::move(block));
    }
    return {std::move(line), std::move(f), std::move(family)};
}

} // namespace

TEST_CASE("level_set membership") {
    const auto line = sample_space(normalize({{0, 1}}), SampleMode::net, 0.25);
    const MetricMap f = MetricMap::to_real_line(line.space, {0.0, 0.5, 0.5, 1.0, 2.0});
    const PointSet all = PointSet::range(5);

    REQUIRE(level_set(f, all, 9.0).empty());          // t outside the range
    REQUIRE(level_set(f, all, 0.5) == PointSet{{1, 2}});
    const MetricMap constant = MetricMap::to_real_line(line.space, {0.3, 0.3, 0.3, 0.3, 0.3});
    REQUIRE(level_set(constant, all, 0.3) == all);    // constant map
    REQUIRE(level_set(f, all, 0.49, 0.02) == PointSet{{1, 2}});
    REQUIRE_THROWS_AS(level_set(f, all, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("subfamily_at keeps exactly the blocks meeting the level set") {
    const auto c = cantor_endpoints_case(1); // coords {0, 1/3, 2/3, 1}
    const PointSet all = PointSet::range(4);

    REQUIRE(subfamily_at(c.family, c.f, all, 7.0).blocks.empty()); // empty level set
    const auto at_third = subfamily_at(c.family, c.f, all, 1.0 / 3.0);
    REQUIRE(at_third.blocks.size() == 1);
    REQUIRE(at_third.blocks[0] == c.family.blocks[0]);

    // A family whose blocks all meet E_t comes back whole.
    CoveringFamily whole;
    whole.blocks.push_back(all);
    REQUIRE(subfamily_at(whole, c.f, all, 1.0).blocks.size() == 1);

    CoveringFamily not_covering;
    not_covering.blocks.push_back(PointSet{{0}});
    REQUIRE_THROWS_AS(subfamily_at(not_covering, c.f, all, 0.0), std::invalid_argument);
}

TEST_CASE("interval_hull basics") {
    const auto line = sample_space(normalize({{0, 1}}), SampleMode::net, 0.5);
    const MetricMap f = MetricMap::to_real_line(line.space, {0.2, 0.9, 0.5});

    const auto single = interval_hull(f, PointSet{{1}});
    REQUIRE(single.lo == 0.9);
    REQUIRE(single.hi == 0.9);

    const auto pair = interval_hull(f, PointSet{{0, 2}});
    REQUIRE(pair.lo == 0.2);
    REQUIRE(pair.hi == 0.5);
    REQUIRE_THROWS_AS(interval_hull(f, PointSet{}), std::invalid_argument);

    // Identity on a component: the hull is the coordinate range.
    const MetricMap id = MetricMap::to_real_line(line.space, line.coords);
    const auto whole = interval_hull(id, PointSet::range(3));
    REQUIRE(whole.lo == 0.0);
    REQUIRE(whole.hi == 1.0);

    // Hull length is bounded by C times the block diameter.
    const double c = lipschitz_constant(f);
    for (const auto block : {PointSet{{0, 1}}, PointSet{{0, 1, 2}}}) {
        const auto hull = interval_hull(f, block);
        REQUIRE(hull.hi - hull.lo <= c * diameter(*line.space, block) + 1e-12);
    }
}

TEST_CASE("slice_profile sums weighted hull indicators") {
    const auto c = cantor_endpoints_case(1);
    const auto h = slice_profile(*c.line.space, c.family, c.f, 2.0);
    const double third = 1.0 / 3.0;
    REQUIRE(h(0.1) == Catch::Approx(third));
    REQUIRE(h(0.5) == 0.0);
    REQUIRE(h(0.9) == Catch::Approx(third));
    REQUIRE(integrate_step(h) == Catch::Approx(2.0 / 9.0));

    CoveringFamily empty;
    const auto zero = slice_profile(*c.line.space, empty, c.f, 2.0);
    REQUIRE(zero.is_zero());

    REQUIRE_THROWS_AS(slice_profile(*c.line.space, c.family, c.f, 1.0), std::invalid_argument);
    CoveringFamily bad;
    bad.blocks.push_back(PointSet{});
    REQUIRE_THROWS_AS(slice_profile(*c.line.space, bad, c.f, 2.0), std::invalid_argument);
}

TEST_CASE("coarea_report: identity on the depth-1 Cantor set achieves equality") {
    const auto c = cantor_endpoints_case(1);
    const PointSet all = PointSet::range(4);
    const auto report = coarea_report(*c.line.space, all, c.f, c.family, 2.0, std::nullopt,
                                      {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0});
    REQUIRE(report.lipschitz == 1.0);
    REQUIRE(report.integral == Catch::Approx(2.0 / 9.0).margin(1e-12));
    REQUIRE(report.integral == report.lipschitz * report.sum_cost); // exact equality
    REQUIRE(report.slack == 0.0);
    REQUIRE(report.ok);
    for (const auto& s : report.samples) {
        REQUIRE(s.ok);
        REQUIRE(s.slice_value <= s.h_t);
    }
}

TEST_CASE("coarea_report: constant map gives a point mass and a zero bound") {
    const auto line = sample_space(normalize({{0, 1}}), SampleMode::net, 0.5);
    const MetricMap constant = MetricMap::to_real_line(line.space, {0.4, 0.4, 0.4});
    CoveringFamily one_block;
    one_block.blocks.push_back(PointSet::range(3));
    const auto report = coarea_report(*line.space, PointSet::range(3), constant, one_block, 2.0,
                                      std::nullopt, {0.4});
    REQUIRE(report.lipschitz == 0.0);
    REQUIRE(report.integral == 0.0); // h is a pure point mass at 0.4
    REQUIRE(report.integral_ok);     // 0 <= 0
    // Pointwise, the level set at 0.4 is everything and h(0.4) carries the
    // full weight while the delta-0 cover of E_t costs nothing.
    REQUIRE(report.samples.front().h_t > 0.0);
    REQUIRE(report.samples.front().slice_value == 0.0);
}

TEST_CASE("coarea_report rejects a non-eps-family when the eps bound is requested") {
    const auto c = cantor_endpoints_case(1);
    const PointSet all = PointSet::range(4);
    REQUIRE_THROWS_AS(
        coarea_report(*c.line.space, all, c.f, c.family, 2.0, 1.0 / 3.0, {0.5}),
        std::invalid_argument);
    // Cap above every block diameter is accepted.
    const auto ok = coarea_report(*c.line.space, all, c.f, c.family, 2.0, 0.5, {0.5});
    REQUIRE(ok.ok);
}

TEST_CASE("coarea suite runs clean on a small seeded batch") {
    const auto report = run_coarea_suite(7, 24, 50);
    for (const auto& v : report.violations) {
        UNSCOPED_INFO(v.property << " case " << v.case_index << " lhs " << v.lhs << " rhs "
                                 << v.rhs);
    }
    REQUIRE(report.ok());
    REQUIRE(report.checks > 24 * 50);
}
