#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <hauscover/generators.hpp>

using namespace hauscover;

TEST_CASE("cantor iterates: exact components") {
    REQUIRE(cantor(CantorSpec{1.0 / 3.0, 0}).components() ==
            std::vector<ClosedInterval>{{0.0, 1.0}});

    const auto c1 = cantor(CantorSpec{1.0 / 3.0, 1});
    REQUIRE(c1.component_count() == 2);
    REQUIRE(c1.components()[0].lo == 0.0);
    REQUIRE(c1.components()[0].hi == Catch::Approx(1.0 / 3.0));
    REQUIRE(c1.components()[1].lo == Catch::Approx(2.0 / 3.0));
    REQUIRE(c1.components()[1].hi == 1.0);

    const auto c2 = cantor(CantorSpec{1.0 / 3.0, 2});
    const std::vector<double> expect{0.0, 1.0 / 9.0, 2.0 / 9.0, 1.0 / 3.0,
                                     2.0 / 3.0, 7.0 / 9.0, 8.0 / 9.0, 1.0};
    REQUIRE(c2.component_count() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(c2.components()[i].lo == Catch::Approx(expect[2 * i]).margin(1e-15));
        REQUIRE(c2.components()[i].hi == Catch::Approx(expect[2 * i + 1]).margin(1e-15));
    }
}

TEST_CASE("cantor validation and caps") {
    REQUIRE_THROWS_AS(cantor(CantorSpec{0.5, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(cantor(CantorSpec{0.0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(cantor(CantorSpec{1.0 / 3.0, 17}), std::length_error);
    REQUIRE_THROWS_AS(cantor(CantorSpec{1.0 / 3.0, -1}), std::invalid_argument);
}

TEST_CASE("cantor bookkeeping: total length and diameter") {
    for (int k = 0; k <= 8; ++k) {
        for (double ratio : {0.25, 1.0 / 3.0, 0.4}) {
            const auto ck = cantor(CantorSpec{ratio, k, 2.0, 3.0});
            REQUIRE(ck.component_count() == (std::size_t{1} << k));
            REQUIRE(ck.total_length() == Catch::Approx(3.0 * std::pow(2 * ratio, k)));
            REQUIRE(diameter_u(ck) == Catch::Approx(3.0));
        }
    }
}

TEST_CASE("generators are deterministic") {
    const auto a = cantor(CantorSpec{1.0 / 3.0, 6});
    const auto b = cantor(CantorSpec{1.0 / 3.0, 6});
    REQUIRE(a.components() == b.components());

    const RandomSpec spec{12345, 12, 3};
    const auto s1 = random_space(spec);
    const auto s2 = random_space(spec);
    REQUIRE(s1.matrix() == s2.matrix());

    const RandomSpec synth{999, 10, 0};
    REQUIRE(random_space(synth).matrix() == random_space(synth).matrix());
}

TEST_CASE("sample_space endpoints mode") {
    const auto two = sample_space(normalize({{0, 1}}), SampleMode::endpoints);
    REQUIRE(two.coords == std::vector<double>{0.0, 1.0});
    REQUIRE(two.space->distance(0, 1) == 1.0);

    const auto c1 = sample_space(cantor(CantorSpec{1.0 / 3.0, 1}), SampleMode::endpoints);
    REQUIRE(c1.coords.size() == 4);
    REQUIRE(c1.coords[0] == 0.0);
    REQUIRE(c1.coords[3] == 1.0);

    // Degenerate components contribute a single point.
    const auto mixed = sample_space(normalize({{0, 0}, {1, 2}}), SampleMode::endpoints);
    REQUIRE(mixed.coords.size() == 3);

    REQUIRE_THROWS_AS(sample_space(IntervalUnion{}, SampleMode::endpoints), std::invalid_argument);
}

TEST_CASE("sample_space net mode meets its pitch") {
    const auto grid = sample_space(normalize({{0, 1}}), SampleMode::net, 0.5);
    REQUIRE(grid.coords == std::vector<double>{0.0, 0.5, 1.0});

    const auto fine = sample_space(normalize({{0, 1}, {2, 2.3}}), SampleMode::net, 0.21);
    // Every component endpoint appears.
    for (double endpoint : {0.0, 1.0, 2.0, 2.3}) {
        REQUIRE(std::count(fine.coords.begin(), fine.coords.end(), endpoint) == 1);
    }
    // Consecutive gaps within a component never exceed delta.
    for (std::size_t i = 1; i < fine.coords.size(); ++i) {
        const double gap = fine.coords[i] - fine.coords[i - 1];
        const bool crosses_hole = fine.coords[i - 1] < 1.0 + 1e-12 && fine.coords[i] > 2.0 - 1e-12;
        if (!crosses_hole) REQUIRE(gap <= 0.21 * (1 + 1e-12));
    }
    REQUIRE_THROWS_AS(sample_space(normalize({{0, 1}}), SampleMode::net, 0.0),
                      std::invalid_argument);
}

TEST_CASE("random_space: ambient distances recompute from the seeded points") {
    const RandomSpec spec{77, 2, 3};
    const auto sp = random_space(spec);
    const auto pts = ambient_points(spec);
    double sq = 0.0;
    for (int c = 0; c < 3; ++c) {
        const double diff = pts[0][c] - pts[1][c];
        sq += diff * diff;
    }
    REQUIRE(sp.distance(0, 1) == std::sqrt(sq));

    const auto lone = random_space(RandomSpec{5, 1, 2});
    REQUIRE(lone.size() == 1);
}

TEST_CASE("random_space synthetic mode always validates") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const RandomSpec spec{seed, 3 + seed % 12, 0};
        const auto sp = random_space(spec);
        REQUIRE(validate_metric(sp.matrix()).ok);
    }
}
