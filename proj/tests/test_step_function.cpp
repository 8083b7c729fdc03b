#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <hauscover/step_function.hpp>

using namespace hauscover;

TEST_CASE("step function from weighted hulls, closed point semantics") {
    // Two hulls sharing the breakpoint 1: both contribute there.
    const auto h = StepFunction::from_weighted_hulls({{{0.0, 1.0}, 0.5}, {{1.0, 2.0}, 0.25}});
    REQUIRE(h(-0.5) == 0.0);
    REQUIRE(h(0.0) == 0.5);
    REQUIRE(h(0.5) == 0.5);
    REQUIRE(h(1.0) == 0.75); // both closed hulls contain 1
    REQUIRE(h(1.5) == 0.25);
    REQUIRE(h(2.0) == 0.25);
    REQUIRE(h(2.5) == 0.0);
    REQUIRE(h.integral() == Catch::Approx(0.5 + 0.25));
}

TEST_CASE("degenerate hulls are point masses, invisible to the integral") {
    const auto h = StepFunction::from_weighted_hulls({{{1.0, 1.0}, 3.0}});
    REQUIRE(h(1.0) == 3.0);
    REQUIRE(h(1.0 + 1e-12) == 0.0);
    REQUIRE(h.integral() == 0.0);
}

TEST_CASE("integrate_step examples") {
    REQUIRE(integrate_step(StepFunction::zero()) == 0.0);

    const double weight = 0.7;
    const auto box = StepFunction::from_weighted_hulls({{{0.0, 1.0}, weight}});
    REQUIRE(integrate_step(box) == Catch::Approx(weight));

    // Two Cantor blocks of diameter 1/3 at exponent 2: value 1/3 on each hull.
    const double third = 1.0 / 3.0;
    const auto cantor_profile = StepFunction::from_weighted_hulls(
        {{{0.0, third}, third}, {{2 * third, 1.0}, third}});
    REQUIRE(integrate_step(cantor_profile) == Catch::Approx(2.0 / 9.0));
    REQUIRE(cantor_profile(0.5) == 0.0); // the gap
}

TEST_CASE("envelope pointwise minimum") {
    const auto a = StepFunction::from_weighted_hulls({{{0.0, 1.0}, 1.0 / 3.0}});
    const auto b = StepFunction::from_weighted_hulls({{{0.5, 1.0}, 0.25}});

    const auto single = envelope({a}, EnvelopeMode::inf);
    REQUIRE(single(0.5) == a(0.5));
    REQUIRE(single.integral() == Catch::Approx(a.integral()));

    const auto with_zero = envelope({a, StepFunction::zero()}, EnvelopeMode::inf);
    REQUIRE(with_zero(0.5) == 0.0);
    REQUIRE(with_zero.integral() == 0.0);

    // min(1/3 on [0,1], 0.25 on [1/2,1]) = 0 on [0,1/2), then 0.25.
    const auto both = envelope({a, b}, EnvelopeMode::inf);
    REQUIRE(both(0.25) == 0.0);
    REQUIRE(both(0.5) == 0.25); // b's closed hull contains 1/2
    REQUIRE(both(0.75) == 0.25);
    REQUIRE(both(1.0) == 0.25);
    REQUIRE(both.integral() == Catch::Approx(0.125));

    REQUIRE_THROWS_AS(envelope({}, EnvelopeMode::inf), std::invalid_argument);
}

TEST_CASE("liminf tail truncation drops the early functions") {
    const auto a = StepFunction::from_weighted_hulls({{{0.0, 1.0}, 0.1}});
    const auto b = StepFunction::from_weighted_hulls({{{0.0, 1.0}, 0.5}});
    const auto c = StepFunction::from_weighted_hulls({{{0.0, 1.0}, 0.4}});

    const auto tail2 = envelope({a, b, c}, EnvelopeMode::liminf_tail, 2);
    REQUIRE(tail2(0.5) == 0.4);
    REQUIRE_THROWS_AS(envelope({a, b}, EnvelopeMode::liminf_tail, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(envelope({a, b}, EnvelopeMode::liminf_tail, 0), std::invalid_argument);
}

TEST_CASE("envelope domination and the finite Fatou inequality") {
    std::vector<StepFunction> hs;
    hs.push_back(StepFunction::from_weighted_hulls({{{0.0, 2.0}, 0.6}, {{1.0, 3.0}, 0.2}}));
    hs.push_back(StepFunction::from_weighted_hulls({{{0.5, 2.5}, 0.3}}));
    hs.push_back(StepFunction::from_weighted_hulls({{{0.0, 1.5}, 0.9}, {{1.5, 1.5}, 2.0}}));

    const auto inf_env = envelope(hs, EnvelopeMode::inf);
    for (double t = -0.25; t <= 3.25; t += 0.125) {
        for (const auto& h : hs) REQUIRE(inf_env(t) <= h(t) + 1e-12);
    }

    for (std::size_t j = 1; j <= hs.size(); ++j) {
        const auto tail = envelope(hs, EnvelopeMode::liminf_tail, j);
        double min_integral = std::numeric_limits<double>::infinity();
        for (std::size_t k = j - 1; k < hs.size(); ++k) {
            min_integral = std::min(min_integral, hs[k].integral());
        }
        REQUIRE(tail.integral() <= min_integral + 1e-12);
    }
}

TEST_CASE("step functions reject malformed hulls") {
    REQUIRE_THROWS_AS(StepFunction::from_weighted_hulls({{{1.0, 0.0}, 1.0}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(StepFunction::from_weighted_hulls({{{0.0, 1.0}, -1.0}}),
                      std::invalid_argument);
}
