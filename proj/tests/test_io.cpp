#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <hauscover/io.hpp>

using namespace hauscover;

TEST_CASE("distance matrix text format round trip") {
    const std::vector<std::vector<double>> m{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    const std::string text = format_distance_matrix(m, "three points on a line");
    std::istringstream in(text);
    REQUIRE(parse_distance_matrix(in) == m);
}

TEST_CASE("distance matrix parser: comments, errors, line numbers") {
    std::istringstream ok("# comment\n2\n# more\n0 1\n1 0\n");
    REQUIRE(parse_distance_matrix(ok) == std::vector<std::vector<double>>{{0, 1}, {1, 0}});

    std::istringstream bad_count("2\n0 1 5\n1 0\n");
    REQUIRE_THROWS_WITH(parse_distance_matrix(bad_count, "m.txt"),
                        Catch::Matchers::ContainsSubstring("m.txt:2"));

    std::istringstream bad_token("2\n0 x\n1 0\n");
    REQUIRE_THROWS_WITH(parse_distance_matrix(bad_token, "m.txt"),
                        Catch::Matchers::ContainsSubstring("bad number"));

    std::istringstream missing_rows("3\n0 1 2\n");
    REQUIRE_THROWS_AS(parse_distance_matrix(missing_rows), ParseError);

    std::istringstream no_n("# only comments\n");
    REQUIRE_THROWS_AS(parse_distance_matrix(no_n), ParseError);
}

TEST_CASE("interval JSON loads with normalization and ignores extra keys") {
    const auto j = nlohmann::json::parse(R"({"intervals": [[2,3],[0,1],[0.5,1.5]], "version": "x"})");
    const auto u = load_intervals(j);
    REQUIRE(u.components() == std::vector<ClosedInterval>{{0, 1.5}, {2, 3}});

    REQUIRE(intervals_json(u)["intervals"].dump() == "[[0.0,1.5],[2.0,3.0]]");

    REQUIRE_THROWS_AS(load_intervals(nlohmann::json::parse(R"({"intervals": [[1,0]]})")),
                      ParseError);
    REQUIRE_THROWS_AS(load_intervals(nlohmann::json::parse(R"({"intervals": [[1]]})")), ParseError);
    REQUIRE_THROWS_AS(load_intervals(nlohmann::json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("infinities serialize as the string inf") {
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE(json_number(inf) == nlohmann::json("inf"));
    REQUIRE(json_number(1.5) == nlohmann::json(1.5));
    REQUIRE(format_double(inf) == "inf");

    ProfileRow row;
    row.alpha = 0.5;
    row.value = inf;
    row.method = "interval";
    REQUIRE(to_csv(row) == "0.5,inf,0,inf,true,interval,0");
}

TEST_CASE("csv schema is fixed") {
    REQUIRE(profile_csv_header() == "alpha,eps,delta,value,attained,method,elapsed_ms");
    ProfileRow row{1.0, 0.25, 0.1, 0.75, false, "exact", 3.5};
    REQUIRE(to_csv(row) == "1,0.25,0.1,0.75,false,exact,3.5");
}
