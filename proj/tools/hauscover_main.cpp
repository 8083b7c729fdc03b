// Command-line front end: validate metric matrices, compute contents and
// premeasures on interval unions and finite point sets, emit dimension
// profiles, run coarea slice reports, generate test inputs, and run the seeded
// inequality suite. Exit codes: 0 success, 1 assertion or inequality
// violation, 2 usage or input errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hauscover/hauscover.hpp>

using nlohmann::json;
using namespace hauscover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

[[noreturn]] void fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_usage("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) fail_usage("cannot write " + out_path);
        out << text;
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) fail_usage("cannot write " + out_path);
        out << text;
    }
}

// "a:b:step" (inclusive, either direction) or a comma-separated list.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double a = 0, b = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(spec);
        if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            fail_usage("bad grid '" + spec + "', expected a:b:step");
        }
        if (a <= b) {
            for (double x = a; x <= b + 1e-12; x += step) grid.push_back(x);
        } else {
            for (double x = a; x >= b - 1e-12; x -= step) grid.push_back(x);
        }
    } else {
        std::istringstream in(spec);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                grid.push_back(std::stod(token));
            } catch (const std::exception&) {
                fail_usage("bad grid entry '" + token + "'");
            }
        }
    }
    if (grid.empty()) fail_usage("empty grid '" + spec + "'");
    return grid;
}

// Accepts "1/3" style fractions as well as decimals.
double parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return std::stod(text);
        const double num = std::stod(text.substr(0, slash));
        const double den = std::stod(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument(text);
        return num / den;
    } catch (const std::exception&) {
        fail_usage("bad ratio '" + text + "'");
    }
}

std::vector<double> descending(std::vector<double> grid) {
    std::sort(grid.begin(), grid.end(), std::greater<>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

json base_report(const std::string& command, json config) {
    return json{{"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

// Shared input options: an interval union (from a JSON file or a Cantor spec)
// or a point set inside a metric space read from a matrix file.
struct InputOptions {
    std::string in_path;
    int cantor_depth = -1;
    std::string cantor_ratio = "1/3";
    std::string set_spec = "all";

    void attach(CLI::App* cmd, bool with_set = true) {
        cmd->add_option("--in", in_path, "input file: interval JSON or distance-matrix text");
        cmd->add_option("--cantor-depth", cantor_depth, "generate a Cantor iterate as the input");
        cmd->add_option("--cantor-ratio", cantor_ratio, "Cantor ratio, e.g. 1/3 (with --cantor-depth)");
        if (with_set) {
            cmd->add_option("--set", set_spec, "point indices like 0,2,5 or 'all' (matrix inputs)");
        }
    }

    bool wants_intervals() const {
        if (cantor_depth >= 0) return true;
        if (in_path.empty()) return false;
        std::ifstream probe(in_path);
        char c = 0;
        while (probe.get(c)) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
            return c == '{';
        }
        return false;
    }

    IntervalUnion load_intervals_input(json* config) const {
        if (cantor_depth >= 0) {
            const double ratio = parse_ratio(cantor_ratio);
            (*config)["cantor"] = {{"ratio", ratio}, {"depth", cantor_depth}};
            return cantor(CantorSpec{ratio, cantor_depth});
        }
        (*config)["in"] = in_path;
        json parsed;
        try {
            parsed = json::parse(read_file(in_path));
        } catch (const json::exception& e) {
            fail_usage(in_path + ": not valid JSON (" + e.what() + ")");
        }
        try {
            return load_intervals(parsed, in_path);
        } catch (const ParseError& e) {
            fail_usage(e.what());
        }
    }

    std::pair<FiniteMetricSpace, PointSet> load_space_input(json* config) const {
        if (in_path.empty()) fail_usage("an input is required: --in or --cantor-depth");
        (*config)["in"] = in_path;
        (*config)["set"] = set_spec;
        std::ifstream in(in_path);
        if (!in) fail_usage("cannot open " + in_path);
        std::vector<std::vector<double>> matrix;
        try {
            matrix = parse_distance_matrix(in, in_path);
        } catch (const ParseError& e) {
            fail_usage(e.what());
        }
        try {
            FiniteMetricSpace space(std::move(matrix));
            PointSet set = parse_set(set_spec, space.size());
            return {std::move(space), std::move(set)};
        } catch (const std::exception& e) {
            fail_usage(in_path + ": " + e.what());
        }
    }

    static PointSet parse_set(const std::string& spec, std::size_t n) {
        if (spec == "all") return PointSet::range(n);
        std::vector<std::size_t> members;
        std::istringstream in(spec);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                members.push_back(std::stoul(token));
            } catch (const std::exception&) {
                fail_usage("bad point index '" + token + "'");
            }
        }
        PointSet set(std::move(members));
        if (!set.empty() && set.members().back() >= n) {
            fail_usage("point index " + std::to_string(set.members().back()) +
                       " outside the space (size " + std::to_string(n) + ")");
        }
        return set;
    }
};

std::size_t partition_cap(std::optional<std::size_t> flag_cap) {
    if (flag_cap) return *flag_cap;
    if (const char* env = std::getenv("HAUSCOVER_CAP")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            fail_usage("bad HAUSCOVER_CAP value '" + std::string(env) + "'");
        }
    }
    return 12;
}

json violations_json(const SuiteReport& report) {
    json out = json::array();
    for (const auto& v : report.violations) {
        out.push_back({{"property", v.property},
                       {"case", v.case_index},
                       {"lhs", json_number(v.lhs)},
                       {"rhs", json_number(v.rhs)}});
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hauscover: Hausdorff content, premeasure, and coarea slicing toolkit"};
    app.require_subcommand(1);

    // ---- validate ----
    auto* validate_cmd = app.add_subcommand("validate", "check the metric axioms on a matrix file");
    std::string validate_in, validate_out, validate_format = "json";
    double validate_slack = 0.0;
    validate_cmd->add_option("--in", validate_in, "distance-matrix text file")->required();
    validate_cmd->add_option("--slack", validate_slack, "additive tolerance for FP pipelines");
    validate_cmd->add_option("--out", validate_out, "write the report here");
    validate_cmd->add_option("--format", validate_format)->check(CLI::IsMember({"json"}));

    // ---- content ----
    auto* content_cmd = app.add_subcommand("content", "Hausdorff content or eps-premeasure of one input");
    InputOptions content_in;
    content_in.attach(content_cmd);
    double content_alpha = 1.0;
    std::optional<double> content_eps;
    double content_delta = 0.0;
    bool content_delta_set = false;
    std::string content_method = "exact", content_out;
    std::optional<std::size_t> content_cap;
    content_cmd->add_option("--alpha", content_alpha, "exponent")->required();
    content_cmd->add_option("--eps", content_eps, "strict diameter cap (premeasure)");
    content_cmd->add_option("--delta", content_delta, "resolution floor for point-set covers")
        ->each([&](const std::string&) { content_delta_set = true; });
    content_cmd->add_option("--method", content_method)->check(CLI::IsMember({"exact", "greedy"}));
    content_cmd->add_option("--cap", content_cap, "partition enumeration cap");
    content_cmd->add_option("--out", content_out);

    // ---- premeasure ----
    auto* premeasure_cmd = app.add_subcommand("premeasure", "premeasure values over an eps grid");
    InputOptions premeasure_in;
    premeasure_in.attach(premeasure_cmd);
    double premeasure_alpha = 1.0, premeasure_delta = 0.0;
    std::string premeasure_eps_grid, premeasure_method = "exact", premeasure_out,
                premeasure_format = "json";
    std::optional<std::size_t> premeasure_cap;
    premeasure_cmd->add_option("--alpha", premeasure_alpha)->required();
    premeasure_cmd->add_option("--eps-grid", premeasure_eps_grid, "a:b:step or comma list")->required();
    premeasure_cmd->add_option("--delta", premeasure_delta);
    premeasure_cmd->add_option("--method", premeasure_method)
        ->check(CLI::IsMember({"exact", "greedy"}));
    premeasure_cmd->add_option("--cap", premeasure_cap);
    premeasure_cmd->add_option("--out", premeasure_out);
    premeasure_cmd->add_option("--format", premeasure_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- profile ----
    auto* profile_cmd = app.add_subcommand("profile", "alpha x eps table for dimension plots");
    InputOptions profile_in;
    profile_in.attach(profile_cmd);
    std::string profile_alpha_grid, profile_eps_grid, profile_method = "exact", profile_out,
                profile_format = "csv";
    double profile_delta = 0.0;
    std::optional<std::size_t> profile_cap;
    profile_cmd->add_option("--alpha-grid", profile_alpha_grid, "a:b:step or comma list")->required();
    profile_cmd->add_option("--eps-grid", profile_eps_grid, "a:b:step or comma list")->required();
    profile_cmd->add_option("--delta", profile_delta);
    profile_cmd->add_option("--method", profile_method)->check(CLI::IsMember({"exact", "greedy"}));
    profile_cmd->add_option("--cap", profile_cap);
    profile_cmd->add_option("--out", profile_out);
    profile_cmd->add_option("--format", profile_format)->check(CLI::IsMember({"json", "csv"}));

    // ---- coarea ----
    auto* coarea_cmd = app.add_subcommand("coarea", "slice report for the identity map on an interval input");
    InputOptions coarea_in;
    coarea_in.attach(coarea_cmd, false);
    double coarea_alpha = 2.0;
    std::optional<double> coarea_eps;
    std::size_t coarea_samples = 50;
    std::string coarea_out;
    coarea_cmd->add_option("--alpha", coarea_alpha, "exponent, must be > 1")->required();
    coarea_cmd->add_option("--eps", coarea_eps, "assert the eps-family slice bound too");
    coarea_cmd->add_option("--samples", coarea_samples, "number of t samples");
    coarea_cmd->add_option("--out", coarea_out);

    // ---- generate ----
    auto* generate_cmd = app.add_subcommand("generate", "emit test spaces and sets");
    generate_cmd->require_subcommand(1);

    auto* gen_cantor = generate_cmd->add_subcommand("cantor", "Cantor iterate as interval JSON");
    std::string gen_cantor_ratio = "1/3", gen_cantor_out;
    int gen_cantor_depth = 0;
    double gen_cantor_origin = 0.0, gen_cantor_scale = 1.0;
    gen_cantor->add_option("--ratio", gen_cantor_ratio);
    gen_cantor->add_option("--depth", gen_cantor_depth)->required();
    gen_cantor->add_option("--origin", gen_cantor_origin);
    gen_cantor->add_option("--scale", gen_cantor_scale);
    gen_cantor->add_option("--out", gen_cantor_out);

    auto* gen_random = generate_cmd->add_subcommand("random", "seeded metric space as matrix text");
    std::size_t gen_random_n = 8;
    int gen_random_dim = 0;
    std::uint64_t gen_random_seed = 0;
    std::string gen_random_out;
    gen_random->add_option("--n", gen_random_n)->required();
    gen_random->add_option("--dim", gen_random_dim, "ambient dimension; 0 = synthetic shortest-path metric");
    gen_random->add_option("--seed", gen_random_seed)->required();
    gen_random->add_option("--out", gen_random_out);

    auto* gen_sample = generate_cmd->add_subcommand("sample", "discretize an interval input into matrix text");
    InputOptions gen_sample_in;
    gen_sample_in.attach(gen_sample, false);
    std::string gen_sample_mode = "endpoints", gen_sample_out;
    double gen_sample_delta = 0.0;
    gen_sample->add_option("--mode", gen_sample_mode)->check(CLI::IsMember({"endpoints", "net"}));
    gen_sample->add_option("--net-delta", gen_sample_delta, "pitch for net mode");
    gen_sample->add_option("--out", gen_sample_out);

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "run the seeded inequality and coarea suites");
    std::uint64_t check_seed = 42;
    std::size_t check_cases = 60, check_coarea_cases = 30, check_samples = 50;
    std::string check_out;
    check_cmd->add_option("--seed", check_seed);
    check_cmd->add_option("--cases", check_cases, "inequality suite case count");
    check_cmd->add_option("--coarea-cases", check_coarea_cases, "coarea suite case count");
    check_cmd->add_option("--samples", check_samples, "t samples per coarea case");
    check_cmd->add_option("--out", check_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*validate_cmd) {
            std::ifstream in(validate_in);
            if (!in) fail_usage("cannot open " + validate_in);
            std::vector<std::vector<double>> matrix;
            try {
                matrix = parse_distance_matrix(in, validate_in);
            } catch (const ParseError& e) {
                fail_usage(e.what());
            }
            ValidationReport vr;
            try {
                vr = validate_metric(matrix, validate_slack);
            } catch (const std::invalid_argument& e) {
                fail_usage(validate_in + ": " + e.what());
            }
            json report = base_report("validate", {{"in", validate_in}, {"slack", validate_slack}});
            report["report"] = to_json(vr);
            emit(report, validate_out);
            return vr.ok ? kExitOk : kExitViolation;
        }

        if (*content_cmd) {
            json config{{"alpha", content_alpha}, {"method", content_method}};
            if (content_eps) config["eps"] = *content_eps;
            json report;
            const double t0 = now_ms();
            if (content_in.wants_intervals()) {
                if (content_delta_set) {
                    fail_usage("--delta applies to point-set covers, not interval inputs");
                }
                const IntervalUnion u = content_in.load_intervals_input(&config);
                const ContentResult r = content_eps ? hausdorff_eps(u, content_alpha, *content_eps)
                                                    : content_exact(u, content_alpha);
                report = base_report("content", config);
                report["result"] = to_json(r);
                report["result"]["method"] = "interval";
                report["result"]["elapsed_ms"] = now_ms() - t0;
            } else {
                config["delta"] = content_delta;
                const auto cap = partition_cap(content_cap);
                config["cap"] = cap;
                auto [space, set] = content_in.load_space_input(&config);
                const CoverQuery q{content_alpha, content_delta, content_eps,
                                   content_method == "exact" ? CoverMethod::exact
                                                             : CoverMethod::greedy,
                                   cap};
                const CoverResult r = run_cover(space, set, q);
                report = base_report("content", config);
                report["result"] = to_json(r);
                report["result"]["elapsed_ms"] = now_ms() - t0;
            }
            emit(report, content_out);
            return kExitOk;
        }

        if (*premeasure_cmd || *profile_cmd) {
            const bool is_profile = static_cast<bool>(*profile_cmd);
            InputOptions& input = is_profile ? profile_in : premeasure_in;
            const std::string method = is_profile ? profile_method : premeasure_method;
            const double delta = is_profile ? profile_delta : premeasure_delta;
            const std::vector<double> alphas =
                is_profile ? parse_grid(profile_alpha_grid) : std::vector<double>{premeasure_alpha};
            const std::vector<double> eps_grid =
                descending(parse_grid(is_profile ? profile_eps_grid : premeasure_eps_grid));
            const std::string out_path = is_profile ? profile_out : premeasure_out;
            const std::string format = is_profile ? profile_format : premeasure_format;

            json config{{"method", method}, {"delta", delta}, {"eps_grid", eps_grid},
                        {"alphas", alphas}};
            std::vector<ProfileRow> rows;
            if (input.wants_intervals()) {
                const IntervalUnion u = input.load_intervals_input(&config);
                for (double alpha : alphas) {
                    for (double eps : eps_grid) {
                        const double t0 = now_ms();
                        const ContentResult r = hausdorff_eps(u, alpha, eps);
                        rows.push_back({alpha, eps, 0.0, r.value, r.attained, "interval",
                                        now_ms() - t0});
                    }
                }
            } else {
                const auto cap = partition_cap(is_profile ? profile_cap : premeasure_cap);
                config["cap"] = cap;
                auto [space, set] = input.load_space_input(&config);
                const CoverMethod m =
                    method == "exact" ? CoverMethod::exact : CoverMethod::greedy;
                for (double alpha : alphas) {
                    for (double eps : eps_grid) {
                        const double t0 = now_ms();
                        const CoverQuery q{alpha, delta, eps, m, cap};
                        const CoverResult r = run_cover(space, set, q);
                        rows.push_back({alpha, eps, delta, r.value, r.attained, method,
                                        now_ms() - t0});
                    }
                }
            }
            // Rows are produced in (alpha, eps) order already; keep that contract.
            if (format == "csv") {
                std::ostringstream csv;
                csv << "# hauscover " << kVersion << " " << (is_profile ? "profile" : "premeasure")
                    << " config " << config.dump() << "\n";
                csv << profile_csv_header() << "\n";
                for (const auto& row : rows) csv << to_csv(row) << "\n";
                emit_text(csv.str(), out_path);
            } else {
                json report = base_report(is_profile ? "profile" : "premeasure", config);
                report["rows"] = json::array();
                for (const auto& row : rows) report["rows"].push_back(to_json(row));
                emit(report, out_path);
            }
            return kExitOk;
        }

        if (*coarea_cmd) {
            json config{{"alpha", coarea_alpha}, {"samples", coarea_samples}};
            if (coarea_eps) config["eps"] = *coarea_eps;
            const IntervalUnion u = coarea_in.load_intervals_input(&config);
            if (u.empty()) fail_usage("coarea needs a nonempty interval input");
            const LineSample line = sample_space(u, SampleMode::endpoints);
            const MetricMap f = MetricMap::to_real_line(line.space, line.coords);
            CoveringFamily family;
            for (const auto& c : u.components()) {
                std::vector<std::size_t> block;
                for (std::size_t i = 0; i < line.coords.size(); ++i) {
                    if (c.contains(line.coords[i])) block.push_back(i);
                }
                family.blocks.emplace_back(std::move(block));
            }
            std::vector<double> samples;
            for (double coord : line.coords) samples.push_back(coord);
            const double lo = line.coords.front(), hi = line.coords.back();
            for (std::size_t i = 0; samples.size() < coarea_samples; ++i) {
                samples.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                           std::max<std::size_t>(coarea_samples - 1, 1));
            }
            samples.resize(coarea_samples);
            CoareaReport cr;
            try {
                cr = coarea_report(*line.space, PointSet::range(line.coords.size()), f, family,
                                   coarea_alpha, coarea_eps, samples);
            } catch (const std::invalid_argument& e) {
                fail_usage(e.what());
            }
            json report = base_report("coarea", config);
            report["report"] = to_json(cr);
            emit(report, coarea_out);
            return cr.ok ? kExitOk : kExitViolation;
        }

        if (*gen_cantor) {
            const double ratio = parse_ratio(gen_cantor_ratio);
            IntervalUnion u;
            try {
                u = cantor(CantorSpec{ratio, gen_cantor_depth, gen_cantor_origin, gen_cantor_scale});
            } catch (const std::exception& e) {
                fail_usage(e.what());
            }
            json report = intervals_json(u);
            report["version"] = kVersion;
            report["config"] = {{"generator", "cantor"}, {"ratio", ratio},
                                {"depth", gen_cantor_depth}, {"origin", gen_cantor_origin},
                                {"scale", gen_cantor_scale}};
            emit(report, gen_cantor_out);
            return kExitOk;
        }

        if (*gen_random) {
            FiniteMetricSpace space = random_space(RandomSpec{gen_random_seed, gen_random_n,
                                                              gen_random_dim});
            std::ostringstream header;
            header << "hauscover " << kVersion << " generate random seed " << gen_random_seed
                   << " n " << gen_random_n << " dim " << gen_random_dim;
            emit_text(format_distance_matrix(space.matrix(), header.str()), gen_random_out);
            return kExitOk;
        }

        if (*gen_sample) {
            json config{{"mode", gen_sample_mode}};
            const IntervalUnion u = gen_sample_in.load_intervals_input(&config);
            LineSample line;
            try {
                line = sample_space(u,
                                    gen_sample_mode == "net" ? SampleMode::net
                                                             : SampleMode::endpoints,
                                    gen_sample_delta);
            } catch (const std::exception& e) {
                fail_usage(e.what());
            }
            std::ostringstream header;
            header << "hauscover " << kVersion << " generate sample mode " << gen_sample_mode
                   << "\ncoords:";
            for (double x : line.coords) header << ' ' << format_double(x);
            emit_text(format_distance_matrix(line.space->matrix(), header.str()), gen_sample_out);
            return kExitOk;
        }

        if (*check_cmd) {
            const SuiteReport ineq = run_inequality_suite(check_seed, check_cases);
            const SuiteReport coarea = run_coarea_suite(check_seed, check_coarea_cases,
                                                        check_samples);
            json report = base_report("check", {{"seed", check_seed},
                                                {"cases", check_cases},
                                                {"coarea_cases", check_coarea_cases},
                                                {"samples", check_samples}});
            report["inequality"] = {{"cases", ineq.cases},
                                    {"checks", ineq.checks},
                                    {"violations", violations_json(ineq)}};
            report["coarea"] = {{"cases", coarea.cases},
                                {"checks", coarea.checks},
                                {"violations", violations_json(coarea)}};
            const bool ok = ineq.ok() && coarea.ok();
            report["ok"] = ok;
            emit(report, check_out);
            return ok ? kExitOk : kExitViolation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
