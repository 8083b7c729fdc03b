#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hauscover/coarea.hpp"
#include "hauscover/covering.hpp"
#include "hauscover/interval_content.hpp"
#include "hauscover/interval_union.hpp"
#include "hauscover/metric_space.hpp"

namespace hauscover {

/// Malformed input file: carries the file name and 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

/// Shortest round-trip decimal form used in CSV output; infinities serialize
/// as "inf".
inline std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

/// Distance-matrix text format: first non-comment line holds n, followed by n
/// rows of n whitespace-separated reals. Lines starting with '#' are comments.
inline std::vector<std::vector<double>> parse_distance_matrix(std::istream& in,
                                                              const std::string& file = "<input>") {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream tokens(line);
        if (!have_n) {
            long long raw = 0;
            if (!(tokens >> raw) || raw <= 0) {
                throw ParseError(file, line_no, "expected a positive point count");
            }
            std::string extra;
            if (tokens >> extra) {
                throw ParseError(file, line_no, "unexpected token after the point count: '" + extra + "'");
            }
            n = static_cast<std::size_t>(raw);
            have_n = true;
            continue;
        }
        std::vector<double> row;
        std::string token;
        while (tokens >> token) {
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(file, line_no, "bad number '" + token + "'");
            }
        }
        if (row.size() != n) {
            throw ParseError(file, line_no, "expected " + std::to_string(n) + " entries, got " +
                                                std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
        if (rows.size() == n) break;
    }
    if (!have_n) {
        throw ParseError(file, line_no ? line_no : 1, "missing point count line");
    }
    if (rows.size() != n) {
        throw ParseError(file, line_no ? line_no : 1,
                         "expected " + std::to_string(n) + " matrix rows, got " +
                             std::to_string(rows.size()));
    }
    return rows;
}

inline std::string format_distance_matrix(const std::vector<std::vector<double>>& matrix,
                                          const std::string& header_comment = "") {
    std::ostringstream out;
    if (!header_comment.empty()) {
        std::istringstream lines(header_comment);
        std::string l;
        while (std::getline(lines, l)) out << "# " << l << "\n";
    }
    out << matrix.size() << "\n";
    for (const auto& row : matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << format_double(row[j]);
        }
        out << "\n";
    }
    return out.str();
}

/// Interval-set file: {"intervals": [[a, b], ...]}; normalized on load. Extra
/// keys are ignored so reports carrying version/config stay loadable.
inline IntervalUnion load_intervals(const nlohmann::json& j, const std::string& file = "<input>") {
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array()) {
        throw ParseError(file, 1, "expected a JSON object with an \"intervals\" array");
    }
    std::vector<std::pair<double, double>> raw;
    for (const auto& entry : j["intervals"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw ParseError(file, 1, "each interval must be a [a, b] number pair");
        }
        raw.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return normalize(std::move(raw));
    } catch (const std::invalid_argument& e) {
        throw ParseError(file, 1, e.what());
    }
}

inline nlohmann::json intervals_json(const IntervalUnion& u) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : u.components()) {
        arr.push_back({c.lo, c.hi});
    }
    return nlohmann::json{{"intervals", std::move(arr)}};
}

/// JSON value for a possibly infinite double: the string "inf" outside the
/// finite range (nlohmann would otherwise emit null).
inline nlohmann::json json_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

inline nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"magnitude", v.magnitude}});
    }
    return {{"ok", report.ok}, {"violations", std::move(violations)}};
}

inline nlohmann::json to_json(const ContentResult& result) {
    nlohmann::json j{{"value", json_number(result.value)}, {"attained", result.attained}};
    if (result.witness) {
        nlohmann::json pieces = nlohmann::json::array();
        for (const auto& p : *result.witness) pieces.push_back({p.lo, p.hi});
        j["witness"] = std::move(pieces);
    }
    return j;
}

inline nlohmann::json to_json(const CoveringFamily& family) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : family.blocks) blocks.push_back(b.members());
    return blocks;
}

inline const char* method_name(CoverMethod method) {
    return method == CoverMethod::exact ? "exact" : "greedy";
}

inline nlohmann::json to_json(const CoverResult& result) {
    return {{"value", json_number(result.value)},
            {"attained", result.attained},
            {"witness_blocks", to_json(result.witness)},
            {"method", method_name(result.method)}};
}

inline nlohmann::json to_json(const PushforwardReport& report) {
    nlohmann::json j{{"lipschitz", report.lipschitz},
                     {"alpha", report.alpha},
                     {"delta", report.delta},
                     {"domain_value", json_number(report.domain_value)},
                     {"image_value", json_number(report.image_value)},
                     {"bound", json_number(report.bound)},
                     {"holds", report.holds},
                     {"method", method_name(report.method)}};
    if (report.eps) j["eps"] = *report.eps;
    return j;
}

/// Coarea report JSON, keys per the file contract:
/// {C, alpha, sum_cost, integral, slack, samples: [{t, h_t, slice_value, ok}], family_size}.
inline nlohmann::json to_json(const CoareaReport& report) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : report.samples) {
        samples.push_back({{"t", s.t},
                           {"h_t", json_number(s.h_t)},
                           {"slice_value", json_number(s.slice_value)},
                           {"ok", s.ok}});
    }
    nlohmann::json j{{"C", report.lipschitz},
                     {"alpha", report.alpha},
                     {"sum_cost", json_number(report.sum_cost)},
                     {"integral", json_number(report.integral)},
                     {"slack", json_number(report.slack)},
                     {"samples", std::move(samples)},
                     {"family_size", report.family_size},
                     {"ok", report.ok}};
    if (report.eps) j["eps"] = *report.eps;
    return j;
}

/// One CSV row of the fixed profile schema
/// alpha, eps, delta, value, attained, method, elapsed_ms.
struct ProfileRow {
    double alpha = 0.0;
    double eps = std::numeric_limits<double>::infinity(); // inf = uncapped
    double delta = 0.0;
    double value = 0.0;
    bool attained = true;
    std::string method;
    double elapsed_ms = 0.0;
};

inline std::string profile_csv_header() {
    return "alpha,eps,delta,value,attained,method,elapsed_ms";
}

inline std::string to_csv(const ProfileRow& row) {
    std::ostringstream out;
    out << format_double(row.alpha) << ',' << format_double(row.eps) << ','
        << format_double(row.delta) << ',' << format_double(row.value) << ','
        << (row.attained ? "true" : "false") << ',' << row.method << ','
        << format_double(row.elapsed_ms);
    return out.str();
}

inline nlohmann::json to_json(const ProfileRow& row) {
    return {{"alpha", row.alpha},        {"eps", json_number(row.eps)},
            {"delta", row.delta},        {"value", json_number(row.value)},
            {"attained", row.attained},  {"method", row.method},
            {"elapsed_ms", row.elapsed_ms}};
}

} // namespace hauscover
