#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wavedens/censoring.hpp"
#include "wavedens/errors.hpp"
#include "wavedens/simulation.hpp"

namespace wavedens {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    // from_chars rejects a leading '+' and the unicode minus some tools emit
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

/// Doubles are written with 17 significant digits so files round-trip
/// bit-for-bit.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// Reads `time,status` rows (status 0 = censored, 1 = event). An optional
/// single header line is recognized when neither field is numeric. Returns
/// an unnormalized sample.
inline CensoredSample ingest_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    CensoredSample s;
    std::string line;
    std::size_t row = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++row;
        const std::string_view sv = detail::trim(line);
        if (sv.empty()) continue;
        const std::size_t comma = sv.find(',');
        std::string_view time_field = comma == std::string_view::npos ? sv : sv.substr(0, comma);
        std::string_view status_field =
            comma == std::string_view::npos ? std::string_view{} : sv.substr(comma + 1);
        if (status_field.find(',') != std::string_view::npos)
            throw ParseError(row, "row " + std::to_string(row) + ": expected two fields");

        double time = 0.0, status = 0.0;
        const bool time_ok = detail::parse_double(time_field, time);
        const bool status_ok = detail::parse_double(status_field, status);
        if (first_content_line && !time_ok && !status_ok) {
            first_content_line = false;  // header line
            continue;
        }
        first_content_line = false;
        if (comma == std::string_view::npos)
            throw ParseError(row, "row " + std::to_string(row) + ": expected `time,status`");
        if (!time_ok)
            throw ParseError(row, "row " + std::to_string(row) + ": time is not numeric");
        if (!status_ok)
            throw BadStatus(row, "row " + std::to_string(row) + ": status is not numeric");
        if (time < 0.0)
            throw NegativeTime(row, "row " + std::to_string(row) + ": negative time");
        if (status != 0.0 && status != 1.0)
            throw BadStatus(row, "row " + std::to_string(row) + ": status must be 0 or 1");
        s.y.push_back(time);
        s.delta.push_back(status == 1.0 ? 1 : 0);
    }
    if (s.y.empty()) throw ParseError(1, "'" + path + "' contains no data rows");
    return s;
}

inline void write_sample_csv(const CensoredSample& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    for (std::size_t i = 0; i < s.size(); ++i)
        out << detail::format_double(s.y[i]) << ',' << s.delta[i] << '\n';
}

struct DensityRow {
    double t_original;
    double x_normalized;
    double f_hat;
    double f_hat_original_units;
    double variance;
};

inline void write_density_csv(const std::vector<DensityRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "t_original,x_normalized,f_hat,f_hat_original_units,variance\n";
    for (const auto& r : rows)
        out << detail::format_double(r.t_original) << ',' << detail::format_double(r.x_normalized)
            << ',' << detail::format_double(r.f_hat) << ','
            << detail::format_double(r.f_hat_original_units) << ','
            << detail::format_double(r.variance) << '\n';
}

inline const char* kind_name(EstimatorKind k) {
    return k == EstimatorKind::partial ? "partial" : "complete";
}

inline nlohmann::json report_to_json(const SimulationReport& r) {
    nlohmann::json j;
    j["baseline"] = r.baseline;
    j["n"] = r.n;
    j["replications"] = r.replications;
    j["lambda"] = r.lambda;
    j["filter"] = r.filter;
    j["level"] = r.level;
    j["seed"] = r.seed;
    j["rng"] = "xoshiro256** substream keyed by (seed, replication)";
    j["censoring_proportion"] = r.censoring_proportion;
    j["grid_points"] = r.grid.size();
    j["probe_points"] = r.probe_points;
    for (const auto& kr : r.kinds) {
        nlohmann::json jk;
        jk["amse_mean"] = kr.amse.mean;
        jk["amse_stddev"] = kr.amse.stddev;
        jk["amse_min"] = kr.amse.min;
        jk["amse_max"] = kr.amse.max;
        jk["best_replication"] = kr.best_replication;
        for (std::size_t p = 0; p < kr.normality.size(); ++p) {
            nlohmann::json jd;
            jd["x"] = kr.normality[p].x;
            jd["anderson_darling"] = kr.normality[p].statistic;
            jd["normal_at_1pct"] = kr.normality[p].normal_at_1pct;
            jd["values"] = kr.probe_values[p];
            jk["normality"].push_back(jd);
        }
        j["kinds"][kind_name(kr.kind)] = jk;
    }
    return j;
}

/// report.json plus one curve CSV per estimator kind
/// (columns x, true_pdf, mean_estimate, q025, q975, best_estimate).
inline void write_simulation_artifacts(const SimulationReport& r, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir + "/report.json");
        if (!out) throw IoError("cannot write '" + dir + "/report.json'");
        out << report_to_json(r).dump(2) << '\n';
    }
    for (const auto& kr : r.kinds) {
        const std::string path = dir + "/curve_" + kind_name(kr.kind) + ".csv";
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path + "'");
        out << "x,true_pdf,mean_estimate,q025,q975,best_estimate\n";
        for (std::size_t g = 0; g < r.grid.size(); ++g)
            out << detail::format_double(r.grid[g]) << ',' << detail::format_double(r.true_pdf[g])
                << ',' << detail::format_double(kr.mean_curve[g]) << ','
                << detail::format_double(kr.q025_curve[g]) << ','
                << detail::format_double(kr.q975_curve[g]) << ','
                << detail::format_double(kr.best_curve[g]) << '\n';
    }
}

}  // namespace wavedens
