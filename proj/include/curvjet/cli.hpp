#pragma once

#include <curvjet/curve_spec.hpp>
#include <curvjet/oracle.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace curvjet::cli {

enum class Format { Csv, Json };

struct JobConfig {
    int order = 4;
    std::vector<double> points;
    Format format = Format::Csv;
    std::string out_path;  // empty: stdout
    bool verify = false;
    std::string spec_text;  // raw JSON, echoed into outputs
};

/// Parses one curve object; throws InvalidSpec on malformed input.
CurveSpec parse_curve_spec(const std::string& json_text);

/// Parses {"initial": ..., "incremental": ...}.
std::pair<CurveSpec, CurveSpec> parse_update_spec(const std::string& json_text);

/// Expands "a:b:count" into count evenly spaced points, inclusive.
std::vector<double> parse_xi_range(const std::string& text);
std::vector<double> parse_point_list(const std::string& text);

/// 17 significant digits, enough to reparse to the same double.
std::string format_double(double v);

// Exit codes: 0 success, 1 I/O or malformed input, 2 domain error (the
// message names the offending xi). run_verify exits 2 when any row fails.
int run_eval(const JobConfig& job, std::ostream& out, std::ostream& err);
int run_update(const JobConfig& job, std::ostream& out, std::ostream& err);
int run_tables(int max_m, std::ostream& out, std::ostream& err);
int run_verify(const JobConfig& job, std::ostream& out, std::ostream& err);

/// Dispatches on the job and handles --out. Used by the tool's main().
int run_to_destination(int (*runner)(const JobConfig&, std::ostream&, std::ostream&),
                       const JobConfig& job, std::ostream& err);

}  // namespace curvjet::cli
