#pragma once

#include "sicp/poly/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicp::cli {

enum class Command { verify, construct, curves, scan_table, selftest };

struct RunConfig {
    Command command = Command::selftest;
    std::filesystem::path input;
    std::filesystem::path output;
    std::optional<double> tolerance;
    std::string kind;
    std::optional<double> theta;
    std::string fiducial;
    std::string sigmas;
    int index = 0;
    std::string anchor;
    int resolution = 720;
    std::string from = "0.05", to = "1.4", step = "0.01";
    std::vector<std::string> t_values;
    unsigned workers = 1;
    int bisection_steps = 12;
    std::filesystem::path f1_override;
};

/// Reals written as "0.3", "-pi/6", "3pi/4", "2*pi/7", "1/sqrt3", "sqrt(5/27)".
double parse_real(std::string_view text);

/// Exact when the text is a plain decimal or fraction; otherwise the binary
/// value of parse_real.
BigRational parse_t(std::string_view text);

/// Runs one command line (without the program name). Exit codes: 0 success
/// or SIC, 1 verified negative result, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sicp::cli
