#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardy/hardy_verifier.hpp"

namespace hardy::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_inequality = 3;
inline constexpr int exit_nonconvergence = 4;

// Parse the command-line weight grammar: constant:<c>, cap:<a>,<theta_c>,
// polar_power:<a>,<beta>, tabulated:@<json file>.
WeightSpec parse_weight(const std::string& text);

// {"type": "tabulated", "angles": [...], "values": [...]}
WeightSpec load_weight_file(const std::string& path);

std::string to_csv(const std::vector<HardyReport>& rows);
std::string to_json(const std::vector<HardyReport>& rows);
std::vector<HardyReport> reports_from_json(const std::string& text);

// Run one invocation: args as in main() minus the program name.  All output
// goes to the provided streams; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hardy::cli
