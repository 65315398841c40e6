#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nearcube::cli {

inline constexpr const char* kReportSchema = "nearcube-report/1";

enum ExitCode : int { verified = 0, falsified = 1, usage_error = 2 };

/// Runs one subcommand and writes its JSON report to `out`. Diagnostics for
/// usage errors and --help text go to `err` / `out` respectively.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace nearcube::cli
