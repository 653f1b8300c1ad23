#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace swarm {

/// Shortest decimal form that parses back to the same double.
std::string fmt_double(double v);

/// Whole-token parse; throws ConfigError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what = "value");

/// Whitespace-separated numeric rows; '#' starts a comment, blank lines are
/// skipped. Throws ConfigError on a malformed number.
std::vector<std::vector<double>> read_number_rows(std::istream& in);

}  // namespace swarm
