#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsr::cli {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

/// Runs one gsr-rl command. Tables go to --output when given, otherwise to
/// `out`; diagnostics and the JSON error record go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the program name omitted from `args`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a size list such as "64", "2,4,8" or "2,4,...,4096". The two terms
/// before "..." fix a geometric progression if the end value lies on it,
/// otherwise an arithmetic one.
std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace gsr::cli
