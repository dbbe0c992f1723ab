#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace humbert::cli {

/// Exit codes shared by every command and format.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs the command line; argv[0] is the program name. Diagnostics and
/// cache warnings go to `err`, results to `out`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

/// Parses a cache document {"version": 1, "entries": {"-20": 2, ...}}.
/// Returns nothing (and sets `problem`) unless every entry is well formed.
std::optional<std::map<std::int64_t, std::int64_t>> parse_cache(std::string const& text, std::string& problem);

std::string render_cache(std::map<std::int64_t, std::int64_t> const& entries);

} // namespace humbert::cli
