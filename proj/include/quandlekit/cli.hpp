#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quandlekit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

// Comma-separated positive integers, non-decreasing; nothing on malformed
// input. Repeated lengths are left for the callers to reject.
auto parse_profile_argument(const std::string & text) -> std::optional<std::vector<std::uint64_t>>;

// args excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace quandlekit::cli
