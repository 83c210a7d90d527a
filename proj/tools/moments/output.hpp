#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace moments {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitResource = 2;

inline constexpr const char* kOutputDirEnv = "CLM_OUTPUT_DIR";

// Accepts plain integers and exact scientific forms such as 1e6 or 2.5e3.
std::optional<std::int64_t> parse_integer(std::string_view text);

// Shortest text that round-trips a double through the CSV.
std::string format_double(double v);

// Where a subcommand's CSV goes: the --output path, else
// $CLM_OUTPUT_DIR/<command>.csv, else stdout (empty path).
std::filesystem::path resolve_output(const std::string& flag, std::string_view command);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never see a partial file. Empty path means stdout.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace moments
