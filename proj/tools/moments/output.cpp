#include "output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <system_error>

#include "clm/error.hpp"

namespace moments {

std::optional<std::int64_t> parse_integer(std::string_view text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc{} && p == end) return v;
  double d = 0;
  auto [q, ec2] = std::from_chars(text.data(), end, d);
  if (ec2 != std::errc{} || q != end || !std::isfinite(d) || std::fabs(d) > 9.0e15 || d != std::floor(d))
    return std::nullopt;
  return static_cast<std::int64_t>(d);
}

std::string format_double(double v) {
  char buf[32];
  for (int prec = 12; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::filesystem::path resolve_output(const std::string& flag, std::string_view command) {
  if (flag == "-") return {};
  if (!flag.empty()) return flag;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
    return std::filesystem::path(dir) / (std::string(command) + ".csv");
  return {};
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  if (path.empty()) {
    std::cout << contents << std::flush;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw clm::CapExceeded("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace moments
