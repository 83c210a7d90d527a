#include "checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clm/error.hpp"
#include "output.hpp"

namespace moments {

std::string config_hash(const clm::disc::SieveConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.fingerprint()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void save_checkpoint(const std::filesystem::path& path, const clm::disc::SieveConfig& config,
                     const clm::disc::SieveState& state) {
  std::ostringstream out;
  out << "config_hash=" << config_hash(config) << '\n'
      << "config=" << config.fingerprint() << '\n'
      << "next=" << state.next << '\n'
      << "sum_counts=" << state.sum_counts << '\n'
      << "num_fields=" << state.num_fields << '\n';
  for (const auto& r : state.rows) out << "row=" << r.x << ',' << r.sum_counts << ',' << r.num_fields << '\n';
  write_atomically(path, out.str());
}

std::optional<clm::disc::SieveState> load_checkpoint(const std::filesystem::path& path,
                                                     const clm::disc::SieveConfig& config) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const auto bad = [&](const std::string& why) {
    return clm::InvalidInput("checkpoint " + path.string() + ": " + why);
  };
  clm::disc::SieveState state;
  bool hash_seen = false;
  std::string line;
  auto integer = [&](const std::string& text) {
    auto v = parse_integer(text);
    if (!v) throw bad("bad number '" + text + "'");
    return *v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw bad("malformed line");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "config_hash") {
      if (value != config_hash(config)) throw bad("written for a different configuration");
      hash_seen = true;
    } else if (key == "config") {
      continue;
    } else if (key == "next") {
      state.next = integer(value);
    } else if (key == "sum_counts") {
      state.sum_counts = integer(value);
    } else if (key == "num_fields") {
      state.num_fields = integer(value);
    } else if (key == "row") {
      std::istringstream fields(value);
      std::string a, b, c;
      if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c))
        throw bad("malformed row");
      state.rows.push_back({integer(a), integer(b), integer(c)});
    } else {
      throw bad("unknown key '" + key + "'");
    }
  }
  if (!hash_seen) throw bad("no configuration hash");
  return state;
}

}  // namespace moments
