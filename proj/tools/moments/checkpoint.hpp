#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "clm/disc/moments.hpp"

namespace moments {

// FNV-1a of the sieve configuration's canonical text.
std::string config_hash(const clm::disc::SieveConfig& config);

void save_checkpoint(const std::filesystem::path& path, const clm::disc::SieveConfig& config,
                     const clm::disc::SieveState& state);

// Missing file: nullopt. Hash mismatch or a malformed file: InvalidInput.
std::optional<clm::disc::SieveState> load_checkpoint(const std::filesystem::path& path,
                                                     const clm::disc::SieveConfig& config);

}  // namespace moments
